#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kbu {

// Every failure the core can report. The C API maps these one-to-one onto
// kbu_status codes, so keep the two lists in sync.
enum class ErrorKind {
  Parse,
  NonCommuting,
  NotInKernel,
  NotInSigma,
  PreconditionFail,
  ZeroInput,
  Overflow,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(ErrorKind::Parse, what) {}
};
struct OverflowError : Error {
  explicit OverflowError(const std::string& what)
      : Error(ErrorKind::Overflow, what) {}
};

namespace checked {

inline int64_t add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline int64_t sub(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline int64_t mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline int64_t neg(int64_t a) { return sub(0, a); }

}  // namespace checked

// delta(n) = n mod 2 in {0,1}, also for negative n.
inline int64_t delta(int64_t n) noexcept { return n & 1; }

// eps(n) = (-1)^n.
inline int64_t eps(int64_t n) noexcept { return (n & 1) ? -1 : 1; }

inline int64_t sgn(int64_t l) noexcept { return (l > 0) - (l < 0); }

}  // namespace kbu
