#pragma once

#include <string>
#include <string_view>

// Report builders behind the CLI subcommands. Each returns the text to print on
// success and lets kbu::Error escape on bad input.
namespace kbu {

std::string cmd_classify(std::string_view f10, std::string_view f01, bool json);
std::string cmd_witness(std::string_view f10, std::string_view f01, bool json);
std::string cmd_verify_witness(std::string_view f10, std::string_view f01, std::string_view a,
                               std::string_view b, bool json);
std::string cmd_rewrite(std::string_view word);
std::string cmd_abelianize(std::string_view word);
std::string cmd_eval(std::string_view expr);

}  // namespace kbu
