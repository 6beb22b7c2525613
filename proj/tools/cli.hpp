#pragma once

#include <cstdint>
#include <exception>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace cheblab::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;
inline constexpr int kDomain = 3;
inline constexpr int kRange = 4;

int exit_code_for(const std::exception& e);

// Accepts plain integers, "1e6" style and "10^6" style powers.
std::uint64_t parse_count(std::string_view text);

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace cheblab::cli
