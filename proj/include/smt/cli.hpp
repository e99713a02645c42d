#pragma once

// Command-line front end. Exit codes: 0 pass, 1 verdict fail, 2 usage or
// config error.

#include <cstdint>
#include <string>
#include <vector>

namespace smt::cli {

inline constexpr std::uint64_t default_seed = 0x534D5431;  // "SMT1"

int run(int argc, char** argv);
int run(const std::vector<std::string>& args);

/// 17 significant digits, the CSV number format.
std::string format_number(double v);

/// FNV-1a over the canonical (sorted-key) dump of a resolved config.
std::string config_hash(const std::string& canonical_json);

}  // namespace smt::cli
