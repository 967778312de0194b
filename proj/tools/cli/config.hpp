#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ppc/arith.hpp"

namespace ppc::cli {

// Bad command-line or config input; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Settings a config file may provide. Unset fields fall back to defaults.
struct FileConfig {
  std::optional<std::uint64_t> sieve_ceiling;
  std::optional<std::uint64_t> segment_length;
  std::optional<unsigned> threads;
  std::optional<std::string> zeros_path;
};

/// key = value lines; '#' starts a comment. Keys: sieve_ceiling,
/// segment_size (or segment_length), threads, zeros_path.
FileConfig parse_config(std::string_view text);
FileConfig load_config(const std::filesystem::path& path);

/// Non-negative integer written as digits or in exact scientific form ("1e12", "2.5e3").
std::uint64_t parse_count(std::string_view text, std::string_view what);

}  // namespace ppc::cli
