#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

namespace ppc::cli {

// Transport failure: unreachable host, timeout, non-200 status. Exit code 5.
class NetworkError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Downloaded content fails the zero-table gates. Exit code 6.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FetchResult {
  std::size_t count = 0;
  double max_ordinate = 0.0;
};

/// Downloads a zero table from an http(s) URL, validates it with the zeros
/// module's parser and gates, and writes it canonically (one ordinate per
/// line, no header). Nothing is written unless validation passes.
FetchResult fetch_zeros(const std::string& url, const std::filesystem::path& output,
                        std::optional<std::size_t> limit, int timeout_seconds = 30);

/// Validation half of fetch_zeros, exposed for testing: body -> canonical text.
std::string canonicalize_zero_table(const std::string& body, const std::string& source,
                                    std::optional<std::size_t> limit, FetchResult* info = nullptr);

}  // namespace ppc::cli
