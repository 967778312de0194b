#include "config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "ppc/errors.hpp"

namespace ppc::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::uint64_t parse_count(std::string_view text, std::string_view what) {
  text = trim(text);
  std::uint64_t whole = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), whole);
  if (ec == std::errc{} && ptr == text.data() + text.size()) return whole;

  double value = 0.0;
  auto [dptr, dec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (dec != std::errc{} || dptr != text.data() + text.size() || !(value >= 0.0) || value >= 0x1p64 ||
      value != std::floor(value)) {
    throw UsageError(std::string(what) + " must be a non-negative integer, got '" + std::string(text) + "'");
  }
  return static_cast<std::uint64_t>(value);
}

FileConfig parse_config(std::string_view text) {
  FileConfig cfg;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = "config line " + std::to_string(line_no);
    if (eq == std::string_view::npos) throw UsageError(where + ": expected key = value");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key == "sieve_ceiling") {
      cfg.sieve_ceiling = parse_count(value, where + " sieve_ceiling");
    } else if (key == "segment_size" || key == "segment_length") {
      cfg.segment_length = parse_count(value, where + " segment_size");
    } else if (key == "threads") {
      const auto t = parse_count(value, where + " threads");
      if (t == 0 || t > 1024) throw UsageError(where + ": threads must be in [1, 1024]");
      cfg.threads = static_cast<unsigned>(t);
    } else if (key == "zeros_path") {
      if (value.empty()) throw UsageError(where + ": zeros_path is empty");
      cfg.zeros_path = std::string(value);
    } else {
      throw UsageError(where + ": unknown key '" + std::string(key) + "'");
    }
  }
  return cfg;
}

FileConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

}  // namespace ppc::cli
