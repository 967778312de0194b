#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>

#include "json.hpp"

namespace ppc::cli {

inline constexpr const char* kCsvSchema = "ppc-csv/1";

/// Provenance for one command invocation. The id hashes everything except
/// timings, so identical inputs give identical ids.
struct RunManifest {
  std::string command;
  std::map<std::string, std::string> parameters;
  std::string li_convention;
  std::string zero_table_source = "none";
  std::uint64_t truncation = 0;
  std::map<std::string, double> timings_ms;
  std::string version;
  std::string schema = kCsvSchema;
  unsigned threads = 1;

  std::string id() const;
  nlohmann::ordered_json to_json() const;
};

RunManifest make_manifest(std::string command);

/// Writes <output>.manifest.json next to `output`. Throws IoError.
std::filesystem::path write_sidecar(const RunManifest& manifest, const std::filesystem::path& output);

}  // namespace ppc::cli
