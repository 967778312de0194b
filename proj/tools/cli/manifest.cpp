#include "manifest.hpp"

#include <cstdio>
#include <fstream>

#include "ppc/analytic.hpp"
#include "ppc/errors.hpp"
#include "version.hpp"

namespace ppc::cli {

std::string RunManifest::id() const {
  nlohmann::ordered_json key;
  key["command"] = command;
  key["parameters"] = parameters;
  key["li_convention"] = li_convention;
  key["zero_table_source"] = zero_table_source;
  key["truncation"] = truncation;
  key["version"] = version;
  key["schema"] = schema;
  // FNV-1a, 64 bit.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : key.dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

nlohmann::ordered_json RunManifest::to_json() const {
  nlohmann::ordered_json j;
  j["id"] = id();
  j["command"] = command;
  j["parameters"] = parameters;
  j["li_convention"] = li_convention;
  j["zero_table_source"] = zero_table_source;
  j["truncation"] = truncation;
  j["timings_ms"] = timings_ms;
  j["version"] = version;
  j["schema"] = schema;
  j["threads"] = threads;
  return j;
}

RunManifest make_manifest(std::string command) {
  RunManifest m;
  m.command = std::move(command);
  m.li_convention = std::string(kLiConvention);
  m.version = kVersion;
  return m;
}

std::filesystem::path write_sidecar(const RunManifest& manifest, const std::filesystem::path& output) {
  auto path = output;
  path += ".manifest.json";
  std::ofstream out(path);
  if (!out) throw IoError("cannot write manifest " + path.string());
  out << manifest.to_json().dump(2) << '\n';
  if (!out) throw IoError("failed writing manifest " + path.string());
  return path;
}

}  // namespace ppc::cli
