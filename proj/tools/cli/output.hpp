#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "manifest.hpp"

namespace ppc::cli {

enum class Format { Table, Csv, Json };

using Cell = std::variant<std::monostate, std::int64_t, std::uint64_t, double, std::string, bool>;

struct ResultTable {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row);
};

/// Round-trip decimal for doubles, "" for empty cells.
std::string to_text(const Cell& cell);

/// CSV with the given header only (no provenance columns).
void write_csv(std::ostream& out, const ResultTable& table);

/// Renders rows in the requested format. Every row carries the manifest id:
/// as a trailing CSV column, a JSON field, or a table footer.
void render(std::ostream& out, Format format, const ResultTable& table, const RunManifest& manifest);

}  // namespace ppc::cli
