#include "output.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>

namespace ppc::cli {

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

nlohmann::ordered_json to_json_cell(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) return nullptr;
          return v;
        } else {
          return v;
        }
      },
      cell);
}

}  // namespace

void ResultTable::add(std::vector<Cell> row) { rows.push_back(std::move(row)); }

std::string to_text(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "";
        } else if constexpr (std::is_same_v<T, double>) {
          char buf[64];
          const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
          return std::string(buf, ptr);
        } else if constexpr (std::is_same_v<T, std::string>) {
          return v;
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else {
          return std::to_string(v);
        }
      },
      cell);
}

void write_csv(std::ostream& out, const ResultTable& table) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(to_text(row[i]));
    out << '\n';
  }
}

void render(std::ostream& out, Format format, const ResultTable& table, const RunManifest& manifest) {
  const std::string id = manifest.id();
  switch (format) {
    case Format::Csv: {
      ResultTable tagged = table;
      tagged.columns.push_back("manifest_id");
      for (auto& row : tagged.rows) row.emplace_back(id);
      write_csv(out, tagged);
      break;
    }
    case Format::Json: {
      nlohmann::ordered_json doc;
      doc["manifest"] = manifest.to_json();
      doc["rows"] = nlohmann::ordered_json::array();
      for (const auto& row : table.rows) {
        nlohmann::ordered_json r;
        for (std::size_t i = 0; i < row.size(); ++i) r[table.columns[i]] = to_json_cell(row[i]);
        r["manifest_id"] = id;
        doc["rows"].push_back(std::move(r));
      }
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::Table: {
      std::vector<std::vector<std::string>> cells;
      for (const auto& row : table.rows) {
        std::vector<std::string> line;
        for (const auto& c : row) {
          if (const auto* d = std::get_if<double>(&c)) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.12g", *d);
            line.emplace_back(buf);
          } else {
            line.push_back(to_text(c));
          }
        }
        cells.push_back(std::move(line));
      }
      if (cells.size() == 1) {
        // Single reports read better as key/value pairs.
        std::size_t wk = 0;
        for (const auto& c : table.columns) wk = std::max(wk, c.size());
        for (std::size_t i = 0; i < table.columns.size(); ++i) {
          out << table.columns[i] << std::string(wk - table.columns[i].size() + 2, ' ') << cells[0][i] << '\n';
        }
      } else {
        std::vector<std::size_t> width(table.columns.size());
        for (std::size_t i = 0; i < width.size(); ++i) {
          width[i] = table.columns[i].size();
          for (const auto& line : cells) width[i] = std::max(width[i], line[i].size());
        }
        auto emit = [&](const std::vector<std::string>& line) {
          for (std::size_t i = 0; i < line.size(); ++i) {
            out << (i ? "  " : "") << std::string(width[i] - line[i].size(), ' ') << line[i];
          }
          out << '\n';
        };
        emit(table.columns);
        for (const auto& line : cells) emit(line);
      }
      out << "manifest " << id << '\n';
      break;
    }
  }
}

}  // namespace ppc::cli
