#pragma once

// Row-oriented result tables rendered as CSV or JSON with identical keys.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace legsum {

using Cell = std::variant<std::monostate, std::int64_t, std::uint64_t, double, bool, std::string>;

enum class Format { kCsv, kJson };

inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row) { rows.push_back(std::move(row)); }

  void write_csv(std::ostream& os) const {
    for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
    os << '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) os << ',';
        std::visit(
            [&](const auto& v) {
              using T = std::decay_t<decltype(v)>;
              if constexpr (std::is_same_v<T, std::monostate>) {
              } else if constexpr (std::is_same_v<T, double>) {
                os << format_double(v);
              } else if constexpr (std::is_same_v<T, bool>) {
                os << (v ? "true" : "false");
              } else if constexpr (std::is_same_v<T, std::string>) {
                if (v.find_first_of(",\"\n") != std::string::npos) {
                  os << '"';
                  for (char c : v) os << (c == '"' ? "\"\"" : std::string(1, c));
                  os << '"';
                } else {
                  os << v;
                }
              } else {
                os << v;
              }
            },
            row[i]);
      }
      os << '\n';
    }
  }

  nlohmann::ordered_json to_json_rows() const {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
      nlohmann::ordered_json obj;
      for (std::size_t i = 0; i < row.size() && i < columns.size(); ++i) {
        std::visit(
            [&](const auto& v) {
              using T = std::decay_t<decltype(v)>;
              if constexpr (std::is_same_v<T, std::monostate>) obj[columns[i]] = nullptr;
              else if constexpr (std::is_same_v<T, double>) {
                if (std::isfinite(v)) obj[columns[i]] = v;
                else obj[columns[i]] = format_double(v);
              } else obj[columns[i]] = v;
            },
            row[i]);
      }
      arr.push_back(std::move(obj));
    }
    return arr;
  }

  /// JSON array of row objects, or a single object when `single` and one row.
  void write_json(std::ostream& os, bool single = false) const {
    const auto arr = to_json_rows();
    os << ((single && arr.size() == 1) ? arr[0].dump(2) : arr.dump(2)) << '\n';
  }

  void write(std::ostream& os, Format f, bool single = false) const {
    if (f == Format::kCsv) write_csv(os);
    else write_json(os, single);
  }
};

}  // namespace legsum
