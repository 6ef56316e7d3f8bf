#pragma once

// OEIS b-file reading and writing, and the row-wise linearization of a
// triangle used to compare against them.
//
// Format: optional '#' comment lines, then "index value" lines in decimal
// with the index increasing by exactly one.

#include <algorithm>
#include <cstddef>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "ward/exact_arith.hpp"
#include "ward/triangles.hpp"

namespace ward {

class BFileParseError : public std::runtime_error {
 public:
  BFileParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct BFileEntry {
  long index = 0;
  Integer value;
  friend bool operator==(const BFileEntry&, const BFileEntry&) = default;
};

struct BFile {
  std::vector<std::string> comments;  // without the leading '#'
  std::vector<BFileEntry> entries;

  std::string render() const {
    std::string out;
    for (const auto& c : comments) out += "#" + c + "\n";
    for (const auto& e : entries) out += std::to_string(e.index) + " " + e.value.to_string() + "\n";
    return out;
  }

  static BFile parse(std::istream& in) {
    BFile file;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty() && line.front() == '#') {
        if (!file.entries.empty()) throw BFileParseError(lineno, "comment after data");
        file.comments.push_back(line.substr(1));
        continue;
      }
      if (line.find_first_not_of(" \t") == std::string::npos) continue;

      std::istringstream fields(line);
      std::string index_text, value_text, extra;
      if (!(fields >> index_text >> value_text) || (fields >> extra)) {
        throw BFileParseError(lineno, "expected 'index value', got '" + line + "'");
      }
      BFileEntry entry;
      try {
        entry.index = Integer::parse(index_text).to_long();
        entry.value = Integer::parse(value_text);
      } catch (const std::exception& e) {
        throw BFileParseError(lineno, e.what());
      }
      if (!file.entries.empty() && entry.index != file.entries.back().index + 1) {
        throw BFileParseError(lineno, "index " + std::to_string(entry.index) + " does not follow " +
                                          std::to_string(file.entries.back().index));
      }
      file.entries.push_back(std::move(entry));
    }
    return file;
  }

  static BFile parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse(in);
  }
};

// Rows n >= 1 read left to right from k = 1, so (n, k) sits at
// offset + n(n-1)/2 + k - 1.
inline long linear_index(long n, long k, long offset = 1) {
  if (n < 1 || k < 1 || k > n) throw std::out_of_range("linear_index: need 1 <= k <= n");
  return offset + n * (n - 1) / 2 + k - 1;
}

inline std::pair<long, long> triangle_position(long index, long offset = 1) {
  long i = index - offset;  // zero-based position
  if (i < 0) throw std::out_of_range("triangle_position: index precedes offset");
  long n = 1;
  while (n * (n + 1) / 2 <= i) ++n;
  return {n, i - n * (n - 1) / 2 + 1};
}

inline BFile linearize(const Triangle& t, long offset = 1) {
  BFile file;
  for (long n = 1; n <= t.max_row(); ++n) {
    for (long k = 1; k <= n; ++k) file.entries.push_back({linear_index(n, k, offset), t.at(n, k)});
  }
  return file;
}

struct BFileMismatch {
  long index = 0;
  long n = 0;
  long k = 0;
  Integer expected;
  Integer found;
};

struct BFileComparison {
  std::size_t compared = 0;
  std::optional<BFileMismatch> mismatch;
  bool agrees() const { return !mismatch; }
};

// Compares every entry the file provides (a prefix is fine) against the
// triangle computed by `strategy`. An index below `offset` counts as a
// mismatch against an implicit zero.
inline BFileComparison compare_bfile(const BFile& file, TriangleKind kind, Strategy strategy,
                                     long offset = 1) {
  BFileComparison result;
  if (file.entries.empty()) return result;
  long max_row = 0;
  for (const auto& e : file.entries) {
    if (e.index >= offset) max_row = std::max(max_row, triangle_position(e.index, offset).first);
  }
  const Triangle t = triangle(kind, max_row, strategy);
  for (const auto& e : file.entries) {
    ++result.compared;
    long n = 0, k = 0;
    Integer expected;
    if (e.index >= offset) {
      std::tie(n, k) = triangle_position(e.index, offset);
      expected = t.at(n, k);
    }
    if (expected != e.value) {
      result.mismatch = BFileMismatch{e.index, n, k, expected, e.value};
      return result;
    }
  }
  return result;
}

}  // namespace ward
