// Copyright 2026 The Residsketch Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "residsketch/dataset_io.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>

#include "residsketch/errors.h"

namespace residsketch::io {
namespace {

// Splits a line into whitespace-separated tokens.
std::vector<std::string_view> Tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

template <typename T>
T ParseNumber(std::string_view token, std::size_t line_no, const char* what) {
  T value{};
  const char* begin = token.data();
  const char* end = begin + token.size();
  if constexpr (std::is_floating_point_v<T>) {
    if (!token.empty() && token.front() == '+') ++begin;
  }
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("expected " + std::string(what) + ", got '" +
                         std::string(token) + "'",
                     line_no);
  }
  if constexpr (std::is_floating_point_v<T>) {
    if (!std::isfinite(value)) {
      throw ParseError("non-finite value '" + std::string(token) + "'", line_no);
    }
  }
  return value;
}

bool IsBlankOrComment(std::string_view line) {
  for (char ch : line) {
    if (ch == '#' || ch == '%') return true;
    if (!std::isspace(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

std::string Lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::ifstream OpenOrThrow(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  return in;
}

// Converts a 1-based index with bounds check.
std::size_t OneBased(std::string_view token, std::size_t bound,
                     std::size_t line_no, const char* what) {
  const auto v = ParseNumber<std::size_t>(token, line_no, what);
  if (v < 1 || v > bound) {
    throw ParseError(std::string(what) + " " + std::string(token) +
                         " outside [1, " + std::to_string(bound) + "]",
                     line_no);
  }
  return v - 1;
}

}  // namespace

TripletMatrix ReadMatrixMarket(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw ParseError("empty MatrixMarket input", 1);
  ++line_no;
  const auto banner = Tokens(line);
  if (banner.size() != 5 || banner[0] != "%%MatrixMarket") {
    throw ParseError("missing %%MatrixMarket banner", line_no);
  }
  if (Lower(banner[1]) != "matrix" || Lower(banner[2]) != "coordinate") {
    throw ParseError("only 'matrix coordinate' is supported", line_no);
  }
  const std::string field = Lower(banner[3]);
  const std::string symmetry = Lower(banner[4]);
  const bool pattern = field == "pattern";
  if (field != "real" && field != "integer" && !pattern) {
    throw ParseError("unsupported field '" + field + "'", line_no);
  }
  const bool symmetric = symmetry == "symmetric";
  if (symmetry != "general" && !symmetric) {
    throw ParseError("unsupported symmetry '" + symmetry + "'", line_no);
  }

  TripletMatrix m;
  std::size_t declared = 0;
  bool have_size = false;
  std::size_t seen = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlankOrComment(line)) continue;
    const auto tok = Tokens(line);
    if (!have_size) {
      if (tok.size() != 3) throw ParseError("expected 'rows cols nnz'", line_no);
      m.rows = ParseNumber<std::size_t>(tok[0], line_no, "row count");
      m.cols = ParseNumber<std::size_t>(tok[1], line_no, "column count");
      declared = ParseNumber<std::size_t>(tok[2], line_no, "entry count");
      m.entries.reserve(symmetric ? 2 * declared : declared);
      have_size = true;
      continue;
    }
    if (tok.size() != (pattern ? 2U : 3U)) {
      throw ParseError("malformed entry line", line_no);
    }
    const std::size_t i = OneBased(tok[0], m.rows, line_no, "row index");
    const std::size_t j = OneBased(tok[1], m.cols, line_no, "column index");
    const double v = pattern ? 1.0 : ParseNumber<double>(tok[2], line_no, "value");
    m.entries.push_back({i, j, v});
    if (symmetric && i != j) m.entries.push_back({j, i, v});
    ++seen;
  }
  if (!have_size) throw ParseError("missing size line", line_no);
  if (seen != declared) {
    throw ParseError("declared " + std::to_string(declared) +
                         " entries, found " + std::to_string(seen),
                     line_no);
  }
  return m;
}

TripletMatrix ReadMatrixMarketFile(const std::string& path) {
  auto in = OpenOrThrow(path);
  return ReadMatrixMarket(in);
}

void WriteMatrixMarket(std::ostream& out, const TripletMatrix& m) {
  out << "%%MatrixMarket matrix coordinate real general\n";
  out << m.rows << ' ' << m.cols << ' ' << m.entries.size() << '\n';
  const auto old = out.precision(std::numeric_limits<double>::max_digits10);
  for (const auto& t : m.entries) {
    out << t.row + 1 << ' ' << t.col + 1 << ' ' << t.value << '\n';
  }
  out.precision(old);
}

TripletMatrix ReadUciBow(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t header[3] = {0, 0, 0};
  const char* names[3] = {"document count", "vocabulary size", "nonzero count"};
  for (int h = 0; h < 3; ++h) {
    if (!std::getline(in, line)) {
      throw ParseError("bag-of-words header truncated", line_no + 1);
    }
    ++line_no;
    const auto tok = Tokens(line);
    if (tok.size() != 1) throw ParseError("expected a single count", line_no);
    header[h] = ParseNumber<std::size_t>(tok[0], line_no, names[h]);
  }
  TripletMatrix m;
  m.rows = header[0];
  m.cols = header[1];
  m.entries.reserve(header[2]);
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlankOrComment(line)) continue;
    const auto tok = Tokens(line);
    if (tok.size() != 3) throw ParseError("expected 'doc word count'", line_no);
    const std::size_t d = OneBased(tok[0], m.rows, line_no, "document id");
    const std::size_t w = OneBased(tok[1], m.cols, line_no, "word id");
    const double c = ParseNumber<double>(tok[2], line_no, "count");
    m.entries.push_back({d, w, c});
  }
  if (m.entries.size() != header[2]) {
    throw ParseError("header declares " + std::to_string(header[2]) +
                         " nonzeros, found " + std::to_string(m.entries.size()),
                     line_no);
  }
  return m;
}

TripletMatrix ReadUciBowFile(const std::string& path) {
  auto in = OpenOrThrow(path);
  return ReadUciBow(in);
}

TripletMatrix ReadMatrixStream(std::istream& in, std::size_t rows,
                               std::size_t cols) {
  TripletMatrix m;
  std::string line;
  std::size_t line_no = 0;
  std::size_t max_row = 0;
  std::size_t max_col = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlankOrComment(line)) continue;
    const auto tok = Tokens(line);
    if (tok.size() != 3) throw ParseError("expected 'i j v'", line_no);
    const auto i = ParseNumber<std::size_t>(tok[0], line_no, "row index");
    const auto j = ParseNumber<std::size_t>(tok[1], line_no, "column index");
    const auto v = ParseNumber<double>(tok[2], line_no, "value");
    if ((rows != 0 && i >= rows) || (cols != 0 && j >= cols)) {
      throw ParseError("index outside declared dimensions", line_no);
    }
    max_row = std::max(max_row, i + 1);
    max_col = std::max(max_col, j + 1);
    m.entries.push_back({i, j, v});
  }
  m.rows = rows != 0 ? rows : max_row;
  m.cols = cols != 0 ? cols : max_col;
  return m;
}

TripletMatrix ReadMatrixStreamFile(const std::string& path, std::size_t rows,
                                   std::size_t cols) {
  auto in = OpenOrThrow(path);
  return ReadMatrixStream(in, rows, cols);
}

void WriteMatrixStream(std::ostream& out, std::span<const Triplet> entries) {
  const auto old = out.precision(std::numeric_limits<double>::max_digits10);
  for (const auto& t : entries) {
    out << t.row << ' ' << t.col << ' ' << t.value << '\n';
  }
  out.precision(old);
}

std::vector<testkit::VectorUpdate> ReadVectorStream(std::istream& in) {
  std::vector<testkit::VectorUpdate> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlankOrComment(line)) continue;
    const auto tok = Tokens(line);
    if (tok.size() != 2) throw ParseError("expected 'i v'", line_no);
    out.push_back({ParseNumber<std::size_t>(tok[0], line_no, "index"),
                   ParseNumber<double>(tok[1], line_no, "value")});
  }
  return out;
}

std::vector<testkit::VectorUpdate> ReadVectorStreamFile(const std::string& path) {
  auto in = OpenOrThrow(path);
  return ReadVectorStream(in);
}

void WriteVectorStream(std::ostream& out,
                       std::span<const testkit::VectorUpdate> updates) {
  const auto old = out.precision(std::numeric_limits<double>::max_digits10);
  for (const auto& u : updates) out << u.index << ' ' << u.value << '\n';
  out.precision(old);
}

}  // namespace residsketch::io
