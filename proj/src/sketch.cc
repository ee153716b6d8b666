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

#include "residsketch/sketch.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <utility>

#include "residsketch/errors.h"
#include "residsketch/random.h"

namespace residsketch {
namespace {

template <typename T>
T ParseField(std::string_view field, std::string_view what) {
  T value{};
  const char* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw InvalidSpec("sketch record: bad " + std::string(what) + " '" +
                      std::string(field) + "'");
  }
  return value;
}

// Floyd's algorithm: s distinct values from [0, m) in O(s^2) without
// touching the other m - s rows.
void SampleDistinctRows(SplitMix64& rng, std::size_t m, std::size_t s,
                        std::vector<std::uint32_t>& rows) {
  rows.clear();
  for (std::size_t j = m - s; j < m; ++j) {
    const auto t = static_cast<std::uint32_t>(rng.Below(j + 1));
    if (std::find(rows.begin(), rows.end(), t) == rows.end()) {
      rows.push_back(t);
    } else {
      rows.push_back(static_cast<std::uint32_t>(j));
    }
  }
  std::sort(rows.begin(), rows.end());
}

void CheckRows(std::size_t expected, const DenseMatrix& a, const char* op) {
  if (a.rows() != expected) {
    throw InvalidInput(std::string(op) + ": sketch in_dim " +
                       std::to_string(expected) + " != matrix rows " +
                       std::to_string(a.rows()));
  }
}

void CheckCols(std::size_t expected, const DenseMatrix& a, const char* op) {
  if (a.cols() != expected) {
    throw InvalidInput(std::string(op) + ": sketch in_dim " +
                       std::to_string(expected) + " != matrix cols " +
                       std::to_string(a.cols()));
  }
}

}  // namespace

std::string_view FamilyName(SketchFamily family) {
  switch (family) {
    case SketchFamily::kCountSketch:
      return "countsketch";
    case SketchFamily::kDenseJL:
      return "jl";
    case SketchFamily::kOsnap:
      return "osnap";
    case SketchFamily::kGaussian:
      return "gaussian";
  }
  return "unknown";
}

SketchFamily ParseFamily(std::string_view name) {
  if (name == "countsketch") return SketchFamily::kCountSketch;
  if (name == "jl") return SketchFamily::kDenseJL;
  if (name == "osnap") return SketchFamily::kOsnap;
  if (name == "gaussian") return SketchFamily::kGaussian;
  throw InvalidSpec("unknown sketch family '" + std::string(name) + "'");
}

void SketchSpec::Validate() const {
  if (out_dim < 1 || in_dim < 1) {
    throw InvalidSpec("sketch dimensions must be >= 1, got m=" +
                      std::to_string(out_dim) +
                      " n=" + std::to_string(in_dim));
  }
  if (out_dim > std::numeric_limits<std::uint32_t>::max()) {
    throw InvalidSpec("sketch out_dim exceeds 32-bit row index");
  }
  if (family == SketchFamily::kOsnap && (sparsity < 1 || sparsity > out_dim)) {
    throw InvalidSpec("OSNAP sparsity must satisfy 1 <= s <= m, got s=" +
                      std::to_string(sparsity));
  }
}

std::string SketchSpec::ToRecord() const {
  return std::string(FamilyName(family)) + "," + std::to_string(out_dim) +
         "," + std::to_string(in_dim) + "," + std::to_string(sparsity) + "," +
         std::to_string(seed);
}

SketchSpec SketchSpec::FromRecord(std::string_view record) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = record.find(',', start);
    fields.push_back(record.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (fields.size() != 5) {
    throw InvalidSpec("sketch record needs 5 fields: '" + std::string(record) +
                      "'");
  }
  SketchSpec spec;
  spec.family = ParseFamily(fields[0]);
  spec.out_dim = ParseField<std::size_t>(fields[1], "m");
  spec.in_dim = ParseField<std::size_t>(fields[2], "n");
  spec.sparsity = ParseField<std::size_t>(fields[3], "s");
  spec.seed = ParseField<std::uint64_t>(fields[4], "seed");
  spec.Validate();
  return spec;
}

void GenerateColumn(const SketchSpec& spec, std::size_t index,
                    std::vector<SupportEntry>& out) {
  SplitMix64 rng(DeriveSeed(spec.seed, index));
  const std::size_t m = spec.out_dim;
  switch (spec.family) {
    case SketchFamily::kCountSketch: {
      const auto row = static_cast<std::uint32_t>(rng.Below(m));
      out.push_back({row, rng.Sign()});
      break;
    }
    case SketchFamily::kOsnap: {
      thread_local std::vector<std::uint32_t> rows;
      SampleDistinctRows(rng, m, spec.sparsity, rows);
      const double scale = 1.0 / std::sqrt(static_cast<double>(spec.sparsity));
      for (std::uint32_t r : rows) out.push_back({r, scale * rng.Sign()});
      break;
    }
    case SketchFamily::kDenseJL: {
      const double scale = 1.0 / std::sqrt(static_cast<double>(m));
      for (std::size_t r = 0; r < m; ++r) {
        out.push_back({static_cast<std::uint32_t>(r), scale * rng.Sign()});
      }
      break;
    }
    case SketchFamily::kGaussian: {
      std::normal_distribution<double> normal(
          0.0, 1.0 / std::sqrt(static_cast<double>(m)));
      for (std::size_t r = 0; r < m; ++r) {
        out.push_back({static_cast<std::uint32_t>(r), normal(rng)});
      }
      break;
    }
  }
}

SeededSketch::SeededSketch(const SketchSpec& spec) : spec_(spec) {
  spec_.Validate();
  const std::size_t per_column =
      spec_.family == SketchFamily::kCountSketch ? 1
      : spec_.family == SketchFamily::kOsnap     ? spec_.sparsity
                                                 : spec_.out_dim;
  entries_.reserve(per_column * spec_.in_dim);
  col_ptr_.reserve(spec_.in_dim + 1);
  col_ptr_.push_back(0);
  for (std::size_t i = 0; i < spec_.in_dim; ++i) {
    GenerateColumn(spec_, i, entries_);
    col_ptr_.push_back(entries_.size());
  }
}

DenseMatrix SeededSketch::ToDense() const {
  DenseMatrix dense(out_dim(), in_dim());
  for (std::size_t i = 0; i < in_dim(); ++i) {
    for (const auto& e : column(i)) dense(e.row, i) += e.value;
  }
  return dense;
}

SeededSketch BuildSketch(const SketchSpec& spec) { return SeededSketch(spec); }

ComposedSketch Compose(SeededSketch outer, SeededSketch inner) {
  if (outer.in_dim() != inner.out_dim()) {
    throw InvalidSpec("Compose: outer in_dim " +
                      std::to_string(outer.in_dim()) + " != inner out_dim " +
                      std::to_string(inner.out_dim()));
  }
  return ComposedSketch{std::move(outer), std::move(inner)};
}

std::size_t OutDim(const AnySketch& sketch) {
  return std::visit([](const auto& s) { return s.out_dim(); }, sketch);
}

std::size_t InDim(const AnySketch& sketch) {
  return std::visit([](const auto& s) { return s.in_dim(); }, sketch);
}

std::vector<SketchSpec> StageSpecs(const AnySketch& sketch) {
  if (const auto* c = std::get_if<ComposedSketch>(&sketch)) {
    return {c->outer.spec(), c->inner.spec()};
  }
  return {std::get<SeededSketch>(sketch).spec()};
}

DenseMatrix ToDense(const AnySketch& sketch) {
  if (const auto* c = std::get_if<ComposedSketch>(&sketch)) {
    return c->outer.ToDense() * c->inner.ToDense();
  }
  return std::get<SeededSketch>(sketch).ToDense();
}

DenseMatrix ApplyLeft(const SeededSketch& sketch, const DenseMatrix& a,
                      ApplyStats* stats) {
  CheckRows(sketch.in_dim(), a, "ApplyLeft");
  DenseMatrix out(sketch.out_dim(), a.cols());
  std::size_t ops = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto support = sketch.column(i);
    const auto src = a.row(i);
    for (std::size_t j = 0; j < src.size(); ++j) {
      const double v = src[j];
      if (v == 0.0) continue;
      for (const auto& e : support) out(e.row, j) += e.value * v;
      ops += support.size();
    }
  }
  if (stats != nullptr) stats->multiply_adds += ops;
  return out;
}

DenseMatrix ApplyLeft(const ComposedSketch& sketch, const DenseMatrix& a,
                      ApplyStats* stats) {
  return ApplyLeft(sketch.outer, ApplyLeft(sketch.inner, a, stats), stats);
}

DenseMatrix ApplyLeft(const AnySketch& sketch, const DenseMatrix& a,
                      ApplyStats* stats) {
  return std::visit([&](const auto& s) { return ApplyLeft(s, a, stats); },
                    sketch);
}

DenseMatrix ApplyRight(const DenseMatrix& a, const SeededSketch& sketch,
                       ApplyStats* stats) {
  CheckCols(sketch.in_dim(), a, "ApplyRight");
  DenseMatrix out(a.rows(), sketch.out_dim());
  std::size_t ops = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto src = a.row(i);
    auto dst = out.row(i);
    for (std::size_t j = 0; j < src.size(); ++j) {
      const double v = src[j];
      if (v == 0.0) continue;
      const auto support = sketch.column(j);
      for (const auto& e : support) dst[e.row] += v * e.value;
      ops += support.size();
    }
  }
  if (stats != nullptr) stats->multiply_adds += ops;
  return out;
}

DenseMatrix ApplyRight(const DenseMatrix& a, const ComposedSketch& sketch,
                       ApplyStats* stats) {
  return ApplyRight(ApplyRight(a, sketch.inner, stats), sketch.outer, stats);
}

DenseMatrix ApplyRight(const DenseMatrix& a, const AnySketch& sketch,
                       ApplyStats* stats) {
  return std::visit([&](const auto& s) { return ApplyRight(a, s, stats); },
                    sketch);
}

}  // namespace residsketch
