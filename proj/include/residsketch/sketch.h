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

#ifndef RESIDSKETCH_SKETCH_H_
#define RESIDSKETCH_SKETCH_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "residsketch/dense_matrix.h"

namespace residsketch {

enum class SketchFamily {
  kCountSketch,  // one +-1 per column
  kDenseJL,      // every entry +-1/sqrt(m)
  kOsnap,        // s entries +-1/sqrt(s) in distinct rows
  kGaussian,     // every entry N(0, 1/m)
};

std::string_view FamilyName(SketchFamily family);
// Accepts "countsketch", "jl", "osnap", "gaussian". Throws InvalidSpec.
SketchFamily ParseFamily(std::string_view name);

// Describes an oblivious m x n sketching matrix.
struct SketchSpec {
  SketchFamily family = SketchFamily::kCountSketch;
  std::size_t out_dim = 1;   // m
  std::size_t in_dim = 1;    // n
  std::size_t sparsity = 1;  // s; only meaningful for kOsnap
  std::uint64_t seed = 0;

  // Throws InvalidSpec unless 1 <= m, 1 <= n and, for OSNAP, 1 <= s <= m.
  void Validate() const;

  // "family,m,n,s,seed", e.g. "osnap,50,1000,2,1".
  std::string ToRecord() const;
  static SketchSpec FromRecord(std::string_view record);

  friend bool operator==(const SketchSpec&, const SketchSpec&) = default;
};

struct SupportEntry {
  std::uint32_t row;
  double value;
};

// Column-compressed materialization of a SketchSpec. Column i depends only on
// (seed, i), so any single column can also be regenerated on its own with
// GenerateColumn.
class SeededSketch {
 public:
  explicit SeededSketch(const SketchSpec& spec);

  const SketchSpec& spec() const { return spec_; }
  std::size_t out_dim() const { return spec_.out_dim; }
  std::size_t in_dim() const { return spec_.in_dim; }

  std::span<const SupportEntry> column(std::size_t i) const {
    return {entries_.data() + col_ptr_[i], col_ptr_[i + 1] - col_ptr_[i]};
  }

  // Total stored nonzeros across all columns.
  std::size_t nnz() const { return entries_.size(); }

  DenseMatrix ToDense() const;

 private:
  SketchSpec spec_;
  std::vector<std::size_t> col_ptr_;
  std::vector<SupportEntry> entries_;
};

// Appends the support of column `index` to `out`.
void GenerateColumn(const SketchSpec& spec, std::size_t index,
                    std::vector<SupportEntry>& out);

SeededSketch BuildSketch(const SketchSpec& spec);

// outer * inner, applied inner first. The product is never materialized.
struct ComposedSketch {
  SeededSketch outer;  // m1 x m2
  SeededSketch inner;  // m2 x n

  std::size_t out_dim() const { return outer.out_dim(); }
  std::size_t in_dim() const { return inner.in_dim(); }
};

// Throws InvalidSpec when outer.in_dim != inner.out_dim.
ComposedSketch Compose(SeededSketch outer, SeededSketch inner);

using AnySketch = std::variant<SeededSketch, ComposedSketch>;

std::size_t OutDim(const AnySketch& sketch);
std::size_t InDim(const AnySketch& sketch);
// Records of every stage, outermost first.
std::vector<SketchSpec> StageSpecs(const AnySketch& sketch);
DenseMatrix ToDense(const AnySketch& sketch);

// Multiply-add counter filled by the Apply* functions when non-null.
struct ApplyStats {
  std::size_t multiply_adds = 0;
};

// S * A. Cost is (column support size) * nnz(A); zero entries of A are
// skipped entirely.
DenseMatrix ApplyLeft(const SeededSketch& sketch, const DenseMatrix& a,
                      ApplyStats* stats = nullptr);
DenseMatrix ApplyLeft(const ComposedSketch& sketch, const DenseMatrix& a,
                      ApplyStats* stats = nullptr);
DenseMatrix ApplyLeft(const AnySketch& sketch, const DenseMatrix& a,
                      ApplyStats* stats = nullptr);

// A * S^T: the right-hand factor T of S*A*T, shape A.rows x m.
DenseMatrix ApplyRight(const DenseMatrix& a, const SeededSketch& sketch,
                       ApplyStats* stats = nullptr);
DenseMatrix ApplyRight(const DenseMatrix& a, const ComposedSketch& sketch,
                       ApplyStats* stats = nullptr);
DenseMatrix ApplyRight(const DenseMatrix& a, const AnySketch& sketch,
                       ApplyStats* stats = nullptr);

}  // namespace residsketch

#endif  // RESIDSKETCH_SKETCH_H_
