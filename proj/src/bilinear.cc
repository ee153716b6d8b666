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

#include "residsketch/bilinear.h"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstring>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "residsketch/errors.h"
#include "residsketch/linalg.h"
#include "residsketch/random.h"

namespace residsketch {
namespace {

constexpr char kSnapshotMagic[] = "RESIDSKETCH-BILINEAR 1";

// The stage every update passes through.
const SeededSketch& UpdateStage(const AnySketch& sketch) {
  if (const auto* c = std::get_if<ComposedSketch>(&sketch)) return c->inner;
  return std::get<SeededSketch>(sketch);
}

std::size_t CeilPositive(double x) {
  // Guard against pow() landing a hair above an exact integer.
  const double r = std::ceil(x * (1.0 - 1e-12));
  return r < 1.0 ? 1 : static_cast<std::size_t>(r);
}

double MillisSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

void WriteStages(std::ostream& out, const char* side, const AnySketch& s) {
  const auto stages = StageSpecs(s);
  out << side << ' ' << stages.size() << '\n';
  for (const auto& spec : stages) out << spec.ToRecord() << '\n';
}

AnySketch ReadStages(std::istream& in, const std::string& side) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("snapshot: truncated", 0);
  std::istringstream header(line);
  std::string tag;
  std::size_t count = 0;
  header >> tag >> count;
  if (tag != side || (count != 1 && count != 2)) {
    throw ParseError("snapshot: bad stage header '" + line + "'", 0);
  }
  std::vector<SketchSpec> specs;
  for (std::size_t i = 0; i < count; ++i) {
    if (!std::getline(in, line)) throw ParseError("snapshot: truncated", 0);
    specs.push_back(SketchSpec::FromRecord(line));
  }
  if (count == 1) return SeededSketch(specs[0]);
  return Compose(SeededSketch(specs[0]), SeededSketch(specs[1]));
}

std::uint64_t ToLittleEndian(std::uint64_t v) {
  if constexpr (std::endian::native == std::endian::little) {
    return v;
  } else {
    return __builtin_bswap64(v);
  }
}

}  // namespace

std::size_t SketchSizePolicy::OuterDim(std::size_t k, double eps) const {
  if (!(eps > 0.0)) throw InvalidSpec("eps must be positive");
  return CeilPositive(c_outer * static_cast<double>(k) / (eps * eps));
}

std::size_t SketchSizePolicy::InnerDim(std::size_t k, double eps) const {
  if (!(eps > 0.0)) throw InvalidSpec("eps must be positive");
  const double kk = static_cast<double>(k);
  return CeilPositive(c_inner * kk * kk / (eps * eps));
}

std::size_t SketchSizePolicy::InnerDimForOuter(std::size_t m) const {
  return std::min(m * m, inner_cap);
}

ComposedSketch MakeComposedSketch(std::size_t m, std::size_t inner,
                                  std::size_t n, std::uint64_t seed) {
  SketchSpec outer{SketchFamily::kDenseJL, m, inner, 1, DeriveSeed(seed, 1)};
  SketchSpec inner_spec{SketchFamily::kCountSketch, inner, n, 1,
                        DeriveSeed(seed, 2)};
  return Compose(SeededSketch(outer), SeededSketch(inner_spec));
}

BilinearSketchState::BilinearSketchState(AnySketch left, AnySketch right)
    : left_(std::move(left)),
      right_(std::move(right)),
      acc_(UpdateStage(left_).out_dim(), UpdateStage(right_).out_dim()) {}

void BilinearSketchState::Update(std::size_t row, std::size_t col,
                                 double value) {
  if (row >= rows() || col >= cols()) {
    throw InvalidInput("Update: index (" + std::to_string(row) + ", " +
                       std::to_string(col) + ") outside " +
                       std::to_string(rows()) + "x" + std::to_string(cols()));
  }
  if (!std::isfinite(value)) throw InvalidInput("Update: non-finite value");
  if (value == 0.0) return;
  const auto lsup = UpdateStage(left_).column(row);
  const auto rsup = UpdateStage(right_).column(col);
  for (const auto& l : lsup) {
    const double scaled = value * l.value;
    auto dst = acc_.row(l.row);
    for (const auto& r : rsup) dst[r.row] += scaled * r.value;
  }
}

void BilinearSketchState::Update(std::span<const Triplet> stream) {
  for (const auto& t : stream) Update(t);
}

bool BilinearSketchState::SameSketches(const BilinearSketchState& other) const {
  return StageSpecs(left_) == StageSpecs(other.left_) &&
         StageSpecs(right_) == StageSpecs(other.right_);
}

void BilinearSketchState::MergeFrom(const BilinearSketchState& other) {
  if (!SameSketches(other)) {
    throw IncompatibleStates("Merge: states were built from different sketches");
  }
  acc_ += other.acc_;
}

DenseMatrix BilinearSketchState::Finalize() const {
  const auto* lc = std::get_if<ComposedSketch>(&left_);
  const auto* rc = std::get_if<ComposedSketch>(&right_);
  if (lc == nullptr && rc == nullptr) return acc_;
  DenseMatrix out = rc != nullptr ? ApplyRight(acc_, rc->outer) : acc_;
  if (lc != nullptr) out = ApplyLeft(lc->outer, out);
  return out;
}

double BilinearSketchState::EstimateResidual(std::size_t k) const {
  return RankKResidual(Finalize(), k);
}

void BilinearSketchState::WriteSnapshot(std::ostream& out) const {
  out << kSnapshotMagic << '\n';
  WriteStages(out, "left", left_);
  WriteStages(out, "right", right_);
  out << "acc " << acc_.rows() << ' ' << acc_.cols() << '\n';
  for (double v : acc_.data()) {
    const std::uint64_t bits = ToLittleEndian(std::bit_cast<std::uint64_t>(v));
    char buf[sizeof(bits)];
    std::memcpy(buf, &bits, sizeof(bits));
    out.write(buf, sizeof(buf));
  }
}

BilinearSketchState BilinearSketchState::ReadSnapshot(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kSnapshotMagic) {
    throw ParseError("snapshot: missing magic header", 1);
  }
  AnySketch left = ReadStages(in, "left");
  AnySketch right = ReadStages(in, "right");
  if (!std::getline(in, line)) throw ParseError("snapshot: truncated", 0);
  std::istringstream dims(line);
  std::string tag;
  std::size_t rows = 0;
  std::size_t cols = 0;
  dims >> tag >> rows >> cols;
  BilinearSketchState state(std::move(left), std::move(right));
  if (tag != "acc" || rows != state.acc_.rows() || cols != state.acc_.cols()) {
    throw ParseError("snapshot: accumulator header '" + line +
                         "' does not match the sketches",
                     0);
  }
  for (double& v : state.acc_.data()) {
    char buf[sizeof(std::uint64_t)];
    if (!in.read(buf, sizeof(buf))) {
      throw ParseError("snapshot: accumulator payload truncated", 0);
    }
    std::uint64_t bits;
    std::memcpy(&bits, buf, sizeof(bits));
    v = std::bit_cast<double>(ToLittleEndian(bits));
  }
  return state;
}

BilinearSketchState Merge(const BilinearSketchState& a,
                          const BilinearSketchState& b) {
  BilinearSketchState out = a;
  out.MergeFrom(b);
  return out;
}

BatchEstimate EstimateBatch(std::span<const Triplet> triplets, std::size_t k,
                            const AnySketch& left, const AnySketch& right) {
  BatchEstimate result;
  BilinearSketchState state(left, right);
  auto start = std::chrono::steady_clock::now();
  state.Update(triplets);
  result.sketch_ms = MillisSince(start);
  start = std::chrono::steady_clock::now();
  result.estimate = state.EstimateResidual(k);
  result.finalize_ms = MillisSince(start);
  return result;
}

BatchEstimate EstimateBatch(const DenseMatrix& a, std::size_t k,
                            const AnySketch& left, const AnySketch& right) {
  if (InDim(left) != a.rows() || InDim(right) != a.cols()) {
    throw InvalidInput("EstimateBatch: sketch dims do not match matrix");
  }
  const auto triplets = ToTriplets(a);
  return EstimateBatch(triplets, k, left, right);
}

std::vector<Triplet> ToTriplets(const DenseMatrix& a) {
  std::vector<Triplet> out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) != 0.0) out.push_back({i, j, a(i, j)});
    }
  }
  return out;
}

}  // namespace residsketch
