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

#ifndef RESIDSKETCH_DATASET_IO_H_
#define RESIDSKETCH_DATASET_IO_H_

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "residsketch/bilinear.h"
#include "residsketch/testkit.h"

namespace residsketch::io {

// A matrix as a stream of 0-based turnstile updates.
struct TripletMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Triplet> entries;
};

// MatrixMarket coordinate format. Field real, integer or pattern (pattern
// entries become 1.0); symmetry general or symmetric (mirrored off-diagonal
// entries are emitted). 1-based file indices become 0-based.
// Throws ParseError with the offending line number.
TripletMatrix ReadMatrixMarket(std::istream& in);
TripletMatrix ReadMatrixMarketFile(const std::string& path);
// Writes "coordinate real general" with 17 significant digits.
void WriteMatrixMarket(std::ostream& out, const TripletMatrix& m);

// UCI bag-of-words docword: lines D, W, NNZ then "doc word count" (1-based).
// The number of entry lines must equal NNZ.
TripletMatrix ReadUciBow(std::istream& in);
TripletMatrix ReadUciBowFile(const std::string& path);

// Plain matrix stream: "i j v" per line, 0-based, '#' comments allowed.
// Dimensions are taken as one past the largest index unless given.
TripletMatrix ReadMatrixStream(std::istream& in, std::size_t rows = 0,
                               std::size_t cols = 0);
TripletMatrix ReadMatrixStreamFile(const std::string& path,
                                   std::size_t rows = 0, std::size_t cols = 0);
void WriteMatrixStream(std::ostream& out, std::span<const Triplet> entries);

// Vector stream: "i v" per line, 0-based, '#' comments allowed.
std::vector<testkit::VectorUpdate> ReadVectorStream(std::istream& in);
std::vector<testkit::VectorUpdate> ReadVectorStreamFile(const std::string& path);
void WriteVectorStream(std::ostream& out,
                       std::span<const testkit::VectorUpdate> updates);

}  // namespace residsketch::io

#endif  // RESIDSKETCH_DATASET_IO_H_
