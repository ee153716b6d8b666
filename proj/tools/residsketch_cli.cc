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

// residsketch: estimate rank-k matrix residuals and k-residual l_p norms
// from streams, and generate test instances.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "residsketch/dataset_io.h"
#include "residsketch/errors.h"
#include "residsketch/experiment.h"
#include "residsketch/linalg.h"
#include "residsketch/random.h"
#include "residsketch/testkit.h"

namespace {

using nlohmann::json;
using namespace residsketch;

constexpr int kExitParse = 2;
constexpr int kExitNumerical = 3;

struct DatasetFlags {
  std::string path;
  std::string format = "mm";
  std::size_t rows = 0;
  std::size_t cols = 0;
};

void AddDatasetFlags(CLI::App* cmd, DatasetFlags& d, bool matrix) {
  cmd->add_option("--dataset", d.path, "Input file")->required();
  if (matrix) {
    cmd->add_option("--format", d.format, "mm | bow | stream")
        ->check(CLI::IsMember({"mm", "bow", "stream"}));
    cmd->add_option("--rows", d.rows, "Row count for stream input");
    cmd->add_option("--cols", d.cols, "Column count for stream input");
  }
}

io::TripletMatrix LoadMatrix(const DatasetFlags& d) {
  if (d.format == "bow") return io::ReadUciBowFile(d.path);
  if (d.format == "stream") return io::ReadMatrixStreamFile(d.path, d.rows, d.cols);
  return io::ReadMatrixMarketFile(d.path);
}

std::string CommandEcho(int argc, char** argv) {
  std::string out;
  for (int i = 0; i < argc; ++i) {
    if (i > 0) out += ' ';
    out += argv[i];
  }
  return out;
}

void Emit(json doc, const std::string& echo, const std::string& json_out) {
  doc["command_line"] = echo;
  const std::string text = doc.dump(2);
  std::cout << text << '\n';
  if (!json_out.empty()) {
    std::ofstream out(json_out);
    if (!out) throw ParseError("cannot write '" + json_out + "'", 0);
    out << text << '\n';
  }
}

std::ofstream OpenOut(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'", 0);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sketch-based residual estimation for matrices and vectors"};
  app.require_subcommand(1);
  const std::string echo = CommandEcho(argc, argv);
  std::string json_out;

  // lowrank
  DatasetFlags lr_data;
  LowrankOptions lr;
  std::string snapshot_out;
  auto* lowrank = app.add_subcommand("lowrank", "Estimate ||A - A_k||_F");
  AddDatasetFlags(lowrank, lr_data, true);
  lowrank->add_option("--k", lr.k, "Target rank");
  lowrank->add_option("--m", lr.m, "Sketch size per side");
  lowrank->add_option("--family", lr.family,
                      "countsketch | jl | osnap | gaussian | composed")
      ->check(CLI::IsMember({"countsketch", "jl", "osnap", "gaussian", "composed"}));
  lowrank->add_option("--s", lr.s, "OSNAP nonzeros per column");
  lowrank->add_option("--inner", lr.inner,
                      "Inner CountSketch size for composed (0 = min(m^2, 4096))");
  lowrank->add_option("--trials", lr.trials);
  lowrank->add_option("--seed", lr.seed);
  lowrank->add_flag("--with-exact", lr.with_exact, "Also compute the exact residual");
  lowrank->add_option("--snapshot-out", snapshot_out,
                      "Write the last trial's sketch state here");
  lowrank->add_option("--json-out", json_out);

  // vector / recover share flags
  std::string vec_path;
  VectorOptions vo;
  auto add_vector_flags = [&](CLI::App* cmd) {
    cmd->add_option("--dataset", vec_path, "Vector stream file ('i v' lines)")
        ->required();
    cmd->add_option("--format", lr_data.format, "stream")
        ->check(CLI::IsMember({"stream"}));
    cmd->add_option("--n", vo.n, "Universe size (default: max index + 1)");
    cmd->add_option("--k", vo.k);
    cmd->add_option("--p", vo.p);
    cmd->add_option("--eps", vo.eps);
    cmd->add_option("--cb", vo.c_b, "Bucket constant");
    cmd->add_option("--cl", vo.c_l, "Row constant");
    cmd->add_option("--trials", vo.trials);
    cmd->add_option("--seed", vo.seed);
    cmd->add_flag("--with-exact", vo.with_exact);
    cmd->add_option("--json-out", json_out);
  };
  auto* vector = app.add_subcommand("vector", "Estimate ||x_{-k}||_p^p");
  add_vector_flags(vector);
  auto* recover = app.add_subcommand("recover", "k-sparse recovery x_hat_J");
  add_vector_flags(recover);

  // bench
  DatasetFlags bench_data;
  LowrankOptions bench_opts;
  auto* bench = app.add_subcommand("bench", "OSNAP vs Gaussian at matched m");
  AddDatasetFlags(bench, bench_data, true);
  bench->add_option("--k", bench_opts.k);
  bench->add_option("--m", bench_opts.m);
  bench->add_option("--s", bench_opts.s);
  bench->add_option("--trials", bench_opts.trials);
  bench->add_option("--seed", bench_opts.seed);
  bench->add_flag("--with-exact", bench_opts.with_exact);
  bench->add_option("--json-out", json_out);

  // exact
  DatasetFlags exact_data;
  std::size_t exact_k = 5;
  double exact_p = 3.0;
  auto* exact = app.add_subcommand("exact", "Exact residual by full decomposition");
  exact->add_option("--dataset", exact_data.path)->required();
  exact->add_option("--format", exact_data.format, "mm | bow | stream | vector")
      ->check(CLI::IsMember({"mm", "bow", "stream", "vector"}));
  exact->add_option("--rows", exact_data.rows);
  exact->add_option("--cols", exact_data.cols);
  exact->add_option("--k", exact_k);
  exact->add_option("--p", exact_p, "Exponent for vector input");
  exact->add_option("--json-out", json_out);

  // gen
  auto* gen = app.add_subcommand("gen", "Write generated instances");
  gen->require_subcommand(1);
  std::string gen_out;

  testkit::HardInstanceSpec hard;
  std::string which = "d1";
  auto* gen_hard = gen->add_subcommand("hard", "Hard matrix pair instance");
  gen_hard->add_option("--k", hard.k);
  gen_hard->add_option("--eps", hard.eps);
  gen_hard->add_option("--c", hard.c);
  gen_hard->add_option("--seed", hard.seed);
  gen_hard->add_option("--which", which)->check(CLI::IsMember({"d1", "d2"}));
  gen_hard->add_option("--out", gen_out)->required();

  testkit::ZipfStreamSpec zipf;
  auto* gen_zipf = gen->add_subcommand("zipf", "Zipf turnstile vector stream");
  gen_zipf->add_option("--n", zipf.n);
  gen_zipf->add_option("--exponent", zipf.exponent);
  gen_zipf->add_option("--scale", zipf.scale);
  gen_zipf->add_option("--updates", zipf.updates);
  gen_zipf->add_option("--turnstile", zipf.turnstile_fraction);
  gen_zipf->add_option("--seed", zipf.seed);
  gen_zipf->add_option("--out", gen_out)->required();

  std::size_t gap_k = 10;
  std::size_t gap_block = 1000;
  double gap_spike = 10.0;
  std::uint64_t gap_seed = 0;
  auto* gen_gap = gen->add_subcommand("gap", "Planted-spike block vector");
  gen_gap->add_option("--k", gap_k);
  gen_gap->add_option("--block", gap_block);
  gen_gap->add_option("--spike", gap_spike);
  gen_gap->add_option("--seed", gap_seed);
  gen_gap->add_option("--out", gen_out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (*lowrank) {
      const auto start = std::chrono::steady_clock::now();
      const auto matrix = LoadMatrix(lr_data);
      const double ingest =
          std::chrono::duration<double, std::milli>(
              std::chrono::steady_clock::now() - start)
              .count();
      auto report = RunLowrank(matrix, lr_data.path, lr);
      report.ingest_ms = ingest;
      if (!snapshot_out.empty()) {
        const std::uint64_t seed = DeriveSeed(lr.seed, lr.trials == 0 ? 0 : lr.trials - 1);
        BilinearSketchState state(
            MakeSketch(lr.family, lr.m, lr.s, lr.inner, matrix.rows, DeriveSeed(seed, 0)),
            MakeSketch(lr.family, lr.m, lr.s, lr.inner, matrix.cols, DeriveSeed(seed, 1)));
        state.Update(matrix.entries);
        std::ofstream out(snapshot_out, std::ios::binary);
        if (!out) throw ParseError("cannot write '" + snapshot_out + "'", 0);
        state.WriteSnapshot(out);
      }
      Emit(report.ToJson(), echo, json_out);
    } else if (*vector || *recover) {
      const auto start = std::chrono::steady_clock::now();
      const auto stream = io::ReadVectorStreamFile(vec_path);
      const double ingest =
          std::chrono::duration<double, std::milli>(
              std::chrono::steady_clock::now() - start)
              .count();
      vo.emit_recovery = static_cast<bool>(*recover);
      auto report = RunVector(stream, vec_path, vo);
      report.ingest_ms = ingest;
      Emit(report.ToJson(), echo, json_out);
    } else if (*bench) {
      const auto matrix = LoadMatrix(bench_data);
      const auto report = RunBench(matrix, bench_data.path, bench_opts);
      Emit(report.ToJson(), echo, json_out);
    } else if (*exact) {
      json doc;
      doc["command"] = "exact";
      doc["dataset"] = exact_data.path;
      doc["k"] = exact_k;
      if (exact_data.format == "vector") {
        const auto stream = io::ReadVectorStreamFile(exact_data.path);
        std::size_t n = 0;
        for (const auto& u : stream) n = std::max(n, u.index + 1);
        std::vector<double> x(n, 0.0);
        for (const auto& u : stream) x[u.index] += u.value;
        doc["p"] = exact_p;
        doc["residual_pp"] = testkit::ExactVectorResidual(x, exact_k, exact_p);
      } else {
        const auto matrix = LoadMatrix(exact_data);
        const auto dense =
            testkit::Densify(matrix.entries, matrix.rows, matrix.cols);
        doc["rows"] = matrix.rows;
        doc["cols"] = matrix.cols;
        doc["residual"] = testkit::ExactMatrixResidual(dense, exact_k);
        doc["frobenius"] = FrobeniusNorm(dense);
      }
      Emit(doc, echo, json_out);
    } else if (*gen) {
      auto out = OpenOut(gen_out);
      json doc;
      doc["command"] = "gen";
      doc["out"] = gen_out;
      if (*gen_hard) {
        hard.which = which == "d2" ? testkit::HardDistribution::kD2
                                   : testkit::HardDistribution::kD1;
        const auto inst = testkit::GenerateHardInstance(hard);
        const auto triplets = ToTriplets(inst.matrix);
        io::WriteMatrixStream(out, triplets);
        doc["kind"] = "hard";
        doc["which"] = which;
        doc["rows"] = inst.matrix.rows();
        doc["cols"] = inst.matrix.cols();
        doc["alpha"] = inst.alpha;
      } else if (*gen_zipf) {
        const auto stream = testkit::GenerateZipfStream(zipf);
        io::WriteVectorStream(out, stream.updates);
        doc["kind"] = "zipf";
        doc["n"] = zipf.n;
        doc["updates"] = stream.updates.size();
      } else if (*gen_gap) {
        const auto gap = testkit::GenerateGapVector(gap_k, gap_block, gap_spike, gap_seed);
        const auto stream = testkit::VectorToStream(gap.values);
        io::WriteVectorStream(out, stream);
        doc["kind"] = "gap";
        doc["n"] = gap.values.size();
        doc["planted"] = gap.planted;
      }
      Emit(doc, echo, json_out);
    }
  } catch (const NumericalFailure& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
