#pragma once

// File formats. Doubles are written in shortest round-trip form and parsed
// exactly, so write/read cycles are lossless and byte-stable.
//
//   points CSV   one point per line, comma-separated coordinates, no header
//   metric file  first line n, then n lines of n space-separated reals
//   coreset      CSV with header `id,weight`, sidecar JSON
//                {n, r_tilde, mu, rho, l, seed}, optional `id,rep` CSV
//   truth JSON   {labels, planted_centers, r_opt, params}

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "kco/coreset.hpp"
#include "kco/dataset.hpp"
#include "kco/datagen.hpp"
#include "kco/greedy.hpp"

namespace kco::io {

std::string format_double(double v);

Dataset read_points_csv(const std::string& path);
void write_points_csv(const std::string& path, const Dataset& ds);

Dataset read_metric(const std::string& path);
void write_metric(const std::string& path, const Dataset& ds);

struct CoresetFile {
  std::vector<PointId> points;
  std::vector<std::uint64_t> weights;
  std::size_t n = 0;  // size of the source dataset
  double r_tilde = 0.0;
  double mu = 0.0;
  double rho = 0.0;
  std::size_t l = 0;
  std::uint64_t seed = 0;
};

// meta_path_for("dir/cs.csv") = "dir/cs.meta.json"
std::string meta_path_for(const std::string& csv_path);

void write_coreset(const std::string& csv_path, const Coreset& cs, std::size_t n,
                   double mu, double rho);
CoresetFile read_coreset(const std::string& csv_path);
void write_rep_map(const std::string& path, const Coreset& cs);

struct TruthFile {
  std::vector<int> labels;
  std::vector<std::vector<double>> planted_centers;
  double r_opt = 0.0;
  SynthParams params;
};

void write_truth(const std::string& path, const PlantedInstance& inst);
TruthFile read_truth(const std::string& path);

// Center ids from either a report JSON (its "centers" array) or a plain text
// file with one id per line.
std::vector<PointId> read_centers(const std::string& path);

nlohmann::ordered_json trace_to_json(const RoundTrace& trace);

std::string read_file(const std::string& path);

// Writes via a temp file in the same directory plus rename, so a failed run
// never leaves a partial file behind.
void write_file(const std::string& path, const std::string& content);

}  // namespace kco::io
