#include "kco/io.hpp"

#include <array>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

namespace kco::io {
namespace {

using nlohmann::ordered_json;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_double(std::string_view tok, const std::string& path, std::size_t line) {
  tok = trim(tok);
  double v = 0.0;
  const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size() || !std::isfinite(v)) {
    fail_contract(path + ":" + std::to_string(line) + ": bad number '" +
                  std::string(tok) + "'");
  }
  return v;
}

std::uint64_t parse_u64(std::string_view tok, const std::string& path,
                        std::size_t line) {
  tok = trim(tok);
  std::uint64_t v = 0;
  const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size()) {
    fail_contract(path + ":" + std::to_string(line) + ": bad integer '" +
                  std::string(tok) + "'");
  }
  return v;
}

ordered_json parse_json(const std::string& path) {
  const std::string text = read_file(path);
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded()) fail_contract(path + ": invalid JSON");
  return j;
}

}  // namespace

std::string format_double(double v) {
  std::array<char, 32> buf;
  const auto [p, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  KCO_REQUIRE(ec == std::errc{}, "format_double: conversion failed");
  return std::string(buf.data(), p);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail_contract("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail_contract("cannot write " + tmp);
    out << content;
    out.flush();
    if (!out) fail_contract("write failed for " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    fail_contract("cannot move " + tmp + " to " + path + ": " + std::strerror(errno));
  }
}

Dataset read_points_csv(const std::string& path) {
  const std::string text = read_file(path);
  std::vector<double> coords;
  std::size_t dim = 0;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    ++lineno;
    std::string_view line = trim(std::string_view(text).substr(pos, end - pos));
    pos = end + 1;
    if (line.empty()) continue;
    std::size_t count = 0;
    std::size_t at = 0;
    while (true) {
      std::size_t comma = line.find(',', at);
      const std::string_view tok =
          comma == std::string_view::npos ? line.substr(at) : line.substr(at, comma - at);
      coords.push_back(parse_double(tok, path, lineno));
      ++count;
      if (comma == std::string_view::npos) break;
      at = comma + 1;
    }
    if (dim == 0) {
      dim = count;
    } else if (count != dim) {
      fail_contract(path + ":" + std::to_string(lineno) + ": expected " +
                    std::to_string(dim) + " coordinates, got " + std::to_string(count));
    }
  }
  KCO_REQUIRE(dim > 0, path + ": no points found");
  return Dataset::euclidean(std::move(coords), dim);
}

void write_points_csv(const std::string& path, const Dataset& ds) {
  KCO_REQUIRE(ds.is_euclidean(), "write_points_csv: Euclidean data only");
  std::string out;
  const std::size_t d = ds.dim();
  out.reserve(ds.size() * d * 12);
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const double* row = ds.row(static_cast<PointId>(i));
    for (std::size_t c = 0; c < d; ++c) {
      if (c > 0) out.push_back(',');
      out += format_double(row[c]);
    }
    out.push_back('\n');
  }
  write_file(path, out);
}

Dataset read_metric(const std::string& path) {
  const std::string text = read_file(path);
  std::istringstream in(text);
  std::size_t n = 0;
  if (!(in >> n) || n == 0) fail_contract(path + ": expected point count on line 1");
  std::vector<double> m;
  m.reserve(n * n);
  std::string tok;
  for (std::size_t i = 0; i < n * n; ++i) {
    if (!(in >> tok)) fail_contract(path + ": matrix ended early");
    m.push_back(parse_double(tok, path, 1 + i / n + 1));
  }
  return Dataset::metric(std::move(m), n);
}

void write_metric(const std::string& path, const Dataset& ds) {
  KCO_REQUIRE(!ds.is_euclidean(), "write_metric: metric data only");
  const std::size_t n = ds.size();
  std::string out = std::to_string(n) + "\n";
  for (std::size_t i = 0; i < n; ++i) {
    const double* row = ds.metric_row(static_cast<PointId>(i));
    for (std::size_t j = 0; j < n; ++j) {
      if (j > 0) out.push_back(' ');
      out += format_double(row[j]);
    }
    out.push_back('\n');
  }
  write_file(path, out);
}

std::string meta_path_for(const std::string& csv_path) {
  if (csv_path.size() > 4 && csv_path.ends_with(".csv")) {
    return csv_path.substr(0, csv_path.size() - 4) + ".meta.json";
  }
  return csv_path + ".meta.json";
}

void write_coreset(const std::string& csv_path, const Coreset& cs, std::size_t n,
                   double mu, double rho) {
  std::string out = "id,weight\n";
  for (std::size_t i = 0; i < cs.points.size(); ++i) {
    out += std::to_string(cs.points[i]);
    out.push_back(',');
    out += std::to_string(cs.weights[i]);
    out.push_back('\n');
  }
  write_file(csv_path, out);

  ordered_json meta;
  meta["n"] = n;
  meta["r_tilde"] = cs.r_tilde;
  meta["mu"] = mu;
  meta["rho"] = rho;
  meta["l"] = cs.l;
  meta["seed"] = cs.seed;
  write_file(meta_path_for(csv_path), meta.dump(2) + "\n");
}

CoresetFile read_coreset(const std::string& csv_path) {
  CoresetFile f;
  const std::string text = read_file(csv_path);
  std::size_t pos = 0;
  std::size_t lineno = 0;
  bool header = true;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    ++lineno;
    std::string_view line = trim(std::string_view(text).substr(pos, end - pos));
    pos = end + 1;
    if (line.empty()) continue;
    if (header) {
      if (line != "id,weight") fail_contract(csv_path + ": expected header id,weight");
      header = false;
      continue;
    }
    const std::size_t comma = line.find(',');
    if (comma == std::string_view::npos) {
      fail_contract(csv_path + ":" + std::to_string(lineno) + ": expected id,weight");
    }
    f.points.push_back(
        static_cast<PointId>(parse_u64(line.substr(0, comma), csv_path, lineno)));
    const std::uint64_t w = parse_u64(line.substr(comma + 1), csv_path, lineno);
    KCO_REQUIRE(w > 0, csv_path + ": weights must be positive");
    f.weights.push_back(w);
  }
  KCO_REQUIRE(!f.points.empty(), csv_path + ": empty summary");

  const ordered_json meta = parse_json(meta_path_for(csv_path));
  f.n = meta.at("n").get<std::size_t>();
  f.r_tilde = meta.at("r_tilde").get<double>();
  f.mu = meta.at("mu").get<double>();
  f.rho = meta.at("rho").get<double>();
  f.l = meta.at("l").get<std::size_t>();
  f.seed = meta.at("seed").get<std::uint64_t>();
  return f;
}

void write_rep_map(const std::string& path, const Coreset& cs) {
  std::string out = "id,rep\n";
  for (std::size_t i = 0; i < cs.rep_map.size(); ++i) {
    out += std::to_string(i);
    out.push_back(',');
    out += std::to_string(cs.rep_map[i]);
    out.push_back('\n');
  }
  write_file(path, out);
}

void write_truth(const std::string& path, const PlantedInstance& inst) {
  ordered_json j;
  j["labels"] = inst.labels;
  j["planted_centers"] = inst.planted_centers;
  j["r_opt"] = inst.r_opt;
  j["params"] = {{"n", inst.params.n},       {"dim", inst.params.dim},
                 {"k", inst.params.k},       {"z", inst.params.z},
                 {"side", inst.params.side}, {"variance", inst.params.variance},
                 {"meb_delta", inst.params.meb_delta}, {"seed", inst.params.seed}};
  write_file(path, j.dump(2) + "\n");
}

TruthFile read_truth(const std::string& path) {
  const ordered_json j = parse_json(path);
  TruthFile t;
  t.labels = j.at("labels").get<std::vector<int>>();
  if (j.contains("planted_centers")) {
    t.planted_centers = j.at("planted_centers").get<std::vector<std::vector<double>>>();
  }
  t.r_opt = j.at("r_opt").get<double>();
  const auto& p = j.at("params");
  t.params.n = p.at("n").get<std::size_t>();
  t.params.dim = p.at("dim").get<std::size_t>();
  t.params.k = p.at("k").get<std::size_t>();
  t.params.z = p.at("z").get<std::size_t>();
  t.params.side = p.at("side").get<double>();
  t.params.variance = p.at("variance").get<double>();
  if (p.contains("meb_delta")) t.params.meb_delta = p.at("meb_delta").get<double>();
  t.params.seed = p.at("seed").get<std::uint64_t>();
  return t;
}

std::vector<PointId> read_centers(const std::string& path) {
  const std::string text = read_file(path);
  std::size_t first = text.find_first_not_of(" \t\r\n");
  KCO_REQUIRE(first != std::string::npos, path + ": empty centers file");

  std::vector<PointId> out;
  if (text[first] == '{') {
    ordered_json j = ordered_json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.contains("centers")) {
      fail_contract(path + ": not a report JSON with a centers array");
    }
    for (const auto& v : j.at("centers")) {
      out.push_back(v.get<PointId>());
    }
  } else {
    std::size_t pos = 0;
    std::size_t lineno = 0;
    while (pos < text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string::npos) end = text.size();
      ++lineno;
      const std::string_view line = trim(std::string_view(text).substr(pos, end - pos));
      pos = end + 1;
      if (line.empty()) continue;
      out.push_back(static_cast<PointId>(parse_u64(line, path, lineno)));
    }
  }
  KCO_REQUIRE(!out.empty(), path + ": no center ids found");
  return out;
}

nlohmann::ordered_json trace_to_json(const RoundTrace& trace) {
  ordered_json rounds = ordered_json::array();
  for (const RoundRecord& r : trace.rounds) {
    ordered_json rec;
    rec["round"] = r.round;
    rec["e_size"] = r.e_size;
    if (std::isnan(r.q_dist)) {
      rec["q_dist"] = nullptr;
    } else {
      rec["q_dist"] = r.q_dist;
    }
    rec["phi"] = r.phi;
    rec["phi0"] = r.phi0;
    if (r.lambda < 0) {
      rec["lambda"] = nullptr;
    } else {
      rec["lambda"] = r.lambda;
    }
    rounds.push_back(rec);
  }
  return rounds;
}

}  // namespace kco::io
