#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "qhb/classical_flow.hpp"
#include "qhb/json_out.hpp"
#include "qhb/oscillator_spectra.hpp"
#include "qhb/picard_states.hpp"
#include "qhb/qh_bundle.hpp"

// Wire and file formats.
//
// Path files: a JSON array of segments {"chart": k, "points": [...]}; each
// point is a flat array [re1, im1, ..., re_n, im_n] (so [re, im] for n = 1).
//
// Holonomy output: {"schema": 1, "dimension": d, "matrix": [[re, im], ...]
// flattened row-major, "loop_area_estimate": a}.

namespace qhb {

inline constexpr int kSchemaVersion = 1;

inline std::string format_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline PhaseSpacePath parse_path_json(const std::string& text) {
  nlohmann::json doc = nlohmann::json::parse(text);
  const nlohmann::json* segments = &doc;
  if (doc.is_object()) {
    if (!doc.contains("segments")) throw DomainError("path file: missing \"segments\"");
    segments = &doc.at("segments");
  }
  if (!segments->is_array()) throw DomainError("path file: expected an array of segments");
  PhaseSpacePath path;
  for (const auto& seg_json : *segments) {
    PathSegment seg;
    seg.chart = ChartId{seg_json.at("chart").get<int>()};
    for (const auto& pt : seg_json.at("points")) {
      if (!pt.is_array() || pt.size() % 2 != 0 || pt.empty())
        throw DomainError("path file: each point must be a flat [re, im, ...] array");
      CVec z;
      for (std::size_t i = 0; i < pt.size(); i += 2)
        z.emplace_back(pt[i].get<double>(), pt[i + 1].get<double>());
      seg.points.push_back(std::move(z));
    }
    path.segments.push_back(std::move(seg));
  }
  validate_path(path);
  return path;
}

inline PhaseSpacePath load_path_file(const std::string& filename) {
  std::ifstream in(filename);
  if (!in) throw DomainError("path file: cannot open " + filename);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_path_json(ss.str());
}

inline JsonValue path_to_json(const PhaseSpacePath& path) {
  JsonValue segs = JsonValue::array();
  for (const auto& seg : path.segments) {
    JsonValue pts = JsonValue::array();
    for (const auto& p : seg.points) {
      JsonValue flat = JsonValue::array();
      for (const auto& c : p) {
        flat.push_back(c.real());
        flat.push_back(c.imag());
      }
      pts.push_back(std::move(flat));
    }
    JsonValue s = JsonValue::object();
    s.set("chart", seg.chart.k);
    s.set("points", std::move(pts));
    segs.push_back(std::move(s));
  }
  return segs;
}

inline JsonValue matrix_to_json(const CMat& m) {
  JsonValue rows = JsonValue::array();
  for (const auto& x : m.data) {
    JsonValue entry = JsonValue::array();
    entry.push_back(x.real());
    entry.push_back(x.imag());
    rows.push_back(std::move(entry));
  }
  return rows;
}

inline JsonValue holonomy_to_json(const HolonomyResult& h) {
  JsonValue out = JsonValue::object();
  out.set("schema", kSchemaVersion);
  out.set("dimension", static_cast<long long>(h.matrix.rows));
  out.set("matrix", matrix_to_json(h.matrix));
  out.set("loop_area_estimate", loop_area_estimate(h.loop));
  return out;
}

inline std::string spectrum_to_csv(const SpectrumTable& t) {
  std::string out = "occupations,E_lin,E_proj,degeneracy\n";
  for (const auto& r : t.rows) {
    std::string occ;
    for (std::size_t i = 0; i < r.occupation.m.size(); ++i) {
      if (i) occ += " ";
      occ += std::to_string(r.occupation.m[i]);
    }
    out += occ + "," + format_g17(r.linear_energy) + "," + format_g17(r.projective_energy) + "," +
           std::to_string(r.degeneracy) + "\n";
  }
  return out;
}

inline JsonValue spectrum_to_json(const SpectrumTable& t) {
  JsonValue rows = JsonValue::array();
  for (const auto& r : t.rows) {
    JsonValue occ = JsonValue::array();
    for (const auto m : r.occupation.m) occ.push_back(static_cast<long long>(m));
    JsonValue row = JsonValue::object();
    row.set("occupations", std::move(occ));
    row.set("E_lin", r.linear_energy);
    row.set("E_proj", r.projective_energy);
    row.set("degeneracy", r.degeneracy);
    rows.push_back(std::move(row));
  }
  JsonValue out = JsonValue::object();
  out.set("schema", kSchemaVersion);
  out.set("rows", std::move(rows));
  return out;
}

// {n, l, dimension, degenerate_vacuum, labels?}; labels only when the count
// stays at or below 10^4.
inline JsonValue picard_report_json(int n, int l) {
  const BigUint count = state_count(n, l);
  const VacuumDegeneracyReport rep = vacuum_degeneracy_note(n, l);
  JsonValue out = JsonValue::object();
  out.set("schema", kSchemaVersion);
  out.set("n", n);
  out.set("l", l);
  out.set("dimension", count.to_string());
  out.set("degenerate_vacuum", rep.degenerate);
  if (count.fits_u64() && count.to_u64() <= 10000) {
    JsonValue labels = JsonValue::array();
    for (const auto& s : enumerate_states(n, l)) {
      JsonValue lab = JsonValue::array();
      for (int v : s.subset) lab.push_back(v);
      labels.push_back(std::move(lab));
    }
    out.set("labels", std::move(labels));
  }
  return out;
}

inline std::string trajectory_to_csv(const Trajectory& traj) {
  if (traj.samples.empty()) return "t,energy\n";
  const std::size_t n = traj.samples.front().a.z.size();
  std::string out = "t";
  for (std::size_t i = 1; i <= n; ++i)
    out += ",re_z" + std::to_string(i) + ",im_z" + std::to_string(i);
  out += ",energy\n";
  for (const auto& s : traj.samples) {
    out += format_g17(s.t);
    for (const auto& c : s.a.z) out += "," + format_g17(c.real()) + "," + format_g17(c.imag());
    out += "," + format_g17(s.energy) + "\n";
  }
  return out;
}

inline JsonValue trajectory_summary_json(const Trajectory& traj) {
  JsonValue out = JsonValue::object();
  out.set("schema", kSchemaVersion);
  out.set("samples", static_cast<long long>(traj.samples.size()));
  out.set("steps", static_cast<long long>(traj.stats.steps));
  out.set("rejected_steps", static_cast<long long>(traj.stats.rejected));
  out.set("max_step_error", traj.stats.max_step_error);
  if (!traj.samples.empty()) {
    const double e0 = traj.samples.front().energy;
    double drift = 0.0;
    for (const auto& s : traj.samples) drift = std::max(drift, std::abs(s.energy - e0));
    out.set("t_end", traj.samples.back().t);
    out.set("energy_start", e0);
    out.set("energy_end", traj.samples.back().energy);
    out.set("max_energy_drift", drift);
  }
  return out;
}

}  // namespace qhb
