// Command-line front end: geometry queries, spectra, Chern numbers, state
// counting, parallel transport, holonomy, duality demos, and classical flows,
// with deterministic machine-readable output.
//
// Exit codes: 0 success, 2 usage error, 3 numerical failure.

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qhb/checks.hpp"
#include "qhb/classical_flow.hpp"
#include "qhb/formats.hpp"
#include "qhb/json_out.hpp"
#include "qhb/line_bundle.hpp"
#include "qhb/oscillator_spectra.hpp"
#include "qhb/picard_states.hpp"
#include "qhb/qh_bundle.hpp"

namespace {

using namespace qhb;

// "re,im;re,im;..." -> CVec
CVec parse_points(const std::string& text) {
  CVec out;
  std::string cur;
  std::vector<double> parts;
  auto flush_number = [&]() {
    if (cur.empty()) throw DomainError("point syntax: expected re,im pairs separated by ';'");
    parts.push_back(std::stod(cur));
    cur.clear();
  };
  auto flush_pair = [&]() {
    flush_number();
    if (parts.size() != 2) throw DomainError("point syntax: each component needs re,im");
    out.emplace_back(parts[0], parts[1]);
    parts.clear();
  };
  for (char c : text) {
    if (c == ',')
      flush_number();
    else if (c == ';')
      flush_pair();
    else if (!std::isspace(static_cast<unsigned char>(c)))
      cur.push_back(c);
  }
  flush_pair();
  return out;
}

void write_output(const std::string& text, const std::string& out_file) {
  if (out_file.empty()) {
    std::fputs(text.c_str(), stdout);
    return;
  }
  std::string path = out_file;
  const char* dir = std::getenv("QHB_OUTPUT_DIR");
  if (dir != nullptr && *dir != '\0' && out_file.front() != '/')
    path = std::string(dir) + "/" + out_file;
  std::ofstream f(path);
  if (!f) throw DomainError("cannot open output file " + path);
  f << text;
}

std::string check_report_text(const checks::CheckReport& rep) {
  std::string out = "module " + rep.module + "\n";
  for (const auto& r : rep.results) {
    char line[256];
    std::snprintf(line, sizeof(line), "  [%s] %-55s residual %.3e (%s %.3e)\n",
                  r.pass ? "pass" : "FAIL", r.name.c_str(), r.residual,
                  r.larger_is_better ? "must exceed" : "bound", r.bound);
    out += line;
  }
  out += rep.all_pass() ? "all checks passed\n" : "CHECK FAILURES PRESENT\n";
  return out;
}

JsonValue check_report_json(const checks::CheckReport& rep) {
  JsonValue items = JsonValue::array();
  for (const auto& r : rep.results) {
    JsonValue item = JsonValue::object();
    item.set("name", r.name);
    item.set("residual", r.residual);
    item.set(r.larger_is_better ? "must_exceed" : "bound", r.bound);
    item.set("pass", r.pass);
    items.push_back(std::move(item));
  }
  JsonValue out = JsonValue::object();
  out.set("schema", kSchemaVersion);
  out.set("module", rep.module);
  out.set("checks", std::move(items));
  out.set("all_pass", rep.all_pass());
  return out;
}

// Runs a check suite, emits it, and returns the process exit code.
int emit_check(const checks::CheckReport& rep, const std::string& format,
               const std::string& out_file) {
  if (format == "json")
    write_output(check_report_json(rep).dump(2), out_file);
  else
    write_output(check_report_text(rep), out_file);
  if (rep.all_pass()) return 0;
  std::fprintf(stderr, "check failures in module %s\n", rep.module.c_str());
  for (const auto& r : rep.results)
    if (!r.pass) std::fprintf(stderr, "  failing invariant: %s\n", r.name.c_str());
  return 3;
}

JsonValue complex_json(const Complex& c) {
  JsonValue v = JsonValue::array();
  v.push_back(c.real());
  v.push_back(c.imag());
  return v;
}

JsonValue cvec_json(const CVec& v) {
  JsonValue out = JsonValue::array();
  for (const auto& c : v) out.push_back(complex_json(c));
  return out;
}

struct CommonOpts {
  std::string format = "json";
  std::string out_file;
  bool check = false;
  std::uint64_t seed = 12345;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--out", o.out_file,
                  "output file (relative paths land in $QHB_OUTPUT_DIR when set)");
  cmd->add_flag("--check", o.check, "run this module's invariant suite instead");
  cmd->add_option("--seed", o.seed, "seed for randomized checks");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert-space bundles, Fubini-Study geometry and projective oscillator "
               "spectra over CP^n"};
  app.require_subcommand(1);
  std::function<int()> action;

  // ---- atlas ----
  auto atlas_opts = std::make_shared<CommonOpts>();
  struct AtlasCfg {
    int n = 1;
    int from = 1;
    int to = 2;
    std::string point = "0.5,0.5";
  };
  auto atlas_cfg = std::make_shared<AtlasCfg>();
  {
    CLI::App* cmd = app.add_subcommand("atlas", "chart transitions and jacobians");
    cmd->add_option("--n", atlas_cfg->n, "complex dimension")->check(CLI::Range(1, 16));
    cmd->add_option("--from", atlas_cfg->from, "source chart (1-based)");
    cmd->add_option("--to", atlas_cfg->to, "target chart (1-based)");
    cmd->add_option("--point", atlas_cfg->point, "affine coordinates re,im;re,im;...");
    add_common(cmd, *atlas_opts);
    cmd->callback([&action, atlas_cfg, atlas_opts]() {
      action = [atlas_cfg, atlas_opts]() {
        if (atlas_opts->check)
          return emit_check(checks::run_atlas_checks(atlas_opts->seed), atlas_opts->format,
                            atlas_opts->out_file);
        const CVec z = parse_points(atlas_cfg->point);
        if (static_cast<int>(z.size()) != atlas_cfg->n)
          throw DomainError("atlas: point has wrong dimension");
        const AffineCoords a{ChartId{atlas_cfg->from}, z};
        const AffineCoords b = transition(a, ChartId{atlas_cfg->to});
        const CMat jac = jacobian(a, ChartId{atlas_cfg->to});
        JsonValue out = JsonValue::object();
        out.set("schema", kSchemaVersion);
        out.set("n", atlas_cfg->n);
        out.set("from_chart", atlas_cfg->from);
        out.set("to_chart", atlas_cfg->to);
        out.set("input", cvec_json(a.z));
        out.set("output", cvec_json(b.z));
        out.set("jacobian", matrix_to_json(jac));
        out.set("preferred_chart", preferred_chart(to_projective(a)).k);
        write_output(out.dump(2), atlas_opts->out_file);
        return 0;
      };
    });
  }

  // ---- metric ----
  auto metric_opts = std::make_shared<CommonOpts>();
  struct MetricCfg {
    int n = 1;
    int chart = 1;
    std::string point = "0.5,0.0";
  };
  auto metric_cfg = std::make_shared<MetricCfg>();
  {
    CLI::App* cmd = app.add_subcommand("metric", "Fubini-Study data at a point");
    cmd->add_option("--n", metric_cfg->n, "complex dimension")->check(CLI::Range(1, 16));
    cmd->add_option("--chart", metric_cfg->chart, "chart (1-based)");
    cmd->add_option("--point", metric_cfg->point, "affine coordinates re,im;re,im;...");
    add_common(cmd, *metric_opts);
    cmd->callback([&action, metric_cfg, metric_opts]() {
      action = [metric_cfg, metric_opts]() {
        if (metric_opts->check)
          return emit_check(checks::run_metric_checks(metric_opts->seed), metric_opts->format,
                            metric_opts->out_file);
        const CVec z = parse_points(metric_cfg->point);
        if (static_cast<int>(z.size()) != metric_cfg->n)
          throw DomainError("metric: point has wrong dimension");
        const AffineCoords a{ChartId{metric_cfg->chart}, z};
        const MetricTensor g = metric(a);
        const CurvatureData cd = curvature(a);
        double curvature_max = 0.0;
        for (const auto& x : cd.riemann) curvature_max = std::max(curvature_max, std::abs(x));
        JsonValue out = JsonValue::object();
        out.set("schema", kSchemaVersion);
        out.set("n", metric_cfg->n);
        out.set("chart", metric_cfg->chart);
        out.set("point", cvec_json(a.z));
        out.set("kahler_potential", kahler_potential(a));
        out.set("quadratic_approximation", quadratic_approximation(a));
        out.set("metric", matrix_to_json(g.g));
        out.set("inverse_metric", matrix_to_json(inverse_metric(a)));
        out.set("symplectic_form", matrix_to_json(symplectic_form(a).w));
        out.set("curvature_max_norm", curvature_max);
        if (metric_cfg->n == 1) out.set("gaussian_curvature", gaussian_curvature(a));
        write_output(out.dump(2), metric_opts->out_file);
        return 0;
      };
    });
  }

  // ---- chern ----
  auto chern_opts = std::make_shared<CommonOpts>();
  struct ChernCfg {
    int l = 1;
    double tol = 1e-9;
  };
  auto chern_cfg = std::make_shared<ChernCfg>();
  {
    CLI::App* cmd = app.add_subcommand("chern", "Chern number of the class-l bundle over CP^1");
    cmd->add_option("--l", chern_cfg->l, "Picard class")->check(CLI::Range(-64, 64));
    cmd->add_option("--tol", chern_cfg->tol, "quadrature tolerance")
        ->check(CLI::Range(1e-14, 1e-2));
    add_common(cmd, *chern_opts);
    cmd->callback([&action, chern_cfg, chern_opts]() {
      action = [chern_cfg, chern_opts]() {
        if (chern_opts->check)
          return emit_check(checks::run_chern_checks(chern_opts->seed), chern_opts->format,
                            chern_opts->out_file);
        const double c = chern_number(chern_cfg->l, chern_cfg->tol);
        JsonValue out = JsonValue::object();
        out.set("schema", kSchemaVersion);
        out.set("l", chern_cfg->l);
        out.set("chern_number", c);
        write_output(out.dump(2), chern_opts->out_file);
        return 0;
      };
    });
  }

  // ---- spectrum ----
  auto spec_opts = std::make_shared<CommonOpts>();
  struct SpectrumCfg {
    int n = 1;
    std::int64_t unrestricted_cutoff = -1;
  };
  auto spec_cfg = std::make_shared<SpectrumCfg>();
  {
    CLI::App* cmd = app.add_subcommand("spectrum", "projective oscillator spectrum on CP^n");
    cmd->add_option("--n", spec_cfg->n, "complex dimension")->check(CLI::Range(1, 1000));
    cmd->add_option("--unrestricted-cutoff", spec_cfg->unrestricted_cutoff,
                    "emit the untruncated comparison table up to this total occupation");
    add_common(cmd, *spec_opts);
    cmd->callback([&action, spec_cfg, spec_opts]() {
      action = [spec_cfg, spec_opts]() {
        if (spec_opts->check)
          return emit_check(checks::run_spectrum_checks(), spec_opts->format,
                            spec_opts->out_file);
        const bool unrestricted = spec_cfg->unrestricted_cutoff >= 0;
        const SpectrumTable t =
            unrestricted ? unrestricted_spectrum(
                               spec_cfg->n, static_cast<std::uint64_t>(spec_cfg->unrestricted_cutoff))
                         : spectrum(spec_cfg->n);
        if (spec_opts->format == "csv") {
          std::string text;
          if (unrestricted)
            text += "# unrestricted comparison table (no CP^n truncation), cutoff " +
                    std::to_string(spec_cfg->unrestricted_cutoff) + "\n";
          text += spectrum_to_csv(t);
          write_output(text, spec_opts->out_file);
        } else {
          JsonValue out = spectrum_to_json(t);
          out.set("n", spec_cfg->n);
          out.set("truncated_to_cpn", !unrestricted);
          write_output(out.dump(2), spec_opts->out_file);
        }
        return 0;
      };
    });
  }

  // ---- states ----
  auto states_opts = std::make_shared<CommonOpts>();
  struct StatesCfg {
    int n = 1;
    int l = 1;
  };
  auto states_cfg = std::make_shared<StatesCfg>();
  {
    CLI::App* cmd = app.add_subcommand("states", "Picard-class state counting and labels");
    cmd->add_option("--n", states_cfg->n, "complex dimension")->check(CLI::Range(1, 1000));
    cmd->add_option("--l", states_cfg->l, "Picard class")->check(CLI::Range(0, 64));
    add_common(cmd, *states_opts);
    cmd->callback([&action, states_cfg, states_opts]() {
      action = [states_cfg, states_opts]() {
        if (states_opts->check)
          return emit_check(checks::run_states_checks(), states_opts->format,
                            states_opts->out_file);
        write_output(picard_report_json(states_cfg->n, states_cfg->l).dump(2),
                     states_opts->out_file);
        return 0;
      };
    });
  }

  // ---- transport ----
  auto tr_opts = std::make_shared<CommonOpts>();
  struct TransportCfg {
    int l = 1;
    std::string path_file;
    std::string state;
  };
  auto tr_cfg = std::make_shared<TransportCfg>();
  {
    CLI::App* cmd = app.add_subcommand("transport", "parallel transport along a path file");
    cmd->add_option("--l", tr_cfg->l, "Picard class")->check(CLI::Range(-1, 64));
    cmd->add_option("--path", tr_cfg->path_file, "JSON path file");
    cmd->add_option("--state", tr_cfg->state, "initial amplitudes re,im;re,im;... (default e_0)");
    add_common(cmd, *tr_opts);
    cmd->callback([&action, tr_cfg, tr_opts]() {
      action = [tr_cfg, tr_opts]() {
        if (tr_opts->check)
          return emit_check(checks::run_qh_checks(tr_opts->seed), tr_opts->format,
                            tr_opts->out_file);
        if (tr_cfg->path_file.empty()) throw DomainError("transport: --path is required");
        const PhaseSpacePath path = load_path_file(tr_cfg->path_file);
        if (path.empty()) throw DomainError("transport: path file holds no segments");
        const int n = path.dim();
        if (fiber_dimension(n, tr_cfg->l) > 256)
          throw DomainError("transport: fiber dimension above 256; pick smaller n or l");
        const std::size_t d = static_cast<std::size_t>(fiber_dimension(n, tr_cfg->l));
        QHFiberState s;
        s.chart = path.segments.front().chart;
        s.picard = tr_cfg->l;
        if (tr_cfg->state.empty()) {
          s.amplitudes.assign(d, Complex(0.0, 0.0));
          s.amplitudes[0] = 1.0;
        } else {
          s.amplitudes = parse_points(tr_cfg->state);
          if (s.amplitudes.size() != d)
            throw DomainError("transport: state has wrong length for the fiber dimension");
        }
        const AffineCoords start{s.chart, path.segments.front().points.front()};
        const QHFiberState moved = parallel_transport(s, path);
        const AffineCoords end{moved.chart, path.segments.back().points.back()};
        JsonValue out = JsonValue::object();
        out.set("schema", kSchemaVersion);
        out.set("n", n);
        out.set("l", tr_cfg->l);
        out.set("start_chart", s.chart.k);
        out.set("end_chart", moved.chart.k);
        out.set("input", cvec_json(s.amplitudes));
        out.set("output", cvec_json(moved.amplitudes));
        out.set("input_norm", fiber_norm(s, start));
        out.set("output_norm", fiber_norm(moved, end));
        write_output(out.dump(2), tr_opts->out_file);
        return 0;
      };
    });
  }

  // ---- holonomy ----
  auto hol_opts = std::make_shared<CommonOpts>();
  struct HolCfg {
    int n = 1;
    int l = 1;
    std::string loop = "square";
    double side = 0.5;
    std::string center = "0,0";
    int chords = 2048;
    std::string path_file;
  };
  auto hol_cfg = std::make_shared<HolCfg>();
  {
    CLI::App* cmd = app.add_subcommand("holonomy", "holonomy of a closed loop");
    cmd->add_option("--n", hol_cfg->n, "complex dimension")->check(CLI::Range(1, 8));
    cmd->add_option("--l", hol_cfg->l, "Picard class")->check(CLI::Range(-1, 8));
    cmd->add_option("--loop", hol_cfg->loop, "square | equator | file")
        ->check(CLI::IsMember({"square", "equator", "file"}));
    cmd->add_option("--side", hol_cfg->side, "square side length");
    cmd->add_option("--center", hol_cfg->center, "square anchor corner re,im;...");
    cmd->add_option("--chords", hol_cfg->chords, "equator polygon chords");
    cmd->add_option("--path", hol_cfg->path_file, "loop file for --loop file");
    add_common(cmd, *hol_opts);
    cmd->callback([&action, hol_cfg, hol_opts]() {
      action = [hol_cfg, hol_opts]() {
        if (hol_opts->check)
          return emit_check(checks::run_qh_checks(hol_opts->seed), hol_opts->format,
                            hol_opts->out_file);
        PhaseSpacePath loop;
        if (hol_cfg->loop == "square") {
          CVec center = parse_points(hol_cfg->center);
          center.resize(static_cast<std::size_t>(hol_cfg->n), Complex(0.0, 0.0));
          if (hol_cfg->side == 0.0) {
            // degenerate loop: a single stationary point
            PathSegment seg;
            seg.chart = ChartId{1};
            seg.points = {center, center};
            loop.segments.push_back(std::move(seg));
          } else {
            loop = square_loop(hol_cfg->n, center, hol_cfg->side);
          }
        } else if (hol_cfg->loop == "equator") {
          if (hol_cfg->n != 1) throw DomainError("holonomy: equator loop is defined on CP^1");
          loop = equator_loop(hol_cfg->chords);
        } else {
          if (hol_cfg->path_file.empty()) throw DomainError("holonomy: --path required");
          loop = load_path_file(hol_cfg->path_file);
        }
        if (fiber_dimension(hol_cfg->n, hol_cfg->l) > 256)
          throw DomainError("holonomy: fiber dimension above 256; pick smaller n or l");
        const HolonomyResult result = holonomy(loop, hol_cfg->l);
        write_output(holonomy_to_json(result).dump(2), hol_opts->out_file);
        return 0;
      };
    });
  }

  // ---- duality ----
  auto dual_opts = std::make_shared<CommonOpts>();
  struct DualCfg {
    int l = 1;
  };
  auto dual_cfg = std::make_shared<DualCfg>();
  {
    CLI::App* cmd = app.add_subcommand(
        "duality", "two-path duality demo between antipodal points of CP^1");
    cmd->add_option("--l", dual_cfg->l, "Picard class")->check(CLI::Range(-1, 8));
    add_common(cmd, *dual_opts);
    cmd->callback([&action, dual_cfg, dual_opts]() {
      action = [dual_cfg, dual_opts]() {
        if (dual_opts->check)
          return emit_check(checks::run_qh_checks(dual_opts->seed), dual_opts->format,
                            dual_opts->out_file);
        const auto [path_a, path_b] = two_paths_demo();
        const ProjectivePoint p(CVec{Complex(1.0, 0.0), Complex(0.0, 0.0)});
        const ProjectivePoint q(CVec{Complex(0.0, 0.0), Complex(1.0, 0.0)});
        const CMat da = duality_map(p, q, path_a, dual_cfg->l);
        const CMat db = duality_map(p, q, path_b, dual_cfg->l);
        JsonValue out = JsonValue::object();
        out.set("schema", kSchemaVersion);
        out.set("l", dual_cfg->l);
        out.set("dimension", static_cast<long long>(da.rows));
        out.set("map_via_plus_one", matrix_to_json(da));
        out.set("map_via_minus_one", matrix_to_json(db));
        out.set("max_entry_difference", max_abs(da - db));
        write_output(out.dump(2), dual_opts->out_file);
        return 0;
      };
    });
  }

  // ---- flow ----
  auto flow_opts = std::make_shared<CommonOpts>();
  struct FlowCfg {
    int n = 1;
    std::string hamiltonian = "projective";
    std::string z0 = "1,0";
    double t_end = 10.0;
    double tol = 1e-10;
    double fixed_step = 0.0;
    int cross_chart = 0;
  };
  auto flow_cfg = std::make_shared<FlowCfg>();
  {
    CLI::App* cmd = app.add_subcommand("flow", "classical Hamiltonian flow on a chart");
    cmd->add_option("--n", flow_cfg->n, "complex dimension")->check(CLI::Range(1, 16));
    cmd->add_option("--hamiltonian", flow_cfg->hamiltonian, "projective | linear")
        ->check(CLI::IsMember({"projective", "linear"}));
    cmd->add_option("--z0", flow_cfg->z0, "initial point re,im;re,im;...");
    cmd->add_option("--t-end", flow_cfg->t_end, "integration time")->check(CLI::Range(1e-9, 1e6));
    cmd->add_option("--tol", flow_cfg->tol, "adaptive tolerance")->check(CLI::Range(1e-14, 1e-2));
    cmd->add_option("--fixed-step", flow_cfg->fixed_step, "use fixed-step RK4 with this step");
    cmd->add_option("--cross-chart", flow_cfg->cross_chart,
                    "also report the consistency residual against this chart");
    add_common(cmd, *flow_opts);
    cmd->callback([&action, flow_cfg, flow_opts]() {
      action = [flow_cfg, flow_opts]() {
        if (flow_opts->check)
          return emit_check(checks::run_flow_checks(flow_opts->seed), flow_opts->format,
                            flow_opts->out_file);
        const CVec z0 = parse_points(flow_cfg->z0);
        if (static_cast<int>(z0.size()) != flow_cfg->n)
          throw DomainError("flow: z0 has wrong dimension");
        const HamiltonianChoice choice = flow_cfg->hamiltonian == "projective"
                                             ? HamiltonianChoice::projective
                                             : HamiltonianChoice::linear;
        const AffineCoords a0{ChartId{1}, z0};
        const Trajectory traj = flow_cfg->fixed_step > 0.0
                                    ? integrate_fixed(a0, choice, flow_cfg->t_end,
                                                      flow_cfg->fixed_step)
                                    : integrate(a0, choice, flow_cfg->t_end, flow_cfg->tol);
        if (flow_opts->format == "csv") {
          write_output(trajectory_to_csv(traj), flow_opts->out_file);
        } else {
          JsonValue out = trajectory_summary_json(traj);
          out.set("hamiltonian", flow_cfg->hamiltonian);
          if (flow_cfg->cross_chart >= 1)
            out.set("cross_chart_residual",
                    cross_chart_consistency(a0, choice, flow_cfg->t_end,
                                            ChartId{flow_cfg->cross_chart}, flow_cfg->tol));
          write_output(out.dump(2), flow_opts->out_file);
        }
        return 0;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    return action ? action() : 2;
  } catch (const qhb::Error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
