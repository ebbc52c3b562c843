// Experiment CLI: every subcommand reads/writes the JSON credal-set
// format, echoes its fully-resolved config into the output, and keeps all
// diagnostics on stderr. Exit codes: 0 ok, 1 input/validation error,
// 2 internal numeric failure.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "credal/axioms.hpp"
#include "credal/idm.hpp"
#include "credal/io.hpp"
#include "credal/lift.hpp"
#include "credal/measures.hpp"
#include "credal/packing.hpp"
#include "credal/simplex.hpp"
#include "credal/volume.hpp"

namespace {

using credal::Index;
using credal::Json;
using credal::Real;

struct CommonOpts {
  std::string input;
  std::string out;
  std::uint64_t seed = 0;
  std::uint64_t samples = 1000000;
  int threads = 0;
  std::string format = "json";
};

int resolve_threads(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("CREDALVOL_THREADS")) {
    const int parsed = std::atoi(env);
    if (parsed > 0) return parsed;
  }
  return 0;  // library picks the hardware count
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) {
    throw credal::ValidationError("FileNotWritable", out_path);
  }
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

void emit_json(Json payload, Json config, const std::string& out_path) {
  payload["config"] = std::move(config);
  emit(payload.dump(2), out_path);
}

// CSV outputs carry the resolved config as a leading '#' comment line so
// the data header stays machine-readable.
void emit_csv(const std::string& header, const std::string& rows,
              const Json& config, const std::string& out_path) {
  std::ostringstream os;
  os << "# config: " << config.dump() << "\n" << header << "\n" << rows;
  emit(os.str(), out_path);
}

std::pair<Index, Index> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw credal::ValidationError("InvalidRange",
                                  "expected lo:hi, got '" + text + "'");
  }
  const Index lo = std::stol(text.substr(0, colon));
  const Index hi = std::stol(text.substr(colon + 1));
  if (lo > hi) {
    throw credal::ValidationError("InvalidRange", "range is empty");
  }
  return {lo, hi};
}

std::vector<Real> parse_reals(const std::string& text) {
  std::vector<Real> values;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) values.push_back(std::stod(tok));
  }
  if (values.empty()) {
    throw credal::ValidationError("InvalidList", "no values in '" + text + "'");
  }
  return values;
}

std::string csv_num(Real x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

int run_volume(const CommonOpts& opts, bool use_mc) {
  const auto set = credal::load_credal_set(opts.input);
  credal::VolumeResult result;
  if (use_mc) {
    result = credal::volume_mc(set, opts.samples, opts.seed,
                               resolve_threads(opts.threads));
  } else {
    result = credal::volume_exact(set);
  }
  Json config{{"subcommand", "volume"}, {"input", opts.input},
              {"mc", use_mc},           {"samples", opts.samples},
              {"seed", opts.seed},      {"threads", opts.threads}};
  emit_json(credal::to_json(result), config, opts.out);
  return 0;
}

int run_measures(const CommonOpts& opts) {
  const auto set = credal::load_credal_set(opts.input);
  Json flags;
  Real volume_value = 0.0;
  std::string volume_method = "exact";
  if (set.affine_dim() <= credal::CredalPolytope::kMaxExactDimension) {
    volume_value = credal::volume_exact(set).value;
  } else {
    const auto mc = credal::volume_mc(set, opts.samples, opts.seed,
                                      resolve_threads(opts.threads));
    volume_value = mc.value;
    volume_method = "monte-carlo";
  }
  const auto maxent = credal::max_entropy(set);
  const auto gh = credal::generalized_hartley(set);
  flags["maxent_converged"] = maxent.converged;
  flags["gh_negative_mass"] = gh.negative_mass_warning;
  flags["volume_method"] = volume_method;
  Json payload{{"volume", volume_value},
               {"width", credal::imprecision_width(set)},
               {"max_entropy", maxent.value},
               {"generalized_hartley", gh.value},
               {"entropy_of_centroid",
                credal::shannon_entropy(set.vertex_centroid())},
               {"flags", flags}};
  Json config{{"subcommand", "measures"},
              {"input", opts.input},
              {"samples", opts.samples},
              {"seed", opts.seed}};
  emit_json(payload, config, opts.out);
  return 0;
}

int run_axioms(const CommonOpts& opts, const std::string& nested_path,
               const std::string& grouping_path, const std::string& measure) {
  const auto set = credal::load_credal_set(opts.input);
  const auto kind = credal::parse_measure(measure);
  credal::AxiomConfig config;
  config.seed = opts.seed;

  Json reports = Json::array();
  if (!grouping_path.empty()) {
    const auto grouping = credal::load_grouping(grouping_path);
    const auto sub = credal::check_subadditivity(set, grouping);
    reports.push_back(credal::to_json(sub.a5));
    reports.push_back(credal::to_json(sub.a6));
    Json detail = credal::to_json(sub);
    Json cfg{{"subcommand", "axioms"},   {"input", opts.input},
             {"grouping", grouping_path}, {"measure", measure},
             {"seed", opts.seed}};
    emit_json(Json{{"reports", reports}, {"subadditivity", detail}}, cfg,
              opts.out);
    return 0;
  }

  credal::CredalPolytope nested;
  const credal::CredalPolytope* nested_ptr = nullptr;
  if (!nested_path.empty()) {
    nested = credal::load_credal_set(nested_path);
    nested_ptr = &nested;
  }
  for (const auto& report :
       credal::check_axioms(set, nested_ptr, kind, config)) {
    reports.push_back(credal::to_json(report));
  }
  Json cfg{{"subcommand", "axioms"}, {"input", opts.input},
           {"nested", nested_path},  {"measure", measure},
           {"seed", opts.seed}};
  emit_json(Json{{"reports", reports}}, cfg, opts.out);
  return 0;
}

int run_example1(const CommonOpts& opts, Real base, int n_max,
                 Real a3_height) {
  const auto table = credal::continuity_counterexample(base, n_max, a3_height);
  std::ostringstream rows;
  for (const auto& row : table.rows) {
    rows << row.n << "," << csv_num(row.height) << "," << csv_num(row.vol2)
         << "," << csv_num(row.width) << "\n";
  }
  rows << "limit," << csv_num(0.0) << "," << csv_num(table.limit_vol2) << ","
       << csv_num(table.limit_width) << "\n";
  rows << "# limit_vol1 = " << csv_num(table.limit_vol1)
       << ", a3: vol2(P) = " << csv_num(table.a3_vol2_triangle)
       << " vs vol1(Q) = " << csv_num(table.a3_vol1_segment) << " -> "
       << credal::to_string(table.a3_verdict)
       << "; sequence verdict = "
       << credal::to_string(table.sequence_report.verdict) << "\n";
  Json config{{"subcommand", "axioms example1"},
              {"base", base},
              {"n", n_max},
              {"a3_height", a3_height}};
  emit_csv("n,h,vol2,width", rows.str(), config, opts.out);
  return 0;
}

int run_packing_experiment(const CommonOpts& opts, Index d, Real eps, Real r,
                           int restarts, const std::string& sweep,
                           const std::string& ratios) {
  if (sweep.empty()) {
    const auto rep = credal::theorem1_experiment(d, eps, r, 1.0, opts.seed,
                                                 restarts, opts.samples);
    Json config{{"subcommand", "packing-experiment"},
                {"d", d},
                {"eps", eps},
                {"r", r},
                {"seed", opts.seed},
                {"restarts", restarts}};
    emit_json(credal::to_json(rep), config, opts.out);
    return 0;
  }
  const auto [lo, hi] = parse_range(sweep);
  const auto ratio_list = parse_reals(ratios);
  std::ostringstream rows;
  for (Index dd = lo; dd <= hi; ++dd) {
    // Default radius: a fixed fraction of the chart inradius, so the
    // packing grid stays tractable across dimensions.
    const Real rr = r > 0.0 ? r : 0.5 * credal::simplex_inradius(dd);
    for (Real ratio : ratio_list) {
      const auto rep = credal::theorem1_experiment(
          dd, ratio * rr, rr, 1.0, opts.seed, restarts, opts.samples);
      rows << dd << "," << csv_num(rep.eps) << "," << csv_num(rep.r) << ","
           << csv_num(rep.vol_p) << "," << csv_num(rep.vol_q) << ","
           << csv_num(rep.vol_q_prime) << "," << csv_num(rep.lhs) << ","
           << csv_num(rep.rhs) << "," << rep.n_pack_p << ","
           << rep.n_pack_shell << "," << csv_num(rep.c_hat_p) << ","
           << csv_num(rep.c_hat_shell) << "," << rep.identity_ok << ","
           << rep.condition_c_ok << "," << rep.inequality_evaluated << ","
           << rep.inequality_holds << "\n";
    }
  }
  Json config{{"subcommand", "packing-experiment"},
              {"sweep_d", sweep},
              {"ratios", ratios},
              {"r", r},
              {"seed", opts.seed},
              {"restarts", restarts}};
  emit_csv(
      "d,eps,r,vol_p,vol_q,vol_q_prime,lhs,rhs,n_pack_p,n_pack_shell,"
      "c_hat_p,c_hat_shell,identity_ok,condition_c_ok,inequality_evaluated,"
      "inequality_holds",
      rows.str(), config, opts.out);
  return 0;
}

int run_carl_pajor(const CommonOpts& opts, Index d, Index m,
                   const std::string& sweep) {
  if (sweep.empty()) {
    const auto rep = credal::carl_pajor_experiment(d, m, opts.samples, opts.seed);
    Json config{{"subcommand", "carl-pajor"},
                {"d", d},
                {"m", m},
                {"samples", opts.samples},
                {"seed", opts.seed}};
    emit_json(credal::to_json(rep), config, opts.out);
    return 0;
  }
  const auto [lo, hi] = parse_range(sweep);
  std::ostringstream rows;
  for (Index dd = lo; dd <= hi; ++dd) {
    for (Index mm : {dd + 1, 2 * dd, 4 * dd}) {
      const auto rep =
          credal::carl_pajor_experiment(dd, mm, opts.samples, opts.seed);
      rows << dd << "," << mm << "," << rep.samples << "," << rep.seed << ","
           << csv_num(rep.bound) << "," << csv_num(rep.ratio) << ","
           << csv_num(rep.std_error) << "," << rep.hull_dim << "\n";
    }
  }
  Json config{{"subcommand", "carl-pajor"},
              {"sweep_d", sweep},
              {"samples", opts.samples},
              {"seed", opts.seed}};
  emit_csv("d,m,samples,seed,bound,ratio,stderr,hull_dim", rows.str(), config,
           opts.out);
  return 0;
}

int run_lift(const CommonOpts& opts, Index target_d) {
  const auto set = credal::load_credal_set(opts.input);
  const auto lift = credal::lift_probability_set(set, target_d);
  Json config{{"subcommand", "lift"},
              {"input", opts.input},
              {"target_d", target_d}};
  emit_json(credal::to_json(lift), config, opts.out);
  return 0;
}

int run_idm_sim(const CommonOpts& opts, const std::string& p_text, long n_max,
                Real s) {
  const auto p_values = parse_reals(p_text);
  credal::Vector p(static_cast<Index>(p_values.size()));
  for (std::size_t i = 0; i < p_values.size(); ++i) {
    p(static_cast<Index>(i)) = p_values[i];
  }
  const auto rows = credal::idm_curve(p, n_max, s, opts.seed);
  std::ostringstream body;
  for (const auto& row : rows) {
    body << row.n << "," << csv_num(row.volume) << "," << csv_num(row.width)
         << "," << csv_num(row.max_entropy) << "," << csv_num(row.dh_prev)
         << "\n";
  }
  Json config{{"subcommand", "idm-sim"},
              {"p", p_text},
              {"n", n_max},
              {"s", s},
              {"seed", opts.seed}};
  emit_csv("n,volume,width,max_entropy,dh_prev", body.str(), config, opts.out);
  return 0;
}

int run_prior_shrinkage(const CommonOpts& opts, Real eps,
                        const std::string& c_range) {
  const auto [lo, hi] = parse_range(c_range);
  const auto rows = credal::prior_shrinkage(eps, lo, hi);
  std::ostringstream body;
  for (const auto& row : rows) {
    body << row.c << "," << csv_num(row.eps) << "," << csv_num(row.scale)
         << "," << csv_num(row.vol_ratio) << "\n";
  }
  Json config{{"subcommand", "prior-shrinkage"},
              {"eps", eps},
              {"c_range", c_range}};
  emit_csv("c,eps,scale,vol_ratio", body.str(), config, opts.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"credal-set volume and uncertainty experiments"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  CommonOpts opts;

  auto add_common = [&](CLI::App* cmd, bool with_input) {
    if (with_input) {
      cmd->add_option("--input", opts.input, "credal set JSON file")
          ->required();
    }
    cmd->add_option("--out", opts.out, "output path (default: stdout)");
    cmd->add_option("--seed", opts.seed, "RNG seed (default 0)");
    cmd->add_option("--samples", opts.samples, "Monte Carlo sample count");
    cmd->add_option("--threads", opts.threads,
                    "worker cap (env CREDALVOL_THREADS as fallback)");
    cmd->add_option("--format", opts.format, "json|csv (informational)");
  };

  // volume
  bool use_mc = false;
  auto* vol = app.add_subcommand("volume", "exact or Monte Carlo volume");
  add_common(vol, true);
  vol->add_flag("--mc", use_mc, "hit-or-miss Monte Carlo estimate");

  // measures
  auto* meas = app.add_subcommand("measures", "scalar uncertainty measures");
  add_common(meas, true);

  // axioms (+ example1)
  std::string nested_path, grouping_path, measure = "volume";
  Real ex1_base = 0.5, ex1_height = 1.0;
  int ex1_n = 20;
  auto* ax = app.add_subcommand("axioms", "axiom harness");
  add_common(ax, false);
  ax->add_option("--input", opts.input, "credal set JSON file");
  ax->add_option("--nested", nested_path, "inner set for monotonicity");
  ax->add_option("--grouping", grouping_path, "grouping for A5/A6");
  ax->add_option("--measure", measure, "volume|maxent|gh");
  auto* ex1 = ax->add_subcommand("example1",
                                 "shrinking-triangle discontinuity table");
  ex1->add_option("--base", ex1_base, "base chart length");
  ex1->add_option("--n", ex1_n, "number of triangles");
  ex1->add_option("--a3-height", ex1_height, "height of the A3 triangle");
  ex1->add_option("--out", opts.out, "output path");

  // packing-experiment
  Index pe_d = 3;
  Real pe_eps = 0.0, pe_r = 0.0;
  int pe_restarts = 16;
  std::string pe_sweep, pe_ratios = "0.1,0.25,0.5";
  auto* pe = app.add_subcommand("packing-experiment",
                                "boundary-robustness experiment");
  add_common(pe, false);
  pe->add_option("--d", pe_d, "label count");
  pe->add_option("--eps", pe_eps, "perturbation size");
  pe->add_option("--r", pe_r, "packing radius");
  pe->add_option("--restarts", pe_restarts, "greedy restarts");
  pe->add_option("--sweep-d", pe_sweep, "sweep range lo:hi (CSV output)");
  pe->add_option("--ratios", pe_ratios, "eps/r ratios for sweep mode");

  // carl-pajor
  Index cp_d = 3, cp_m = 8;
  std::string cp_sweep;
  auto* cp = app.add_subcommand("carl-pajor", "inscribed-hull volume ratio");
  add_common(cp, false);
  cp->add_option("--d", cp_d, "ambient dimension");
  cp->add_option("--m", cp_m, "number of sphere points");
  cp->add_option("--sweep-d", cp_sweep, "sweep range lo:hi (CSV output)");

  // lift
  Index lift_d = 3;
  auto* lf = app.add_subcommand("lift", "lift into a larger simplex");
  add_common(lf, true);
  lf->add_option("--target-d", lift_d, "target label count")->required();

  // idm-sim
  std::string idm_p = "0.2,0.3,0.5";
  long idm_n = 100;
  Real idm_s = 1.0;
  auto* idm = app.add_subcommand("idm-sim", "IDM shrinkage curve (CSV)");
  add_common(idm, false);
  idm->add_option("--p", idm_p, "true distribution, comma separated")
      ->required();
  idm->add_option("--n", idm_n, "number of simulated draws");
  idm->add_option("--s", idm_s, "prior strength");

  // prior-shrinkage
  Real ps_eps = 0.1;
  std::string ps_range = "2:12";
  auto* ps = app.add_subcommand("prior-shrinkage",
                                "eroded-simplex volume ratios (CSV)");
  add_common(ps, false);
  ps->add_option("--eps", ps_eps, "erosion size")->required();
  ps->add_option("--c-range", ps_range, "cardinality range lo:hi");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      std::cout << app.help();
      return 0;
    }
    std::cerr << e.what() << "\n\n" << app.help();
    return 1;
  }

  try {
    if (vol->parsed()) return run_volume(opts, use_mc);
    if (meas->parsed()) return run_measures(opts);
    if (ax->parsed()) {
      if (ex1->parsed()) return run_example1(opts, ex1_base, ex1_n, ex1_height);
      if (opts.input.empty()) {
        std::cerr << "axioms: --input is required\n";
        return 1;
      }
      return run_axioms(opts, nested_path, grouping_path, measure);
    }
    if (pe->parsed()) {
      if (pe_sweep.empty() && (pe_eps <= 0.0 || pe_r <= 0.0)) {
        std::cerr << "packing-experiment: --eps and --r are required\n";
        return 1;
      }
      return run_packing_experiment(opts, pe_d, pe_eps, pe_r, pe_restarts,
                                    pe_sweep, pe_ratios);
    }
    if (cp->parsed()) return run_carl_pajor(opts, cp_d, cp_m, cp_sweep);
    if (lf->parsed()) return run_lift(opts, lift_d);
    if (idm->parsed()) return run_idm_sim(opts, idm_p, idm_n, idm_s);
    if (ps->parsed()) return run_prior_shrinkage(opts, ps_eps, ps_range);
    std::cerr << app.help();
    return 1;
  } catch (const credal::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const credal::NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
