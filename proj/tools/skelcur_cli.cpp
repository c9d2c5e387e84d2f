// skelcur: generate matrices, run pseudo-skeleton approximation sweeps,
// verify error bounds and plot model bound curves.
//
// Exit codes: 0 success / no violations, 1 violations found, 2 configuration
// or I/O error, 3 numerical failure.

#include <functional>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "skelcur/skelcur.hpp"

namespace {

using namespace skelcur;
using namespace skelcur::bench;

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

struct MatrixFlags {
  std::optional<double> power;
  std::optional<double> geometric;
  std::string explicit_spectrum;
  double scale = 1.0;
  std::size_t n = 8;
  std::optional<std::size_t> m;
  bool spd = false;
  std::uint64_t seed = 0;
};

void add_matrix_flags(CLI::App* cmd, MatrixFlags& f) {
  cmd->add_option("--power", f.power, "power-law spectrum C k^-s with exponent s");
  cmd->add_option("--geometric", f.geometric, "geometric spectrum C q^k with ratio q");
  cmd->add_option("--spectrum", f.explicit_spectrum, "explicit comma-separated spectrum");
  cmd->add_option("--scale", f.scale, "spectrum scale C")->capture_default_str();
  cmd->add_option("--n", f.n, "columns (and rows unless --m is given)")->capture_default_str();
  cmd->add_option("--m", f.m, "rows");
  cmd->add_flag("--spd", f.spd, "symmetric positive definite Q diag(lambda) Q^T");
  cmd->add_option("--seed", f.seed, "base seed")->capture_default_str();
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw Error(ErrorKind::InvalidArgument, "bad number '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::optional<SpectrumModel> model_from(const MatrixFlags& f) {
  const int chosen = (f.power ? 1 : 0) + (f.geometric ? 1 : 0) + (f.explicit_spectrum.empty() ? 0 : 1);
  if (chosen == 0) return std::nullopt;
  if (chosen > 1) throw Error(ErrorKind::InvalidArgument, "choose one of --power, --geometric, --spectrum");
  SpectrumModel model;
  if (f.power) {
    model.kind = PowerModel{*f.power, f.scale};
  } else if (f.geometric) {
    model.kind = GeometricModel{*f.geometric, f.scale};
  } else {
    model.kind = ExplicitModel{parse_list(f.explicit_spectrum)};
  }
  // Validate parameters up front.
  SpectrumModel probe = model;
  probe.length = 1;
  (void)spectrum(probe);
  return model;
}

GeneratorSource generator_from(const MatrixFlags& f, const SpectrumModel& model) {
  GeneratorSource gen;
  gen.models = {model};
  gen.n = f.n;
  gen.m = f.m.value_or(f.n);
  gen.spd = f.spd;
  if (const auto* ex = std::get_if<ExplicitModel>(&model.kind))
    if (ex->values.size() != std::min(gen.m, gen.n))
      throw Error(ErrorKind::InvalidArgument, "explicit spectrum length must equal min(m, n)");
  return gen;
}

struct SweepFlags {
  MatrixFlags matrix;
  std::string input;
  std::string methods = "maxvol_cur,rank_r_cur,cur_then_truncate,truncated_svd";
  std::string grid = "1,1,1;2,2,2";
  std::string search = "exhaustive";
  std::size_t trials = 1;
  double rank_tol = kDefaultRankTol;
  double growth_tol = 1.0 + 1e-9;
  double budget = 2e6;
  unsigned threads = 0;
};

void add_sweep_flags(CLI::App* cmd, SweepFlags& f) {
  add_matrix_flags(cmd, f.matrix);
  cmd->add_option("--input,-i", f.input, "Matrix Market input instead of a generator");
  cmd->add_option("--methods", f.methods, "comma-separated methods")->capture_default_str();
  cmd->add_option("--grid", f.grid, "grid of r,p,q triples separated by ';'")->capture_default_str();
  cmd->add_option("--search", f.search, "exhaustive|greedy|principal")->capture_default_str();
  cmd->add_option("--trials", f.trials, "number of trials")->capture_default_str();
  cmd->add_option("--rank-tol", f.rank_tol, "relative rank tolerance")->capture_default_str();
  cmd->add_option("--growth-tol", f.growth_tol, "greedy swap growth factor")->capture_default_str();
  cmd->add_option("--budget", f.budget, "exhaustive enumeration budget")->capture_default_str();
  cmd->add_option("--threads", f.threads, "worker threads (0 = hardware)")->capture_default_str();
}

ExperimentConfig config_from(const SweepFlags& f) {
  ExperimentConfig cfg;
  const auto model = model_from(f.matrix);
  if (!f.input.empty()) {
    if (model) throw Error(ErrorKind::InvalidArgument, "--input cannot be combined with a spectrum model");
    cfg.source = FileSource{f.input};
  } else {
    if (!model) throw Error(ErrorKind::InvalidArgument, "need --input or one of --power/--geometric/--spectrum");
    cfg.source = generator_from(f.matrix, *model);
  }
  cfg.methods.clear();
  std::stringstream ms(f.methods);
  std::string item;
  while (std::getline(ms, item, ',')) {
    if (item.empty()) continue;
    const auto m = parse_method(item);
    if (!m) throw Error(ErrorKind::InvalidArgument, "unknown method '" + item + "'");
    cfg.methods.push_back(*m);
  }
  cfg.grid = parse_grid(f.grid);
  const auto s = parse_search(f.search);
  if (!s) throw Error(ErrorKind::InvalidArgument, "unknown search '" + f.search + "'");
  cfg.search = *s;
  cfg.trials = f.trials;
  cfg.base_seed = Seed{f.matrix.seed};
  cfg.search_options.rank_tol = f.rank_tol;
  cfg.search_options.growth_tol = f.growth_tol;
  cfg.search_options.budget = f.budget;
  cfg.threads = f.threads;
  validate(cfg);
  return cfg;
}

void emit(const std::string& path, const std::function<void(std::ostream&)>& writer) {
  if (path.empty() || path == "-") {
    writer(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::IoError, "cannot open '" + path + "' for writing");
  writer(out);
  if (!out) throw Error(ErrorKind::IoError, "write to '" + path + "' failed");
}

int exit_code_for(const Error& e) { return e.kind() == ErrorKind::ConvergenceFailure ? kExitNumeric : kExitConfig; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pseudo-skeleton (CUR) approximation with maximal-volume selection and error-bound checks"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "write a generated matrix in Matrix Market array format");
  MatrixFlags gen_flags;
  std::vector<double> paper2x2;
  std::optional<std::size_t> identity_n, hilbert_n;
  std::string gen_out;
  add_matrix_flags(gen, gen_flags);
  gen->add_option("--paper2x2", paper2x2, "2x2 example with singular values s1 s2")->expected(2);
  gen->add_option("--identity", identity_n, "n x n identity");
  gen->add_option("--hilbert", hilbert_n, "n x n Hilbert matrix");
  gen->add_option("-o,--out", gen_out, "output path")->required();

  // approx
  auto* approx = app.add_subcommand("approx", "run approximation methods and print one CSV row per result");
  SweepFlags approx_flags;
  std::string approx_out;
  add_sweep_flags(approx, approx_flags);
  approx->add_option("-o,--out", approx_out, "CSV output path (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "check every proven bound over a sweep; exit 1 on violations");
  SweepFlags verify_flags;
  std::string suite, check_csv, verify_csv;
  std::optional<std::size_t> suite_trials;
  add_sweep_flags(verify, verify_flags);
  verify->add_option("--suite", suite, "preset sweep: spd|general|all");
  verify->add_option("--suite-trials", suite_trials, "override the preset trial count");
  verify->add_option("--check-csv", check_csv, "re-verify an existing CSV instead of running a sweep");
  verify->add_option("--csv,-o,--out", verify_csv, "write the sweep CSV here");

  // fig1
  auto* fig1 = app.add_subcommand("fig1", "bound curves for the model spectrum sigma_k = k^-s");
  double fig_s = 2.0;
  std::size_t fig_rmax = 50;
  std::string fig_csv, fig_svg;
  fig1->add_option("--s", fig_s, "decay exponent")->capture_default_str();
  fig1->add_option("--r-max", fig_rmax, "largest rank")->capture_default_str();
  fig1->add_option("--csv,-o,--out", fig_csv, "CSV output path (default stdout)");
  fig1->add_option("--svg", fig_svg, "SVG chart output path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      std::optional<DenseMatrix> m;
      const int chosen = (paper2x2.empty() ? 0 : 1) + (identity_n ? 1 : 0) + (hilbert_n ? 1 : 0);
      const auto model = model_from(gen_flags);
      if (chosen + (model ? 1 : 0) != 1)
        throw Error(ErrorKind::InvalidArgument,
                    "choose exactly one of --power, --geometric, --spectrum, --paper2x2, --identity, --hilbert");
      if (!paper2x2.empty()) {
        m = paper_2x2(paper2x2[0], paper2x2[1]);
      } else if (identity_n) {
        if (*identity_n == 0) throw Error(ErrorKind::InvalidArgument, "--identity needs n >= 1");
        m = DenseMatrix::identity(*identity_n);
      } else if (hilbert_n) {
        if (*hilbert_n == 0) throw Error(ErrorKind::InvalidArgument, "--hilbert needs n >= 1");
        m = hilbert(*hilbert_n);
      } else {
        const auto g = generator_from(gen_flags, *model);
        m = generate_trial_matrix(g, Seed{gen_flags.seed}, 0);
      }
      mm::write_file(gen_out, *m);
      return kExitOk;
    }

    if (*approx) {
      const auto cfg = config_from(approx_flags);
      const auto rows = run_experiment(cfg);
      emit(approx_out, [&](std::ostream& os) { write_csv(os, rows); });
      return kExitOk;
    }

    if (*verify) {
      if (!check_csv.empty()) {
        std::ifstream in(check_csv);
        if (!in) throw Error(ErrorKind::IoError, "cannot open '" + check_csv + "'");
        auto rows = read_csv(in);
        auto summary = summarize(rows);
        const bool has_source = !verify_flags.input.empty() || model_from(verify_flags.matrix).has_value();
        if (has_source) summary.bound_mismatches = count_bound_mismatches(config_from(verify_flags), rows);
        print_summary(std::cout, summary);
        return summary.ok() ? kExitOk : kExitViolations;
      }

      std::vector<std::pair<std::string, ExperimentConfig>> runs;
      const bool has_source = !verify_flags.input.empty() || model_from(verify_flags.matrix).has_value();
      if (!suite.empty() || !has_source) {
        const std::string which = suite.empty() ? "all" : suite;
        if (which != "spd" && which != "general" && which != "all")
          throw Error(ErrorKind::InvalidArgument, "unknown suite '" + which + "'");
        if (which == "spd" || which == "all") runs.emplace_back("spd", spd_suite(suite_trials.value_or(200)));
        if (which == "general" || which == "all")
          runs.emplace_back("general", general_suite(suite_trials.value_or(200)));
        for (auto& [name, cfg] : runs) cfg.threads = verify_flags.threads;
      } else {
        runs.emplace_back("custom", config_from(verify_flags));
      }

      std::vector<CsvRow> all_rows;
      bool ok = true;
      for (const auto& [name, cfg] : runs) {
        if (cfg.search == SearchKind::Greedy) {
          std::cerr << "verify: greedy search does not produce a globally maximal volume; the bounds only hold "
                       "for exhaustive or principal search\n";
          return kExitConfig;
        }
        auto rows = run_experiment(cfg);
        const auto summary = summarize(rows);
        std::cout << "suite " << name << ":\n";
        print_summary(std::cout, summary);
        ok = ok && summary.ok();
        for (auto& r : rows) all_rows.push_back(std::move(r));
      }
      if (!verify_csv.empty()) emit(verify_csv, [&](std::ostream& os) { write_csv(os, all_rows); });
      return ok ? kExitOk : kExitViolations;
    }

    if (*fig1) {
      const auto rows = fig1_rows(fig_s, fig_rmax);
      emit(fig_csv, [&](std::ostream& os) { write_fig1_csv(os, rows); });
      if (!fig_svg.empty()) {
        std::vector<double> x;
        svg::Series gt{"(r+1) sigma_{r+1}", {}}, zeta{"zeta_r sigma_{r+1}", {}}, oz{"projective, p=q=2r-1", {}},
            sig{"sigma_{r+1}", {}};
        for (const auto& r : rows) {
          x.push_back(static_cast<double>(r.r));
          gt.y.push_back(r.gt_bound);
          zeta.y.push_back(r.spd_zeta_bound);
          oz.y.push_back(r.oz_bound);
          sig.y.push_back(r.sigma_r_plus_1);
        }
        char title[96];
        std::snprintf(title, sizeof title, "Error bounds for sigma_k = k^-%g", fig_s);
        emit(fig_svg, [&](std::ostream& os) { svg::line_chart_log_y(os, title, "rank r", x, {gt, zeta, oz, sig}); });
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << "skelcur: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kExitOk;
}
