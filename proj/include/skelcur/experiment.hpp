#pragma once
//
// Experiment sweeps: generate or load matrices, run approximation methods over
// (r, p, q) grids, attach every applicable bound and flag violations.
//

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <variant>
#include <vector>

#include "skelcur/bounds.hpp"
#include "skelcur/error.hpp"
#include "skelcur/generators.hpp"
#include "skelcur/linalg.hpp"
#include "skelcur/matrix.hpp"
#include "skelcur/matrix_market.hpp"
#include "skelcur/maxvol.hpp"
#include "skelcur/skeleton.hpp"

namespace skelcur::bench {

namespace detail {
using skelcur::detail::raise;
using skelcur::detail::require;
}  // namespace detail

inline constexpr double kViolationGuard = 1.0 + 1e-9;

inline constexpr const char* kCsvHeader =
    "trial,seed,method,search,r,p,q,actual_cheb,actual_spec,gt_bound,oz_bound,spd_zeta_bound,spd_trunc_bound,"
    "gen_zeta_bound,violated";

enum class SearchKind { Exhaustive, Greedy, Principal };

inline std::string_view to_string(SearchKind s) {
  switch (s) {
    case SearchKind::Exhaustive: return "exhaustive";
    case SearchKind::Greedy: return "greedy";
    case SearchKind::Principal: return "principal";
  }
  return "unknown";
}

inline std::optional<SearchKind> parse_search(std::string_view s) {
  for (auto k : {SearchKind::Exhaustive, SearchKind::Greedy, SearchKind::Principal})
    if (s == to_string(k)) return k;
  return std::nullopt;
}

struct GridPoint {
  std::size_t r, p, q;
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

/// Parses "r,p,q;r,p,q;...".
inline std::vector<GridPoint> parse_grid(const std::string& text) {
  std::vector<GridPoint> grid;
  std::stringstream all(text);
  std::string item;
  while (std::getline(all, item, ';')) {
    if (item.empty()) continue;
    GridPoint g{};
    char c1 = 0, c2 = 0;
    std::istringstream ss(item);
    if (!(ss >> g.r >> c1 >> g.p >> c2 >> g.q) || c1 != ',' || c2 != ',' || !(ss >> std::ws).eof())
      detail::raise(ErrorKind::InvalidArgument, "bad grid entry '" + item + "' (expected r,p,q)");
    grid.push_back(g);
  }
  detail::require(!grid.empty(), ErrorKind::InvalidArgument, "empty grid");
  return grid;
}

/// Matrices generated per trial; models are cycled by trial index.
struct GeneratorSource {
  std::vector<SpectrumModel> models;  // `length` is filled in from the shape
  std::size_t m = 8;
  std::size_t n = 8;
  bool spd = false;
};

struct FileSource {
  std::string path;
};

struct ExperimentConfig {
  std::variant<GeneratorSource, FileSource> source;
  std::vector<Method> methods{Method::MaxVolCur, Method::RankRCur, Method::CurThenTruncate, Method::TruncatedSvd};
  std::vector<GridPoint> grid;
  SearchKind search = SearchKind::Exhaustive;
  std::size_t trials = 1;
  Seed base_seed{0};
  SearchOptions search_options{};
  unsigned threads = 0;  // 0: hardware concurrency
};

inline void validate(const ExperimentConfig& cfg) {
  using detail::require;
  require(cfg.trials >= 1, ErrorKind::InvalidArgument, "trials must be >= 1");
  require(!cfg.methods.empty(), ErrorKind::InvalidArgument, "no methods selected");
  require(!cfg.grid.empty(), ErrorKind::InvalidArgument, "empty grid");
  for (const auto& g : cfg.grid) {
    require(g.r <= g.p && g.p <= g.q && g.p >= 1, ErrorKind::InvalidArgument, "grid entries must satisfy r <= p <= q");
    if (cfg.search == SearchKind::Principal)
      require(g.p == g.q, ErrorKind::InvalidArgument, "principal search needs p == q");
  }
  if (const auto* gen = std::get_if<GeneratorSource>(&cfg.source)) {
    require(!gen->models.empty(), ErrorKind::InvalidArgument, "no spectrum model");
    require(gen->m >= 1 && gen->n >= 1, ErrorKind::InvalidArgument, "bad shape");
    if (gen->spd) require(gen->m == gen->n, ErrorKind::InvalidArgument, "SPD matrices are square");
    for (const auto& g : cfg.grid)
      require(g.p <= gen->m && g.q <= gen->n && g.r < std::min(gen->m, gen->n), ErrorKind::InvalidArgument,
              "grid point does not fit the matrix shape");
  }
}

inline DenseMatrix generate_trial_matrix(const GeneratorSource& gen, Seed seed, std::size_t trial) {
  SpectrumModel model = gen.models[trial % gen.models.size()];
  model.length = std::min(gen.m, gen.n);
  const Spectrum s = spectrum(model);
  return gen.spd ? spd_with_spectrum(s, seed) : general_with_spectrum(gen.m, gen.n, s, seed);
}

/// Spectral data the bounds are evaluated from.
struct MatrixSpectra {
  Spectrum sigma;
  std::optional<Spectrum> eigs;  // present iff the matrix is symmetric positive definite
};

inline MatrixSpectra spectra_of(const DenseMatrix& m) {
  MatrixSpectra out{singular_values(m), std::nullopt};
  if (is_symmetric(m)) {
    auto e = symmetric_eigen(m);
    if (e.values[e.values.size() - 1] > 0.0) out.eigs = std::move(e.values);
  }
  return out;
}

struct CsvRow {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  Method method = Method::MaxVolCur;
  std::string search;  // "exhaustive" | "greedy" | "principal" | "none"
  std::size_t r = 0, p = 0, q = 0;
  std::optional<double> actual_cheb;
  std::optional<double> actual_spec;
  std::optional<double> gt_bound, oz_bound, spd_zeta_bound, spd_trunc_bound, gen_zeta_bound;
  std::optional<std::string> status;  // set when the row failed (e.g. BudgetExceeded)
  bool violated = false;
  // Not serialized: sigma_{r+1}(M_hat) / sigma_{r+1}(M) for cur_then_truncate rows.
  std::optional<double> cur_sigma_ratio;
};

/// Bound family a check belongs to.
enum class Family { MaxVolGT, ProjectiveOZ, SpdZeta, GeneralZeta, SpdTruncated, TruncatedSvd };

inline std::string_view to_string(Family f) {
  switch (f) {
    case Family::MaxVolGT: return "maxvol (r+1)sigma_{r+1}";
    case Family::ProjectiveOZ: return "projective-volume bound";
    case Family::SpdZeta: return "SPD zeta_r lambda_{r+1}";
    case Family::GeneralZeta: return "general sqrt(zeta_r(M^T M)/(1-r/(q+1))) sigma_{r+1}";
    case Family::SpdTruncated: return "SPD truncated (zeta_p lambda_{p+1}/lambda_{r+1}+1) lambda_{r+1}";
    case Family::TruncatedSvd: return "truncated SVD sigma_{r+1}";
  }
  return "unknown";
}

struct GoverningBound {
  Family family;
  double value;
};

/// Proven bounds that govern a row. Greedy rows have none: every bound assumes a
/// globally maximal volume.
///  - maxvol_cur: principal search -> (r+1) sigma_{r+1} + SPD zeta; exhaustive -> general zeta,
///    plus the (r+1) sigma_{r+1} bound when p == q.
///  - rank_r_cur: projective-volume bound (exhaustive/principal searches use the exhaustive
///    projective-volume selection).
///  - cur_then_truncate: SPD truncated bound (principal search, r < p).
///  - truncated_svd: sigma_{r+1} = gt_bound / (r+1).
inline std::vector<GoverningBound> governing_bounds(const CsvRow& row) {
  std::vector<GoverningBound> out;
  auto add = [&](Family f, const std::optional<double>& v) {
    if (v) out.push_back({f, *v});
  };
  if (row.search == "greedy") return out;
  switch (row.method) {
    case Method::MaxVolCur:
      if (row.search == "principal") {
        add(Family::MaxVolGT, row.gt_bound);
        add(Family::SpdZeta, row.spd_zeta_bound);
      } else if (row.search == "exhaustive") {
        if (row.p == row.q) add(Family::MaxVolGT, row.gt_bound);
        add(Family::GeneralZeta, row.gen_zeta_bound);
      }
      break;
    case Method::RankRCur:
      add(Family::ProjectiveOZ, row.oz_bound);
      break;
    case Method::CurThenTruncate:
      if (row.search == "principal") add(Family::SpdTruncated, row.spd_trunc_bound);
      break;
    case Method::TruncatedSvd:
      if (row.gt_bound) add(Family::TruncatedSvd, *row.gt_bound / static_cast<double>(row.r + 1));
      break;
  }
  return out;
}

inline bool exceeds(double actual, double bound) { return actual > bound * kViolationGuard; }

inline bool compute_violated(const CsvRow& row) {
  if (!row.actual_cheb) return false;
  for (const auto& g : governing_bounds(row))
    if (exceeds(*row.actual_cheb, g.value)) return true;
  return false;
}

namespace detail {

inline void attach_bounds(CsvRow& row, const MatrixSpectra& sp) {
  const auto b = bounds::evaluate(sp.sigma, sp.eigs, row.r, row.p, row.q);
  row.gt_bound = b.gt_bound;
  row.oz_bound = b.oz_bound;
  row.spd_zeta_bound = b.spd_zeta_bound;
  row.spd_trunc_bound = b.spd_truncated_bound;
  row.gen_zeta_bound = b.general_zeta_bound;
}

class SelectionCache {
 public:
  SelectionCache(const DenseMatrix& m, SearchKind kind, const SearchOptions& opt) : m_(m), kind_(kind), opt_(opt) {}

  const SkeletonSelection& maxvol(std::size_t p, std::size_t q) {
    const auto key = std::make_tuple(p, q, std::size_t{0});
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    SearchReport rep;
    switch (kind_) {
      case SearchKind::Exhaustive: rep = exhaustive_maxvol(m_, p, q, opt_); break;
      case SearchKind::Principal: rep = exhaustive_principal_maxvol(m_, p, opt_); break;
      case SearchKind::Greedy: rep = greedy_maxvol(m_, p, q, opt_); break;
    }
    return cache_.emplace(key, rep.selection).first->second;
  }

  const SkeletonSelection& projective(std::size_t p, std::size_t q, std::size_t r) {
    if (kind_ == SearchKind::Greedy || r == 0) return maxvol(p, q);
    const auto key = std::make_tuple(p, q, r);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    auto rep = exhaustive_max_projective_volume(m_, p, q, r, opt_);
    return cache_.emplace(key, rep.selection).first->second;
  }

 private:
  const DenseMatrix& m_;
  SearchKind kind_;
  SearchOptions opt_;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, SkeletonSelection> cache_;
};

}  // namespace detail

/// Rows of one trial in (method, grid) order.
inline std::vector<CsvRow> run_trial(const ExperimentConfig& cfg, const DenseMatrix& m, std::size_t trial,
                                     Seed seed) {
  const MatrixSpectra sp = spectra_of(m);
  detail::SelectionCache sel(m, cfg.search, cfg.search_options);
  const double tol = cfg.search_options.rank_tol;
  std::vector<CsvRow> rows;
  for (Method method : cfg.methods)
    for (const auto& g : cfg.grid) {
      CsvRow row;
      row.trial = trial;
      row.seed = seed.value;
      row.method = method;
      row.search = method == Method::TruncatedSvd ? "none" : std::string(to_string(cfg.search));
      row.r = g.r;
      row.p = g.p;
      row.q = g.q;
      try {
        std::optional<ApproximationResult> res;
        switch (method) {
          case Method::MaxVolCur: {
            const auto& s = sel.maxvol(g.p, g.q);
            res = cur(m, s, tol);
            row.r = res->target_rank;
            break;
          }
          case Method::RankRCur: res = rank_r_cur(m, sel.projective(g.p, g.q, g.r), g.r, tol); break;
          case Method::CurThenTruncate: {
            const auto& s = sel.maxvol(g.p, g.q);
            res = cur_then_truncate(m, s, g.r, tol);
            const auto base = cur(m, s, tol);
            const Spectrum hat_sigma = singular_values(base.approximant);
            if (g.r < hat_sigma.size() && sp.sigma[g.r] > 0.0) row.cur_sigma_ratio = hat_sigma[g.r] / sp.sigma[g.r];
            break;
          }
          case Method::TruncatedSvd: res = truncated_svd_approx(m, g.r); break;
        }
        row.actual_cheb = res->chebyshev_error;
        row.actual_spec = res->spectral_error;
        detail::attach_bounds(row, sp);
        row.violated = compute_violated(row);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::ConvergenceFailure) throw;
        row.status = std::string(skelcur::to_string(e.kind()));
      }
      rows.push_back(std::move(row));
    }
  return rows;
}

/// Runs all trials (in parallel) and returns rows in (trial, method, grid) order.
inline std::vector<CsvRow> run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  std::optional<DenseMatrix> file_matrix;
  if (const auto* f = std::get_if<FileSource>(&cfg.source)) {
    file_matrix = mm::read_file(f->path);
    for (const auto& g : cfg.grid)
      detail::require(g.p <= file_matrix->rows() && g.q <= file_matrix->cols() &&
                          g.r < std::min(file_matrix->rows(), file_matrix->cols()),
                      ErrorKind::InvalidArgument, "grid point does not fit the matrix shape");
  }

  std::vector<std::vector<CsvRow>> per_trial(cfg.trials);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (;;) {
      const std::size_t t = next.fetch_add(1);
      if (t >= cfg.trials) return;
      try {
        if (file_matrix) {
          per_trial[t] = run_trial(cfg, *file_matrix, t, cfg.base_seed);
        } else {
          const auto& gen = std::get<GeneratorSource>(cfg.source);
          const Seed seed = derive_seed(cfg.base_seed, t);
          per_trial[t] = run_trial(cfg, generate_trial_matrix(gen, seed, t), t, seed);
        }
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next.store(cfg.trials);
        return;
      }
    }
  };
  unsigned nthreads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  nthreads = static_cast<unsigned>(std::min<std::size_t>(nthreads, cfg.trials));
  {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<CsvRow> rows;
  for (auto& t : per_trial)
    for (auto& r : t) rows.push_back(std::move(r));
  return rows;
}

// ---------------------------------------------------------------------------
// CSV

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string format_optional(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

inline std::string to_csv_line(const CsvRow& row) {
  std::string s;
  s += std::to_string(row.trial) + ',' + std::to_string(row.seed) + ',' + std::string(to_string(row.method)) + ',' +
       row.search + ',' + std::to_string(row.r) + ',' + std::to_string(row.p) + ',' + std::to_string(row.q) + ',';
  for (const auto* v : {&row.actual_cheb, &row.actual_spec, &row.gt_bound, &row.oz_bound, &row.spd_zeta_bound,
                        &row.spd_trunc_bound, &row.gen_zeta_bound})
    s += format_optional(*v) + ',';
  s += row.status ? "error:" + *row.status : (row.violated ? "true" : "false");
  return s;
}

inline void write_csv(std::ostream& out, const std::vector<CsvRow>& rows) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) out << to_csv_line(r) << '\n';
}

inline std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> f;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      f.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  f.push_back(cur);
  return f;
}

inline CsvRow parse_csv_line(const std::string& line) {
  const auto f = split_csv(line);
  detail::require(f.size() == 15, ErrorKind::ParseError, "expected 15 CSV fields in '" + line + "'");
  auto num = [&](const std::string& s) -> std::optional<double> {
    if (s.empty()) return std::nullopt;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      detail::raise(ErrorKind::ParseError, "bad number '" + s + "'");
    }
    detail::require(used == s.size(), ErrorKind::ParseError, "bad number '" + s + "'");
    return v;
  };
  auto integer = [&](const std::string& s) -> std::uint64_t {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(s, &used);
      if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    detail::raise(ErrorKind::ParseError, "bad integer '" + s + "'");
  };
  CsvRow row;
  row.trial = integer(f[0]);
  row.seed = integer(f[1]);
  const auto m = parse_method(f[2]);
  detail::require(m.has_value(), ErrorKind::ParseError, "unknown method '" + f[2] + "'");
  row.method = *m;
  row.search = f[3];
  row.r = integer(f[4]);
  row.p = integer(f[5]);
  row.q = integer(f[6]);
  row.actual_cheb = num(f[7]);
  row.actual_spec = num(f[8]);
  row.gt_bound = num(f[9]);
  row.oz_bound = num(f[10]);
  row.spd_zeta_bound = num(f[11]);
  row.spd_trunc_bound = num(f[12]);
  row.gen_zeta_bound = num(f[13]);
  if (f[14].rfind("error:", 0) == 0) {
    row.status = f[14].substr(6);
  } else {
    detail::require(f[14] == "true" || f[14] == "false", ErrorKind::ParseError, "bad violated flag '" + f[14] + "'");
    row.violated = f[14] == "true";
  }
  return row;
}

inline std::vector<CsvRow> read_csv(std::istream& in) {
  std::string line;
  detail::require(static_cast<bool>(std::getline(in, line)), ErrorKind::ParseError, "empty CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  detail::require(line == kCsvHeader, ErrorKind::ParseError, "unexpected CSV header");
  std::vector<CsvRow> rows;
  while (std::getline(in, line))
    if (!line.empty()) rows.push_back(parse_csv_line(line));
  return rows;
}

// ---------------------------------------------------------------------------
// Verification summary

struct FamilyTally {
  std::size_t checks = 0;
  std::size_t violations = 0;
  double worst_ratio = 0.0;  // max actual / bound
};

struct VerifySummary {
  std::map<Family, FamilyTally> families;
  std::size_t rows = 0;
  std::size_t failed_rows = 0;     // rows carrying an error status
  std::size_t flag_mismatches = 0; // stored violated flag disagrees with recomputation
  std::size_t bound_mismatches = 0;  // bound columns disagree with recomputation from the spectrum
  std::size_t excluded_greedy = 0;
  std::optional<double> worst_cur_sigma_ratio;

  std::size_t violations() const {
    std::size_t v = 0;
    for (const auto& [f, t] : families) v += t.violations;
    return v;
  }
  bool ok() const { return violations() == 0 && flag_mismatches == 0 && bound_mismatches == 0; }
};

inline VerifySummary summarize(const std::vector<CsvRow>& rows) {
  VerifySummary s;
  for (const auto& row : rows) {
    ++s.rows;
    if (row.status) {
      ++s.failed_rows;
      continue;
    }
    if (row.search == "greedy") ++s.excluded_greedy;
    if (row.violated != compute_violated(row)) ++s.flag_mismatches;
    if (row.cur_sigma_ratio && !row.spd_zeta_bound)
      s.worst_cur_sigma_ratio = std::max(s.worst_cur_sigma_ratio.value_or(0.0), *row.cur_sigma_ratio);
    if (!row.actual_cheb) continue;
    for (const auto& g : governing_bounds(row)) {
      auto& t = s.families[g.family];
      ++t.checks;
      if (exceeds(*row.actual_cheb, g.value)) ++t.violations;
      const double ratio = g.value > 0.0 ? *row.actual_cheb / g.value : (*row.actual_cheb > 0.0 ? INFINITY : 0.0);
      t.worst_ratio = std::max(t.worst_ratio, ratio);
    }
  }
  return s;
}

/// Recomputes the bound columns of `rows` from regenerated matrices and counts
/// rows whose serialized bounds differ. Only generator sources can be replayed.
inline std::size_t count_bound_mismatches(const ExperimentConfig& cfg, const std::vector<CsvRow>& rows) {
  std::optional<DenseMatrix> file_matrix;
  if (const auto* f = std::get_if<FileSource>(&cfg.source)) file_matrix = mm::read_file(f->path);
  std::map<std::size_t, MatrixSpectra> cache;
  std::size_t bad = 0;
  for (const auto& row : rows) {
    if (row.status) continue;
    auto it = cache.find(row.trial);
    if (it == cache.end()) {
      const DenseMatrix m = file_matrix ? *file_matrix
                                        : generate_trial_matrix(std::get<GeneratorSource>(cfg.source), Seed{row.seed},
                                                                row.trial);
      it = cache.emplace(row.trial, spectra_of(m)).first;
    }
    CsvRow fresh = row;
    try {
      detail::attach_bounds(fresh, it->second);
    } catch (const Error&) {
      ++bad;
      continue;
    }
    if (to_csv_line(fresh) != to_csv_line(row)) ++bad;
  }
  return bad;
}

inline void print_summary(std::ostream& out, const VerifySummary& s) {
  out << "rows: " << s.rows << "  failed: " << s.failed_rows << "  greedy (excluded): " << s.excluded_greedy
      << '\n';
  for (const auto& [family, t] : s.families) {
    out << "  " << to_string(family) << ": checks=" << t.checks << " violations=" << t.violations
        << " worst actual/bound=" << format_double(t.worst_ratio) << '\n';
  }
  if (s.worst_cur_sigma_ratio)
    out << "  non-SPD cur_then_truncate: max sigma_{r+1}(M_hat)/sigma_{r+1}(M) = "
        << format_double(*s.worst_cur_sigma_ratio) << " (reported, not asserted)\n";
  if (s.flag_mismatches) out << "  violated-flag mismatches: " << s.flag_mismatches << '\n';
  if (s.bound_mismatches) out << "  bound-column mismatches: " << s.bound_mismatches << '\n';
  out << (s.ok() ? "PASS: no violations\n" : "FAIL: violations found\n");
}

// ---------------------------------------------------------------------------
// Preset verification suites

inline ExperimentConfig spd_suite(std::size_t trials = 200, Seed base = Seed{2024}) {
  ExperimentConfig cfg;
  GeneratorSource gen;
  gen.models = {SpectrumModel{PowerModel{1.0}, 0}, SpectrumModel{PowerModel{2.0}, 0},
                SpectrumModel{GeometricModel{0.5}, 0}};
  gen.m = gen.n = 8;
  gen.spd = true;
  cfg.source = gen;
  cfg.grid = {{1, 1, 1}, {2, 2, 2}, {3, 3, 3}, {1, 2, 2}, {2, 4, 4}, {3, 6, 6}};
  cfg.search = SearchKind::Principal;
  cfg.trials = trials;
  cfg.base_seed = base;
  return cfg;
}

inline ExperimentConfig general_suite(std::size_t trials = 200, Seed base = Seed{2025}) {
  ExperimentConfig cfg;
  GeneratorSource gen;
  gen.models = {SpectrumModel{PowerModel{0.5}, 0}, SpectrumModel{PowerModel{1.0}, 0},
                SpectrumModel{PowerModel{2.0}, 0}};
  gen.m = 7;
  gen.n = 9;
  cfg.source = gen;
  cfg.grid = {{1, 1, 1}, {2, 2, 2}};
  cfg.search = SearchKind::Exhaustive;
  cfg.trials = trials;
  cfg.base_seed = base;
  return cfg;
}

// ---------------------------------------------------------------------------
// Model bound curves for sigma_k = k^-s

struct Fig1Row {
  std::size_t r;
  double gt_bound;
  double spd_zeta_bound;
  double oz_bound;  // p = q = 2r - 1
  double sigma_r_plus_1;
};

inline std::vector<Fig1Row> fig1_rows(double s, std::size_t r_max) {
  detail::require(s > 0.0, ErrorKind::InvalidDecayParams, "s must be positive");
  detail::require(r_max >= 1, ErrorKind::InvalidArgument, "r_max must be >= 1");
  const Spectrum sigma = spectrum(SpectrumModel{PowerModel{s}, r_max + 1});
  std::vector<Fig1Row> rows(r_max);
  for (std::size_t r = 1; r <= r_max; ++r) {
    Fig1Row& row = rows[r - 1];
    row.r = r;
    row.gt_bound = bounds::gt_bound(sigma, r);
    row.spd_zeta_bound = bounds::spd_zeta_bound(sigma, r);
    row.oz_bound = bounds::oz_bound(sigma, r, 2 * r - 1, 2 * r - 1);
    row.sigma_r_plus_1 = sigma[r];
  }
  return rows;
}

inline void write_fig1_csv(std::ostream& out, const std::vector<Fig1Row>& rows) {
  out << "r,gt_bound,spd_zeta_bound,oz_bound,sigma_r_plus_1\n";
  for (const auto& r : rows)
    out << r.r << ',' << format_double(r.gt_bound) << ',' << format_double(r.spd_zeta_bound) << ','
        << format_double(r.oz_bound) << ',' << format_double(r.sigma_r_plus_1) << '\n';
}

}  // namespace skelcur::bench
