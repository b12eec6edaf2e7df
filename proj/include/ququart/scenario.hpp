// Sweep families, figure datasets and the randomized self-audit.
//
// Everything here is deterministic by construction: grid rows are buffered
// and emitted in grid order no matter how many threads computed them, all
// numbers pass through the shared 12-digit formatter, and the audit reduces
// per-trial residuals with max(), which is associative.
#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "common.hpp"
#include "density.hpp"
#include "measures.hpp"
#include "states.hpp"
#include "two_qubit.hpp"

namespace ququart::scenario {

// ---------------------------------------------------------------------------
// Families: how the non-swept moduli renormalize as |B-| runs over [0, 1].

enum class Family { Example1, Example2a, Example2b };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::Example1: return "example1";
    case Family::Example2a: return "example2a";
    case Family::Example2b: return "example2b";
  }
  return "?";
}

inline Family family_from_name(const std::string& name) {
  if (name == "example1") return Family::Example1;
  if (name == "example2a") return Family::Example2a;
  if (name == "example2b") return Family::Example2b;
  throw ConfigError("unknown family '" + name + "' (expected example1, example2a or example2b)");
}

struct FamilyPhases {
  double phi_plus = 0.0;  // phase of B+ (example1)
  double phi1 = 0.0;      // phase of C1 (example2a, example2b)
  double phi4 = 0.0;      // phase of C4 (example2b)
};

/// Coefficients of the family member at |B-| = b.
///  - example1:  C1 = C4 = 0,  |B+|^2 = 1 - b^2
///  - example2a: B+ = C4 = 0,  |C1|^2 = 1 - b^2
///  - example2b: B+ = 0,       |C1| = |C4| = sqrt((1 - b^2)/2)
inline MixedCoeffs family_coeffs(Family f, double b, const FamilyPhases& ph = {}) {
  if (!(b >= 0.0 && b <= 1.0)) throw DomainError("family_coeffs: |B-| must lie in [0, 1]");
  const double rest = std::sqrt(std::max(0.0, 1.0 - b * b));
  switch (f) {
    case Family::Example1:
      return MixedCoeffs::make(0.0, std::polar(rest, ph.phi_plus), 0.0, b);
    case Family::Example2a:
      return MixedCoeffs::make(std::polar(rest, ph.phi1), 0.0, 0.0, b);
    case Family::Example2b:
      return MixedCoeffs::make(std::polar(rest * inv_sqrt2, ph.phi1), 0.0,
                               std::polar(rest * inv_sqrt2, ph.phi4), b);
  }
  throw DomainError("family_coeffs: bad family");
}

// ---------------------------------------------------------------------------
// Single-point evaluation. One structure carries every measure the sweep and
// figure tables can ask for.

struct PointMeasures {
  double b_minus;
  double k_pol, c_pol, p_pol, i_pol, s_full, s_reduced;
  double k_freq, c_freq, i_freq, s_rel, c_cl;
  double k_2qb, c_2qb, p_2qb;
  double k_ququart;
};

inline PointMeasures evaluate_point(const MixedCoeffs& mc) {
  const QuquartCoeffs qc = from_mixed_coeffs(mc);
  const PureBiphotonState psi = ququart_state(qc);
  const DensityMatrix rho16 = pure_density(psi);
  const CorrelationReport pol = build_correlation_report(partial_trace_frequency(rho16));
  const CorrelationReport freq = build_correlation_report(partial_trace_polarization(rho16));
  const TwoQubitMeasures tq = two_qubit_measures(qc);

  PointMeasures p;
  p.b_minus = std::abs(mc.b_minus);
  p.k_pol = pol.schmidt_k;
  p.c_pol = pol.concurrence;
  p.p_pol = pol.polarization_degree;
  p.i_pol = pol.mutual_info;
  p.s_full = pol.entropy_full;
  p.s_reduced = pol.entropy_reduced;
  p.k_freq = freq.schmidt_k;
  p.c_freq = freq.concurrence;
  p.i_freq = freq.mutual_info;
  // The frequency block is always a mixture of (at most) two Bell states, so
  // these two are always present there.
  p.s_rel = freq.rel_entropy.value();
  p.c_cl = freq.classical_corr.value();
  p.k_2qb = tq.schmidt_k;
  p.c_2qb = tq.concurrence;
  p.p_2qb = tq.polarization_degree;
  p.k_ququart = schmidt_parameter(partial_trace_photon(rho16, Photon::Two));
  return p;
}

inline PointMeasures evaluate_family_point(Family f, double b, const FamilyPhases& ph = {}) {
  PointMeasures p = evaluate_point(family_coeffs(f, b, ph));
  // The x-axis column carries the requested grid value, not the modulus after
  // renormalization rounding.
  p.b_minus = b;
  return p;
}

// ---------------------------------------------------------------------------
// Tables.

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// UTF-8, \n endings, header row, comma separated, no trailing comma.
inline std::string render_csv(const Table& t) {
  std::string out;
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    if (c) out += ',';
    out += t.columns[c];
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += format_number(row[c]);
    }
    out += '\n';
  }
  return out;
}

/// Same table as a JSON array of row objects, one object per line.
inline std::string render_json_records(const Table& t) {
  std::string out = "[\n";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    out += "  {";
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      if (c) out += ", ";
      out += '"';
      out += t.columns[c];
      out += "\": ";
      out += format_number(t.rows[r][c]);
    }
    out += r + 1 < t.rows.size() ? "},\n" : "}\n";
  }
  out += "]\n";
  return out;
}

using ColumnGetter = double (*)(const PointMeasures&);

struct ColumnDef {
  const char* name;
  ColumnGetter get;
};

/// Every measure a sweep can emit, in canonical order. K, C, P, I, S_full and
/// S_reduced belong to the traced polarization state; S_rel and C_cl are the
/// frequency-state values (always defined there).
inline const std::vector<ColumnDef>& sweep_columns() {
  static const std::vector<ColumnDef> cols = {
      {"K", [](const PointMeasures& p) { return p.k_pol; }},
      {"C", [](const PointMeasures& p) { return p.c_pol; }},
      {"P", [](const PointMeasures& p) { return p.p_pol; }},
      {"I", [](const PointMeasures& p) { return p.i_pol; }},
      {"S_full", [](const PointMeasures& p) { return p.s_full; }},
      {"S_reduced", [](const PointMeasures& p) { return p.s_reduced; }},
      {"K_freq", [](const PointMeasures& p) { return p.k_freq; }},
      {"C_freq", [](const PointMeasures& p) { return p.c_freq; }},
      {"I_freq", [](const PointMeasures& p) { return p.i_freq; }},
      {"S_rel", [](const PointMeasures& p) { return p.s_rel; }},
      {"C_cl", [](const PointMeasures& p) { return p.c_cl; }},
      {"K_2qb", [](const PointMeasures& p) { return p.k_2qb; }},
      {"C_2qb", [](const PointMeasures& p) { return p.c_2qb; }},
      {"P_2qb", [](const PointMeasures& p) { return p.p_2qb; }},
      {"K_ququart", [](const PointMeasures& p) { return p.k_ququart; }},
  };
  return cols;
}

namespace detail {

inline std::vector<double> grid(double from, double to, int steps) {
  std::vector<double> xs(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k) {
    xs[static_cast<std::size_t>(k)] =
        (k == steps - 1) ? to : from + (to - from) * (static_cast<double>(k) / (steps - 1));
  }
  return xs;
}

// Evaluates fn over the grid with a work-stealing thread pool; results land
// at their grid index, so output order never depends on scheduling.
template <typename Fn>
std::vector<PointMeasures> map_grid(const std::vector<double>& xs, int threads, Fn fn) {
  const int n = static_cast<int>(xs.size());
  std::vector<PointMeasures> out(xs.size());
  threads = std::min(std::max(threads, 1), 64);
  if (threads == 1 || n < 2) {
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = fn(xs[static_cast<std::size_t>(i)]);
    return out;
  }
  std::atomic<int> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    try {
      for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1))
        out[static_cast<std::size_t>(i)] = fn(xs[static_cast<std::size_t>(i)]);
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
      next.store(n);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
  return out;
}

}  // namespace detail

struct SweepRequest {
  Family family = Family::Example2a;
  FamilyPhases phases;
  double from = 0.0;
  double to = 1.0;
  int steps = 201;
  std::vector<std::string> outputs;  // empty means all
  int threads = 1;
};

inline Table sweep_table(const SweepRequest& req) {
  if (req.steps < 2) throw ConfigError("sweep: steps must be at least 2");
  if (!(req.from < req.to)) throw ConfigError("sweep: 'from' must be below 'to'");
  if (req.from < 0.0 || req.to > 1.0) throw ConfigError("sweep: |B-| range must stay within [0, 1]");

  std::vector<ColumnDef> selected;
  if (req.outputs.empty()) {
    selected = sweep_columns();
  } else {
    for (const std::string& name : req.outputs) {
      bool found = false;
      for (const ColumnDef& def : sweep_columns()) {
        if (name == def.name) {
          selected.push_back(def);
          found = true;
          break;
        }
      }
      if (!found) throw ConfigError("sweep: unknown output column '" + name + "'");
    }
  }

  const std::vector<double> xs = detail::grid(req.from, req.to, req.steps);
  const std::vector<PointMeasures> pts = detail::map_grid(
      xs, req.threads, [&](double b) { return evaluate_family_point(req.family, b, req.phases); });

  Table t;
  t.columns.push_back("b_minus");
  for (const ColumnDef& def : selected) t.columns.push_back(def.name);
  t.rows.reserve(pts.size());
  for (const PointMeasures& p : pts) {
    std::vector<double> row;
    row.reserve(selected.size() + 1);
    row.push_back(p.b_minus);
    for (const ColumnDef& def : selected) row.push_back(def.get(p));
    t.rows.push_back(std::move(row));
  }
  return t;
}

// ---------------------------------------------------------------------------
// Figure datasets. Grids are the full [0, 1] interval, 201 points.

enum class FigureId { Fig1 = 1, Fig2 = 2, Fig3 = 3, Fig4 = 4, Fig5 = 5 };

inline FigureId figure_from_number(int n) {
  if (n < 1 || n > 5) throw ConfigError("figure: --fig must be 1..5");
  return static_cast<FigureId>(n);
}

/// Curve set of one figure:
///  Fig1: entropy S of the traced ququart state.
///  Fig2: frequency-state correlation measures K, C, S_rel, I, C_cl.
///  Fig3: polarization-state K, C, I, P for the example2a family.
///  Fig4: example1 family, traced-state K_pol/P4/C_pol against the
///        channel-model K_2qb/P_2qb/C_2qb.
///  Fig5: the same comparison for the example2a family.
inline Table figure_table(FigureId fig, int threads = 1) {
  struct FigureSpec {
    Family family;
    std::vector<ColumnDef> cols;
  };
  FigureSpec spec;
  switch (fig) {
    case FigureId::Fig1:
      spec = {Family::Example1, {{"S", [](const PointMeasures& p) { return p.s_full; }}}};
      break;
    case FigureId::Fig2:
      spec = {Family::Example1,
              {{"K", [](const PointMeasures& p) { return p.k_freq; }},
               {"C", [](const PointMeasures& p) { return p.c_freq; }},
               {"S_rel", [](const PointMeasures& p) { return p.s_rel; }},
               {"I", [](const PointMeasures& p) { return p.i_freq; }},
               {"C_cl", [](const PointMeasures& p) { return p.c_cl; }}}};
      break;
    case FigureId::Fig3:
      spec = {Family::Example2a,
              {{"K", [](const PointMeasures& p) { return p.k_pol; }},
               {"C", [](const PointMeasures& p) { return p.c_pol; }},
               {"I", [](const PointMeasures& p) { return p.i_pol; }},
               {"P", [](const PointMeasures& p) { return p.p_pol; }}}};
      break;
    case FigureId::Fig4:
    case FigureId::Fig5:
      spec = {fig == FigureId::Fig4 ? Family::Example1 : Family::Example2a,
              {{"K_pol", [](const PointMeasures& p) { return p.k_pol; }},
               {"P4", [](const PointMeasures& p) { return p.p_pol; }},
               {"C_pol", [](const PointMeasures& p) { return p.c_pol; }},
               {"K_2qb", [](const PointMeasures& p) { return p.k_2qb; }},
               {"P_2qb", [](const PointMeasures& p) { return p.p_2qb; }},
               {"C_2qb", [](const PointMeasures& p) { return p.c_2qb; }}}};
      break;
  }

  const std::vector<double> xs = detail::grid(0.0, 1.0, 201);
  const std::vector<PointMeasures> pts = detail::map_grid(
      xs, threads, [&](double b) { return evaluate_family_point(spec.family, b); });

  Table t;
  t.columns.push_back("b_minus");
  for (const ColumnDef& def : spec.cols) t.columns.push_back(def.name);
  for (const PointMeasures& p : pts) {
    std::vector<double> row{p.b_minus};
    for (const ColumnDef& def : spec.cols) row.push_back(def.get(p));
    t.rows.push_back(std::move(row));
  }
  return t;
}

// ---------------------------------------------------------------------------
// Randomized self-audit.

class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = (static_cast<double>(gen_() >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
    const double u2 = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * pi * u2);
    have_spare_ = true;
    return r * std::cos(2.0 * pi * u2);
  }

  cx gaussian() { return {normal(), normal()}; }

private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

/// Haar-like random ququart: four complex Gaussians, normalized.
inline QuquartCoeffs random_ququart(Rng& rng) {
  std::array<cx, 4> v{rng.gaussian(), rng.gaussian(), rng.gaussian(), rng.gaussian()};
  double n2 = 0.0;
  for (const cx& z : v) n2 += std::norm(z);
  const double inv = 1.0 / std::sqrt(n2);
  return QuquartCoeffs::make(v[0] * inv, v[1] * inv, v[2] * inv, v[3] * inv, false);
}

struct InvariantCheck {
  std::string name;
  double residual;
  double tolerance;

  bool pass() const { return residual <= tolerance; }
};

struct AuditReport {
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<InvariantCheck> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass()) return false;
    return true;
  }
};

namespace detail {

struct ResidualTracker {
  std::vector<InvariantCheck>* sink;

  void record(const std::string& name, double residual, double tol) {
    for (auto& c : *sink) {
      if (c.name == name) {
        c.residual = std::max(c.residual, residual);
        return;
      }
    }
    sink->push_back({name, residual, tol});
  }
};

inline double spectrum_deviation(const Spectrum& got, const std::array<double, 4>& want) {
  double d = 0.0;
  for (int k = 0; k < 4; ++k) d = std::max(d, std::abs(got.values[static_cast<std::size_t>(k)] - want[static_cast<std::size_t>(k)]));
  return d;
}

}  // namespace detail

/// Runs every cross-module invariant on `trials` seeded-random ququarts plus
/// a handful of fixed-state and grid checks. `inject_failure` routes one
/// deliberately non-Hermitian matrix through the pipeline to prove the audit
/// can fail; it is meant for exercising the failure path, nothing else.
inline AuditReport run_audit(std::uint64_t seed, int trials, bool inject_failure = false) {
  if (trials < 1) throw ConfigError("verify: trials must be at least 1");
  AuditReport report;
  report.seed = seed;
  report.trials = trials;
  detail::ResidualTracker track{&report.checks};
  Rng rng(seed);

  const std::array<double, 4> alphas{0.0, pi / 8.0, pi / 4.0, pi / 3.0};

  for (int trial = 0; trial < trials; ++trial) {
    const QuquartCoeffs qc = random_ququart(rng);
    const MixedCoeffs mc = to_mixed_coeffs(qc);
    const PureBiphotonState psi = ququart_state(qc);

    track.record("state_norm", std::abs(psi.norm() - 1.0), 1e-12);
    track.record("exchange_symmetry", psi.exchange_asymmetry(), 1e-12);
    track.record("frequency_exclusion", psi.equal_frequency_leak(), 1e-12);

    {
      const QuquartCoeffs back_bell = from_bell_coeffs(to_bell_coeffs(qc));
      const QuquartCoeffs back_mixed = from_mixed_coeffs(mc);
      double d = 0.0;
      const auto a0 = qc.as_array();
      const auto a1 = back_bell.as_array();
      const auto a2 = back_mixed.as_array();
      for (int k = 0; k < 4; ++k)
        d = std::max({d, std::abs(a0[static_cast<std::size_t>(k)] - a1[static_cast<std::size_t>(k)]),
                      std::abs(a0[static_cast<std::size_t>(k)] - a2[static_cast<std::size_t>(k)])});
      track.record("coefficient_roundtrip", d, 1e-12);
    }

    const DensityMatrix rho16 = pure_density(psi);
    track.record("full_state_purity", std::abs(rho16.purity() - 1.0), 1e-10);

    const DensityMatrix rho_pol = partial_trace_frequency(rho16);
    const DensityMatrix rho_freq = partial_trace_polarization(rho16);
    const DensityMatrix rho_photon = partial_trace_photon(rho16, Photon::Two);
    track.record("photon_trace_symmetry",
                 rho_photon.mat().max_abs_diff(partial_trace_photon(rho16, Photon::One).mat()),
                 1e-12);
    {
      double d = 0.0;
      for (const DensityMatrix* rho : {&rho_pol, &rho_freq, &rho_photon})
        d = std::max(d, std::abs(rho->mat().trace() - cx(1.0)));
      track.record("reduction_traces", d, 1e-12);
      double neg = 0.0;
      for (const DensityMatrix* rho : {&rho_pol, &rho_freq, &rho_photon})
        neg = std::max(neg, std::max(0.0, -rho->min_eigenvalue()));
      track.record("reduction_psd", neg, 1e-10);
    }

    const ClosedForms cf = closed_forms(mc);
    const Spectrum spec_pol = hermitian_eigenvalues(rho_pol);
    const Spectrum spec_freq = hermitian_eigenvalues(rho_freq);
    track.record("pol_spectrum_law", detail::spectrum_deviation(spec_pol, cf.spectrum_full), 1e-10);
    track.record("freq_spectrum_law", detail::spectrum_deviation(spec_freq, cf.spectrum_full), 1e-10);
    track.record("pol_freq_entropy_match",
                 std::abs(von_neumann_entropy(spec_pol) - von_neumann_entropy(spec_freq)), 1e-10);

    {
      const DensityMatrix red_freq = reduce_single_qubit(rho_freq);
      double d = 0.0;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          d = std::max(d, std::abs(red_freq.mat()(i, j) - (i == j ? cx(0.5) : cx(0.0))));
      track.record("freq_reduction_maximally_mixed", d, 1e-12);
      track.record("freq_schmidt_two", std::abs(schmidt_parameter(red_freq) - 2.0), 1e-12);
    }

    {
      const DensityMatrix red_pol = reduce_single_qubit(rho_pol);
      const Spectrum spec_red = hermitian_eigenvalues(red_pol);
      const double dev = std::max(std::abs(spec_red.values[0] - cf.lambda_plus),
                                  std::abs(spec_red.values[1] - cf.lambda_minus));
      track.record("eigenvalue_closed_forms", dev, 1e-10);
      const double k_num = schmidt_parameter(spec_red);
      track.record("schmidt_closed_form", std::abs(k_num - cf.k_pol), 1e-10);

      const double p_num = degree_of_polarization(red_pol);
      track.record("polarization_schmidt_identity",
                   std::abs(p_num * p_num + 2.0 * (1.0 - 1.0 / k_num) - 1.0), 1e-10);

      const DensityMatrix half = half_sum(channel_reduced(qc));
      track.record("half_sum_identity", half.mat().max_abs_diff(red_pol.mat()), 1e-12);

      // Tracing frequency first or the partner photon first must meet in the
      // same single-photon polarization state.
      const DensityMatrix via_photon = reduce_single_qubit(rho_photon);
      track.record("composition_consistency", via_photon.mat().max_abs_diff(red_pol.mat()),
                   1e-12);
    }

    track.record("pol_concurrence_routes",
                 std::abs(wootters_concurrence(rho_pol) - concurrence_pol_closed(mc)), 1e-10);
    track.record("freq_concurrence_routes",
                 std::abs(wootters_concurrence(rho_freq) - concurrence_freq_closed(mc)), 1e-10);

    {
      const std::array<double, 4> w = wootters_numbers(rho_pol);
      const double q = std::abs(2.0 * mc.c1 * mc.c4 - mc.b_plus * mc.b_plus);
      const double b2 = std::norm(mc.b_minus);
      std::array<double, 4> expect{std::max(q, b2), std::min(q, b2), 0.0, 0.0};
      double d = 0.0;
      for (int k = 0; k < 4; ++k) d = std::max(d, std::abs(w[static_cast<std::size_t>(k)] - expect[static_cast<std::size_t>(k)]));
      track.record("wootters_numbers_closed", d, 1e-10);
    }

    {
      const TwoQubitMeasures tq = two_qubit_measures(qc);
      const auto [high, low] = two_qubit_states(qc);
      const double c_generic = wootters_concurrence(pure_density(high));
      track.record("two_qubit_concurrence_routes", std::abs(c_generic - tq.concurrence), 1e-10);
      const double k_numeric = schmidt_parameter(high);
      track.record("two_qubit_schmidt_routes", std::abs(k_numeric - tq.schmidt_k), 1e-10);
      (void)low;
    }

    {
      const double i_pol = mutual_information(rho_pol);
      const double i_freq = mutual_information(rho_freq);
      track.record("mutual_information_nonnegative",
                   std::max(0.0, -std::min(i_pol, i_freq)), 1e-12);
    }

    {
      const PureBiphotonState other = ququart_state(random_ququart(rng));
      const cx before = inner_product(psi, other);
      const double alpha = 2.0 * pi * rng.uniform();
      const cx after = inner_product(rotate_polarization_basis(psi, alpha),
                                     rotate_polarization_basis(other, alpha));
      track.record("rotation_preserves_overlaps", std::abs(before - after), 1e-12);

      const double k_base = schmidt_parameter(rho_photon);
      double d = 0.0;
      for (double a : alphas) {
        const PureBiphotonState rotated = rotate_polarization_basis(psi, a);
        const double k_rot =
            schmidt_parameter(partial_trace_photon(pure_density(rotated), Photon::Two));
        d = std::max(d, std::abs(k_rot - k_base));
      }
      track.record("rotation_schmidt_invariance", d, 1e-10);
    }

    {
      const SchmidtDecomposition sd = schmidt_decompose(psi);
      std::array<cx, 16> rebuilt{};
      for (const SchmidtMode& m : sd.modes) {
        const double w = std::sqrt(m.lambda);
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j)
            rebuilt[static_cast<std::size_t>(pair_index(i, j))] += w * m.photon1[static_cast<std::size_t>(i)] * m.photon2[static_cast<std::size_t>(j)];
      }
      double d = 0.0;
      for (int k = 0; k < 16; ++k) d = std::max(d, std::abs(rebuilt[static_cast<std::size_t>(k)] - psi[k]));
      track.record("schmidt_reconstruction", d, 1e-9);
    }
  }

  {  // Fixed-state identities, independent of the random ensemble.
    double d = 0.0;
    const std::array<DoubleBell, 4> bells{DoubleBell::PhiPlus, DoubleBell::PhiMinus,
                                          DoubleBell::PsiPlus, DoubleBell::PsiMinus};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        const cx ov = inner_product(double_bell_state(bells[static_cast<std::size_t>(i)]), double_bell_state(bells[static_cast<std::size_t>(j)]));
        d = std::max(d, std::abs(ov - (i == j ? cx(1.0) : cx(0.0))));
      }
    const PureBiphotonState rotated =
        rotate_polarization_basis(double_bell_state(DoubleBell::PsiPlus), pi / 4.0);
    const PureBiphotonState target = double_bell_state(DoubleBell::PhiMinus);
    for (int k = 0; k < 16; ++k) d = std::max(d, std::abs(rotated[k] - target[k]));
    for (DoubleBell b : bells) {
      const double k4 = schmidt_parameter(
          partial_trace_photon(pure_density(double_bell_state(b)), Photon::Two));
      d = std::max(d, std::abs(k4 - 4.0));
    }
    track.record("double_bell_identities", d, 1e-12);
  }

  {  // 101-point grid checks on the frequency state.
    double unity_dev = 0.0;
    double srel_excess = 0.0;
    for (int k = 0; k <= 100; ++k) {
      const double b = static_cast<double>(k) / 100.0;
      const PointMeasures p = evaluate_family_point(Family::Example2a, b);
      unity_dev = std::max(unity_dev, std::abs(p.c_cl - 1.0));
      if (k > 0 && k < 100) srel_excess = std::max(srel_excess, p.s_rel - p.c_freq);
    }
    track.record("freq_classical_correlations_unity", unity_dev, 1e-10);
    track.record("rel_entropy_below_concurrence", std::max(0.0, srel_excess), 1e-12);
  }

  if (inject_failure) {
    CMat broken(4);
    broken(0, 0) = 0.6;
    broken(1, 1) = 0.4;
    broken(0, 1) = cx(0.3, 0.1);
    broken(1, 0) = cx(0.1, -0.1);  // deliberately not the conjugate
    const DensityMatrix bad = DensityMatrix::unchecked(std::move(broken), BasisTag::Natural);
    track.record("injected_corruption_hermiticity", bad.mat().hermiticity_defect(), 1e-12);
  }

  return report;
}

/// One line per invariant plus a summary, stable ordering, 12-digit numbers.
inline std::string render_audit_text(const AuditReport& report) {
  std::string out;
  int failed = 0;
  for (const auto& c : report.checks) {
    if (!c.pass()) ++failed;
    out += c.pass() ? "PASS " : "FAIL ";
    out += c.name;
    out += " max_residual=";
    out += format_number(c.residual);
    out += " tol=";
    out += format_number(c.tolerance);
    out += '\n';
  }
  out += failed == 0 ? "RESULT PASS" : "RESULT FAIL";
  out += " checks=" + std::to_string(report.checks.size());
  out += " failed=" + std::to_string(failed);
  out += " seed=" + std::to_string(report.seed);
  out += " trials=" + std::to_string(report.trials);
  out += '\n';
  return out;
}

}  // namespace ququart::scenario
