// ququart: command-line front end.
//
//   ququart analyze --config state.json [--format csv|json] [--out -]
//   ququart sweep   [--config cfg.json] [--family example2a] [--from 0 --to 1]
//                   [--steps 201] [--threads N] [--format csv|json] [--out -]
//   ququart figure  --fig 1..5 [--threads N] [--format csv|json] [--out -]
//   ququart verify  [--seed N] [--trials N] [--corrupt] [--out -]
//
// Exit codes: 0 success, 1 verification failure, 2 config error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ququart/ququart.hpp"
#include "ququart/scenario_config.hpp"

namespace {

using namespace ququart;
namespace sc = ququart::scenario;

void write_output(const std::string& text, const std::string& out) {
  if (out == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw ConfigError("cannot open output file '" + out + "'");
  f.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!f) throw ConfigError("failed writing output file '" + out + "'");
}

// ---------------------------------------------------------------------------
// analyze: full report for one coefficient set, closed forms next to the
// numeric pipeline values wherever a closed form exists.

struct ReportRow {
  const char* section;
  const char* name;
  double value;
  std::optional<double> closed;
};

std::vector<ReportRow> analyze_rows(const QuquartCoeffs& qc) {
  const MixedCoeffs mc = to_mixed_coeffs(qc);
  const PureBiphotonState psi = ququart_state(qc);
  const DensityMatrix rho16 = pure_density(psi);
  const DensityMatrix rho_pol = partial_trace_frequency(rho16);
  const DensityMatrix rho_freq = partial_trace_polarization(rho16);
  const CorrelationReport pol = build_correlation_report(rho_pol);
  const CorrelationReport freq = build_correlation_report(rho_freq);
  const ClosedForms cf = closed_forms(mc);
  const SchmidtDecomposition sd = schmidt_decompose(psi);

  const double b2 = std::norm(mc.b_minus);
  const double s_full_closed = -xlog2(1.0 - b2) - xlog2(b2);
  const double s_red_closed = -xlog2(cf.lambda_plus) - xlog2(cf.lambda_minus);
  const double i_closed = 2.0 * s_red_closed - s_full_closed;
  const double p_closed = std::sqrt(std::max(0.0, 1.0 - 2.0 * (1.0 - 1.0 / cf.k_pol)));
  const double c_pol_closed = concurrence_pol_closed(mc);
  const double c_freq_closed = concurrence_freq_closed(mc);

  std::vector<ReportRow> rows;
  auto put = [&rows](const char* section, const char* name, double value,
                     std::optional<double> closed = std::nullopt) {
    rows.push_back({section, name, value, closed});
  };

  const auto nat = qc.as_array();
  put("input", "c1_re", nat[0].real());
  put("input", "c1_im", nat[0].imag());
  put("input", "c2_re", nat[1].real());
  put("input", "c2_im", nat[1].imag());
  put("input", "c3_re", nat[2].real());
  put("input", "c3_im", nat[2].imag());
  put("input", "c4_re", nat[3].real());
  put("input", "c4_im", nat[3].imag());
  put("input", "b_plus_re", mc.b_plus.real());
  put("input", "b_plus_im", mc.b_plus.imag());
  put("input", "b_minus_re", mc.b_minus.real());
  put("input", "b_minus_im", mc.b_minus.imag());

  const DensityMatrix rho_photon = partial_trace_photon(rho16, Photon::Two);
  put("state", "K_photon", schmidt_parameter(rho_photon));
  put("state", "S_photon", von_neumann_entropy(rho_photon));
  put("state", "schmidt_modes", static_cast<double>(sd.modes.size()));
  put("state", "schmidt_degenerate", sd.degenerate ? 1.0 : 0.0);

  put("pol", "lambda_plus", pol.spectrum_reduced.values[0], cf.lambda_plus);
  put("pol", "lambda_minus", pol.spectrum_reduced.values[1], cf.lambda_minus);
  put("pol", "K", pol.schmidt_k, cf.k_pol);
  put("pol", "C", pol.concurrence, c_pol_closed);
  put("pol", "S_full", pol.entropy_full, s_full_closed);
  put("pol", "S_reduced", pol.entropy_reduced, s_red_closed);
  put("pol", "I", pol.mutual_info, i_closed);
  put("pol", "xi1", pol.stokes.xi1);
  put("pol", "xi2", pol.stokes.xi2);
  put("pol", "xi3", pol.stokes.xi3);
  put("pol", "P", pol.polarization_degree, p_closed);
  if (pol.rel_entropy) {
    put("pol", "S_rel", *pol.rel_entropy, relative_entropy_bell_diagonal(c_pol_closed));
    put("pol", "C_cl", *pol.classical_corr,
        i_closed - relative_entropy_bell_diagonal(c_pol_closed));
  }

  put("freq", "K", freq.schmidt_k, 2.0);
  put("freq", "C", freq.concurrence, c_freq_closed);
  put("freq", "S_full", freq.entropy_full, s_full_closed);
  put("freq", "S_reduced", freq.entropy_reduced, 1.0);
  put("freq", "I", freq.mutual_info, 2.0 - s_full_closed);
  put("freq", "P", freq.polarization_degree, 0.0);
  put("freq", "S_rel", freq.rel_entropy.value(),
      relative_entropy_bell_diagonal(c_freq_closed));
  put("freq", "C_cl", freq.classical_corr.value(), 1.0);

  const auto [high, low] = two_qubit_states(qc);
  (void)low;
  const TwoQubitMeasures tq = two_qubit_measures(qc);
  const DensityMatrix rho_h = reduce_first_qubit(high);
  put("two_qubit", "C", wootters_concurrence(pure_density(high)), tq.concurrence);
  put("two_qubit", "K", schmidt_parameter(rho_h), tq.schmidt_k);
  put("two_qubit", "P", degree_of_polarization(rho_h), tq.polarization_degree);

  return rows;
}

std::string render_analyze_csv(const std::vector<ReportRow>& rows) {
  std::string out = "section,name,value,closed,residual\n";
  for (const ReportRow& r : rows) {
    out += r.section;
    out += ',';
    out += r.name;
    out += ',';
    out += format_number(r.value);
    out += ',';
    if (r.closed) {
      out += format_number(*r.closed);
      out += ',';
      out += format_number(std::abs(r.value - *r.closed));
    } else {
      out += ',';
    }
    out += '\n';
  }
  return out;
}

std::string render_analyze_json(const std::vector<ReportRow>& rows) {
  std::string out = "{\n";
  const char* section = nullptr;
  bool first_in_section = true;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const ReportRow& r = rows[k];
    if (!section || std::string(section) != r.section) {
      if (section) out += "\n  },\n";
      section = r.section;
      out += "  \"";
      out += section;
      out += "\": {\n";
      first_in_section = true;
    }
    if (!first_in_section) out += ",\n";
    first_in_section = false;
    out += "    \"";
    out += r.name;
    out += "\": ";
    if (r.closed) {
      out += "{\"value\": " + format_number(r.value);
      out += ", \"closed\": " + format_number(*r.closed);
      out += ", \"residual\": " + format_number(std::abs(r.value - *r.closed)) + "}";
    } else {
      out += format_number(r.value);
    }
  }
  if (section) out += "\n  }\n";
  out += "}\n";
  return out;
}

// ---------------------------------------------------------------------------

int run(int argc, char** argv) {
  CLI::App app{"Biphoton polarization-frequency ququart correlation toolkit"};
  app.require_subcommand(1);

  std::string config_path, out_path = "-", format = "csv", family_name;
  double from = 0.0, to = 1.0;
  int steps = 201, fig = 0, threads = 1, trials = 500;
  std::uint64_t seed = 12345;
  bool corrupt = false;

  CLI::App* analyze = app.add_subcommand("analyze", "Full report for one coefficient set");
  analyze->add_option("--config", config_path, "JSON config with coefficients")->required();
  analyze->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  analyze->add_option("--out", out_path, "output path or - for stdout");

  CLI::App* sweep = app.add_subcommand("sweep", "Family sweep over |B-|");
  sweep->add_option("--config", config_path, "JSON config with a sweep block");
  CLI::Option* opt_family = sweep->add_option("--family", family_name, "example1|example2a|example2b");
  CLI::Option* opt_from = sweep->add_option("--from", from, "grid start (default 0)");
  CLI::Option* opt_to = sweep->add_option("--to", to, "grid end (default 1)");
  CLI::Option* opt_steps = sweep->add_option("--steps", steps, "grid points (default 201)");
  sweep->add_option("--threads", threads, "worker threads (default 1)");
  sweep->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--out", out_path, "output path or - for stdout");

  CLI::App* figure = app.add_subcommand("figure", "Named figure dataset");
  figure->add_option("--fig", fig, "figure number 1..5")->required();
  figure->add_option("--threads", threads, "worker threads (default 1)");
  figure->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  figure->add_option("--out", out_path, "output path or - for stdout");

  CLI::App* verify = app.add_subcommand("verify", "Randomized invariant audit");
  verify->add_option("--seed", seed, "RNG seed (default 12345)");
  verify->add_option("--trials", trials, "random states (default 500)");
  verify->add_flag("--corrupt", corrupt, "inject a broken matrix to exercise the failure path");
  verify->add_option("--out", out_path, "output path or - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(analyze)) {
      const sc::ScenarioConfig cfg = sc::parse_config_file(config_path);
      if (!cfg.coefficients) throw ConfigError("analyze: config must provide coefficients");
      const std::vector<ReportRow> rows = analyze_rows(*cfg.coefficients);
      write_output(format == "json" ? render_analyze_json(rows) : render_analyze_csv(rows),
                   out_path);
      return 0;
    }

    if (app.got_subcommand(sweep)) {
      sc::SweepRequest req;
      bool have_family = false;
      if (!config_path.empty()) {
        const sc::ScenarioConfig cfg = sc::parse_config_file(config_path);
        if (cfg.sweep) {
          req = *cfg.sweep;
          have_family = true;
        }
        req.outputs = cfg.outputs;
      }
      if (opt_family->count()) {
        req.family = sc::family_from_name(family_name);
        have_family = true;
      }
      if (!have_family)
        throw ConfigError("sweep: a family is required (--family or a config sweep block)");
      if (opt_from->count()) req.from = from;
      if (opt_to->count()) req.to = to;
      if (opt_steps->count()) req.steps = steps;
      req.threads = threads;
      const sc::Table t = sc::sweep_table(req);
      write_output(format == "json" ? sc::render_json_records(t) : sc::render_csv(t), out_path);
      return 0;
    }

    if (app.got_subcommand(figure)) {
      const sc::Table t = sc::figure_table(sc::figure_from_number(fig), threads);
      write_output(format == "json" ? sc::render_json_records(t) : sc::render_csv(t), out_path);
      return 0;
    }

    if (app.got_subcommand(verify)) {
      const sc::AuditReport report = sc::run_audit(seed, trials, corrupt);
      write_output(sc::render_audit_text(report), out_path);
      return report.all_pass() ? 0 : 1;
    }
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const NormalizationError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
