#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>

#include "qsim/boolean.hpp"
#include "qsim/errors.hpp"
#include "qsim/grover.hpp"
#include "qsim/qft.hpp"
#include "qsim/reversible.hpp"
#include "qsim/rng.hpp"
#include "qsim/shor.hpp"
#include "qsim/state_vector.hpp"

namespace qsim::cli {

namespace {

using nlohmann::json;

struct CommonFlags {
  std::uint64_t seed = 1;
  bool json = false;
  int max_qubits = kDefaultMaxQubits;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--seed", flags.seed, "Root RNG seed")->capture_default_str();
  cmd->add_flag("--json", flags.json, "Emit a JSON report");
  cmd->add_option("--max-qubits", flags.max_qubits, "Register width cap")->capture_default_str()->check(
      CLI::Range(1, 62));
}

/// Rounds to 12 significant digits; magnitudes below 1e-14 print as 0.
double report_number(double v) {
  if (std::abs(v) < 1e-14) return 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

std::string big_endian_bits(std::uint64_t x, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    if ((x >> i) & 1U) s[static_cast<std::size_t>(n - 1 - i)] = '1';
  }
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json state_dump(const StateVector& state) {
  json amps = json::array();
  for (const Complex& a : state.amplitudes()) amps.push_back({report_number(a.real()), report_number(a.imag())});
  return {{"n_qubits", state.n_qubits()}, {"amplitudes", std::move(amps)}};
}

// ---------------------------------------------------------------------------

struct FactorFlags {
  std::uint64_t m = 0;
  std::optional<std::uint64_t> t;
  int max_runs = 0;
  int max_t_draws = 0;
  bool multiples = false;
};

int run_factor(const FactorFlags& f, const CommonFlags& common, std::ostream& out) {
  shor::FactorConfig config;
  config.t = f.t;
  config.max_runs_per_t = f.max_runs;
  config.max_t_draws = f.max_t_draws;
  config.try_multiples = f.multiples;
  config.sim.max_qubits = common.max_qubits;
  const shor::ShorParams params = shor::choose_params(f.m);
  if (f.t) shor::with_base(params, *f.t);
  const shor::FactorReport report = shor::factor(f.m, config, common.seed);

  if (common.json) {
    json runs = json::array();
    for (const auto& r : report.runs) {
      json entry = {{"t", r.t}, {"c", r.c}, {"residue", r.residue}, {"success", r.factor.has_value()}};
      entry["r_prime"] = r.r_prime() ? json(*r.r_prime()) : json(nullptr);
      if (r.r_used) entry["r_used"] = *r.r_used;
      runs.push_back(std::move(entry));
    }
    json doc = {{"version", kVersion},
                {"seed", report.seed},
                {"M", report.M},
                {"n", params.n},
                {"N", params.N},
                {"qubits", params.total_qubits()},
                {"factor", report.factor ? json(*report.factor) : json(nullptr)},
                {"cofactor", report.cofactor ? json(*report.cofactor) : json(nullptr)},
                {"t_draws", report.t_draws},
                {"max_runs_per_t", report.max_runs_per_t},
                {"max_t_draws", report.max_t_draws},
                {"runs", std::move(runs)}};
    out << doc.dump(2) << '\n';
  } else {
    out << kVersion << "  seed " << report.seed << '\n';
    out << "M = " << report.M << "  n = " << params.n << "  N = " << params.N << "  qubits = "
        << params.total_qubits() << '\n';
    for (std::size_t i = 0; i < report.runs.size(); ++i) {
      const auto& r = report.runs[i];
      out << "run " << i + 1 << ": t = " << r.t << "  c = " << r.c << "  residue = " << r.residue << "  r' = ";
      if (r.r_prime()) out << *r.r_prime();
      else out << "none";
      out << (r.factor ? "  -> factor " + std::to_string(*r.factor) : "  -> no factor") << '\n';
    }
    if (report.factor) {
      out << report.M << " = " << *report.factor << " x " << *report.cofactor << '\n';
    } else {
      out << "no factor found within budget (" << report.t_draws << " bases, " << report.max_runs_per_t
          << " runs each)\n";
    }
  }
  return report.factor ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------------------

struct GroverFlags {
  int n = 0;
  std::uint64_t target = 0;
  int runs = 1;
  bool trace = false;
  std::optional<std::uint64_t> iterations;
};

json grover_json(const grover::GroverResult& r, bool trace) {
  json doc = {{"candidate", r.candidate},
              {"success", r.success},
              {"iterations", r.run.iterations},
              {"oracle_calls", r.run.oracle_calls},
              {"success_probability", report_number(r.run.success_probability.back())}};
  if (trace) {
    json values = json::array();
    for (double p : r.run.success_probability) values.push_back(report_number(p));
    doc["trace"] = std::move(values);
  }
  return doc;
}

int run_grover(const GroverFlags& f, const CommonFlags& common, std::ostream& out) {
  if (f.n < 1) throw std::invalid_argument("--n must be >= 1");
  if (f.n > common.max_qubits) {
    throw CapacityError(std::to_string(f.n) + " qubits exceeds the cap of " + std::to_string(common.max_qubits));
  }
  if (f.target >> f.n) throw std::invalid_argument("--target must be below 2^n");
  if (f.runs < 1) throw std::invalid_argument("--runs must be >= 1");

  grover::GroverOptions options;
  options.iterations = f.iterations;
  options.sim.max_qubits = common.max_qubits;

  std::vector<grover::GroverResult> results(static_cast<std::size_t>(f.runs));
  const auto runs = static_cast<std::int64_t>(f.runs);
#pragma omp parallel for schedule(dynamic) if (runs > 1)
  for (std::int64_t i = 0; i < runs; ++i) {
    std::mt19937_64 rng(split_seed(common.seed, static_cast<std::uint64_t>(i)));
    results[static_cast<std::size_t>(i)] = grover::grover_search(f.n, f.target, rng, options);
  }
  int successes = 0;
  for (const auto& r : results) successes += r.success ? 1 : 0;

  if (common.json) {
    json doc = grover_json(results.front(), f.trace);
    doc["version"] = kVersion;
    doc["seed"] = common.seed;
    doc["n"] = f.n;
    doc["target"] = f.target;
    if (f.runs > 1) {
      json all = json::array();
      for (const auto& r : results) all.push_back(grover_json(r, false));
      doc["runs"] = std::move(all);
      doc["successes"] = successes;
    }
    out << doc.dump(2) << '\n';
  } else {
    out << kVersion << "  seed " << common.seed << '\n';
    const auto& first = results.front();
    out << "n = " << f.n << "  N = " << (std::uint64_t{1} << f.n) << "  target = " << f.target
        << "  iterations = " << first.run.iterations << '\n';
    out << std::setprecision(12) << "success probability before measurement: "
        << report_number(first.run.success_probability.back()) << '\n';
    if (f.trace) {
      for (std::size_t k = 0; k < first.run.success_probability.size(); ++k) {
        out << "  step " << k << ": " << report_number(first.run.success_probability[k]) << '\n';
      }
    }
    for (std::size_t i = 0; i < results.size(); ++i) {
      out << "run " << i + 1 << ": candidate " << results[i].candidate << " ("
          << big_endian_bits(results[i].candidate, f.n) << ") " << (results[i].success ? "hit" : "miss") << '\n';
    }
    if (f.runs > 1) out << successes << " / " << f.runs << " runs found the target\n";
  }
  return successes > 0 ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------------------

struct QftFlags {
  int n = 0;
  std::uint64_t input = 0;
  bool bitrev = false;
  bool dump_state = false;
};

int run_qft(const QftFlags& f, const CommonFlags& common, std::ostream& out) {
  SimConfig config{common.max_qubits};
  StateVector state = basis_state(f.n, f.input, config);
  const qft::QftCircuit circuit = f.bitrev ? qft::qft_circuit_bitrev(f.n) : qft::qft_circuit(f.n);
  state.apply(circuit.gates);

  if (f.dump_state) {
    json doc = state_dump(state);
    doc["version"] = kVersion;
    doc["seed"] = common.seed;
    out << (common.json ? doc.dump(2) : doc.dump()) << '\n';
    return kExitOk;
  }
  if (common.json) {
    json doc = {{"version", kVersion},
                {"seed", common.seed},
                {"n", f.n},
                {"input", f.input},
                {"bitrev", f.bitrev},
                {"gates", circuit.gates.size()}};
    json probs = json::array();
    for (std::uint64_t x = 0; x < state.dimension(); ++x) probs.push_back(report_number(probability_of(state, x)));
    doc["probabilities"] = std::move(probs);
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  out << kVersion << "  seed " << common.seed << '\n';
  out << (f.bitrev ? "bit-reversed " : "") << "QFT on n = " << f.n << " qubits, input |" << f.input << ">, "
      << circuit.gates.size() << " gates\n";
  out << std::setprecision(12);
  for (std::uint64_t x = 0; x < state.dimension(); ++x) {
    const Complex a = state.amplitude(x);
    out << '|' << big_endian_bits(x, f.n) << ">  " << report_number(a.real()) << (a.imag() < 0 ? " - " : " + ")
        << report_number(std::abs(a.imag())) << "i\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

int run_sat(const std::string& file, const CommonFlags& common, std::ostream& out) {
  const boolean::SatInstance u = boolean::parse_sat_json(read_file(file));
  const auto found = boolean::sat_brute_force(u);
  if (common.json) {
    json doc = {{"version", kVersion}, {"seed", common.seed}, {"m", u.m}, {"clauses", u.clauses.size()},
                {"satisfiable", found.has_value()}};
    if (found) {
      json bits = json::array();
      for (int k = 1; k <= u.m; ++k) bits.push_back((*found >> (k - 1)) & 1U);
      doc["assignment"] = std::move(bits);
    }
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  out << kVersion << "  seed " << common.seed << '\n';
  if (!found) {
    out << "UNSAT\n";
    return kExitOk;
  }
  for (int k = 1; k <= u.m; ++k) out << (k > 1 ? " " : "") << 'x' << k << '=' << ((*found >> (k - 1)) & 1U);
  out << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------

constexpr int kCheckWireLimit = 14;

int run_compile(const std::string& file, bool check, const CommonFlags& common, std::ostream& out) {
  const boolean::BooleanCircuit bc = boolean::parse_boolean_circuit(read_file(file));
  const reversible::ReversibleCircuit rc = reversible::compile(bc);

  bool checked = false;
  bool holds = true;
  bool bijective = true;
  std::uint64_t inputs_checked = 0;
  if (check && rc.wire_count() <= kCheckWireLimit) {
    const auto report = reversible::check_contract(bc, rc);
    holds = report.holds;
    inputs_checked = report.inputs_checked;
    bijective = reversible::is_bijective(rc);
    checked = true;
  }

  if (common.json) {
    json doc = {{"version", kVersion},
                {"seed", common.seed},
                {"inputs", rc.input_wires()},
                {"outputs", rc.output_wires()},
                {"scratch", rc.scratch_wires()},
                {"wires", rc.wire_count()},
                {"gates", rc.gates().size()},
                {"circuit", reversible::format_reversible(rc)}};
    if (check) {
      doc["checked"] = checked;
      if (checked) {
        doc["contract_holds"] = holds;
        doc["bijective"] = bijective;
        doc["inputs_checked"] = inputs_checked;
      }
    }
    out << doc.dump(2) << '\n';
  } else {
    out << "# " << kVersion << "  seed " << common.seed << '\n';
    out << reversible::format_reversible(rc);
    if (check) {
      if (!checked) {
        out << "# check skipped: " << rc.wire_count() << " wires exceeds " << kCheckWireLimit << '\n';
      } else {
        out << "# contract H(x,y,0) = (x, F(x)+y, 0): " << (holds ? "holds" : "VIOLATED") << " over "
            << inputs_checked << " inputs; bijective: " << (bijective ? "yes" : "NO") << '\n';
      }
    }
  }
  return holds && bijective ? kExitOk : kExitFailure;
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dense state-vector quantum circuit simulator", "qsim"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  CommonFlags common;

  FactorFlags factor_flags;
  auto* factor = app.add_subcommand("factor", "Factor M with simulated period finding");
  factor->add_option("--m", factor_flags.m, "Odd composite, not a prime power")->required();
  factor->add_option("--t", factor_flags.t, "Fixed base (default: random coprime draws)");
  factor->add_option("--max-runs", factor_flags.max_runs, "Runs per base (default max(4, ceil(3 log2 log2 M)))");
  factor->add_option("--max-t-draws", factor_flags.max_t_draws, "Base draws (default ceil(log2 M))");
  factor->add_flag("--try-multiples", factor_flags.multiples, "Also try 2r', 3r', 4r' after a failed decode");
  add_common(factor, common);

  GroverFlags grover_flags;
  auto* grover = app.add_subcommand("grover", "Single-target Grover search");
  grover->add_option("--n", grover_flags.n, "Qubit count")->required();
  grover->add_option("--target", grover_flags.target, "Marked basis state")->required();
  grover->add_option("--runs", grover_flags.runs, "Independent runs")->capture_default_str();
  grover->add_option("--iterations", grover_flags.iterations, "Override the iteration count");
  grover->add_flag("--trace", grover_flags.trace, "Report the success probability after every step");
  add_common(grover, common);

  QftFlags qft_flags;
  auto* qft = app.add_subcommand("qft", "Quantum Fourier transform of a basis state");
  qft->add_option("--n", qft_flags.n, "Qubit count")->required();
  qft->add_option("--input", qft_flags.input, "Input basis index")->required();
  qft->add_flag("--bitrev", qft_flags.bitrev, "Skip the final swaps (bit-reversed output)");
  qft->add_flag("--dump-state", qft_flags.dump_state, "Print the state as JSON [re, im] pairs");
  add_common(qft, common);

  std::string sat_file;
  auto* sat = app.add_subcommand("sat", "Satisfiability");
  sat->require_subcommand(1);
  auto* sat_solve = sat->add_subcommand("solve", "Exhaustive search for the least satisfying assignment");
  sat_solve->add_option("--file", sat_file, "Instance JSON")->required();
  add_common(sat_solve, common);

  std::string circuit_file;
  bool check = false;
  auto* compile = app.add_subcommand("compile", "Compile a Boolean circuit into a reversible one");
  compile->add_option("--circuit", circuit_file, "Boolean circuit file")->required();
  compile->add_flag("--check", check, "Exhaustively verify the compiled circuit (<= 14 wires)");
  add_common(compile, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::ostringstream help;
    app.exit(e, help, err);
    return kExitUsage;
  }

  try {
    if (*factor) return run_factor(factor_flags, common, out);
    if (*grover) return run_grover(grover_flags, common, out);
    if (*qft) return run_qft(qft_flags, common, out);
    if (*sat_solve) return run_sat(sat_file, common, out);
    if (*compile) return run_compile(circuit_file, check, common, out);
  } catch (const CapacityError& e) {
    err << "capacity exceeded: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "out of range: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace qsim::cli
