// Command-line front door for the GHZ eigenstate toolkit: build or load
// few-body Hamiltonians, decompose their action on GHZ states, check the
// eigenstate conditions, diagonalize, scan parameter windows, and verify
// the forced-degeneracy theorem by nullspace sampling.
//
// Exit codes: 0 = claim holds / success, 1 = claim checked and false,
// 2 = usage or input error.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ghz/constraints.hpp"
#include "ghz/ghz_sector.hpp"
#include "ghz/hamiltonian.hpp"
#include "ghz/io.hpp"
#include "ghz/spectra.hpp"
#include "ghz/states.hpp"

namespace {

using ghz::FewBodyHamiltonian;
using ghz::Json;

double parse_scalar(const std::string& text, const char* what) {
  size_t used = 0;
  double value = 0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || !std::isfinite(value))
    throw std::invalid_argument(std::string(what) + ": expected a number, got '" +
                                text + "'");
  return value;
}

std::array<double, 4> parse_list4(const std::string& text, const char* what) {
  std::array<double, 4> out{};
  std::stringstream ss(text);
  std::string item;
  size_t k = 0;
  while (std::getline(ss, item, ',')) {
    if (k >= 4) throw std::invalid_argument(std::string(what) + ": expected 4 values");
    out[k++] = parse_scalar(item, what);
  }
  if (k != 4)
    throw std::invalid_argument(std::string(what) + ": expected 4 comma-separated values");
  return out;
}

std::vector<double> parse_ratio_grid(const std::string& text) {
  // start:end:step
  std::stringstream ss(text);
  std::string a, b, c;
  if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') ||
      !std::getline(ss, c))
    throw std::invalid_argument("--ratios: expected start:end:step");
  const double start = parse_scalar(a, "--ratios start");
  const double end = parse_scalar(b, "--ratios end");
  const double step = parse_scalar(c, "--ratios step");
  if (step <= 0 || end < start)
    throw std::invalid_argument("--ratios: need start <= end and step > 0");
  std::vector<double> grid;
  for (double r = start; r <= end + step * 0.5; r += step) grid.push_back(r);
  if (grid.empty()) throw std::invalid_argument("--ratios: empty grid");
  return grid;
}

struct Source {
  std::string model;
  std::string input;
  std::string jx = "0";
  std::string jz = "0";

  FewBodyHamiltonian resolve() const {
    if (model.empty() == input.empty())
      throw std::invalid_argument("provide exactly one of --model / --input");
    FewBodyHamiltonian h = [&] {
      if (!input.empty()) return ghz::load_hamiltonian(input);
      if (model == "symmetric-ring4")
        return ghz::symmetric_ring4(parse_scalar(jx, "--jx"),
                                    parse_scalar(jz, "--jz"));
      if (model == "five-qubit-3body")
        return ghz::five_qubit_three_body(parse_scalar(jx, "--jx"),
                                          parse_scalar(jz, "--jz"));
      if (model == "ring-xz4")
        return ghz::ring_xz4(parse_list4(jx, "--jx"), parse_list4(jz, "--jz"));
      throw std::invalid_argument("unknown model '" + model +
                                  "' (ring-xz4, symmetric-ring4, five-qubit-3body)");
    }();
    if (h.empty())
      throw std::invalid_argument("Hamiltonian has no terms after dedup");
    return h;
  }

  void attach(CLI::App* cmd) {
    cmd->add_option("--model", model,
                    "ring-xz4 | symmetric-ring4 | five-qubit-3body");
    cmd->add_option("--input", input, "Hamiltonian JSON file");
    cmd->add_option("--jx", jx, "x coupling (scalar, or 4 comma-separated)");
    cmd->add_option("--jz", jz, "z coupling (scalar, or 4 comma-separated)");
  }
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
  out << text;
}

void emit_json(const Json& j, const std::string& out_path) {
  emit(j.dump(2) + "\n", out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GHZ states and few-body Hamiltonians"};
  app.require_subcommand(1);

  std::string out_path;
  const auto with_out = [&out_path](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "output file (default stdout)");
  };

  Source src_conditions, src_decompose, src_spectrum, src_census;
  double tol = -1.0;
  bool dump_amplitudes = false;

  auto* cmd_conditions = app.add_subcommand(
      "conditions", "eigenstate conditions for G+ and the phi-bar residual");
  with_out(cmd_conditions);
  src_conditions.attach(cmd_conditions);
  cmd_conditions->add_option("--tol", tol, "vanishing tolerance override");

  auto* cmd_decompose = app.add_subcommand(
      "decompose", "flip-sector decomposition of H|G+> and H|G->");
  with_out(cmd_decompose);
  src_decompose.attach(cmd_decompose);

  auto* cmd_spectrum = app.add_subcommand(
      "spectrum", "dense spectrum, degeneracy clusters, GHZ targets");
  with_out(cmd_spectrum);
  src_spectrum.attach(cmd_spectrum);
  cmd_spectrum->add_flag("--dump-amplitudes", dump_amplitudes,
                         "include target amplitudes (n <= 6)");

  auto* cmd_census = app.add_subcommand(
      "census", "generalized-GHZ eigenvectors among nondegenerate levels");
  with_out(cmd_census);
  src_census.attach(cmd_census);

  std::string scan_model, ratios_text;
  double scan_jz = 0.0;
  bool no_bisect = false;
  auto* cmd_scan = app.add_subcommand(
      "scan", "first-excited-window scan over Jx/Jz with bisected endpoints");
  with_out(cmd_scan);
  cmd_scan->add_option("--model", scan_model,
                       "symmetric-ring4 | five-qubit-3body")
      ->required();
  cmd_scan->add_option("--ratios", ratios_text, "grid start:end:step")
      ->required();
  cmd_scan->add_option("--jz", scan_jz, "fixed Jz, must be negative")
      ->required();
  cmd_scan->add_flag("--no-bisect", no_bisect, "skip endpoint bisection");

  int opt_n = 0, opt_m = 0, samples = 100;
  std::uint64_t seed = 1;
  auto* cmd_nullspace = app.add_subcommand(
      "nullspace", "exact nullspace of the G+ eigenstate conditions");
  with_out(cmd_nullspace);
  cmd_nullspace->add_option("--n", opt_n, "qubit count")->required();
  cmd_nullspace->add_option("--m", opt_m, "body order")->required();

  auto* cmd_theorem = app.add_subcommand(
      "verify-theorem", "forced degeneracy below m* by nullspace sampling");
  with_out(cmd_theorem);
  cmd_theorem->add_option("--n", opt_n, "qubit count")->required();
  cmd_theorem->add_option("--m", opt_m, "body order, below (n+1)/2")->required();
  cmd_theorem->add_option("--samples", samples, "random samples");
  cmd_theorem->add_option("--seed", seed, "RNG seed");

  auto* cmd_witness = app.add_subcommand(
      "witness", "nondegenerate-GHZ Hamiltonian at or above m*");
  with_out(cmd_witness);
  cmd_witness->add_option("--n", opt_n, "qubit count")->required();
  cmd_witness->add_option("--m", opt_m, "body order, at least (n+1)/2")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_conditions->parsed()) {
      const FewBodyHamiltonian h = src_conditions.resolve();
      const ghz::ConditionReport report = ghz::eigenstate_conditions(h, tol);
      emit_json(ghz::condition_report_to_json(report), out_path);
      return report.is_plus_eigenstate ? 0 : 1;
    }

    if (cmd_decompose->parsed()) {
      const FewBodyHamiltonian h = src_decompose.resolve();
      Json j;
      j["hamiltonian"] = ghz::hamiltonian_to_json(h);
      j["plus"] = ghz::decomposition_to_json(ghz::decompose_plus(h));
      j["minus"] = ghz::decomposition_to_json(ghz::decompose_minus(h));
      emit_json(j, out_path);
      return 0;
    }

    if (cmd_spectrum->parsed()) {
      const FewBodyHamiltonian h = src_spectrum.resolve();
      if (dump_amplitudes && h.qubits() > 6)
        throw std::invalid_argument("--dump-amplitudes requires n <= 6");
      const std::vector<ghz::NamedState> targets = {
          {"G+", ghz::ghz_state(h.qubits(), +1)},
          {"G-", ghz::ghz_state(h.qubits(), -1)}};
      const ghz::SpectralReport report = ghz::analyze(h, targets);
      emit_json(ghz::spectral_report_to_json(report, dump_amplitudes, targets),
                out_path);
      return 0;
    }

    if (cmd_census->parsed()) {
      const FewBodyHamiltonian h = src_census.resolve();
      emit_json(ghz::census_to_json(ghz::ghz_census(h)), out_path);
      return 0;
    }

    if (cmd_scan->parsed()) {
      int n = 0;
      ghz::ModelBuilder builder;
      if (scan_model == "symmetric-ring4") {
        n = 4;
        builder = [](double jx, double jz) { return ghz::symmetric_ring4(jx, jz); };
      } else if (scan_model == "five-qubit-3body") {
        n = 5;
        builder = [](double jx, double jz) {
          return ghz::five_qubit_three_body(jx, jz);
        };
      } else {
        throw std::invalid_argument("scan supports symmetric-ring4 and "
                                    "five-qubit-3body only");
      }
      const ghz::ScanResult scan = ghz::scan_first_excited_window(
          builder, n, parse_ratio_grid(ratios_text), scan_jz, !no_bisect);
      emit(ghz::scan_to_csv(scan), out_path);
      const Json footer = ghz::scan_windows_to_json(scan, scan_jz);
      if (out_path.empty()) {
        std::cout << footer.dump(2) << "\n";
      } else {
        emit_json(footer, out_path + ".endpoints.json");
      }
      return 0;
    }

    if (cmd_nullspace->parsed()) {
      const ghz::ConstraintSystem system = ghz::build_constraints(opt_n, opt_m);
      const ghz::NullspaceBasis basis = ghz::nullspace(system);
      emit_json(ghz::nullspace_to_json(system, basis), out_path);
      return 0;
    }

    if (cmd_theorem->parsed()) {
      const ghz::TheoremReport report =
          ghz::verify_forced_degeneracy(opt_n, opt_m, samples, seed);
      emit_json(ghz::theorem_report_to_json(report), out_path);
      return report.all_passed ? 0 : 1;
    }

    if (cmd_witness->parsed()) {
      const auto witness = ghz::find_nondegenerate_witness(opt_n, opt_m);
      if (!witness) {
        Json j;
        j["found"] = false;
        emit_json(j, out_path);
        return 1;
      }
      Json j;
      j["found"] = true;
      j["hamiltonian"] = ghz::hamiltonian_to_json(*witness);
      j["conditions"] =
          ghz::condition_report_to_json(ghz::eigenstate_conditions(*witness));
      const std::vector<ghz::NamedState> targets = {
          {"G+", ghz::ghz_state(witness->qubits(), +1)}};
      j["spectrum"] = ghz::spectral_report_to_json(
          ghz::analyze(*witness, targets));
      emit_json(j, out_path);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
