#include "ghz/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace ghz {

namespace {

/// Rounds through a 12-significant-digit decimal so serialized numbers are
/// short and stable.
double round12(double x) {
  if (x == 0.0) return 0.0;  // canonical zero, drops the -0.0 sign bit
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

Json complex_pair(std::complex<double> z) {
  return Json::array({round12(z.real()), round12(z.imag())});
}

}  // namespace

std::string fmt12(double x) {
  if (x == 0.0) x = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

FewBodyHamiltonian hamiltonian_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("terms"))
    throw std::invalid_argument(
        "hamiltonian: expected object with \"n\" and \"terms\"");
  const int n = j.at("n").get<int>();
  const auto& terms_json = j.at("terms");
  if (!terms_json.is_array() || terms_json.empty())
    throw std::invalid_argument("hamiltonian: empty term list");

  std::vector<PauliTerm> terms;
  for (const auto& t : terms_json) {
    const std::string text = t.at("string").get<std::string>();
    const double coeff = t.at("coeff").get<double>();
    if (!std::isfinite(coeff))
      throw std::invalid_argument("hamiltonian: non-finite coefficient on '" +
                                  text + "'");
    PauliString p = PauliString::parse(text);
    if (p.qubits() != n)
      throw std::invalid_argument("hamiltonian: term '" + text +
                                  "' does not match n = " + std::to_string(n));
    terms.push_back({coeff, p});
  }
  const int declared = j.contains("m") ? j.at("m").get<int>() : -1;
  // The weight bound and m < n are enforced by the constructor; rethrow with
  // the offending term named for CLI diagnostics.
  if (declared >= 0) {
    for (const auto& t : terms)
      if (t.string.weight() > declared)
        throw std::invalid_argument(
            "hamiltonian: term '" + t.string.str() + "' has weight " +
            std::to_string(t.string.weight()) + " above declared m = " +
            std::to_string(declared));
  }
  return FewBodyHamiltonian(n, std::move(terms), declared);
}

FewBodyHamiltonian load_hamiltonian(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("'" + path + "': " + e.what());
  }
  return hamiltonian_from_json(j);
}

Json hamiltonian_to_json(const FewBodyHamiltonian& h) {
  Json j;
  j["n"] = h.qubits();
  j["m"] = h.declared_body_order();
  j["body_order"] = h.body_order();
  Json terms = Json::array();
  for (const auto& t : h.terms())
    terms.push_back({{"coeff", round12(t.coefficient)},
                     {"string", t.string.str()}});
  j["terms"] = std::move(terms);
  return j;
}

Json decomposition_to_json(const GhzDecomposition& d) {
  Json j;
  j["n"] = d.n;
  j["source"] = d.source_sign > 0 ? "G+" : "G-";
  j["epsilon"] = round12(d.epsilon);
  j["b0"] = complex_pair(d.b0);
  Json a = Json::object(), b = Json::object();
  for (const auto& [rep, c] : d.a) a[rep.str()] = complex_pair(c);
  for (const auto& [rep, c] : d.b) b[rep.str()] = complex_pair(c);
  j["a"] = std::move(a);
  j["b"] = std::move(b);
  return j;
}

Json condition_report_to_json(const ConditionReport& r) {
  Json j;
  j["n"] = r.n;
  j["body_order"] = r.body_order;
  j["epsilon"] = round12(r.epsilon);
  j["tolerance"] = round12(r.tolerance);
  j["is_plus_eigenstate"] = r.is_plus_eigenstate;
  Json res = Json::object();
  for (const auto& [key, value] : r.residuals) res[key] = complex_pair(value);
  j["residuals"] = std::move(res);
  j["phi_bar_norm"] = round12(r.phi_bar_norm);
  j["phi_bar_hypothetical"] = r.phi_bar_hypothetical;
  j["degeneracy_forced"] = r.degeneracy_forced;
  return j;
}

Json spectral_report_to_json(const SpectralReport& r, bool dump_amplitudes,
                             const std::vector<NamedState>& targets) {
  Json j;
  j["n"] = r.n;
  j["dim"] = static_cast<int>(r.eigenvalues.size());
  Json ev = Json::array();
  for (Eigen::Index k = 0; k < r.eigenvalues.size(); ++k)
    ev.push_back(round12(r.eigenvalues(k)));
  j["eigenvalues"] = std::move(ev);
  j["cluster_of"] = r.cluster_of;
  Json clusters = Json::array();
  for (const auto& cl : r.clusters)
    clusters.push_back({{"value", round12(cl.value)},
                        {"multiplicity", cl.multiplicity},
                        {"rank", cl.rank}});
  j["clusters"] = std::move(clusters);
  Json tj = Json::array();
  for (const auto& t : r.targets)
    tj.push_back({{"name", t.name},
                  {"eigenvalue", round12(t.eigenvalue)},
                  {"overlap", round12(t.overlap)},
                  {"residual", round12(t.residual)},
                  {"multiplicity", t.multiplicity},
                  {"rank", t.rank},
                  {"gap", round12(t.gap)}});
  j["targets"] = std::move(tj);
  j["ghz_census"] = census_to_json(r.census);
  if (dump_amplitudes) {
    Json amps = Json::object();
    for (const auto& t : targets) {
      Json v = Json::array();
      for (Eigen::Index k = 0; k < t.vector.size(); ++k)
        v.push_back(complex_pair(t.vector(k)));
      amps[t.name] = std::move(v);
    }
    j["amplitudes"] = std::move(amps);
  }
  return j;
}

Json census_to_json(const std::vector<GhzHit>& hits) {
  Json j = Json::array();
  for (const auto& hit : hits)
    j.push_back({{"eigenvalue", round12(hit.eigenvalue)},
                 {"bitstring", hit.bitstring},
                 {"phase", round12(hit.phase)}});
  return j;
}

Json theorem_report_to_json(const TheoremReport& r) {
  Json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["m_star"] = r.m_star;
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["max_residual"] = round12(r.max_residual);
  j["all_passed"] = r.all_passed;
  return j;
}

Json nullspace_to_json(const ConstraintSystem& system,
                       const NullspaceBasis& basis) {
  Json j;
  j["n"] = system.n;
  j["m"] = system.m;
  j["columns"] = system.cols();
  j["rank"] = basis.rank;
  j["dimension"] = basis.dimension();
  Json vectors = Json::array();
  for (const auto& v : basis.vectors) {
    Json entries = Json::array();
    for (size_t c = 0; c < v.size(); ++c) {
      if (v[c].is_zero()) continue;
      entries.push_back({{"string", system.columns[c].str()},
                         {"coeff_num", v[c].num()},
                         {"coeff_den", v[c].den()}});
    }
    vectors.push_back(std::move(entries));
  }
  j["basis"] = std::move(vectors);
  return j;
}

std::string scan_to_csv(const ScanResult& scan) {
  std::string out = "ratio,jz,jx,ghz_eigenvalue,rank,multiplicity,in_window\n";
  for (const auto& row : scan.rows) {
    out += fmt12(row.ratio) + "," + fmt12(row.jz) + "," + fmt12(row.jx) + "," +
           fmt12(row.ghz_eigenvalue) + "," + std::to_string(row.rank) + "," +
           std::to_string(row.multiplicity) + "," +
           (row.in_window ? "1" : "0") + "\n";
  }
  return out;
}

Json scan_windows_to_json(const ScanResult& scan, double jz) {
  Json j;
  j["jz"] = fmt12(jz);
  Json windows = Json::array();
  for (const auto& [enter, exit] : scan.windows)
    windows.push_back({{"enter", fmt12(enter)}, {"exit", fmt12(exit)}});
  j["windows"] = std::move(windows);
  return j;
}

}  // namespace ghz
