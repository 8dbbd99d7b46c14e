#pragma once

#include <string>

#include "json.hpp"

#include "ghz/constraints.hpp"
#include "ghz/ghz_sector.hpp"
#include "ghz/hamiltonian.hpp"
#include "ghz/spectra.hpp"

namespace ghz {

using Json = nlohmann::ordered_json;

/// Fixed 12-significant-digit text form used for every floating value that
/// lands in CLI output, so repeated runs are byte-identical.
std::string fmt12(double x);

/// Hamiltonian file format:
///   { "n": int, "m": int (optional), "terms": [ {"coeff": f, "string": s} ] }
/// The loader validates characters and lengths, enforces the weight bound
/// against the declared body order (max term weight when "m" is absent),
/// dedupes, and rejects empty term lists.
FewBodyHamiltonian load_hamiltonian(const std::string& path);
FewBodyHamiltonian hamiltonian_from_json(const Json& j);
Json hamiltonian_to_json(const FewBodyHamiltonian& h);

Json decomposition_to_json(const GhzDecomposition& d);
Json condition_report_to_json(const ConditionReport& r);
Json spectral_report_to_json(const SpectralReport& r,
                             bool dump_amplitudes = false,
                             const std::vector<NamedState>& targets = {});
Json census_to_json(const std::vector<GhzHit>& hits);
Json theorem_report_to_json(const TheoremReport& r);
Json nullspace_to_json(const ConstraintSystem& system,
                       const NullspaceBasis& basis);

/// CSV with header ratio,jz,jx,ghz_eigenvalue,rank,multiplicity,in_window.
std::string scan_to_csv(const ScanResult& scan);
/// Footer JSON listing the bisected windows.
Json scan_windows_to_json(const ScanResult& scan, double jz);

}  // namespace ghz
