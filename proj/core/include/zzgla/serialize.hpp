#pragma once

// JSON encodings. Objects are emitted with sorted keys and entry lists in
// sorted order so identical values always serialize to identical bytes.

#include "zzgla/axioms.hpp"
#include "zzgla/parafermions.hpp"

#include <nlohmann/json.hpp>

namespace zzgla {

using nlohmann::json;

/// {"r": "num/den", "s": "num/den"}; "s" omitted when zero.
void to_json(json& j, const Scalar& x);
void from_json(const json& j, Scalar& x);

void to_json(json& j, Degree d);
void from_json(const json& j, Degree& d);

void to_json(json& j, const GradingSignature& sig);
void from_json(const json& j, GradingSignature& sig);

/// {"n", "signature", "degree": [a1,a2] | null, "entries": [[row, col, Scalar], ...]}
/// with zero-based indices and only nonzero entries, sorted by (row, col).
void to_json(json& j, const GradedMatrix& m);
void from_json(const json& j, GradedMatrix& m);

/// {"name": "sp", "params": {"n": 2, "p": 1}}
void to_json(json& j, const AlgebraFamily& f);
void from_json(const json& j, AlgebraFamily& f);
json family_params(const AlgebraFamily& f);
AlgebraFamily family_from_params(std::string_view name, const json& params);

/// {"d00", "d01", "d10", "d11"}
void to_json(json& j, const DimensionProfile& p);

/// {"family", "params", "signature", "elements", "profile"}
void to_json(json& j, const GradedBasis& b);
void from_json(const json& j, GradedBasis& b);

void to_json(json& j, const Failure& f);

/// {"check", "family", "rule", "cases", "failures", "pass", ...}; the elapsed
/// time is left out so reports are reproducible byte for byte.
void to_json(json& j, const CheckReport& r);

/// {"basis_size", "entries": [[i, j, k, Scalar], ...]}
void to_json(json& j, const StructureConstants& sc);

/// {"n", "q", "pf_cases", "pfrel_cases", "pass", "subspace_spans": {...}}
void to_json(json& j, const ParafermionSummary& s);

/// Canonical text form used for all files written by the tools.
std::string dump_canonical(const json& j);

}  // namespace zzgla
