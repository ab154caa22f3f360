#pragma once

#include <grw/vendor/json.hpp>

#include "grw/algebra.hpp"
#include "grw/decomp.hpp"
#include "grw/descriptor.hpp"
#include "grw/oracle.hpp"
#include "grw/selftest.hpp"

namespace grw {

using ordered_json = nlohmann::ordered_json;

// {p, k, modulus, family, n, coeffs: [[c0..c_{k-1}], ...]} in canonical group order
ordered_json to_json(const AlgElem& a);
AlgElem alg_from_json(const ordered_json& j, const FieldCtx& ctx, const Group& grp);

// {q, algebra, components: [{m, d, e}...], radical_dim}
ordered_json to_json(const Decomposition& dec);

// nested {type: "cyclic"|"gl"|"prod"|"semidirect"|"power", ...}
ordered_json to_json(const Descriptor& d);
Descriptor descriptor_from_json(const ordered_json& j);

ordered_json to_json(const UnitCensus& census, bool include_timing = false);
ordered_json to_json(const SubgroupReport& rep);
ordered_json to_json(const ProofSubgroups& rep);
ordered_json to_json(const SplitReport& rep);
ordered_json to_json(const RadicalReport& rep);
ordered_json to_json(const SelftestReport& rep);

}  // namespace grw
