#include "grw/serialize.hpp"

namespace grw {

ordered_json to_json(const AlgElem& a) {
  const FieldCtx& ctx = *a.ctx;
  const Group& grp = *a.grp;
  ordered_json j;
  j["p"] = ctx.p();
  j["k"] = ctx.degree();
  j["modulus"] = ctx.modulus();
  j["family"] = family_name(grp.spec().family);
  j["n"] = grp.spec().n;
  ordered_json coeffs = ordered_json::array();
  for (std::uint32_t g = 0; g < grp.order(); ++g) {
    coeffs.push_back(std::vector<std::uint32_t>(a.slot(g), a.slot(g) + ctx.degree()));
  }
  j["coeffs"] = std::move(coeffs);
  return j;
}

AlgElem alg_from_json(const ordered_json& j, const FieldCtx& ctx, const Group& grp) {
  if (j.at("p").get<std::uint64_t>() != ctx.p() || j.at("k").get<unsigned>() != ctx.degree()) {
    fail(errc::ctx_mismatch, "serialized element field mismatch");
  }
  if (j.at("family").get<std::string>() != family_name(grp.spec().family) ||
      j.at("n").get<std::uint32_t>() != grp.spec().n) {
    fail(errc::group_mismatch, "serialized element group mismatch");
  }
  const auto& coeffs = j.at("coeffs");
  if (coeffs.size() != grp.order()) fail(errc::range_error, "coefficient count mismatch");
  AlgElem a = alg_zero(ctx, grp);
  for (std::uint32_t g = 0; g < grp.order(); ++g) {
    const auto words = coeffs.at(g).get<std::vector<std::uint32_t>>();
    if (words.size() != ctx.degree()) fail(errc::range_error, "coefficient width mismatch");
    for (unsigned w = 0; w < ctx.degree(); ++w) {
      a.slot(g)[w] = static_cast<std::uint32_t>(words[w] % ctx.p());
    }
  }
  return a;
}

ordered_json to_json(const Decomposition& dec) {
  ordered_json j;
  const BigInt q = bigint_pow(BigInt(dec.p), dec.k);
  if (q <= BigInt(UINT64_MAX)) {
    j["q"] = q.convert_to<std::uint64_t>();
  } else {
    j["q"] = q.str();
  }
  j["algebra"] = dec.algebra;
  ordered_json comps = ordered_json::array();
  for (const auto& c : dec.components) {
    comps.push_back(ordered_json{{"m", c.m}, {"d", c.d}, {"e", c.e}});
  }
  j["components"] = std::move(comps);
  j["radical_dim"] = dec.radical_dim;
  return j;
}

ordered_json to_json(const Descriptor& d) {
  ordered_json j;
  switch (d.kind()) {
    case Descriptor::Kind::cyclic:
      j["type"] = "cyclic";
      j["m"] = d.cyclic_order().str();
      break;
    case Descriptor::Kind::general_linear:
      j["type"] = "gl";
      j["deg"] = d.gl_degree();
      j["q"] = d.gl_field_size().str();
      break;
    case Descriptor::Kind::direct_product: {
      j["type"] = "prod";
      ordered_json factors = ordered_json::array();
      for (const auto& c : d.children()) factors.push_back(to_json(c));
      j["factors"] = std::move(factors);
      break;
    }
    case Descriptor::Kind::semidirect_product:
      j["type"] = "semidirect";
      j["normal"] = to_json(d.children()[0]);
      j["acting"] = to_json(d.children()[1]);
      break;
    case Descriptor::Kind::power:
      j["type"] = "power";
      j["base"] = to_json(d.children()[0]);
      j["e"] = d.power_exponent().str();
      break;
  }
  if (d.asserted_exponent()) j["asserted_exponent"] = d.asserted_exponent()->str();
  return j;
}

Descriptor descriptor_from_json(const ordered_json& j) {
  const std::string type = j.at("type").get<std::string>();
  Descriptor out = Descriptor::cyclic(BigInt(1));
  if (type == "cyclic") {
    out = Descriptor::cyclic(BigInt(j.at("m").get<std::string>()));
  } else if (type == "gl") {
    out = Descriptor::general_linear(j.at("deg").get<std::uint32_t>(),
                                     BigInt(j.at("q").get<std::string>()));
  } else if (type == "prod") {
    std::vector<Descriptor> factors;
    for (const auto& f : j.at("factors")) factors.push_back(descriptor_from_json(f));
    out = Descriptor::direct_product(std::move(factors));
  } else if (type == "semidirect") {
    out = Descriptor::semidirect_product(descriptor_from_json(j.at("normal")),
                                         descriptor_from_json(j.at("acting")));
  } else if (type == "power") {
    out = Descriptor::power(descriptor_from_json(j.at("base")),
                            BigInt(j.at("e").get<std::string>()));
  } else {
    fail(errc::invalid_argument, "unknown descriptor node type: " + type);
  }
  if (j.contains("asserted_exponent")) {
    out.set_asserted_exponent(BigInt(j.at("asserted_exponent").get<std::string>()));
  }
  return out;
}

ordered_json to_json(const UnitCensus& census, bool include_timing) {
  ordered_json j;
  j["schema"] = "grw.census.v1";
  j["p"] = census.p;
  j["k"] = census.k;
  j["family"] = family_name(census.family);
  j["n"] = census.n;
  j["mode"] = census.exhaustive ? "exhaustive" : "sampled";
  j["seed"] = census.seed;
  if (census.exhaustive) {
    j["states"] = census.total;
    j["unit_count"] = census.hits;
  } else {
    j["samples"] = census.total;
    j["hits"] = census.hits;
    j["std_error"] = census.std_error;
  }
  j["estimated_fraction"] = census.estimated_fraction;
  if (include_timing) j["elapsed_seconds"] = census.elapsed_seconds;
  return j;
}

ordered_json to_json(const SubgroupReport& rep) {
  ordered_json j;
  j["name"] = rep.name;
  j["predicted_order"] = rep.predicted_order.str();
  j["verified_count"] = rep.verified_count.str();
  j["mode"] = rep.exhaustive ? "exhaustive" : "sampled";
  j["all_units"] = rep.all_units;
  j["closure_ok"] = rep.closure_ok;
  j["is_abelian"] = rep.is_abelian;
  j["exponent"] = rep.exponent.str();
  j["pass"] = rep.pass;
  if (!rep.detail.empty()) j["detail"] = rep.detail;
  return j;
}

ordered_json to_json(const ProofSubgroups& rep) {
  ordered_json j;
  j["subgroup"] = to_json(rep.t_or_s);
  j["intersection"] = to_json(rep.intersection);
  if (rep.w_order) j["w_order"] = rep.w_order->str();
  j["w_found"] = rep.w_found;
  j["trivial_meet"] = rep.trivial_meet;
  j["product_checked"] = rep.product_checked;
  j["product_covers_v"] = rep.product_covers_v;
  j["normalizes"] = rep.normalizes;
  j["conj_checked"] = rep.conj_checked;
  j["conj_mode"] = rep.conj_exhaustive ? "exhaustive" : "sampled";
  j["pass"] = rep.pass;
  if (!rep.detail.empty()) j["detail"] = rep.detail;
  return j;
}

ordered_json to_json(const SplitReport& rep) {
  ordered_json j;
  j["pass"] = rep.pass;
  j["mode"] = rep.exhaustive ? "exhaustive" : "sampled";
  j["units_checked"] = rep.units_checked;
  if (!rep.witness.empty()) j["witness"] = rep.witness;
  return j;
}

ordered_json to_json(const RadicalReport& rep) {
  ordered_json j;
  j["dim"] = rep.dim;
  j["expected_dim"] = rep.expected_dim;
  if (rep.nilpotency_index) {
    j["nilpotency_index"] = *rep.nilpotency_index;
  } else {
    j["nilpotency_index"] = nullptr;
  }
  j["quotient_dim"] = rep.quotient_dim;
  j["expected_quotient_dim"] = rep.expected_quotient_dim;
  j["pass"] = rep.pass;
  return j;
}

ordered_json to_json(const SelftestReport& rep) {
  ordered_json j;
  j["schema"] = "grw.selftest.v1";
  ordered_json checks = ordered_json::array();
  for (const auto& c : rep.checks) {
    checks.push_back(ordered_json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  j["checks"] = std::move(checks);
  j["pass"] = rep.all_pass();
  return j;
}

}  // namespace grw
