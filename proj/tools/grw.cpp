// grw: group-ring workbench front door.
//
// Subcommands: decompose, structure, census, verify, selftest. Text output
// renders descriptors in ASCII (x for direct, |x for semidirect products);
// JSON output is deterministic for a fixed configuration and seed (timings
// are opt-in via --timings).

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "grw/oracle.hpp"
#include "grw/selftest.hpp"
#include "grw/serialize.hpp"
#include "grw/unitstruct.hpp"

namespace fs = std::filesystem;
using namespace grw;

namespace {

constexpr std::uint64_t kDefaultCap = 531441;  // 3^12
constexpr std::uint64_t kDefaultSamples = 100000;
constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

struct CommonArgs {
  std::string family = "q12";
  std::uint64_t p = 2;
  std::uint32_t k = 1;
  std::uint64_t n = 1;
  std::string format = "text";
  bool timings = false;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_family = true) {
  if (with_family) {
    cmd->add_option("--family", args.family, "group family: q12, d12, c4, c2xc2, cn")
        ->default_val(args.family);
  }
  cmd->add_option("--p", args.p, "field characteristic (prime)")->default_val(args.p);
  cmd->add_option("--k", args.k, "field extension degree")->default_val(args.k);
  cmd->add_option("--n", args.n, "auxiliary cyclic order n")->default_val(args.n);
  cmd->add_option("--format", args.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_val(args.format);
  cmd->add_flag("--timings", args.timings, "include elapsed time in JSON output");
}

GroupFamily parse_family(const std::string& name) {
  const auto fam = family_from_name(name);
  if (!fam || *fam == GroupFamily::generic) {
    fail(errc::invalid_argument, "unknown family: " + name);
  }
  return *fam;
}

unsigned env_threads() {
  if (const char* v = std::getenv("GRW_THREADS")) {
    const long t = std::strtol(v, nullptr, 10);
    if (t > 0) return static_cast<unsigned>(t);
  }
  return 0;  // auto
}

std::string field_label(std::uint32_t d) { return d == 1 ? "F" : "F_" + std::to_string(d); }

std::string decomposition_text(const Decomposition& dec) {
  std::string out;
  for (const auto& c : dec.components) {
    if (!out.empty()) out += " + ";
    std::string piece = c.m == 1 ? field_label(c.d)
                                 : "M(" + std::to_string(c.m) + ", " + field_label(c.d) + ")";
    if (c.e > 1) piece += "^" + std::to_string(c.e);
    out += piece;
  }
  if (out.empty()) out = "0";
  return out;
}

std::string group_label(GroupFamily family, std::uint64_t n) {
  const std::string aux = n > 1 ? "C" + std::to_string(n) + " x " : "";
  switch (family) {
    case GroupFamily::q12: return aux + "Q12";
    case GroupFamily::d12: return aux + "D12";
    case GroupFamily::c4: return aux + "C4";
    case GroupFamily::c2xc2: return aux + "C2^2";
    case GroupFamily::cyclic: return "C" + std::to_string(n);
    default: return "?";
  }
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------

int run_decompose(const CommonArgs& args) {
  const GroupFamily fam = parse_family(args.family);
  Decomposition dec;
  if (fam == GroupFamily::q12 || fam == GroupFamily::d12) {
    dec = product_decompose(fam, args.p, args.k, args.n);
  } else if (fam == GroupFamily::cyclic) {
    dec = cyclic_decompose(args.n, args.p, args.k);
  } else {
    fail(errc::invalid_argument, "decompose supports families q12, d12 and cn");
  }
  if (args.format == "json") {
    emit(to_json(dec));
  } else {
    std::cout << dec.algebra << " / J: " << decomposition_text(dec)
              << ", radical_dim " << dec.radical_dim << "\n";
  }
  return 0;
}

int run_structure(const CommonArgs& args) {
  const GroupFamily fam = parse_family(args.family);
  std::optional<UnitStructure> us;
  if (fam == GroupFamily::q12) {
    us = unit_structure_q12(args.p, args.k, args.n);
  } else if (fam == GroupFamily::d12) {
    us = unit_structure_d12(args.p, args.k, args.n);
  } else if (fam == GroupFamily::c4 || fam == GroupFamily::c2xc2) {
    if (args.p != 3) {
      fail(errc::unsupported_case,
           "closed forms for the auxiliary families are stated at characteristic 3");
    }
    us = UnitStructure{aux_structure_char3(args.k, args.n,
                                           fam == GroupFamily::c4 ? AuxKind::c4 : AuxKind::c2xc2),
                       std::nullopt};
  } else {
    // cn: characteristic dividing the order, n = p^m
    std::uint64_t m = 0, rest = args.n;
    while (rest % args.p == 0) {
      rest /= args.p;
      ++m;
    }
    if (rest != 1 || m == 0) {
      fail(errc::unsupported_case,
           "structure --family cn needs n to be a positive power of p");
    }
    us = UnitStructure{cyclic_ppower_units(args.p, args.k, static_cast<std::uint32_t>(m)),
                       std::nullopt};
  }

  const DescriptorEval ev = evaluate(us->descriptor);
  if (args.format == "json") {
    ordered_json j;
    j["schema"] = "grw.structure.v1";
    j["family"] = family_name(fam);
    j["p"] = args.p;
    j["k"] = args.k;
    j["n"] = args.n;
    j["group"] = group_label(fam, args.n);
    j["descriptor"] = to_json(us->descriptor);
    j["text"] = to_text(us->descriptor);
    j["order"] = ev.order.str();
    j["is_abelian"] = ev.is_abelian;
    if (ev.exponent) j["exponent"] = ev.exponent->str();
    if (ev.abelian_invariants) {
      ordered_json inv = ordered_json::array();
      for (const auto& d : *ev.abelian_invariants) inv.push_back(d.str());
      j["abelian_invariants"] = std::move(inv);
    }
    if (us->v_part) {
      j["v_part"] = ordered_json{{"order", us->v_part->order.str()},
                                 {"exponent", us->v_part->exponent.str()}};
      j["unit_count"] = predicted_unit_count(*us).str();
    }
    emit(j);
  } else {
    if (us->v_part) {
      std::cout << "U(F(" << group_label(fam, args.n) << "))/V = " << to_text(us->descriptor)
                << ", order " << ev.order.str() << "\n";
      std::cout << "V: order " << us->v_part->order.str() << ", exponent "
                << us->v_part->exponent.str() << "\n";
      std::cout << "|U| = " << predicted_unit_count(*us).str() << "\n";
    } else {
      std::cout << to_text(us->descriptor) << ", order " << ev.order.str() << "\n";
    }
  }
  return 0;
}

struct CensusArgs {
  std::string mode = "exhaustive";
  std::uint64_t samples = kDefaultSamples;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t cap = kDefaultCap;
};

int run_census(const CommonArgs& args, const CensusArgs& cargs) {
  const GroupFamily fam = parse_family(args.family);
  CensusOptions opts;
  opts.exhaustive = cargs.mode == "exhaustive";
  opts.samples = cargs.samples;
  opts.seed = cargs.seed;
  opts.cap = cargs.cap;
  opts.threads = env_threads();
  const UnitCensus census = count_units(args.p, args.k, fam, args.n, opts);
  if (args.format == "json") {
    emit(to_json(census, args.timings));
  } else {
    std::printf("census U(F(%s)) over GF(%llu^%u): ", group_label(fam, args.n).c_str(),
                static_cast<unsigned long long>(args.p), args.k);
    if (census.exhaustive) {
      std::printf("%llu units / %llu states, fraction %.6f",
                  static_cast<unsigned long long>(census.hits),
                  static_cast<unsigned long long>(census.total), census.estimated_fraction);
    } else {
      std::printf("%llu hits / %llu samples, fraction %.6f +- %.6f (seed 0x%llx)",
                  static_cast<unsigned long long>(census.hits),
                  static_cast<unsigned long long>(census.total), census.estimated_fraction,
                  census.std_error, static_cast<unsigned long long>(census.seed));
    }
    std::printf(", %.3f s\n", census.elapsed_seconds);
  }
  return 0;
}

// one named sub-check of the verify pipeline
struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

int run_verify(const CommonArgs& args, const CensusArgs& cargs) {
  const GroupFamily fam = parse_family(args.family);
  std::vector<VerifyCheck> checks;
  auto add = [&](std::string name, bool pass, std::string detail) {
    checks.push_back(VerifyCheck{std::move(name), pass, std::move(detail)});
  };

  CensusOptions copts;
  copts.samples = cargs.samples;
  copts.seed = cargs.seed;
  copts.cap = cargs.cap;
  copts.threads = env_threads();

  BigInt predicted = 0;
  std::optional<UnitStructure> us;
  if (fam == GroupFamily::q12 || fam == GroupFamily::d12) {
    us = fam == GroupFamily::q12 ? unit_structure_q12(args.p, args.k, args.n)
                                 : unit_structure_d12(args.p, args.k, args.n);
    predicted = predicted_unit_count(*us);
  } else if (fam == GroupFamily::c4 || fam == GroupFamily::c2xc2) {
    if (args.p != 3) fail(errc::unsupported_case, "verify for c4/c2xc2 runs at p = 3");
    predicted = aux_structure_char3(args.k, args.n,
                                    fam == GroupFamily::c4 ? AuxKind::c4 : AuxKind::c2xc2)
                    .order();
  } else {
    std::uint64_t m = 0, rest = args.n;
    while (rest % args.p == 0) {
      rest /= args.p;
      ++m;
    }
    if (rest != 1 || m == 0) {
      fail(errc::unsupported_case, "verify --family cn needs n to be a positive power of p");
    }
    predicted = cyclic_ppower_units(args.p, args.k, static_cast<std::uint32_t>(m)).order();
  }

  // census vs theorem order
  const std::uint32_t dim = static_cast<std::uint32_t>(
      (fam == GroupFamily::q12 || fam == GroupFamily::d12) ? 12 * args.n
      : fam == GroupFamily::cyclic                         ? args.n
                                                           : 4 * args.n);
  BigInt states = bigint_pow(bigint_pow(BigInt(args.p), args.k), dim);
  if (states <= copts.cap) {
    copts.exhaustive = true;
    const UnitCensus census = count_units(args.p, args.k, fam, args.n, copts);
    add("census-exact", BigInt(census.hits) == predicted,
        "units " + std::to_string(census.hits) + ", theorem " + predicted.str());
  } else {
    copts.exhaustive = false;
    const UnitCensus census = count_units(args.p, args.k, fam, args.n, copts);
    const double exact_fraction =
        predicted.convert_to<double>() / states.convert_to<double>();
    const double dev = std::abs(census.estimated_fraction - exact_fraction);
    std::ostringstream os;
    os << "fraction " << census.estimated_fraction << " vs " << exact_fraction << " (3se "
       << 3.0 * census.std_error << ", seed 0x" << std::hex << census.seed << ")";
    add("census-sampled-3se", dev <= 3.0 * census.std_error, os.str());
  }

  if ((fam == GroupFamily::q12 || fam == GroupFamily::d12) && args.p == 3) {
    SubgroupOptions sopts;
    sopts.seed = cargs.seed;
    const SubgroupReport v = v_subgroup(args.k, fam, args.n, sopts);
    add("v-subgroup", v.pass,
        "|V| = " + v.verified_count.str() + " (predicted " + v.predicted_order.str() +
            "), exponent " + v.exponent.str());
    const SubgroupReport cv = cv_subgroup(args.k, fam, args.n, sopts);
    add("centralizer", cv.pass,
        "order " + cv.verified_count.str() + ", abelian " + (cv.is_abelian ? "yes" : "no"));
    const ProofSubgroups ps = proof_subgroups(args.k, fam, args.n, sopts);
    add("step2-subgroups", ps.pass,
        ps.t_or_s.name + " order " + ps.t_or_s.verified_count.str() + ", conj pairs " +
            std::to_string(ps.conj_checked));
    auto grp = Group::make(GroupSpec{fam, static_cast<std::uint32_t>(args.n)});
    const GroupElem kgen = fam == GroupFamily::q12 ? grp->gen_x()
                                                   : grp->mul(grp->gen_x(), grp->gen_x());
    const SplitReport split = verify_split(args.p, args.k, fam, args.n, {kgen}, sopts);
    add("split", split.pass,
        (split.exhaustive ? "exhaustive, " : "sampled, ") +
            std::to_string(split.units_checked) + " units" +
            (split.witness.empty() ? "" : "; " + split.witness));
  }

  if ((fam == GroupFamily::q12 || fam == GroupFamily::d12) && args.p > 3) {
    const RadicalReport rad = radical_verify(args.p, args.k, fam, args.n);
    add("radical", rad.pass,
        "dim " + std::to_string(rad.dim) + " (expected " + std::to_string(rad.expected_dim) +
            "), quotient " + std::to_string(rad.quotient_dim));
    const Decomposition dec = product_decompose(fam, args.p, args.k, args.n);
    add("decomposition-dimensions", dec.dimension() + dec.radical_dim == 12 * args.n,
        decomposition_text(dec) + ", radical_dim " + std::to_string(dec.radical_dim));
    const CaseInput ci = CaseInput::make(args.p, args.k, args.n);
    if (ci.r > 0) {
      auto grp = Group::make(GroupSpec{fam, static_cast<std::uint32_t>(args.n)});
      SubgroupOptions sopts;
      sopts.seed = cargs.seed;
      const SplitReport split =
          verify_split(args.p, args.k, fam, args.n, {grp->pow(grp->gen_z(), ci.s)}, sopts);
      add("split", split.pass,
          (split.exhaustive ? "exhaustive, " : "sampled, ") +
              std::to_string(split.units_checked) + " units" +
              (split.witness.empty() ? "" : "; " + split.witness));
    }
  }

  bool all = true;
  for (const auto& c : checks) all = all && c.pass;
  if (args.format == "json") {
    ordered_json j;
    j["schema"] = "grw.verify.v1";
    j["family"] = family_name(fam);
    j["p"] = args.p;
    j["k"] = args.k;
    j["n"] = args.n;
    j["predicted_unit_count"] = predicted.str();
    ordered_json arr = ordered_json::array();
    for (const auto& c : checks) {
      arr.push_back(ordered_json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    j["checks"] = std::move(arr);
    j["pass"] = all;
    emit(j);
  } else {
    std::cout << "verify U(F(" << group_label(fam, args.n) << ")) over GF(" << args.p << "^"
              << args.k << "), theorem order " << predicted.str() << "\n";
    for (const auto& c : checks) {
      std::cout << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name << ": " << c.detail
                << "\n";
    }
    std::cout << (all ? "verify: all checks passed" : "verify: MISMATCH") << "\n";
  }
  return all ? 0 : 1;
}

// Golden files are self-describing: {"command": ..., config..., "expected": {...}}.
int check_golden_file(const fs::path& path, std::vector<VerifyCheck>& checks) {
  std::ifstream in(path);
  if (!in) {
    checks.push_back(VerifyCheck{path.filename().string(), false, "cannot open"});
    return 1;
  }
  ordered_json spec = ordered_json::parse(in);
  const std::string command = spec.at("command").get<std::string>();
  const GroupFamily fam = parse_family(spec.at("family").get<std::string>());
  const std::uint64_t p = spec.at("p").get<std::uint64_t>();
  const std::uint32_t k = spec.at("k").get<std::uint32_t>();
  const std::uint64_t n = spec.at("n").get<std::uint64_t>();
  ordered_json actual;
  if (command == "structure") {
    const UnitStructure us = fam == GroupFamily::q12 ? unit_structure_q12(p, k, n)
                                                     : unit_structure_d12(p, k, n);
    actual = to_json(us.descriptor);
  } else if (command == "decompose") {
    actual = to_json(product_decompose(fam, p, k, n));
  } else if (command == "census") {
    CensusOptions opts;
    opts.exhaustive = spec.value("mode", "exhaustive") == std::string("exhaustive");
    opts.samples = spec.value("samples", kDefaultSamples);
    opts.seed = spec.value("seed", kDefaultSeed);
    opts.threads = env_threads();
    actual = to_json(count_units(p, k, fam, n, opts), /*include_timing=*/false);
  } else {
    checks.push_back(VerifyCheck{path.filename().string(), false, "unknown command " + command});
    return 1;
  }
  const bool same = actual == spec.at("expected");
  checks.push_back(VerifyCheck{path.filename().string(), same,
                               same ? "byte-identical" : "regenerated output differs"});
  return same ? 0 : 1;
}

int run_selftest_cmd(std::uint64_t seed, const std::string& golden_dir,
                     const std::string& format) {
  const SelftestReport rep = run_selftest(seed);
  std::vector<VerifyCheck> golden_checks;
  if (!golden_dir.empty()) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(golden_dir)) {
      if (entry.path().extension() == ".json") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) check_golden_file(f, golden_checks);
  }
  bool all = rep.all_pass();
  for (const auto& c : golden_checks) all = all && c.pass;
  if (format == "json") {
    ordered_json j = to_json(rep);
    if (!golden_checks.empty()) {
      ordered_json arr = ordered_json::array();
      for (const auto& c : golden_checks) {
        arr.push_back(ordered_json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      }
      j["golden"] = std::move(arr);
      j["pass"] = all;
    }
    emit(j);
  } else {
    for (const auto& c : rep.checks) {
      std::cout << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name << ": " << c.detail
                << "\n";
    }
    for (const auto& c : golden_checks) {
      std::cout << "  [" << (c.pass ? "pass" : "FAIL") << "] golden " << c.name << ": "
                << c.detail << "\n";
    }
    std::cout << (all ? "selftest: all checks passed" : "selftest: FAILURES") << "\n";
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"group-ring unit-structure workbench"};
  app.require_subcommand(1);

  CommonArgs dec_args, str_args, cen_args, ver_args;
  CensusArgs cen_extra, ver_extra;

  CLI::App* dec = app.add_subcommand("decompose", "Wedderburn decomposition of FG/J(FG)");
  add_common(dec, dec_args);

  CLI::App* str = app.add_subcommand("structure", "predicted unit-group structure");
  add_common(str, str_args);

  CLI::App* cen = app.add_subcommand("census", "brute-force unit census");
  add_common(cen, cen_args);
  cen->add_option("--mode", cen_extra.mode, "exhaustive or sampled")
      ->check(CLI::IsMember({"exhaustive", "sampled"}))
      ->default_val("exhaustive");
  cen->add_option("--samples", cen_extra.samples, "sample count (sampled mode)")
      ->default_val(kDefaultSamples);
  cen->add_option("--seed", cen_extra.seed, "RNG seed")->default_val(kDefaultSeed);
  cen->add_option("--cap", cen_extra.cap, "exhaustive state cap")->default_val(kDefaultCap);

  CLI::App* ver = app.add_subcommand("verify", "full pipeline: structure vs census vs reports");
  add_common(ver, ver_args);
  ver->add_option("--samples", ver_extra.samples, "sample count for sampled checks")
      ->default_val(kDefaultSamples);
  ver->add_option("--seed", ver_extra.seed, "RNG seed")->default_val(kDefaultSeed);
  ver->add_option("--cap", ver_extra.cap, "exhaustive state cap")->default_val(kDefaultCap);

  std::uint64_t selftest_seed = kDefaultSeed;
  std::string golden_dir;
  std::string selftest_format = "text";
  CLI::App* self = app.add_subcommand("selftest", "property suites and golden files");
  self->add_option("--seed", selftest_seed, "RNG seed")->default_val(kDefaultSeed);
  self->add_option("--golden-dir", golden_dir, "directory of golden JSON files");
  self->add_option("--format", selftest_format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_val("text");

  CLI11_PARSE(app, argc, argv);

  try {
    if (dec->parsed()) return run_decompose(dec_args);
    if (str->parsed()) return run_structure(str_args);
    if (cen->parsed()) return run_census(cen_args, cen_extra);
    if (ver->parsed()) return run_verify(ver_args, ver_extra);
    if (self->parsed()) return run_selftest_cmd(selftest_seed, golden_dir, selftest_format);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
