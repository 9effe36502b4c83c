// Copyright (c) 2026 The semibound authors.
// SPDX-License-Identifier: Apache-2.0
//
// semibound: numerical semigroups, the order bound on the minimum distance
// of one-point evaluation codes, Feng-Rao improved-code comparisons, and
// exhaustive verification of the underlying theorems.
//
// Exit codes: 0 success, 2 domain/usage error, 3 verification failure.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "semibound/classify.hpp"
#include "semibound/codes.hpp"
#include "semibound/enumerate.hpp"
#include "semibound/io.hpp"
#include "semibound/nu.hpp"
#include "semibound/reconstruct.hpp"
#include "semibound/semigroup.hpp"

namespace sb = semibound;
using nlohmann::json;
using sb::Int;

namespace {

json landmarks_json(const sb::NumericalSemigroup& s) {
  sb::Landmarks lm = s.landmarks();
  json j = {{"genus", lm.genus},
            {"conductor", lm.conductor},
            {"multiplicity", lm.multiplicity}};
  j["dominant"] = lm.dominant ? json(*lm.dominant) : json(nullptr);
  j["subconductor"] = lm.subconductor ? json(*lm.subconductor) : json(nullptr);
  j["subdominant"] = lm.subdominant ? json(*lm.subdominant) : json(nullptr);
  return j;
}

std::string join(const std::vector<Int>& v) {
  std::string out;
  for (Int x : v) {
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  }
  return out;
}

void print_optional(const char* name, const std::optional<Int>& v) {
  std::cout << name << ": " << (v ? std::to_string(*v) : "absent") << "\n";
}

int run_info(const sb::NumericalSemigroup& s, bool as_json) {
  if (as_json) {
    json j = sb::semigroup_to_json(s);
    j["members_below_conductor"] = s.members_below_conductor();
    j["landmarks"] = landmarks_json(s);
    j["apery_set"] = s.apery_set();
    j["minimal_generators"] = s.minimal_generators();
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  sb::Landmarks lm = s.landmarks();
  std::cout << "semigroup: " << sb::member_string(s) << "\n";
  std::cout << "gaps: " << join(s.gaps()) << "\n";
  std::cout << "conductor: " << lm.conductor << "\n";
  std::cout << "genus: " << lm.genus << "\n";
  std::cout << "multiplicity: " << lm.multiplicity << "\n";
  print_optional("dominant", lm.dominant);
  print_optional("subconductor", lm.subconductor);
  print_optional("subdominant", lm.subdominant);
  std::cout << "apery set: " << join(s.apery_set()) << "\n";
  std::cout << "minimal generators: " << join(s.minimal_generators()) << "\n";
  return 0;
}

int run_classify(const sb::NumericalSemigroup& s, bool explain) {
  sb::ClassFlags f = sb::classify(s);
  json j = {{"trivial", f.trivial},
            {"ordinary", f.ordinary},
            {"symmetric", f.symmetric},
            {"pseudo_symmetric", f.pseudo_symmetric},
            {"irreducible", f.irreducible},
            {"arf", f.arf},
            {"interval_generated", f.interval_generated},
            {"acute", f.acute},
            {"hyperelliptic", f.hyperelliptic}};
  if (explain) {
    j["landmarks"] = landmarks_json(s);
    auto witness = sb::arf_counterexample(s);
    j["arf_witness"] =
        witness ? json{{"x", witness->first},
                       {"y", witness->second},
                       {"gap", 2 * witness->first - witness->second}}
                : json(nullptr);
    j["symmetric_test"] = {{"conductor", s.conductor()},
                           {"twice_genus", 2 * s.genus()}};
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_nu(const sb::NumericalSemigroup& s, Int upto, bool as_json) {
  if (as_json)
    std::cout << sb::nu_table_json(s, upto).dump(2) << "\n";
  else
    sb::write_nu_table(std::cout, s, upto);
  return 0;
}

int run_order_bound(const sb::NumericalSemigroup& s, Int upto, bool has_upto,
                    bool as_json) {
  sb::NuProfile prof(s);
  if (!has_upto) upto = std::max<Int>(prof.tail_start() - 1, 0);
  auto last = sb::last_nu_decrease(prof);

  json j;
  j["last_nu_decrease"] = last ? json(*last) : json(nullptr);
  if (!sb::is_ordinary(s) && sb::is_acute(s)) {
    sb::AcuteM am = sb::acute_m(s);
    const char* attained = am.attained == sb::MinCase::ViaCPlusCPrime
                               ? "c+c'-2"
                               : am.attained == sb::MinCase::Via2D ? "2d" : "tie";
    j["acute_m"] = {{"index", am.index}, {"attained_by", attained}};
  } else {
    j["acute_m"] = nullptr;
  }
  json rows = json::array();
  for (Int m = 0; m <= upto; ++m)
    rows.push_back({{"m", m}, {"d_ord", sb::d_ord(prof, m)}});
  j["rows"] = rows;

  if (as_json) {
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "last nu-decrease: "
            << (last ? std::to_string(*last) : "none (ordinary)") << "\n";
  if (!j["acute_m"].is_null())
    std::cout << "acute m: " << j["acute_m"]["index"].get<Int>()
              << " (attained by " << j["acute_m"]["attained_by"].get<std::string>()
              << ")\n";
  char line[64];
  std::snprintf(line, sizeof line, "%3s %6s\n", "m", "d_ord");
  std::cout << line;
  for (Int m = 0; m <= upto; ++m) {
    std::snprintf(line, sizeof line, "%3lld %6lld\n", m, sb::d_ord(prof, m));
    std::cout << line;
  }
  return 0;
}

int run_improved(const sb::NumericalSemigroup& s, Int delta, bool as_json) {
  sb::NuProfile prof(s);
  Int m = sb::m_of_delta(prof, delta);
  std::vector<Int> idx = sb::improved_indices(prof, delta);
  Int gain = sb::feng_rao_gain(prof, delta);
  if (as_json) {
    json j = {{"delta", delta},
              {"m_delta", m},
              {"improved_indices", idx},
              {"feng_rao_gain", gain}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "delta: " << delta << "\n";
  std::cout << "m(delta): " << m << "\n";
  std::cout << "improved indices: " << join(idx) << "\n";
  std::cout << "feng-rao gain: " << gain << "\n";
  return 0;
}

int run_reconstruct(const std::string& csv, bool as_json) {
  sb::NuPrefix p{sb::parse_int_list(csv)};
  sb::Reconstruction r = sb::reconstruct_detailed(p);
  if (as_json) {
    json j = sb::semigroup_to_json(r.semigroup);
    j["k"] = r.k < 0 ? json(nullptr) : json(r.k);
    j["genus"] = r.genus;
    j["recovered_conductor"] = r.conductor;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "semigroup: " << sb::member_string(r.semigroup) << "\n";
  std::cout << "gaps: " << join(r.semigroup.gaps()) << "\n";
  std::cout << "k: " << (r.k < 0 ? std::string("none (trivial)") : std::to_string(r.k))
            << "\n";
  std::cout << "genus: " << r.genus << "\n";
  std::cout << "conductor: " << r.conductor << "\n";
  return 0;
}

json report_json(const sb::VerificationReport& r) {
  return {{"suite", sb::suite_name(r.suite)},
          {"gmax", r.gmax},
          {"semigroups_checked", r.semigroups_checked},
          {"checks", r.checks},
          {"failures", r.failures},
          {"seconds", r.seconds},
          {"failure_samples", r.failure_samples}};
}

int run_verify(const std::string& suite_name, Int gmax, Int ceiling,
               bool as_json) {
  std::vector<sb::Suite> suites;
  if (suite_name == "acute") suites = {sb::Suite::AcuteTheorem};
  else if (suite_name == "ordinary") suites = {sb::Suite::OrdinaryTheorem};
  else if (suite_name == "uniqueness") suites = {sb::Suite::NuUniqueness};
  else if (suite_name == "lattice") suites = {sb::Suite::ClassLattice};
  else if (suite_name == "nu-formulas") suites = {sb::Suite::NuFormulas};
  else if (suite_name == "all")
    suites = {sb::Suite::AcuteTheorem, sb::Suite::OrdinaryTheorem,
              sb::Suite::NuUniqueness, sb::Suite::ClassLattice,
              sb::Suite::NuFormulas};
  else
    throw sb::InvalidArgument(
        "unknown suite '" + suite_name +
        "' (expected acute|ordinary|uniqueness|lattice|nu-formulas|all)");

  long long failures = 0;
  json out = json::array();
  for (sb::Suite suite : suites) {
    // "all" clamps each suite to its own default ceiling
    Int g = gmax;
    if (suite_name == "all")
      g = std::min<Int>(g, ceiling > 0 ? ceiling : sb::default_ceiling(suite));
    sb::VerificationReport r = sb::verify(suite, g, ceiling);
    failures += r.failures;
    if (as_json) {
      out.push_back(report_json(r));
    } else {
      std::printf("suite=%-11s gmax=%-3lld semigroups=%-6lld checks=%-9lld "
                  "failures=%-4lld time=%.2fs\n",
                  sb::suite_name(r.suite), r.gmax, r.semigroups_checked,
                  r.checks, r.failures, r.seconds);
      for (const auto& sample : r.failure_samples)
        std::cout << "  failure: " << sample << "\n";
    }
  }
  if (as_json) std::cout << out.dump(2) << "\n";
  return failures == 0 ? 0 : 3;
}

struct CodeSetup {
  sb::NumericalSemigroup semigroup = sb::NumericalSemigroup::trivial();
  sb::Gf2m field = sb::Gf2m(1);
  std::vector<sb::AffinePoint> points;
  std::vector<sb::PoleBasisElement> basis;
};

int run_code(const CodeSetup& setup, const std::string& curve_name, Int delta,
             bool dump_matrix, bool as_json) {
  sb::EvaluationCode code(setup.field, setup.points, setup.basis);
  sb::NuProfile prof(setup.semigroup);

  if (dump_matrix) {
    int e = setup.field.degree();
    const char* fmt = e <= 4 ? "%01x" : e <= 8 ? "%02x" : e <= 12 ? "%03x" : "%04x";
    for (const auto& row : code.rows()) {
      std::string line;
      for (auto el : row) {
        char buf[16];
        std::snprintf(buf, sizeof buf, fmt, el);
        line += buf;
      }
      std::cout << line << "\n";
    }
    return 0;
  }

  Int m = sb::m_of_delta(prof, delta);
  sb::CodeDimensions dims = sb::code_dimensions(code, prof, delta);
  Int d = sb::d_ord(prof, m);
  Int d_phi = sb::refined_order_bound(code, prof, m);

  if (as_json) {
    json j = {{"curve", curve_name},
              {"n", code.length()},
              {"rank_profile_summary",
               {{"rows", code.row_count()},
                {"rank", code.rank()},
                {"first_dependent_row", code.first_dependent_row()}}},
              {"delta", delta},
              {"m_delta", m},
              {"d_ord", d},
              {"d_ord_phi", d_phi},
              {"dims",
               {{"C", dims.dim_C},
                {"Ctilde", dims.dim_Ctilde},
                {"Ctilde_phi", dims.dim_Ctilde_phi}}}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "curve: " << curve_name << "\n";
  std::cout << "points: " << code.length() << "\n";
  std::cout << "rows: " << code.row_count() << ", rank: " << code.rank()
            << ", first dependent row: " << code.first_dependent_row() << "\n";
  std::cout << "delta: " << delta << ", m(delta): " << m << "\n";
  std::cout << "d_ord(C_m): " << d << ", d_ord_phi(C_m): " << d_phi << "\n";
  std::cout << "dim C(delta): " << dims.dim_C
            << ", dim Ctilde(delta): " << dims.dim_Ctilde
            << ", dim Ctilde_phi(delta): " << dims.dim_Ctilde_phi << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical semigroups, order bounds and Feng-Rao improved codes"};
  app.require_subcommand(1);

  std::string spec, csv, suite = "all", curve;
  Int upto = 0, delta = 2, gmax = 12, ceiling = 0, q = 4, r = 2, rows = 0;
  bool as_json = false, explain = false, dump_matrix = false;

  auto* info = app.add_subcommand("info", "invariants of one semigroup");
  info->add_option("spec", spec, "semigroup spec, e.g. gen:4,5")->required();
  info->add_flag("--json", as_json);

  auto* cls = app.add_subcommand("classify", "class flags (JSON)");
  cls->add_option("spec", spec)->required();
  cls->add_flag("--explain", explain, "include witnesses");

  auto* nu_cmd = app.add_subcommand("nu", "(i, lambda_i, nu_i, d_ord) table");
  nu_cmd->add_option("spec", spec)->required();
  nu_cmd->add_option("--upto", upto, "last index printed")->required();
  nu_cmd->add_flag("--json", as_json);

  auto* ob = app.add_subcommand("order-bound", "d_ord values and the last nu-decrease");
  ob->add_option("spec", spec)->required();
  auto* ob_upto = ob->add_option("--upto", upto);
  ob->add_flag("--json", as_json);

  auto* imp = app.add_subcommand("improved", "Feng-Rao improved-code index set");
  imp->add_option("spec", spec)->required();
  imp->add_option("--delta", delta, "designed minimum distance")->required();
  imp->add_flag("--json", as_json);

  auto* rec = app.add_subcommand("reconstruct", "semigroup from a nu-prefix");
  rec->add_option("values", csv, "comma-separated nu values")->required();
  rec->add_flag("--json", as_json);

  auto* ver = app.add_subcommand("verify", "exhaustive theorem verification");
  ver->add_option("--suite", suite,
                  "acute|ordinary|uniqueness|lattice|nu-formulas|all");
  ver->add_option("--gmax", gmax, "genus bound");
  ver->add_option("--ceiling", ceiling, "raise the per-suite genus ceiling");
  ver->add_flag("--json", as_json);

  auto* code = app.add_subcommand("code", "evaluation code on a supported curve");
  code->add_option("curve", curve, "hermitian|normtrace")->required();
  code->add_option("--q", q);
  code->add_option("--r", r, "norm-trace extension degree");
  code->add_option("--delta", delta, "designed minimum distance");
  code->add_option("--rows", rows, "materialized basis rows (default: rank-saturating)");
  code->add_flag("--dump-matrix", dump_matrix, "hex matrix dump instead of summary");
  code->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code_ = app.exit(e);
    return code_ == 0 ? 0 : 2;
  }

  try {
    if (info->parsed()) return run_info(sb::parse_semigroup_spec(spec), as_json);
    if (cls->parsed()) return run_classify(sb::parse_semigroup_spec(spec), explain);
    if (nu_cmd->parsed()) return run_nu(sb::parse_semigroup_spec(spec), upto, as_json);
    if (ob->parsed())
      return run_order_bound(sb::parse_semigroup_spec(spec), upto,
                             ob_upto->count() > 0, as_json);
    if (imp->parsed()) return run_improved(sb::parse_semigroup_spec(spec), delta, as_json);
    if (rec->parsed()) return run_reconstruct(csv, as_json);
    if (ver->parsed()) return run_verify(suite, gmax, ceiling, as_json);
    if (code->parsed()) {
      CodeSetup setup;
      if (curve == "hermitian") {
        sb::HermitianCurve hc(q);
        setup.semigroup = hc.semigroup();
        setup.field = hc.field();
        setup.points = hc.points();
        if (rows <= 0)
          rows = static_cast<Int>(hc.points().size()) + setup.semigroup.genus() + 2;
        setup.basis = hc.pole_basis(rows);
      } else if (curve == "normtrace") {
        sb::NormTraceCurve nt(q, r);
        setup.semigroup = nt.semigroup();
        setup.field = nt.field();
        setup.points = nt.points();
        if (rows <= 0)
          rows = static_cast<Int>(nt.points().size()) + setup.semigroup.genus() + 2;
        setup.basis = nt.pole_basis(rows);
      } else {
        throw sb::InvalidArgument("unknown curve '" + curve +
                                  "' (expected hermitian or normtrace)");
      }
      return run_code(setup, curve, delta, dump_matrix, as_json);
    }
  } catch (const sb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
