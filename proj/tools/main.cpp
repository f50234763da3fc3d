// rimforge: knot groups, cyclic branched covers, twisted rim surgery
// assemblies and surface-group realization checks, from the command line.
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "rimforge/alexander.hpp"
#include "rimforge/report.hpp"
#include "rimforge/surgery.hpp"
#include "rimforge/symplectic.hpp"
#include "rimforge/text.hpp"

using namespace rimforge;

namespace {

struct Options {
  std::string format = "text";
  int max_cosets = 100000;
  int tietze_budget = 20000;
  bool timings = false;
};

Budget make_budget(const Options& o) {
  Budget b;
  b.max_cosets = o.max_cosets;
  b.tietze_moves = o.tietze_budget;
  return b;
}

int default_max_cosets() {
  if (const char* env = std::getenv("RIMFORGE_MAX_COSETS")) {
    try {
      int v = std::stoi(env);
      if (v > 1) return v;
    } catch (...) {
    }
  }
  return 100000;
}

// splits "[(knot,m),(knot,m)]" respecting nested parens and brackets
std::vector<std::pair<KnotSpec, long>> parse_steps(const std::string& text) {
  std::vector<std::pair<KnotSpec, long>> steps;
  std::size_t i = 0;
  auto skip = [&]() {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto expect = [&](char c) {
    skip();
    if (i >= text.size() || text[i] != c)
      throw error("parse error at offset " + std::to_string(i) + ": expected '" + c +
                  "' in step list");
    ++i;
  };
  expect('[');
  skip();
  if (i < text.size() && text[i] == ']') {
    ++i;
    skip();
    if (i != text.size()) throw error("trailing input after step list");
    return steps;
  }
  while (true) {
    expect('(');
    skip();
    int depth = 0;
    std::size_t start = i;
    while (i < text.size()) {
      char c = text[i];
      if (c == '(' || c == '[') ++depth;
      if (c == ')' || c == ']') {
        if (depth == 0) break;
        --depth;
      }
      if (c == ',' && depth == 0) break;
      ++i;
    }
    if (i >= text.size() || text[i] != ',')
      throw error("parse error at offset " + std::to_string(i) +
                  ": expected ',' between knot and twist count");
    KnotSpec k = parse_knot(text.substr(start, i - start));
    ++i;
    skip();
    std::size_t mstart = i;
    while (i < text.size() && text[i] != ')') ++i;
    if (i >= text.size())
      throw error("parse error at offset " + std::to_string(i) + ": expected ')'");
    long m = std::stol(text.substr(mstart, i - mstart));
    ++i;
    steps.push_back({std::move(k), m});
    skip();
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    break;
  }
  expect(']');
  skip();
  if (i != text.size()) throw error("trailing input after step list");
  return steps;
}

std::string steps_echo(const std::vector<std::pair<KnotSpec, long>>& steps) {
  std::string s = "[";
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (i) s += ",";
    s += "(" + steps[i].first.to_string() + "," + std::to_string(steps[i].second) + ")";
  }
  return s + "]";
}

void put_order(Report& rep, const std::string& key, const Presentation& p,
               const Budget& budget) {
  EnumerationResult er = enumerate_cosets(p, {}, budget.max_cosets);
  if (er.complete()) {
    rep.put(key, static_cast<long>(er.index()));
  } else {
    rep.put(key, "INDETERMINATE");
    rep.status = Report::Status::indeterminate;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"surface-knot group calculus: branched covers, twisted rim "
               "surgery, condition checks and Alexander invariants"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand

  Options opt;
  opt.max_cosets = default_max_cosets();
  app.add_option("--format", opt.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--max-cosets", opt.max_cosets,
                 "coset enumeration budget (env RIMFORGE_MAX_COSETS)")
      ->capture_default_str();
  app.add_option("--tietze-budget", opt.tietze_budget, "simplification move budget")
      ->capture_default_str();
  app.add_flag("--timings", opt.timings,
               "append wall-clock timing (breaks byte-for-byte determinism)");

  auto* bc = app.add_subcommand("branched-cover",
                                "fundamental group of a cyclic branched cover");
  std::string bc_knot;
  int bc_d = 2;
  bool bc_print = false;
  bc->add_option("--knot", bc_knot, "knot spec")->required();
  bc->add_option("--d", bc_d, "cover degree")->required();
  bc->add_flag("--print-presentation", bc_print, "include the presentation");

  auto* rs = app.add_subcommand("rim-surgery",
                                "iterated twisted rim surgery on a surface knot group");
  std::string rs_base, rs_meridian, rs_steps = "[]";
  bool rs_print = false;
  rs->add_option("--base", rs_base, "base group presentation, e.g. \"<u|u^2>\"")
      ->required();
  rs->add_option("--meridian", rs_meridian, "meridian word of the base")->required();
  rs->add_option("--steps", rs_steps, "steps, e.g. \"[(twobridge(5,3),2)]\"");
  rs->add_flag("--print-presentation", rs_print, "include the final presentation");

  auto* al = app.add_subcommand("alexander", "Alexander polynomial and determinant");
  std::string al_knot;
  int al_cover = 0;
  al->add_option("--knot", al_knot, "knot spec")->required();
  al->add_option("--cover-d", al_cover, "also report the d-fold cover homology order");

  auto* di = app.add_subcommand("distinguish",
                                "partition knots by Alexander coefficient multisets");
  std::string di_knots;
  di->add_option("--knots", di_knots, "semicolon-separated knot specs")->required();

  auto* kd = app.add_subcommand("kd", "check condition K_d for a group and gamma");
  std::string kd_group, kd_gamma;
  bool kd_search = false;
  kd->add_option("--group", kd_group, "presentation text")->required();
  kd->add_option("--gamma", kd_gamma, "gamma word")->required();
  kd->add_flag("--search-witnesses", kd_search, "search for commutator witnesses");

  auto* sy = app.add_subcommand("symplectic",
                                "realization pipeline: build and certify the "
                                "surface-complement presentations");
  std::string sy_group, sy_gamma;
  bool sy_print = false;
  sy->add_option("--group", sy_group, "presentation text")->required();
  sy->add_option("--gamma", sy_gamma, "gamma word")->required();
  sy->add_flag("--print-presentations", sy_print, "include all three presentations");

  CLI11_PARSE(app, argc, argv);
  auto t0 = std::chrono::steady_clock::now();

  Report rep;
  Budget budget = make_budget(opt);
  auto emit = [&]() {
    if (opt.timings) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
      rep.put("elapsed-ms", static_cast<long>(ms));
    }
    if (opt.format == "json") {
      std::cout << rep.render_json() << "\n";
    } else {
      std::cout << rep.render_text();
    }
    return rep.exit_code();
  };

  try {
    if (bc->parsed()) {
      rep.command = "branched-cover";
      KnotSpec k = parse_knot(bc_knot);
      rep.put("input.knot", k.to_string());
      rep.put("input.d", static_cast<long>(bc_d));
      BranchedCoverGroup g = branched_cover_group(k, bc_d, budget);
      put_order(rep, "result.order", g.presentation, budget);
      rep.put("result.abelianization", g.presentation.abelianization().to_string());
      rep.put("result.generators", static_cast<long>(g.presentation.ngens()));
      rep.put("result.relators", static_cast<long>(g.presentation.relators().size()));
      if (bc_print) rep.put("result.presentation", print_presentation(g.presentation));
    } else if (rs->parsed()) {
      rep.command = "rim-surgery";
      Presentation base_p = parse_presentation(rs_base);
      Word meridian = parse_word(rs_meridian, base_p);
      auto steps = parse_steps(rs_steps);
      rep.put("input.base", print_presentation(base_p));
      rep.put("input.meridian", print_word(meridian, base_p.names()));
      rep.put("input.steps", steps_echo(steps));
      for (const auto& [k, m] : steps) {
        if (k.is_unknot())
          rep.put("warning", "a step knot is the unknot; that step is inert");
      }
      SurfaceKnotGroup base = surface_knot_base(base_p, meridian);
      SurfaceKnotGroup out = iterated_surgery(base, steps, budget);
      put_order(rep, "result.order", out.presentation, budget);
      rep.put("result.abelianization", out.presentation.abelianization().to_string());
      rep.put("result.divisibility", static_cast<long>(out.divisibility));
      rep.put("result.certification-tier", tier_name(out.certification.tier));
      rep.put("result.certification-detail", out.certification.detail);
      rep.put("result.trace", out.provenance);
      if (rs_print)
        rep.put("result.presentation", print_presentation(out.presentation));
    } else if (al->parsed()) {
      rep.command = "alexander";
      KnotSpec k = parse_knot(al_knot);
      rep.put("input.knot", k.to_string());
      AlexNormalForm nf = alexander_polynomial(k);
      rep.put("result.polynomial", nf.poly.to_string());
      rep.put("result.determinant", knot_determinant(k));
      rep.put("result.palindromic", nf.palindromic);
      if (al_cover >= 2) {
        rep.put("input.cover-d", static_cast<long>(al_cover));
        CoverOrder c = cyclic_cover_homology_order(k, al_cover);
        if (c.finite) {
          rep.put("result.cover-homology-order", c.order);
        } else {
          rep.put("result.cover-homology-order", "INFINITE");
        }
      }
    } else if (di->parsed()) {
      rep.command = "distinguish";
      std::vector<KnotSpec> knots;
      std::size_t start = 0;
      while (start <= di_knots.size()) {
        std::size_t semi = di_knots.find(';', start);
        std::string piece = di_knots.substr(
            start, semi == std::string::npos ? std::string::npos : semi - start);
        if (!piece.empty()) knots.push_back(parse_knot(piece));
        if (semi == std::string::npos) break;
        start = semi + 1;
      }
      if (knots.empty()) throw error("no knots given");
      std::vector<std::string> echo;
      std::vector<AlexNormalForm> polys;
      for (const KnotSpec& k : knots) {
        echo.push_back(k.to_string());
        polys.push_back(alexander_polynomial(k));
      }
      rep.put("input.knots", echo);
      auto classes = fs_distinguish(polys);
      rep.put("result.classes", static_cast<long>(classes.size()));
      for (std::size_t c = 0; c < classes.size(); ++c) {
        std::vector<std::string> members;
        for (int idx : classes[c]) members.push_back(echo[idx]);
        rep.put("result.class-" + std::to_string(c + 1), members);
      }
      rep.put("result.assumption", kSmoothDistinctionAssumption);
    } else if (kd->parsed()) {
      rep.command = "kd";
      Presentation g = parse_presentation(kd_group);
      Word gamma = parse_word(kd_gamma, g);
      rep.put("input.group", print_presentation(g));
      rep.put("input.gamma", print_word(gamma, g.names()));
      KdResult r = check_kd(g, gamma, budget);
      switch (r.status) {
        case KdResult::Status::holds:
          rep.put("result.kd", "HOLDS(" + r.d.str() + ")");
          break;
        case KdResult::Status::fails:
          rep.put("result.kd", "FAILS");
          rep.put("result.reason", r.reason);
          break;
        case KdResult::Status::indeterminate:
          rep.put("result.kd", "INDETERMINATE");
          rep.put("result.reason", r.reason);
          rep.status = Report::Status::indeterminate;
          break;
      }
      if (kd_search && r.holds()) {
        int d = static_cast<int>(r.d.convert_to<long>());
        WitnessResult w = find_commutator_witnesses(g, gamma, d, budget);
        if (w.found()) {
          std::vector<std::string> ws;
          for (const auto& [v, u] : w.witnesses)
            ws.push_back("[" + print_word(v, g.names()) + "," +
                         print_word(u, g.names()) + "]");
          rep.put("result.witnesses", ws);
          rep.put("result.witness-count", static_cast<long>(w.witnesses.size()));
        } else {
          rep.put("result.witnesses", "INDETERMINATE");
          rep.put("result.reason", w.note);
          rep.status = Report::Status::indeterminate;
        }
      }
    } else if (sy->parsed()) {
      rep.command = "symplectic";
      Presentation g = parse_presentation(sy_group);
      Word gamma = parse_word(sy_gamma, g);
      rep.put("input.group", print_presentation(g));
      rep.put("input.gamma", print_word(gamma, g.names()));
      auto kdw = make_kd_witness(g, gamma, budget);
      if (!kdw) {
        rep.put("result.kd", "INDETERMINATE");
        rep.status = Report::Status::indeterminate;
      } else {
        rep.put("result.kd", "HOLDS(" + std::to_string(kdw->d) + ")");
        rep.put("result.witness-count",
                static_cast<long>(kdw->commutator_witnesses.size()));
        SympPipelineResult out = build_symplectic_pipeline(*kdw, budget);
        rep.put("result.xd.generators", static_cast<long>(out.xd.ngens()));
        rep.put("result.xd.relators", static_cast<long>(out.xd.relators().size()));
        put_order(rep, "result.md.order", out.md, budget);
        rep.put("result.md.abelianization", out.md.abelianization().to_string());
        rep.put("result.md.certification-tier", tier_name(out.md_certification.tier));
        rep.put("result.md.certification-detail", out.md_certification.detail);
        put_order(rep, "result.m.order", out.m, budget);
        rep.put("result.m.certification-tier", tier_name(out.m_certification.tier));
        for (const std::string& n : out.notes) rep.put("note", n);
        if (sy_print) {
          rep.put("result.xd.presentation", print_presentation(out.xd));
          rep.put("result.md.presentation", print_presentation(out.md));
          rep.put("result.m.presentation", print_presentation(out.m));
        }
      }
    }
  } catch (const error& e) {
    rep.put("error", std::string(e.what()));
    rep.status = Report::Status::err;
  } catch (const std::exception& e) {
    rep.put("error", std::string("internal: ") + e.what());
    rep.status = Report::Status::err;
  }
  return emit();
}
