// Copyright 2026 The KT Expander Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// kt: build, audit and export KT multiplicity-code graphs.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kt/bipartite_half.hpp"
#include "kt/error.hpp"
#include "kt/expansion.hpp"
#include "kt/guv.hpp"
#include "kt/kt_graph.hpp"
#include "kt/planner.hpp"
#include "kt/report.hpp"
#include "kt/tightness.hpp"

namespace {

constexpr const char* kCapEnv = "KT_ENUMERATION_CAP";

struct Common {
  std::uint64_t p = 0;
  unsigned e = 1;
  std::uint64_t modulus = 0;
  unsigned n = 0;
  unsigned s = 0;
  unsigned workers = 1;
  std::uint64_t cap = kt::kDefaultEnumerationCap;
  std::uint64_t seed = 1;
  std::string out;
};

std::uint64_t default_cap() {
  if (const char* v = std::getenv(kCapEnv)) {
    try {
      return std::stoull(v);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring malformed " << kCapEnv << "=" << v << "\n";
    }
  }
  return kt::kDefaultEnumerationCap;
}

void add_field(CLI::App* app, Common& c) {
  app->add_option("--p", c.p, "field characteristic")->required();
  app->add_option("--e", c.e, "extension degree (GF(2^e) only)");
  app->add_option("--modulus", c.modulus,
                  "GF(2^e) modulus as a bit mask, 0 = default (e=4: 19 = x^4+x+1)");
}

void add_graph(CLI::App* app, Common& c) {
  add_field(app, c);
  app->add_option("--n", c.n, "left vertices are polynomials of degree < n")->required();
  app->add_option("--s", c.s, "number of derivatives beyond the value")->required();
}

void add_run(CLI::App* app, Common& c, bool seeded) {
  app->add_option("--workers", c.workers, "data-parallel workers");
  app->add_option("--cap", c.cap, std::string("enumeration cap (env ") + kCapEnv + ")");
  app->add_option("--out", c.out, "report path (default stdout)");
  if (seeded) app->add_option("--seed", c.seed, "RNG seed");
}

kt::KTParams graph_params(const Common& c) {
  return kt::make_kt_params(kt::Field::make({c.p, c.e, c.modulus}), c.n, c.s);
}

void emit(const Common& c, const kt::Json& report) {
  const std::string text = kt::dump_report(report);
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw std::runtime_error("cannot open " + c.out);
  f << text;
}

std::vector<kt::Poly> left_set(const kt::KTParams& p, const std::vector<std::uint64_t>& ix) {
  std::vector<kt::Poly> out;
  for (std::uint64_t i : ix) out.push_back(kt::left_from_index(p, i));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"KT multiplicity-code graphs: construction and exact expansion audits"};
  app.require_subcommand(1);
  Common c;
  c.cap = default_cap();

  // plan
  auto* plan = app.add_subcommand("plan", "instantiate (h, q, s) and check hypotheses");
  std::string alpha = "1/100", eps_l = "1/100", eps_r = "1/100", preset, delta = "1/2";
  std::uint64_t k_left_plan = 0, n_plan = 0;
  plan->add_option("--alpha", alpha);
  plan->add_option("--eps-left", eps_l);
  plan->add_option("--eps-right", eps_r);
  plan->add_option("--k-left", k_left_plan);
  plan->add_option("--n", n_plan)->required();
  plan->add_option("--preset", preset, "two-sided | non-bipartite (k_L = floor(delta n))");
  plan->add_option("--delta", delta);
  plan->add_option("--out", c.out);

  // build
  auto* build = app.add_subcommand("build", "export the edge list");
  std::string edges_path;
  bool half_export = false;
  add_graph(build, c);
  add_run(build, c, false);
  build->add_option("--edges", edges_path, "edge-list path")->required();
  build->add_flag("--half", half_export, "export the half graph on L instead");

  // verify-left
  auto* vleft = app.add_subcommand("verify-left", "sampled or explicit left audit");
  std::uint64_t k_left = 8, set_size = 8, samples = 1000;
  std::vector<std::uint64_t> set_ix;
  add_graph(vleft, c);
  add_run(vleft, c, true);
  vleft->add_option("--k-left", k_left);
  vleft->add_option("--set-size", set_size);
  vleft->add_option("--samples", samples);
  vleft->add_option("--set", set_ix, "explicit left indices");

  // verify-right
  auto* vright = app.add_subcommand("verify-right", "exhaustive or sampled right audit");
  std::uint64_t kmax = 0, budget = kt::kDefaultAuditBudget, max_size = 10;
  add_graph(vright, c);
  add_run(vright, c, true);
  vright->add_option("--kmax", kmax, "exhaustive audit of all sets of size <= kmax");
  vright->add_option("--budget", budget);
  vright->add_option("--samples", samples, "predictor audit sample count (no --kmax)");
  vright->add_option("--max-size", max_size);
  vright->add_option("--set", set_ix, "explicit right indices");

  // audit-pairs
  auto* pairs = app.add_subcommand("audit-pairs", "common neighbors of all right pairs");
  std::uint64_t crosscheck = 200;
  add_graph(pairs, c);
  add_run(pairs, c, true);
  pairs->add_option("--crosscheck", crosscheck);

  // tightness
  auto* tight = app.add_subcommand("tightness", "witness with (1 - delta/4) expansion");
  std::uint64_t k_witness = 2, y1 = 0, y2 = 1;
  bool structure = false;
  add_graph(tight, c);
  add_run(tight, c, false);
  tight->add_option("--K", k_witness)->required();
  tight->add_option("--y1", y1);
  tight->add_option("--y2", y2);
  tight->add_flag("--structure", structure, "also run the phi/rho/sigma checks");

  // half graph
  auto* hdeg = app.add_subcommand("half-degree", "regularity of the half graph");
  add_graph(hdeg, c);
  add_run(hdeg, c, false);
  auto* hact = app.add_subcommand("half-action", "F_q^* action on the half graph");
  std::string mode = "exhaustive";
  add_graph(hact, c);
  add_run(hact, c, true);
  hact->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "sampled"}));
  hact->add_option("--samples", samples);
  auto* hexp = app.add_subcommand("half-expand", "max-degree expansion of the half graph");
  add_graph(hexp, c);
  add_run(hexp, c, true);
  hexp->add_option("--k-left", k_left);
  hexp->add_option("--set-size", set_size);
  hexp->add_option("--samples", samples);
  hexp->add_option("--set", set_ix, "explicit left indices");

  // guv-hist
  auto* guv = app.add_subcommand("guv-hist", "right-degree histogram of the GUV graph");
  unsigned m = 2;
  std::uint64_t h = 2, max_scan = UINT64_MAX;
  std::string z_text;
  bool scan = false, allow_reducible = false;
  guv->set_help_flag("--help", "print this help message and exit");
  add_field(guv, c);
  guv->add_option("--n", c.n)->required();
  guv->add_option("--m", m)->required();
  guv->add_option("--h", h)->required();
  guv->add_option("--z", z_text, "coefficients of z, constant first (default: scan)");
  guv->add_flag("--scan", scan, "scan monic irreducibles until the target histogram");
  guv->add_option("--max-scan", max_scan);
  guv->add_flag("--allow-reducible", allow_reducible, "accept a reducible z");
  add_run(guv, c, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help exits 0; every other parse failure is a usage error.
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    kt::Json report;
    bool pass = true;
    if (plan->parsed()) {
      kt::PlanInput in;
      if (!preset.empty()) {
        in = kt::plan_preset(preset, n_plan, kt::parse_rational(delta));
      } else {
        in = {kt::parse_rational(alpha), kt::parse_rational(eps_l),
              kt::parse_rational(eps_r), k_left_plan, n_plan};
      }
      const kt::PlanOutput outp = kt::plan_parameters(in);
      kt::Json params;
      params["preset"] = preset.empty() ? kt::Json() : kt::Json(preset);
      report = kt::make_report("plan", params, kt::to_json(outp), true,
                               {"logarithms in hypotheses are base 2"});
    } else if (build->parsed()) {
      const kt::KTParams p = graph_params(c);
      std::ofstream f(edges_path);
      if (!f) throw std::runtime_error("cannot open " + edges_path);
      kt::Json res;
      if (half_export) {
        kt::KTGraph g(p, c.cap);
        kt::write_half_edge_list(f, g);
        res["format"] = "u_index\tv_index, u <= v";
      } else {
        kt::write_edge_list(f, p, c.cap);
        res["format"] = "left_index\tseed\tright_index";
        res["edges"] = p.num_left() * p.q();
      }
      res["path"] = edges_path;
      report = kt::make_report("build", kt::params_json(p), res, true, kt::kt_warnings(p));
    } else if (vleft->parsed()) {
      const kt::KTParams p = graph_params(c);
      kt::Json res;
      if (!set_ix.empty()) {
        const auto r = kt::verify_left_expansion(p, left_set(p, set_ix), k_left);
        res = kt::to_json(r);
        pass = r.pass;
      } else {
        const auto r = kt::sample_left_audit(p, samples, set_size, k_left, c.seed, c.workers);
        res = kt::to_json(r);
        pass = r.pass;
      }
      report = kt::make_report("verify-left", kt::params_json(p), res, pass, kt::kt_warnings(p));
    } else if (vright->parsed()) {
      const kt::KTParams p = graph_params(c);
      kt::KTGraph g(p, c.cap);
      kt::Json res;
      if (!set_ix.empty()) {
        std::vector<kt::RightVertex> t;
        for (std::uint64_t i : set_ix) {
          if (i >= p.num_right()) throw kt::Error(kt::ErrorCode::kShapeError, "right index out of range");
          t.push_back(kt::right_from_index(p, i));
        }
        const auto r = kt::verify_right_expansion(g, t);
        res = kt::to_json(r);
        pass = r.pass;
      } else if (kmax > 0) {
        const auto r = kt::exhaustive_right_audit(g, kmax, budget, c.workers);
        res = kt::to_json(r);
        pass = r.pass;
      } else {
        const auto r = kt::sample_predictor_audit(g, samples, max_size, c.seed, c.workers);
        res = kt::to_json(r);
        pass = r.pass;
      }
      report = kt::make_report("verify-right", kt::params_json(p), res, pass, kt::kt_warnings(p));
    } else if (pairs->parsed()) {
      const kt::KTParams p = graph_params(c);
      kt::KTGraph g(p, c.cap);
      const auto r = kt::audit_common_neighbors(g, crosscheck, c.seed, c.workers);
      pass = r.pass;
      report = kt::make_report("audit-pairs", kt::params_json(p), kt::to_json(r), pass,
                               kt::kt_warnings(p));
    } else if (tight->parsed()) {
      const kt::KTParams p = graph_params(c);
      const kt::Field& F = *p.field;
      if (y1 >= F.order() || y2 >= F.order()) {
        throw kt::Error(kt::ErrorCode::kInvalidParams, "seeds must be field elements");
      }
      kt::TightnessContext ctx(p, F.from_int(y1), F.from_int(y2));
      kt::KTGraph g(p, c.cap);
      const auto w = kt::build_tightness_witness(ctx, k_witness);
      const auto chk = kt::check_tightness_witness(g, w);
      kt::Json res;
      res["witness"] = kt::to_json(p, w);
      res["check"] = kt::to_json(chk);
      const auto bound = kt::verify_right_expansion(
          g, [&] {
            auto all = w.t1;
            all.insert(all.end(), w.t2.begin(), w.t2.end());
            return all;
          }());
      res["theorem_bound"] = kt::to_json(bound);
      pass = chk.pass;
      if (structure) {
        const auto st = kt::check_structure(ctx, c.cap);
        res["structure"] = kt::to_json(st);
        pass = pass && st.pass;
      }
      report = kt::make_report("tightness", kt::params_json(p), res, pass, kt::kt_warnings(p));
    } else if (hdeg->parsed()) {
      const kt::KTParams p = graph_params(c);
      kt::KTGraph g(p, c.cap);
      const auto r = kt::verify_half_regular(g, c.workers);
      const auto b = kt::half_degree_bracket(p, r.degree);
      kt::Json res;
      res["regularity"] = kt::to_json(r);
      res["bracket"] = kt::to_json(b);
      pass = r.regular && (!b.non_vacuous || b.in_bracket);
      report = kt::make_report("half-degree", kt::params_json(p), res, pass, kt::kt_warnings(p));
    } else if (hact->parsed()) {
      const kt::KTParams p = graph_params(c);
      kt::KTGraph g(p, c.cap);
      const auto r = kt::verify_group_action(g, mode == "exhaustive", samples, c.seed, c.workers);
      pass = r.pass;
      report = kt::make_report("half-action", kt::params_json(p), kt::to_json(r), pass,
                               kt::kt_warnings(p));
    } else if (hexp->parsed()) {
      const kt::KTParams p = graph_params(c);
      kt::KTGraph g(p, c.cap);
      kt::Json res;
      if (!set_ix.empty()) {
        const auto r = kt::verify_half_expansion(g, left_set(p, set_ix), k_left);
        res = kt::to_json(r);
        pass = r.pass;
      } else {
        const auto r = kt::sample_half_expansion(g, samples, set_size, k_left, c.seed, c.workers);
        res = kt::to_json(r);
        pass = r.pass;
      }
      report = kt::make_report("half-expand", kt::params_json(p), res, pass, kt::kt_warnings(p));
    } else if (guv->parsed()) {
      const kt::FieldRef F = kt::Field::make({c.p, c.e, c.modulus});
      kt::Json params;
      params["field"] = kt::field_json(F->spec());
      params["n"] = c.n;
      params["m"] = m;
      params["h"] = h;
      const kt::DegreeHistogram target{{0, 960}, {256, 3072}, {4096, 64}};
      kt::Json res;
      std::vector<std::string> warnings;
      if (F->characteristic() < c.n) {
        warnings.push_back("char(F_q) < n: allowed for this construction");
      }
      if (!z_text.empty() && !scan) {
        kt::Poly z = kt::parse_poly(F, z_text);
        std::optional<kt::GUVParams> gp;
        if (allow_reducible && !kt::is_irreducible(z)) {
          if (!(F->order() > h) || !(m >= 1 && m < c.n) ||
              z.degree() != static_cast<int>(c.n) || !z.is_monic()) {
            throw kt::Error(kt::ErrorCode::kInvalidParams,
                            "GUV requires q > h, 1 <= m < n, z monic of degree n");
          }
          gp = kt::GUVParams{F, c.n, m, h, z};
          warnings.push_back("z is reducible over F_q");
        } else {
          gp = kt::make_guv_params(F, c.n, m, h, z);
        }
        const auto hist = kt::guv_right_degree_histogram(*gp, c.workers, c.cap);
        params = kt::guv_params_json(*gp);
        res["histogram"] = kt::to_json(hist);
        std::uint64_t mass = 0;
        for (auto [d, cnt] : hist) mass += d * cnt;
        res["edge_mass"] = mass;
        res["edge_mass_ok"] = mass == kt::checked_pow(F->order(), c.n + 1);
        pass = res["edge_mass_ok"].get<bool>();
      } else {
        const auto r = kt::guv_scan(F, c.n, m, h, target, max_scan, c.workers);
        res = kt::to_json(r);
        res["target"] = kt::to_json(target);
        pass = true;
        for (const auto& e : r.entries) pass = pass && e.edge_mass_ok;
      }
      report = kt::make_report("guv-hist", params, res, pass, warnings);
    }
    emit(c, report);
    return pass ? 0 : 1;
  } catch (const kt::Error& e) {
    std::cerr << "kt: error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "kt: error: " << e.what() << "\n";
    return 2;
  }
}
