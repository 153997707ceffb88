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

#include "kt/report.hpp"

namespace kt {
namespace {

Json index_list(const std::vector<std::uint64_t>& v) {
  Json out = Json::array();
  for (std::uint64_t x : v) out.push_back(x);
  return out;
}

Json count_map(const std::map<std::uint64_t, std::uint64_t>& m) {
  Json out = Json::object();
  for (auto [k, v] : m) out[std::to_string(k)] = v;
  return out;
}

Json vec_json(const Vec& v) {
  Json out = Json::array();
  for (Elem e : v) out.push_back(e.value);
  return out;
}

}  // namespace

Json rational_json(const Rational& r) { return to_string(r); }

Json field_json(const FieldSpec& spec) {
  Json j;
  j["p"] = spec.p;
  j["e"] = spec.e;
  j["modulus"] = spec.modulus;
  return j;
}

Json params_json(const KTParams& p) {
  Json j;
  j["field"] = field_json(p.field->spec());
  j["q"] = p.q();
  j["n"] = p.n;
  j["s"] = p.s;
  j["num_left"] = p.num_left();
  j["num_right"] = p.num_right();
  j["left_degree"] = p.left_degree();
  j["right_degree"] = p.right_degree();
  return j;
}

Json guv_params_json(const GUVParams& p) {
  Json j;
  j["field"] = field_json(p.field->spec());
  j["q"] = p.q();
  j["n"] = p.n;
  j["m"] = p.m;
  j["h"] = p.h;
  j["z"] = to_string(p.z);
  return j;
}

Json right_vertex_json(const KTParams& params, const RightVertex& w) {
  Json j;
  j["index"] = right_index(params, w);
  j["seed"] = w.seed.value;
  j["z"] = vec_json(w.z);
  return j;
}

Json to_json(const ExpansionReport& r) {
  Json j;
  j["side"] = std::string(side_name(r.side));
  j["set_size"] = r.set_size;
  j["neighborhood_size"] = r.neighborhood_size;
  if (r.neighborhood_without_self) {
    j["neighborhood_without_self"] = *r.neighborhood_without_self;
  }
  j["degree"] = r.degree;
  j["analytic_bound"] = r.analytic_bound ? rational_json(*r.analytic_bound) : Json();
  j["analytic_bound_approx"] = r.analytic_bound_approx;
  j["bound_formula"] = r.bound_formula;
  j["epsilon"] = r.epsilon ? rational_json(*r.epsilon) : Json();
  j["ratio"] = rational_json(r.ratio);
  j["ratio_approx"] = to_double(r.ratio);
  j["vacuous"] = r.vacuous;
  j["pass"] = r.pass;
  if (r.side == Side::kRight) j["bucket_profile"] = count_map(r.bucket_profile);
  j["witness"] = index_list(r.witness);
  return j;
}

Json to_json(const RightAuditSummary& r) {
  Json j;
  j["k_max"] = r.k_max;
  Json sizes = Json::array();
  for (const SizeAudit& s : r.sizes) {
    Json e;
    e["set_size"] = s.set_size;
    e["subsets"] = s.subsets;
    e["min_neighborhood"] = s.min_neighborhood;
    e["argmin"] = index_list(s.argmin);
    e["epsilon"] = rational_json(s.epsilon);
    e["bound"] = rational_json(s.bound);
    e["min_ratio"] = rational_json(s.min_ratio);
    e["min_ratio_approx"] = to_double(s.min_ratio);
    e["pass"] = s.pass;
    sizes.push_back(std::move(e));
  }
  j["sizes"] = std::move(sizes);
  j["min_ratio"] = rational_json(r.min_ratio);
  j["min_ratio_approx"] = to_double(r.min_ratio);
  j["argmin"] = index_list(r.argmin);
  j["pass"] = r.pass;
  return j;
}

Json to_json(const LeftSampleSummary& r) {
  Json j;
  j["seed"] = r.seed;
  j["samples"] = r.samples;
  j["set_size"] = r.set_size;
  j["k_left"] = r.k_left;
  j["uniform_samples"] = r.uniform_samples;
  j["structured_samples"] = r.structured_samples;
  j["vacuous"] = r.vacuous;
  j["bound_approx"] = r.bound_approx;
  j["failures"] = r.failures;
  j["min_neighborhood"] = r.min_neighborhood;
  j["argmin"] = index_list(r.argmin);
  j["pass"] = r.pass;
  return j;
}

Json to_json(const PredictorSampleSummary& r) {
  Json j;
  j["seed"] = r.seed;
  j["samples"] = r.samples;
  j["max_set_size"] = r.max_set_size;
  j["sound"] = r.sound;
  j["cauchy_schwarz_ok"] = r.cauchy_schwarz_ok;
  j["theorem_checked"] = r.theorem_checked;
  j["theorem_ok"] = r.theorem_ok;
  j["min_slack"] = rational_json(r.min_slack);
  j["worst"] = index_list(r.worst);
  j["pass"] = r.pass;
  return j;
}

Json to_json(const PairAudit& r) {
  Json j;
  j["pairs"] = r.pairs;
  j["cross_seed_pairs"] = r.cross_seed_pairs;
  j["cross_seed_matching"] = r.cross_seed_matching;
  j["cross_seed_max"] = r.cross_seed_max;
  j["cross_seed_histogram"] = count_map(r.cross_seed_histogram);
  j["same_seed_pairs"] = r.same_seed_pairs;
  j["same_seed_zero"] = r.same_seed_zero;
  j["crosscheck_seed"] = r.crosscheck_seed;
  j["crosschecked"] = r.crosschecked;
  j["crosscheck_agree"] = r.crosscheck_agree;
  j["pass"] = r.pass;
  return j;
}

Json to_json(const PlanOutput& r) {
  Json j;
  Json in;
  in["alpha"] = rational_json(r.input.alpha);
  in["eps_left"] = rational_json(r.input.eps_left);
  in["eps_right"] = rational_json(r.input.eps_right);
  in["k_left"] = r.input.k_left;
  in["n"] = r.input.n;
  j["input"] = std::move(in);
  j["h_approx"] = static_cast<double>(r.h);
  j["window_real_high_approx"] = static_cast<double>(r.window_real_high);
  j["window"] = Json::array({r.window_low, r.window_high});
  j["q"] = r.q;
  j["s"] = r.s;
  j["N"] = r.num_left.str();
  j["M"] = r.num_right.str();
  j["D_L"] = r.left_degree;
  j["D_R"] = r.right_degree ? Json(r.right_degree->str()) : Json();
  j["K_L"] = r.k_left_size.str();
  j["K_R_lemma_max"] = r.k_right_lemma.str();
  j["K_R_main"] = rational_json(r.k_right_main);
  j["log_base"] = r.log_base;
  Json flags = Json::array();
  for (const PlanFlag& f : r.flags) {
    Json e;
    e["name"] = f.name;
    e["condition"] = f.condition;
    e["satisfied"] = f.satisfied;
    e["detail"] = f.detail;
    flags.push_back(std::move(e));
  }
  j["flags"] = std::move(flags);
  return j;
}

Json to_json(const ImageCheck& r) {
  Json j;
  j["d"] = r.d;
  j["domain_size"] = r.domain_size;
  j["image_size"] = r.image_size;
  j["lines"] = r.lines;
  j["union_size"] = r.union_size;
  j["equal"] = r.equal;
  return j;
}

Json to_json(const StructureReport& r) {
  Json j;
  j["phi_domain"] = r.phi_domain;
  j["phi_bijective"] = r.phi_bijective;
  j["crt_roundtrip"] = r.crt_roundtrip;
  j["phi_low_degree_diagonal"] = r.phi_low_degree_diagonal;
  j["rho_domain"] = r.rho_domain;
  j["rho_bijective"] = r.rho_bijective;
  j["rho_defining_property"] = r.rho_defining_property;
  j["rho_matches_division"] = r.rho_matches_division;
  j["rho_linear"] = r.rho_linear;
  j["rho_fixes_constants"] = r.rho_fixes_constants;
  j["matrices_unit_triangular"] = r.matrices_unit_triangular;
  j["sigma_homomorphism"] = r.sigma_homomorphism;
  j["sigma_injective"] = r.sigma_injective;
  j["sigma_image_size"] = r.sigma_image_size;
  Json images = Json::array();
  for (const ImageCheck& c : r.images) images.push_back(to_json(c));
  j["images"] = std::move(images);
  j["pass"] = r.pass;
  return j;
}

Json to_json(const KTParams& params, const TightnessWitness& w) {
  Json j;
  j["K"] = w.k;
  j["D_R"] = w.right_degree;
  j["expected_count"] = w.expected_count;
  Json t1 = Json::array();
  Json t2 = Json::array();
  for (const RightVertex& v : w.t1) t1.push_back(right_vertex_json(params, v));
  for (const RightVertex& v : w.t2) t2.push_back(right_vertex_json(params, v));
  j["T1"] = std::move(t1);
  j["T2"] = std::move(t2);
  return j;
}

Json to_json(const WitnessCheck& r) {
  Json j;
  j["achieved_count"] = r.achieved_count;
  j["expected_count"] = r.expected_count;
  j["cross_pairs"] = r.cross_pairs;
  j["cross_pairs_one_common"] = r.cross_pairs_one;
  j["delta"] = rational_json(r.delta);
  j["epsilon_achieved"] = rational_json(r.epsilon_achieved);
  j["epsilon_claimed"] = rational_json(r.epsilon_claimed);
  j["pass"] = r.pass;
  return j;
}

Json to_json(const HalfRegularity& r) {
  Json j;
  j["vertices"] = r.vertices;
  j["degree"] = r.degree;
  j["max_degree"] = r.max_degree;
  j["regular"] = r.regular;
  j["histogram"] = count_map(r.histogram);
  return j;
}

Json to_json(const DegreeBracket& r) {
  Json j;
  j["A_R"] = rational_json(r.a_right);
  j["lower"] = rational_json(r.lower);
  j["upper"] = r.upper;
  j["non_vacuous"] = r.non_vacuous;
  j["degree"] = r.degree;
  j["in_bracket"] = r.in_bracket;
  return j;
}

Json to_json(const GroupActionReport& r) {
  Json j;
  j["mode"] = r.exhaustive ? "exhaustive" : "sampled";
  if (!r.exhaustive) j["seed"] = r.seed;
  j["vertices_checked"] = r.vertices_checked;
  j["edges_checked"] = r.edges_checked;
  j["invariance_failures"] = r.invariance_failures;
  j["freeness_checked"] = r.freeness_checked;
  j["freeness_failures"] = r.freeness_failures;
  j["linearity_failures"] = r.linearity_failures;
  j["pass"] = r.pass;
  return j;
}

Json to_json(const HalfSampleSummary& r) {
  Json j;
  j["seed"] = r.seed;
  j["samples"] = r.samples;
  j["set_size"] = r.set_size;
  j["k_left"] = r.k_left;
  j["failures"] = r.failures;
  j["vacuous"] = r.vacuous;
  j["min_neighborhood"] = r.min_neighborhood;
  j["argmin"] = index_list(r.argmin);
  j["pass"] = r.pass;
  return j;
}

Json to_json(const DegreeHistogram& h) { return count_map(h); }

Json to_json(const GUVScan& r) {
  Json j;
  j["candidates"] = r.candidates;
  j["scanned"] = r.entries.size();
  j["first_match"] = r.first_match ? Json(to_string(r.entries[*r.first_match].z)) : Json();
  Json entries = Json::array();
  for (const GUVScanEntry& e : r.entries) {
    Json x;
    x["z"] = to_string(e.z);
    x["histogram"] = to_json(e.histogram);
    x["edge_mass_ok"] = e.edge_mass_ok;
    x["matches"] = e.matches;
    entries.push_back(std::move(x));
  }
  j["entries"] = std::move(entries);
  return j;
}

Json make_report(std::string_view command, Json params, Json result, bool pass,
                 const std::vector<std::string>& warnings) {
  Json j;
  j["schema"] = std::string(kReportSchema);
  j["command"] = std::string(command);
  j["params"] = std::move(params);
  j["warnings"] = warnings;
  j["pass"] = pass;
  j["result"] = std::move(result);
  return j;
}

std::string dump_report(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace kt
