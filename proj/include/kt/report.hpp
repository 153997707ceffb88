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

#ifndef KT_REPORT_HPP_
#define KT_REPORT_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "kt/bipartite_half.hpp"
#include "kt/expansion.hpp"
#include "kt/guv.hpp"
#include "kt/kt_graph.hpp"
#include "kt/planner.hpp"
#include "kt/tightness.hpp"

namespace kt {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kReportSchema = "kt-report/1";

// Exact values are "num/den" strings; "_approx" fields are float mirrors.
Json rational_json(const Rational& r);

Json field_json(const FieldSpec& spec);
Json params_json(const KTParams& params);
Json guv_params_json(const GUVParams& params);
Json right_vertex_json(const KTParams& params, const RightVertex& w);

Json to_json(const ExpansionReport& r);
Json to_json(const RightAuditSummary& r);
Json to_json(const LeftSampleSummary& r);
Json to_json(const PredictorSampleSummary& r);
Json to_json(const PairAudit& r);
Json to_json(const PlanOutput& r);
Json to_json(const ImageCheck& r);
Json to_json(const StructureReport& r);
Json to_json(const KTParams& params, const TightnessWitness& w);
Json to_json(const WitnessCheck& r);
Json to_json(const HalfRegularity& r);
Json to_json(const DegreeBracket& r);
Json to_json(const GroupActionReport& r);
Json to_json(const HalfSampleSummary& r);
Json to_json(const DegreeHistogram& h);
Json to_json(const GUVScan& r);

// {"schema", "command", "params", "warnings", "pass", "result"}.
Json make_report(std::string_view command, Json params, Json result, bool pass,
                 const std::vector<std::string>& warnings = {});

// Two-space indented, trailing newline.
std::string dump_report(const Json& report);

}  // namespace kt

#endif  // KT_REPORT_HPP_
