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

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include "kt/expansion.hpp"
#include "kt/report.hpp"

namespace {

TEST(Report, RationalsAreStrings) {
  EXPECT_EQ(kt::rational_json(kt::rational(97, 98)), "97/98");
  EXPECT_EQ(kt::rational_json(kt::rational(-6, 4)), "-3/2");
  EXPECT_EQ(kt::rational_json(kt::Rational(5)), "5/1");
}

TEST(Report, EnvelopeAndDeterminism) {
  const auto p = kt::make_kt_params(kt::Field::prime(5), 4, 1);
  const kt::KTGraph g(p);
  const auto a = kt::exhaustive_right_audit(g, 2, kt::kDefaultAuditBudget, 1);
  const auto b = kt::exhaustive_right_audit(g, 2, kt::kDefaultAuditBudget, 4);
  const auto ra = kt::make_report("verify-right", kt::params_json(p), kt::to_json(a), a.pass);
  const auto rb = kt::make_report("verify-right", kt::params_json(p), kt::to_json(b), b.pass);
  EXPECT_EQ(kt::dump_report(ra), kt::dump_report(rb));
  EXPECT_EQ(ra["schema"], "kt-report/1");
  EXPECT_EQ(ra["command"], "verify-right");
  EXPECT_EQ(ra["params"]["num_right"], 125);
  EXPECT_EQ(ra["result"]["min_ratio"], "49/50");
  const std::string text = kt::dump_report(ra);
  EXPECT_EQ(text.back(), '\n');
  EXPECT_EQ(kt::Json::parse(text), ra);
}

#ifdef KT_CLI_PATH
int run(const std::string& args) {
  const int status = std::system((std::string(KT_CLI_PATH) + " " + args + " >/dev/null 2>&1").c_str());
  return WEXITSTATUS(status);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("verify-right --p 7 --n 5 --s 1 --kmax 2"), 0);
  EXPECT_EQ(run("tightness --p 7 --n 6 --s 2 --K 2"), 2);  // outside s+1 < n < 2s+2
  EXPECT_EQ(run("verify-right --p 5 --n 2 --s 1 --kmax 1"), 2);
  EXPECT_EQ(run("no-such-command"), 2);
}

TEST(Cli, ReportFileAndSeed) {
  const std::string path = ::testing::TempDir() + "kt_report_test.json";
  ASSERT_EQ(run("verify-right --p 5 --n 4 --s 1 --samples 20 --seed 11 --out " + path), 0);
  FILE* f = std::fopen(path.c_str(), "r");
  ASSERT_NE(f, nullptr);
  std::string text;
  char buf[4096];
  for (std::size_t k; (k = std::fread(buf, 1, sizeof buf, f)) > 0;) text.append(buf, k);
  std::fclose(f);
  const auto j = kt::Json::parse(text);
  EXPECT_EQ(j["schema"], "kt-report/1");
  EXPECT_EQ(j["result"]["seed"], 11);
}
#endif

}  // namespace
