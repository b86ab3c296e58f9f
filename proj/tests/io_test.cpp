// Copyright 2026 The Authors.
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

#include <string>

#include <gtest/gtest.h>

#include "ecic/io.hpp"
#include "support/reference_fixtures.hpp"

namespace ecic {
namespace {

const std::string kFixtures = ECIC_FIXTURE_DIR;
const std::string kData = ECIC_TEST_DATA_DIR;

ErrorCode code_of(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for: " << text;
  return ErrorCode::kInvalidArgument;
}

TEST(InstanceFileTest, Example1MatchesInMemoryFixture) {
  const Instance inst = load_instance(kFixtures + "/example1.json");
  const auto fx = testing::example1();
  EXPECT_EQ(inst.problem.side_info, fx.problem.side_info);
  EXPECT_EQ(inst.problem.demand, fx.problem.demand);
  EXPECT_EQ(inst.profile.deltas, fx.profile.deltas);
  ASSERT_TRUE(inst.code.has_value());
  EXPECT_EQ(inst.code->matrix, fx.code.matrix);
}

TEST(InstanceFileTest, AllFixturesParse) {
  for (const char* name : {"example1", "example2", "all_ones_single_error", "subset_receiver_one",
                           "subset_all_receivers", "clique_parity"}) {
    EXPECT_NO_THROW(load_instance(kFixtures + "/" + name + ".json")) << name;
  }
  EXPECT_FALSE(load_instance(kFixtures + "/clique_parity.json").code.has_value());
}

TEST(InstanceFileTest, SerializationRoundTrip) {
  const Instance inst = load_instance(kFixtures + "/example2.json");
  const std::string text = instance_to_json(inst);
  const Instance back = parse_instance(text);
  EXPECT_EQ(back.problem.side_info, inst.problem.side_info);
  EXPECT_EQ(back.profile.deltas, inst.profile.deltas);
  EXPECT_EQ(back.code->matrix, inst.code->matrix);
  EXPECT_EQ(instance_to_json(back), text);
}

TEST(InstanceFileTest, DemandInSideInformationKeepsItsCode) {
  try {
    load_instance(kData + "/demand_in_side_info.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDemandInSideInfo);
  }
}

TEST(InstanceFileTest, ParseErrorsNameTheField) {
  try {
    parse_instance(R"({"q": 2, "m": 1, "n": 1, "side_info": [[]], "demands": [1]})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
    EXPECT_NE(std::string(e.what()).find("deltas"), std::string::npos);
  }
  EXPECT_EQ(code_of("{ not json"), ErrorCode::kParse);
  EXPECT_EQ(code_of(R"({"q": 4, "m": 1, "n": 1, "side_info": [[]], "demands": [1], "deltas": [0]})"),
            ErrorCode::kParse);
  EXPECT_EQ(code_of(R"({"q": 2, "m": 1, "n": 1, "side_info": [[]], "demands": [2], "deltas": [0]})"),
            ErrorCode::kParse);
  EXPECT_EQ(code_of(R"({"q": 2, "m": 1, "n": 1, "side_info": [[]], "demands": [1], "deltas": [-1]})"),
            ErrorCode::kParse);
  EXPECT_EQ(code_of(R"({"q": 2, "m": 1, "n": 2, "side_info": [[]], "demands": [1], "deltas": [0],
                        "code": [[1, 0]]})"),
            ErrorCode::kParse);
  EXPECT_EQ(code_of(R"({"q": 2, "m": 1, "n": 2, "side_info": [[]], "demands": [1], "deltas": [0],
                        "code": [[1, 0], [1]]})"),
            ErrorCode::kParse);
}

TEST(InstanceFileTest, MissingFile) { EXPECT_THROW(load_instance(kData + "/nope.json"), Error); }

TEST(CertificateFileTest, RoundTrip) {
  const auto fx = testing::example1();
  const Certificate cert = code_to_certificate(fx.problem, fx.code);
  const std::string text = certificate_to_json(cert);
  const Certificate back = parse_certificate(text);
  EXPECT_EQ(back.matroid.representation(), cert.matroid.representation());
  EXPECT_EQ(back.matroid.labels(), cert.matroid.labels());
  EXPECT_EQ(back.g.message_labels, cert.g.message_labels);
  EXPECT_EQ(back.g.code_labels, cert.g.code_labels);
  EXPECT_EQ(back.basis_tail, cert.basis_tail);
  EXPECT_EQ(certificate_to_json(back), text);
}

TEST(CertificateFileTest, InconsistentBasisIsMalformed) {
  const auto fx = testing::all_ones();
  std::string text = certificate_to_json(code_to_certificate(fx.problem, fx.code));
  const auto at = text.find("\"basis\": [1,2,3,4,5,6]");
  ASSERT_NE(at, std::string::npos);
  text.replace(at, 22, "\"basis\": [1,2,3,4,5,7]");
  try {
    parse_certificate(text);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMalformedCertificate);
  }
}

TEST(CertificateFileTest, DuplicateLabelsAreAParseError) {
  const std::string text = R"({"q": 2, "representation": [[1, 0], [0, 1]], "labels": [1, 1],
    "message_labels": [1], "code_labels": [1], "basis": [1], "basis_tail": []})";
  try {
    parse_certificate(text);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
  }
}

}  // namespace
}  // namespace ecic
