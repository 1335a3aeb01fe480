// Copyright 2026 The qps Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qps/io.hpp"

#include <gtest/gtest.h>

#include "qps/errors.hpp"
#include "test_util.hpp"

namespace qps {
namespace {

std::string parse_error_message(const std::string& text) {
  try {
    parse_state(text, "in.json");
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    return e.what();
  }
  ADD_FAILURE() << "accepted: " << text;
  return {};
}

TEST(StateIo, RoundTripBothForms) {
  for (int d : {2, 3}) {
    const DensityOperator rho = random_state(2, d, 5 + d, 2);
    for (StateForm form : {StateForm::Dense, StateForm::Char}) {
      const DensityOperator back = parse_state(write_state(rho, form));
      EXPECT_EQ(back.d(), d);
      EXPECT_EQ(back.n(), 2);
      EXPECT_OP_NEAR(back.matrix(), rho.matrix(), 1e-12);
    }
  }
}

TEST(StateIo, SparseCharDocument) {
  const DensityOperator rho =
      parse_state(R"({"d": 3, "n": 1, "char": [{"p": [0], "q": [0], "re": 1}]})");
  EXPECT_OP_NEAR(rho.matrix(), Operator::Identity(3, 3) / 3.0, 1e-14);
}

TEST(StateIo, WriterIsDeterministic) {
  const DensityOperator rho = random_state(1, 3, 1, 2);
  EXPECT_EQ(write_state(rho), write_state(rho));
  EXPECT_EQ(write_state(rho, StateForm::Char), write_state(rho, StateForm::Char));
}

TEST(StateIo, SyntaxErrorHasLocation) {
  const std::string msg = parse_error_message("{\n  \"d\": 3,\n  \"n\": ]\n}");
  EXPECT_NE(msg.find("in.json:3:"), std::string::npos) << msg;
}

TEST(StateIo, SchemaErrors) {
  EXPECT_NE(parse_error_message(R"({"n": 1, "matrix": {}})").find("\"d\""), std::string::npos);
  EXPECT_NE(parse_error_message(R"({"d": 2, "n": 1})").find("\"matrix\""), std::string::npos);
  parse_error_message(R"({"d": 2, "n": 1, "matrix": {"re": [[1, 0]], "im": [[0, 0]]}})");
  parse_error_message(R"({"d": 2, "n": 1, "matrix": {"re": [[1, 0], [0, 1]], "im": [[0, 0], [0, 0]]}})");
  parse_error_message(R"({"d": 4, "n": 1, "char": []})");
  parse_error_message(R"({"d": 2.5, "n": 1, "char": []})");
}

TEST(ChannelIo, RoundTrip) {
  const Channel c = random_channel(3, 1, 4, 2);
  for (StateForm form : {StateForm::Dense, StateForm::Char}) {
    const Channel back = parse_channel(write_channel(c, form));
    EXPECT_EQ(back.n(), 1);
    EXPECT_OP_NEAR(back.choi().matrix(), c.choi().matrix(), 1e-12);
  }
}

TEST(ChannelIo, RejectsNonChannels) {
  EXPECT_THROW(parse_channel(R"({"kind": "kraus", "d": 2, "n": 1, "n_doubled": 2, "char": []})"),
               Error);
  // |00><00| is a state on two qubits but not a Choi state.
  EXPECT_THROW(parse_channel(R"({"kind": "choi", "d": 2, "n": 1, "n_doubled": 2, "matrix":
      {"re": [[1,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,0]],
       "im": [[0,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,0]]}})"),
               Error);
}

TEST(ReadState, MissingFile) {
  EXPECT_THROW(read_state("/nonexistent/qps/state.json"), Error);
}

}  // namespace
}  // namespace qps
