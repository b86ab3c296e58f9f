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

#include <random>

#include <gtest/gtest.h>

#include "ecic/bridge.hpp"
#include "ecic/matroid.hpp"
#include "support/oracles.hpp"
#include "support/reference_fixtures.hpp"

namespace ecic {
namespace {

using testing::kF2;

VectorMatroid example1_matroid() {
  const auto fx = testing::example1();
  return code_to_certificate(fx.problem, fx.code).matroid;
}

LabelSet range(Label lo, Label hi) {
  LabelSet out;
  for (Label l = lo; l <= hi; ++l) out.push_back(l);
  return out;
}

LabelSet from_mask(const std::vector<Label>& labels, std::uint32_t mask) {
  LabelSet out;
  for (std::size_t b = 0; b < labels.size(); ++b) {
    if (mask & (1u << b)) out.push_back(labels[b]);
  }
  return make_label_set(std::move(out));
}

bool same_row_space(const FieldMatrix& a, const FieldMatrix& b) {
  const std::size_t r = rank(a);
  return r == rank(b) && rank(a.vstack(b)) == r;
}

TEST(VectorMatroidTest, DuplicateLabelsRejected) {
  EXPECT_THROW(VectorMatroid(FieldMatrix::identity(kF2, 2), {1, 1}), Error);
  EXPECT_THROW(VectorMatroid(FieldMatrix::identity(kF2, 2), {1}), Error);
}

TEST(RankOfTest, Example1) {
  const VectorMatroid m = example1_matroid();
  EXPECT_EQ(m.size(), 17u);
  EXPECT_EQ(rank_of(m, m.ground_set()), 10u);
  EXPECT_EQ(rank_of(m, {}), 0u);
  EXPECT_EQ(rank_of(m, {1, 2, 3}), 3u);
}

TEST(RankOfTest, UnknownLabel) {
  try {
    rank_of(example1_matroid(), {18});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownLabel);
  }
}

TEST(IsIndependentTest, Basics) {
  const VectorMatroid m = example1_matroid();
  EXPECT_TRUE(is_independent(m, {}));
  EXPECT_TRUE(is_independent(m, range(1, 10)));
  const VectorMatroid loopy(FieldMatrix::from_rows(kF2, {{1, 0}, {0, 0}}));
  EXPECT_FALSE(is_independent(loopy, {2}));
  EXPECT_FALSE(is_independent(loopy, {1, 2}));
}

TEST(ClosureTest, TailOfExample1IsClosed) {
  const VectorMatroid m = example1_matroid();
  EXPECT_EQ(closure(m, range(4, 10)), range(4, 10));
  EXPECT_EQ(closure(m, m.ground_set()), m.ground_set());
  const VectorMatroid id3(FieldMatrix::identity(kF2, 3));
  EXPECT_EQ(closure(id3, {1}), (LabelSet{1}));
}

TEST(ExtendToBasisTest, Examples) {
  const VectorMatroid m = example1_matroid();
  EXPECT_EQ(extend_to_basis(m, {1, 2, 3}), range(1, 10));
  EXPECT_EQ(extend_to_basis(m, range(1, 10)), range(1, 10));
  const VectorMatroid dup(FieldMatrix::from_rows(kF2, {{1, 0, 1}, {0, 1, 0}}));
  EXPECT_EQ(extend_to_basis(dup, {3}), (LabelSet{2, 3}));
  try {
    extend_to_basis(dup, {1, 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDependentSet);
  }
}

TEST(ContractTest, Example1ReceiverOneReproducesPrintedMatrix) {
  const VectorMatroid c = contract(example1_matroid(), {2, 8, 9, 10});
  EXPECT_EQ(c.labels(), (std::vector<Label>{1, 3, 4, 5, 6, 7, 11, 12, 13, 14, 15, 16, 17}));
  EXPECT_EQ(c.representation().rows(), 6u);
  EXPECT_EQ(rref(c.representation()).reduced, rref(testing::example1_contracted()).reduced);
}

TEST(ContractTest, AllOnesReceiverOnePatterns) {
  const VectorMatroid m(testing::all_ones_representation());
  // Receiver 1, patterns {1,2}, {1,3}, {2,3}: contract B - {1} - tail[F].
  const std::vector<LabelSet> contracted{{2, 3, 6}, {2, 3, 5}, {2, 3, 4}};
  for (std::size_t k = 0; k < 3; ++k) {
    const VectorMatroid c = contract(m, contracted[k]);
    EXPECT_EQ(c.size(), 6u);
    EXPECT_TRUE(same_row_space(c.representation(), testing::all_ones_contracted(k))) << k;
  }
}

TEST(ContractTest, EmptySetIsIdentity) {
  const VectorMatroid m = example1_matroid();
  const VectorMatroid c = contract(m, {});
  EXPECT_EQ(c.representation(), m.representation());
  EXPECT_EQ(c.labels(), m.labels());
}

TEST(ContractTest, LoopIsDeletedWithoutLosingRank) {
  const VectorMatroid m(FieldMatrix::from_rows(kF2, {{1, 0, 1}, {0, 0, 1}}));
  const VectorMatroid c = contract(m, {2});
  EXPECT_EQ(c.labels(), (std::vector<Label>{1, 3}));
  EXPECT_EQ(c.rank(), 2u);
}

TEST(CheckAxiomsTest, Examples) {
  EXPECT_TRUE(check_axioms(VectorMatroid(FieldMatrix::identity(kF2, 3))));
  EXPECT_TRUE(check_axioms(VectorMatroid(testing::all_ones_contracted(0))));
  const VectorMatroid m = example1_matroid();
  const VectorMatroid small = contract(m, {1, 2, 4, 5, 6});
  EXPECT_EQ(small.size(), 12u);
  EXPECT_TRUE(check_axioms(small));
  try {
    check_axioms(m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kGroundSetTooLarge);
  }
}

class MatroidPropertyTest : public ::testing::TestWithParam<int> {};

VectorMatroid random_matroid(std::mt19937_64& rng, const PrimeField& f, std::size_t max_rows,
                             std::size_t max_cols) {
  const std::size_t rows = std::uniform_int_distribution<std::size_t>(1, max_rows)(rng);
  const std::size_t cols = std::uniform_int_distribution<std::size_t>(1, max_cols)(rng);
  return VectorMatroid(testing::random_matrix(rng, f, rows, cols));
}

LabelSet random_subset(std::mt19937_64& rng, const std::vector<Label>& labels) {
  const auto mask = std::uniform_int_distribution<std::uint32_t>(
      0, (std::uint32_t{1} << labels.size()) - 1)(rng);
  return from_mask(labels, mask);
}

TEST_P(MatroidPropertyTest, ContractionMatchesDefinitionExhaustively) {
  const PrimeField f(GetParam());
  std::mt19937_64 rng(70 + GetParam());
  for (int trial = 0; trial < 60; ++trial) {
    const VectorMatroid m = random_matroid(rng, f, 5, 10);
    const LabelSet t = random_subset(rng, m.labels());
    const VectorMatroid c = contract(m, t);
    ASSERT_EQ(c.ground_set(), set_difference(m.ground_set(), t));
    EXPECT_EQ(c.rank(), m.rank() - rank_of(m, t));
    const std::vector<Label>& rest = c.labels();
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << rest.size()); ++mask) {
      const LabelSet s = from_mask(rest, mask);
      EXPECT_EQ(is_independent(c, s), testing::contraction_independent(m, t, s));
    }
  }
}

TEST_P(MatroidPropertyTest, ContractedMatroidsSatisfyAxioms) {
  const PrimeField f(GetParam());
  std::mt19937_64 rng(90 + GetParam());
  for (int trial = 0; trial < 20; ++trial) {
    const VectorMatroid m = random_matroid(rng, f, 5, 11);
    EXPECT_TRUE(check_axioms(contract(m, random_subset(rng, m.labels()))));
  }
}

TEST_P(MatroidPropertyTest, RankAxioms) {
  const PrimeField f(GetParam());
  std::mt19937_64 rng(110 + GetParam());
  for (int trial = 0; trial < 100; ++trial) {
    const VectorMatroid m = random_matroid(rng, f, 5, 8);
    const LabelSet a = random_subset(rng, m.labels());
    const LabelSet b = random_subset(rng, m.labels());
    const LabelSet both = set_union(a, b);
    LabelSet common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    EXPECT_LE(rank_of(m, a), a.size());
    EXPECT_LE(rank_of(m, a), rank_of(m, both));
    EXPECT_LE(rank_of(m, both) + rank_of(m, common), rank_of(m, a) + rank_of(m, b));
  }
}

TEST_P(MatroidPropertyTest, RepresentationPreservingOperations) {
  const PrimeField f(GetParam());
  std::mt19937_64 rng(130 + GetParam());
  std::uniform_int_distribution<int> nonzero(1, f.modulus() - 1);
  for (int trial = 0; trial < 60; ++trial) {
    const VectorMatroid m = random_matroid(rng, f, 5, 8);
    FieldMatrix rep = m.representation();
    for (int op = 0; op < 10; ++op) {
      testing::random_row_op(rng, rep);
      if (rep.rows() == 0) rep = rep.with_row_inserted(0);
      const auto col = std::uniform_int_distribution<std::size_t>(0, rep.cols() - 1)(rng);
      rep.scale_column(col, static_cast<Elem>(nonzero(rng)));
    }
    const VectorMatroid moved(rep, m.labels());
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m.size()); ++mask) {
      const LabelSet s = from_mask(m.labels(), mask);
      EXPECT_EQ(rank_of(moved, s), rank_of(m, s));
      EXPECT_EQ(is_independent(moved, s), is_independent(m, s));
    }
    const LabelSet s = random_subset(rng, m.labels());
    EXPECT_EQ(closure(moved, s), closure(m, s));
  }
}

TEST_P(MatroidPropertyTest, ContractionComposes) {
  const PrimeField f(GetParam());
  std::mt19937_64 rng(150 + GetParam());
  for (int trial = 0; trial < 60; ++trial) {
    const VectorMatroid m = random_matroid(rng, f, 5, 9);
    const LabelSet t1 = random_subset(rng, m.labels());
    const VectorMatroid first = contract(m, t1);
    const LabelSet t2 = random_subset(rng, first.labels());
    const VectorMatroid twice = contract(first, t2);
    const VectorMatroid once = contract(m, set_union(t1, t2));
    ASSERT_EQ(twice.ground_set(), once.ground_set());
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << once.size()); ++mask) {
      const LabelSet s = from_mask(once.labels(), mask);
      EXPECT_EQ(is_independent(twice, s), is_independent(once, s));
    }
  }
}

TEST_P(MatroidPropertyTest, ClosureIsExtensiveAndIdempotent) {
  const PrimeField f(GetParam());
  std::mt19937_64 rng(170 + GetParam());
  for (int trial = 0; trial < 100; ++trial) {
    const VectorMatroid m = random_matroid(rng, f, 5, 9);
    const LabelSet s = random_subset(rng, m.labels());
    const LabelSet cl = closure(m, s);
    EXPECT_TRUE(std::includes(cl.begin(), cl.end(), s.begin(), s.end()));
    EXPECT_EQ(closure(m, cl), cl);
    EXPECT_EQ(rank_of(m, cl), rank_of(m, s));
  }
}

INSTANTIATE_TEST_SUITE_P(SmallPrimes, MatroidPropertyTest, ::testing::Values(2, 3));

}  // namespace
}  // namespace ecic
