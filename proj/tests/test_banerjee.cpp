#include <gtest/gtest.h>

#include <random>

#include "eadj/banerjee.hpp"
#include "eadj/error.hpp"
#include "eadj/layers.hpp"
#include "eadj/uniformization.hpp"
#include "reference_tables.hpp"
#include "support.hpp"

using namespace eadj;
using eadj::testing::sample;

TEST(Partitions, Examples) {
  EXPECT_EQ(partitions_count(7, 3), 4);
  EXPECT_EQ(partitions_count(25, 5), 192);
  for (std::size_t m = 1; m <= 30; ++m) EXPECT_EQ(partitions_count(m, m), 1);
  EXPECT_EQ(partitions_count(3, 5), 0);
  EXPECT_EQ(partitions_count(4, 0), 0);
}

TEST(Partitions, ReferenceTableAndEnumerator) {
  PartitionTable table;
  for (std::size_t m = 1; m <= 25; ++m) {
    for (std::size_t s = 1; s <= 25; ++s) {
      const Integer got = table.count(m, s);
      EXPECT_EQ(got, eadj::testing::kPartitionCounts[m - 1][s - 1]) << "m=" << m << " s=" << s;
      if (s <= m) EXPECT_EQ(got, eadj::testing::enumerate_partitions(m, s)) << "m=" << m << " s=" << s;
    }
  }
}

TEST(Alpha, Examples) {
  EXPECT_EQ(alpha(5, 2), 30);
  EXPECT_EQ(alpha(4, 3), 36);
  for (std::size_t k = 1; k <= 12; ++k) EXPECT_EQ(alpha(k, 1), 1);
  EXPECT_EQ(alpha(15, 2), 32766);
  EXPECT_EQ(alpha(10, 2), 1022);
  EXPECT_EQ(alpha(5, 3), 150);
  EXPECT_THROW(alpha(3, 4), Error);
  EXPECT_THROW(alpha(3, 0), Error);
}

TEST(Alpha, SurjectionOracle) {
  for (std::size_t k = 1; k <= 8; ++k) {
    for (std::size_t s = 1; s <= k; ++s) {
      EXPECT_EQ(alpha(k, s), eadj::testing::count_surjections(k, s)) << "k=" << k << " s=" << s;
    }
    EXPECT_EQ(alpha(k, k), factorial(k));
  }
}

TEST(Alpha, ReferenceTableConsistentCells) {
  // Cells with s = 1, or s = 2 and odd k, agree with the composition sum;
  // the rest of the reference table does not.
  std::size_t agree = 0;
  for (const auto& cell : eadj::testing::kReferenceAlpha) {
    const bool same = alpha(cell.k, cell.s) == Integer(cell.value);
    if (cell.s == 1 || (cell.s == 2 && cell.k % 2 == 1)) EXPECT_TRUE(same) << cell.k << "," << cell.s;
    agree += same ? 1 : 0;
  }
  EXPECT_EQ(agree, 12u);
}

TEST(BanerjeeTensor, Examples) {
  const SymTensor a = banerjee_tensor(Hypergraph(2, {{1, 2}}));
  const Index k12[] = {2, 1};
  EXPECT_EQ(a.get(k12), 1);
  EXPECT_EQ(nnz_positions(a), 2);

  const SymTensor b = banerjee_tensor(Hypergraph(2, {{1}, {1, 2}}));
  const Index k11[] = {1, 1};
  EXPECT_EQ(b.get(k11), 1);

  const SymTensor c = banerjee_tensor(sample());
  EXPECT_EQ(c.order(), 3u);
  EXPECT_EQ(c.dim(), 7u);
  const Index k334[] = {3, 4, 3};
  const Index k555[] = {5, 5, 5};
  const Index k123[] = {1, 2, 3};
  EXPECT_EQ(c.get(k334), Rational(1, 3));
  EXPECT_EQ(c.get(k555), 1);
  EXPECT_EQ(c.get(k123), Rational(1, 2));
  EXPECT_THROW(banerjee_tensor(Hypergraph(2, {})), Error);
}

TEST(Compare, Sample) {
  const ComparisonReport r = compare(sample());
  EXPECT_EQ(r.layered.order, 3u);
  EXPECT_EQ(r.layered.dim, 9u);
  EXPECT_EQ(r.layered.total_elements, 729);
  EXPECT_EQ(r.layered.nnz_positions, 42);
  EXPECT_EQ(r.layered.describe_count, 7);
  EXPECT_EQ(r.layered_value, Rational(1, 2));
  EXPECT_EQ(r.banerjee.dim, 7u);
  EXPECT_EQ(r.banerjee.total_elements, 343);
  EXPECT_EQ(r.banerjee.describe_count, 7);
  EXPECT_EQ(r.banerjee.nnz_positions, 32);
  EXPECT_EQ(r.banerjee.nnz_positions, nnz_positions(banerjee_tensor(sample())));
  EXPECT_EQ(r.banerjee_values.at(1), 1);
  EXPECT_EQ(r.banerjee_values.at(2), Rational(1, 3));
  EXPECT_EQ(r.banerjee_values.at(3), Rational(1, 2));
  EXPECT_THROW(compare(Hypergraph(3, {})), Error);
}

TEST(Compare, UniformInputMatches) {
  const Hypergraph h(5, {{1, 2, 3}, {2, 4, 5}, {1, 3, 5}});
  const ComparisonReport r = compare(h);
  EXPECT_EQ(r.layered.nnz_positions, r.banerjee.nnz_positions);
  EXPECT_EQ(r.banerjee_values.size(), 1u);
  EXPECT_EQ(r.banerjee_values.at(3), r.layered_value);
}

TEST(BanerjeeProperties, DegreeRetrieval) {
  eadj::testing::RandomSpec spec;
  spec.max_n = 8;
  spec.max_k = 4;
  for (const Hypergraph& h : eadj::testing::random_suite(200, 71, spec)) {
    const SymTensor b = banerjee_tensor(h);
    const auto deg = degrees(h);
    for (Index i = 1; i <= h.num_vertices(); ++i) EXPECT_EQ(slice_sum(b, i), deg[i - 1]);
    const ComparisonReport r = compare(h);
    EXPECT_EQ(r.banerjee.nnz_positions, nnz_positions(b));
    EXPECT_EQ(r.layered.nnz_positions, nnz_positions(e_adjacency_tensor(h)));
  }
}

TEST(BanerjeeProperties, UniformCollapse) {
  for (const Hypergraph& h : eadj::testing::random_uniform_suite(200, 81)) {
    const std::size_t k = h.max_cardinality();
    EXPECT_EQ(banerjee_tensor(h), layer_tensor_degree_normalized(h, k));
  }
}
