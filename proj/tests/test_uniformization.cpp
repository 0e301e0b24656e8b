#include <gtest/gtest.h>

#include <map>
#include <set>

#include "eadj/error.hpp"
#include "eadj/layers.hpp"
#include "eadj/uniformization.hpp"
#include "support.hpp"

using namespace eadj;
using eadj::testing::sample;

namespace {

std::map<Hyperedge, Rational> weighted_edges(const WeightedHypergraph& hw) {
  std::map<Hyperedge, Rational> out;
  for (std::size_t id = 1; id <= hw.num_edges(); ++id) out.emplace(hw.base().edge(id), hw.weight(id));
  return out;
}

std::set<Hyperedge> edge_set(const Hypergraph& h) { return {h.edges().begin(), h.edges().end()}; }

}  // namespace

TEST(Policy, Coefficients) {
  EXPECT_EQ(CoefficientPolicy::handshake().coefficient(2, 3), Rational(3, 2));
  EXPECT_EQ(CoefficientPolicy::handshake().coefficient(3, 3), 1);
  EXPECT_EQ(CoefficientPolicy::unit().coefficient(1, 5), 1);
  const auto ex = CoefficientPolicy::explicit_values({Rational(2), Rational(1, 3)});
  EXPECT_EQ(ex.coefficient(2, 2), Rational(1, 3));
  EXPECT_THROW(ex.coefficient(3, 3), Error);
  EXPECT_THROW(CoefficientPolicy::handshake().coefficient(0, 3), Error);
  EXPECT_THROW(CoefficientPolicy::explicit_values({Rational(0)}), Error);
}

TEST(VertexAugment, Examples) {
  const WeightedHypergraph l1 = WeightedHypergraph::unit(Hypergraph(7, {{4}, {5}}));
  const WeightedHypergraph a = vertex_augment(l1, 8);
  EXPECT_EQ(a.num_vertices(), 8u);
  EXPECT_EQ(edge_set(a.base()), (std::set<Hyperedge>{{4, 8}, {5, 8}}));
  EXPECT_EQ(a.weights(), l1.weights());

  const WeightedHypergraph empty = vertex_augment(WeightedHypergraph::unit(Hypergraph(3, {})), 4);
  EXPECT_EQ(empty.num_vertices(), 4u);
  EXPECT_TRUE(empty.base().empty());

  EXPECT_THROW(vertex_augment(l1, 7), Error);
  EXPECT_THROW(vertex_augment(WeightedHypergraph::unit(Hypergraph(3, {{1}, {1, 2}})), 4), Error);
}

TEST(Merge, Examples) {
  const WeightedHypergraph l1(Hypergraph(7, {{4}, {5}}), {Rational(3), Rational(3)});
  const WeightedHypergraph l2(Hypergraph(7, {{6, 7}, {3, 4}, {4, 7}}), std::vector<Rational>(3, Rational(3, 2)));
  const WeightedHypergraph m = merge(vertex_augment(l1, 8), l2);
  EXPECT_EQ(m.num_edges(), 5u);
  EXPECT_EQ(m.num_vertices(), 8u);
  const auto w = weighted_edges(m);
  EXPECT_EQ(w.at({4, 8}), 3);
  EXPECT_EQ(w.at({3, 4}), Rational(3, 2));

  const WeightedHypergraph empty = WeightedHypergraph::unit(Hypergraph(7, {}));
  EXPECT_EQ(weighted_edges(merge(l2, empty)), weighted_edges(l2));
  EXPECT_THROW(merge(l2, WeightedHypergraph::unit(Hypergraph(7, {{1, 2, 3}}))), Error);
  EXPECT_THROW(merge(l2, WeightedHypergraph::unit(Hypergraph(7, {{3, 4}}))), Error);
}

TEST(LayeredUniform, Sample) {
  const LayeredUniform lu = layered_uniform(sample());
  EXPECT_EQ(lu.k_max, 3u);
  EXPECT_EQ(lu.hypergraph.num_vertices(), 9u);
  const std::map<Hyperedge, Rational> want = {
      {{1, 2, 3}, 1},           {{1, 2, 7}, 1},           {{3, 4, 9}, Rational(3, 2)},
      {{6, 7, 9}, Rational(3, 2)}, {{4, 7, 9}, Rational(3, 2)}, {{4, 8, 9}, 3},
      {{5, 8, 9}, 3},
  };
  EXPECT_EQ(weighted_edges(lu.hypergraph), want);
  // origin maps each uniform edge back to its source edge.
  for (std::size_t id = 1; id <= lu.hypergraph.num_edges(); ++id) {
    Hyperedge e;
    for (VertexId v : lu.hypergraph.base().edge(id)) {
      if (v <= 7) e.push_back(v);
    }
    EXPECT_EQ(sample().edge(lu.origin[id - 1]), e);
  }
}

TEST(LayeredUniform, UniformInput) {
  const Hypergraph h(4, {{1, 2, 3}, {2, 3, 4}});
  const LayeredUniform lu = layered_uniform(h);
  EXPECT_EQ(lu.hypergraph.num_vertices(), 6u);
  EXPECT_EQ(edge_set(lu.hypergraph.base()), edge_set(h));
  for (const auto& w : lu.hypergraph.weights()) EXPECT_EQ(w, 1);
}

TEST(LayeredUniform, Singleton) {
  const LayeredUniform lu = layered_uniform(Hypergraph(1, {{1}}));
  EXPECT_EQ(lu.hypergraph.num_vertices(), 1u);
  EXPECT_EQ(lu.hypergraph.weight(1), 1);
  EXPECT_THROW(layered_uniform(Hypergraph(2, {})), Error);
}

TEST(EAdjacency, Sample) {
  const SymTensor t = e_adjacency_tensor(sample());
  EXPECT_EQ(t.order(), 3u);
  EXPECT_EQ(t.dim(), 9u);
  std::set<IndexTuple> keys;
  for (const auto& [k, v] : t.entries()) {
    keys.insert(k);
    EXPECT_EQ(v, Rational(1, 2));
  }
  const std::set<IndexTuple> want = {{1, 2, 3}, {1, 2, 7}, {3, 4, 9}, {4, 7, 9},
                                     {4, 8, 9}, {5, 8, 9}, {6, 7, 9}};
  EXPECT_EQ(keys, want);
}

TEST(EAdjacency, GraphIsBorderedAdjacency) {
  const SymTensor t = e_adjacency_tensor(eadj::testing::triangle());
  EXPECT_EQ(t.dim(), 4u);
  for (Index i = 1; i <= 4; ++i) {
    for (Index j = 1; j <= 4; ++j) {
      const Index idx[] = {i, j};
      EXPECT_EQ(t.get(idx), (i != j && i <= 3 && j <= 3) ? 1 : 0);
    }
  }
}

TEST(EAdjacency, Singleton) {
  const SymTensor t = e_adjacency_tensor(Hypergraph(1, {{1}}));
  EXPECT_EQ(t.order(), 1u);
  EXPECT_EQ(t.dim(), 1u);
  const Index k[] = {1};
  EXPECT_EQ(t.get(k), 1);
  EXPECT_THROW(e_adjacency_tensor(Hypergraph(3, {})), Error);
}

TEST(Retrieval, Sample) {
  const SymTensor t = e_adjacency_tensor(sample());
  EXPECT_EQ(vertex_degrees_from_tensor(t, 7), (std::vector<Rational>{2, 2, 2, 3, 1, 1, 3}));
  const LayerCounts c = layer_counts_from_tensor(t, 7);
  EXPECT_EQ(c.cumulative, (std::vector<Rational>{2, 5, 7}));
  EXPECT_EQ(c.by_size, (std::vector<Rational>{2, 3, 2}));
}

TEST(Retrieval, SmallCases) {
  EXPECT_EQ(vertex_degrees_from_tensor(e_adjacency_tensor(Hypergraph(3, {{1, 2, 3}})), 3),
            (std::vector<Rational>{1, 1, 1}));
  EXPECT_EQ(vertex_degrees_from_tensor(e_adjacency_tensor(Hypergraph(1, {{1}})), 1),
            (std::vector<Rational>{1}));
  const LayerCounts u = layer_counts_from_tensor(e_adjacency_tensor(Hypergraph(4, {{1, 2, 3}, {2, 3, 4}})), 4);
  EXPECT_EQ(u.cumulative, (std::vector<Rational>{0, 0, 2}));
  EXPECT_EQ(u.by_size, (std::vector<Rational>{0, 0, 2}));
  const LayerCounts s = layer_counts_from_tensor(e_adjacency_tensor(Hypergraph(1, {{1}})), 1);
  EXPECT_EQ(s.cumulative, (std::vector<Rational>{1}));
  EXPECT_THROW(layer_counts_from_tensor(e_adjacency_tensor(sample()), 6), Error);
}

TEST(Reconstruct, Sample) {
  EXPECT_TRUE(reconstruct(e_adjacency_tensor(sample()), 7).same_edge_set(sample()));
}

TEST(Reconstruct, RejectsBrokenSuffix) {
  SymTensor t(3, 9);
  const Index k[] = {1, 2, 8};
  t.set(k, Rational(1, 2));
  EXPECT_THROW(reconstruct(t, 7), Error);
  EXPECT_THROW(reconstruct(e_adjacency_tensor(sample()), 8), Error);
}

TEST(UniformizationProperties, RandomSuite) {
  for (const Hypergraph& h : eadj::testing::random_suite(250, 51)) {
    const std::size_t n = h.num_vertices();
    const std::size_t k = h.max_cardinality();
    const SymTensor t = e_adjacency_tensor(h);

    EXPECT_EQ(t, eadj::testing::closed_form_layered(h));
    EXPECT_EQ(t.num_keys(), h.num_edges());
    EXPECT_EQ(nnz_positions(t), factorial(k) * h.num_edges());
    EXPECT_EQ(total_sum(t), k * h.num_edges());
    for (const auto& [key, v] : t.entries()) {
      EXPECT_EQ(std::adjacent_find(key.begin(), key.end()), key.end());
    }

    const auto deg = degrees(h);
    const auto got = vertex_degrees_from_tensor(t, n);
    for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(got[i], deg[i]);

    const LayerCounts c = layer_counts_from_tensor(t, n);
    for (std::size_t i = 1; i <= k; ++i) {
      std::size_t small = 0;
      std::size_t exact = 0;
      for (const auto& e : h.edges()) {
        small += e.size() <= i ? 1 : 0;
        exact += e.size() == i ? 1 : 0;
      }
      EXPECT_EQ(c.cumulative[i - 1], small);
      EXPECT_EQ(c.by_size[i - 1], exact);
      if (i < k) EXPECT_EQ(slice_sum(t, n + i), small);
    }

    EXPECT_TRUE(reconstruct(t, n).same_edge_set(h));

    for (const auto& policy : {CoefficientPolicy::handshake(), CoefficientPolicy::unit()}) {
      const LayeredUniform it = layered_uniform(h, policy);
      const LayeredUniform direct = layered_uniform_direct(h, policy);
      EXPECT_EQ(weighted_edges(it.hypergraph), weighted_edges(direct.hypergraph));
      EXPECT_EQ(it.hypergraph.num_vertices(), n + k - 1);
      EXPECT_EQ(layered_tensor(it), e_adjacency_tensor(h, policy));
    }
  }
}
