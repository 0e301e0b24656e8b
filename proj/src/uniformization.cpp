#include "eadj/uniformization.hpp"

#include <set>
#include <string>
#include <utility>

#include "eadj/error.hpp"
#include "eadj/layers.hpp"

namespace eadj {

// --- CoefficientPolicy ------------------------------------------------------

CoefficientPolicy CoefficientPolicy::unit() { return CoefficientPolicy(Kind::unit); }

CoefficientPolicy CoefficientPolicy::handshake() { return CoefficientPolicy(Kind::handshake); }

CoefficientPolicy CoefficientPolicy::explicit_values(std::vector<Rational> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] <= 0) throw Error("coefficient c_" + std::to_string(i + 1) + " is not positive");
  }
  CoefficientPolicy p(Kind::explicit_values);
  p.values_ = std::move(values);
  return p;
}

Rational CoefficientPolicy::coefficient(std::size_t k, std::size_t k_max) const {
  if (k < 1 || k > k_max) {
    throw Error("coefficient index " + std::to_string(k) + " outside [1, " +
                std::to_string(k_max) + "]");
  }
  switch (kind_) {
    case Kind::unit:
      return Rational(1);
    case Kind::handshake: {
      Rational c(static_cast<unsigned long>(k_max), static_cast<unsigned long>(k));
      c.canonicalize();
      return c;
    }
    case Kind::explicit_values:
      if (k > values_.size()) {
        throw Error("no explicit coefficient for layer " + std::to_string(k));
      }
      return values_[k - 1];
  }
  return Rational(1);
}

// --- inflation / merging ----------------------------------------------------

namespace {

// Cardinality shared by all edges, 0 for an empty family.
std::size_t uniform_size(const Hypergraph& h) {
  if (h.empty()) return 0;
  const std::size_t k = h.edges().front().size();
  for (const auto& e : h.edges()) {
    if (e.size() != k) throw Error("hypergraph is not uniform");
  }
  return k;
}

}  // namespace

WeightedHypergraph vertex_augment(const WeightedHypergraph& hw, VertexId y) {
  if (y >= 1 && y <= hw.num_vertices()) {
    throw Error("vertex " + std::to_string(y) + " is already present");
  }
  if (y == 0) throw Error("vertex ids are 1-based");
  uniform_size(hw.base());
  std::vector<Hyperedge> edges = hw.base().edges();
  for (auto& e : edges) e.push_back(y);
  return WeightedHypergraph(Hypergraph(y, std::move(edges)), hw.weights());
}

WeightedHypergraph merge(const WeightedHypergraph& a, const WeightedHypergraph& b) {
  const std::size_t ka = uniform_size(a.base());
  const std::size_t kb = uniform_size(b.base());
  if (ka != 0 && kb != 0 && ka != kb) {
    throw Error("cannot merge a " + std::to_string(ka) + "-uniform and a " + std::to_string(kb) +
                "-uniform hypergraph");
  }
  std::vector<Hyperedge> edges = a.base().edges();
  std::vector<Rational> weights = a.weights();
  for (std::size_t id = 1; id <= b.num_edges(); ++id) {
    if (a.base().contains_edge(b.base().edge(id))) throw Error("merge: edge families overlap");
    edges.push_back(b.base().edge(id));
    weights.push_back(b.weight(id));
  }
  const std::size_t n = std::max(a.num_vertices(), b.num_vertices());
  return WeightedHypergraph(Hypergraph(n, std::move(edges)), std::move(weights));
}

LayeredUniform layered_uniform(const Hypergraph& h, const CoefficientPolicy& policy) {
  const LayerDecomposition layers = decompose(h);
  const std::size_t n = h.num_vertices();
  const std::size_t k_max = layers.k_max();

  auto weighted_layer = [&](std::size_t k) {
    const Hypergraph& hk = layers.layer(k);
    return WeightedHypergraph(hk, std::vector<Rational>(hk.num_edges(), policy.coefficient(k, k_max)));
  };

  WeightedHypergraph current = weighted_layer(1);
  std::vector<std::size_t> origin = layers.origin(1);
  for (std::size_t k = 1; k < k_max; ++k) {
    // Inflation with y_k = n + k, then merge with the next layer.
    current = merge(vertex_augment(current, n + k), weighted_layer(k + 1));
    const auto& next = layers.origin(k + 1);
    origin.insert(origin.end(), next.begin(), next.end());
  }
  return LayeredUniform{n, k_max, std::move(current), std::move(origin)};
}

LayeredUniform layered_uniform_direct(const Hypergraph& h, const CoefficientPolicy& policy) {
  if (h.empty()) throw Error("cannot uniformize a hypergraph without edges");
  const std::size_t n = h.num_vertices();
  const std::size_t k_max = h.max_cardinality();
  std::vector<Hyperedge> edges;
  std::vector<Rational> weights;
  std::vector<std::size_t> origin;
  for (std::size_t id = 1; id <= h.num_edges(); ++id) {
    Hyperedge e = h.edge(id);
    const std::size_t size = e.size();
    for (std::size_t j = size; j < k_max; ++j) e.push_back(n + j);
    edges.push_back(std::move(e));
    weights.push_back(policy.coefficient(size, k_max));
    origin.push_back(id);
  }
  return LayeredUniform{n, k_max,
                        WeightedHypergraph(Hypergraph(n + k_max - 1, std::move(edges)),
                                           std::move(weights)),
                        std::move(origin)};
}

SymTensor layered_tensor(const LayeredUniform& lu) {
  const Hypergraph& g = lu.hypergraph.base();
  SymTensor t(lu.k_max, lu.original_vertices + lu.k_max - 1);
  const Integer denom = factorial(lu.k_max);
  for (std::size_t id = 1; id <= g.num_edges(); ++id) {
    const Hyperedge& e = g.edge(id);
    std::size_t original = 0;
    for (VertexId v : e) original += v <= lu.original_vertices ? 1 : 0;
    Rational value = lu.hypergraph.weight(id) * Rational(static_cast<unsigned long>(original)) / Rational(denom);
    t.set(e, value);
  }
  return t;
}

SymTensor e_adjacency_tensor(const Hypergraph& h, const CoefficientPolicy& policy) {
  if (h.empty()) throw Error("cannot build the e-adjacency tensor of a hypergraph without edges");
  const std::size_t n = h.num_vertices();
  const std::size_t k_max = h.max_cardinality();
  const Integer k_max_fact = factorial(k_max);
  SymTensor t(k_max, n + k_max - 1);
  for (const auto& edge : h.edges()) {
    const std::size_t j = edge.size();
    // (j!/k_max!) * c_j * a_(j), with a_(j) = 1/(j-1)! the degree-normalized entry.
    Rational value = Rational(factorial(j), k_max_fact) * policy.coefficient(j, k_max) /
                     Rational(factorial(j - 1));
    value.canonicalize();
    IndexTuple key = edge;
    for (std::size_t s = j; s < k_max; ++s) key.push_back(n + s);
    t.set(key, value);
  }
  return t;
}

std::vector<Rational> vertex_degrees_from_tensor(const SymTensor& t, std::size_t n) {
  if (n > t.dim()) throw Error("vertex count exceeds tensor dimension");
  std::vector<Rational> d;
  d.reserve(n);
  for (Index i = 1; i <= n; ++i) d.push_back(slice_sum(t, i));
  return d;
}

LayerCounts layer_counts_from_tensor(const SymTensor& t, std::size_t n) {
  const std::size_t k_max = t.order();
  if (t.dim() != n + k_max - 1) {
    throw Error("tensor dimension " + std::to_string(t.dim()) + " does not match n + k_max - 1 = " +
                std::to_string(n + k_max - 1));
  }
  LayerCounts c;
  for (std::size_t i = 1; i < k_max; ++i) c.cumulative.push_back(slice_sum(t, n + i));
  c.cumulative.push_back(total_sum(t) / Rational(static_cast<unsigned long>(k_max)));
  for (std::size_t s = 1; s <= k_max; ++s) {
    c.by_size.push_back(s == 1 ? c.cumulative[0] : Rational(c.cumulative[s - 1] - c.cumulative[s - 2]));
  }
  return c;
}

Hypergraph reconstruct(const SymTensor& t, std::size_t n) {
  const std::size_t k_max = t.order();
  if (t.dim() != n + k_max - 1) {
    throw Error("tensor dimension " + std::to_string(t.dim()) + " does not match n + k_max - 1 = " +
                std::to_string(n + k_max - 1));
  }
  std::vector<Hyperedge> edges;
  for (const auto& [key, value] : t.entries()) {
    Hyperedge e;
    std::size_t p = 0;
    while (p < key.size() && key[p] <= n) e.push_back(key[p++]);
    const std::size_t j = e.size();
    bool suffix_ok = j >= 1;
    for (std::size_t s = j; suffix_ok && s < k_max; ++s, ++p) suffix_ok = key[p] == n + s;
    if (!suffix_ok) {
      std::string text;
      for (Index i : key) text += (text.empty() ? "" : " ") + std::to_string(i);
      throw Error("key (" + text + ") is not an edge followed by its y-suffix");
    }
    edges.push_back(std::move(e));
  }
  return Hypergraph(n, std::move(edges));
}

}  // namespace eadj
