#include "eadj/layers.hpp"

#include <set>
#include <string>

#include "eadj/error.hpp"

namespace eadj {

const Hypergraph& LayerDecomposition::layer(std::size_t k) const {
  if (k < 1 || k > layers_.size()) {
    throw Error("layer " + std::to_string(k) + " outside [1, " + std::to_string(layers_.size()) +
                "]");
  }
  return layers_[k - 1];
}

const std::vector<std::size_t>& LayerDecomposition::origin(std::size_t k) const {
  layer(k);
  return origin_[k - 1];
}

LayerDecomposition decompose(const Hypergraph& h) {
  if (h.empty()) throw Error("cannot decompose a hypergraph without edges");
  const std::size_t k_max = h.max_cardinality();
  std::vector<std::vector<Hyperedge>> buckets(k_max);
  LayerDecomposition d;
  d.origin_.resize(k_max);
  for (std::size_t id = 1; id <= h.num_edges(); ++id) {
    const Hyperedge& e = h.edge(id);
    buckets[e.size() - 1].push_back(e);
    d.origin_[e.size() - 1].push_back(id);
  }
  d.base_ = h;
  d.layers_.reserve(k_max);
  for (auto& b : buckets) d.layers_.emplace_back(h.num_vertices(), std::move(b));
  return d;
}

Hypergraph direct_sum(std::span<const Hypergraph> parts) {
  if (parts.empty()) throw Error("direct sum of an empty sequence");
  const std::size_t n = parts.front().num_vertices();
  std::set<Hyperedge> seen;
  std::vector<Hyperedge> edges;
  for (const auto& p : parts) {
    if (p.num_vertices() != n) throw Error("direct sum: vertex counts differ");
    for (const auto& e : p.edges()) {
      if (!seen.insert(e).second) throw Error("direct sum: edge families overlap");
      edges.push_back(e);
    }
  }
  return Hypergraph(n, std::move(edges));
}

}  // namespace eadj
