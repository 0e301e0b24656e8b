#pragma once

#include <cstddef>
#include <vector>

#include "eadj/hypergraph.hpp"
#include "eadj/symtensor.hpp"

namespace eadj {

/// Per-layer dilatation coefficients c_1..c_{k_max}.
class CoefficientPolicy {
 public:
  enum class Kind { unit, handshake, explicit_values };

  /// c_k = 1.
  static CoefficientPolicy unit();
  /// c_k = k_max / k; together with degree-normalized layers this makes every
  /// tensor entry 1/(k_max-1)! and the total sum k_max * |E|.
  static CoefficientPolicy handshake();
  /// c_k = values[k-1]; every value must be positive.
  static CoefficientPolicy explicit_values(std::vector<Rational> values);

  Kind kind() const noexcept { return kind_; }

  /// Throws Error if k is outside [1, k_max] or an explicit sequence is too
  /// short.
  Rational coefficient(std::size_t k, std::size_t k_max) const;

 private:
  explicit CoefficientPolicy(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::vector<Rational> values_;
};

/// Weighted k_max-uniform hypergraph on n + k_max - 1 vertices obtained by
/// filling every edge e with y-vertices n+|e|, ..., n+k_max-1.
struct LayeredUniform {
  std::size_t original_vertices = 0;
  std::size_t k_max = 0;
  WeightedHypergraph hypergraph;
  /// origin[i] is the 1-based id, in the source hypergraph, of edge i+1.
  std::vector<std::size_t> origin;
};

/// Adds fresh vertex y (> n; the vertex range grows to y) to every edge.
/// Weights are kept. Throws Error if y is already a vertex.
WeightedHypergraph vertex_augment(const WeightedHypergraph& hw, VertexId y);

/// Union of two k-uniform weighted hypergraphs with disjoint edge families;
/// each edge keeps its own weight. An empty family merges with any k.
WeightedHypergraph merge(const WeightedHypergraph& a, const WeightedHypergraph& b);

/// The iterative inflate/merge process, layer 1 upwards. Throws Error on an
/// empty hypergraph.
LayeredUniform layered_uniform(const Hypergraph& h,
                               const CoefficientPolicy& policy = CoefficientPolicy::handshake());

/// Same result built edge by edge, without the iteration.
LayeredUniform layered_uniform_direct(const Hypergraph& h,
                                      const CoefficientPolicy& policy = CoefficientPolicy::handshake());

/// Layered e-adjacency tensor of order k_max and dimension n + k_max - 1 from
/// degree-normalized layers. Each edge e gives the key
/// sorted(e + {n+|e|..n+k_max-1}) with value (|e|!/k_max!) * c_|e| / (|e|-1)!,
/// which is 1/(k_max-1)! under the default policy.
SymTensor e_adjacency_tensor(const Hypergraph& h,
                             const CoefficientPolicy& policy = CoefficientPolicy::handshake());

/// Tensor of a layered uniform hypergraph: edge ê with original part e gets
/// value w(ê) * |e| / k_max!, i.e. its weight times the degree-normalized
/// layer entry, spread over the k_max! positions of ê.
SymTensor layered_tensor(const LayeredUniform& lu);

/// Slice sums at 1..n, i.e. the vertex degrees.
std::vector<Rational> vertex_degrees_from_tensor(const SymTensor& t, std::size_t n);

struct LayerCounts {
  /// cumulative[i-1] = d_{n+i} = number of edges of size <= i, for
  /// i = 1..k_max; the last one is total_sum / k_max.
  std::vector<Rational> cumulative;
  /// by_size[s-1] = number of edges of size s.
  std::vector<Rational> by_size;
};

LayerCounts layer_counts_from_tensor(const SymTensor& t, std::size_t n);

/// Drops the y-indices of every key. Throws Error if a key's y-part is not
/// the suffix {n+j, ..., n+k_max-1} for some j, or the dimension does not
/// match n + order - 1.
Hypergraph reconstruct(const SymTensor& t, std::size_t n);

}  // namespace eadj
