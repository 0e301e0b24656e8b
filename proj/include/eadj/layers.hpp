#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "eadj/hypergraph.hpp"

namespace eadj {

/// Partition of the edge family by cardinality. Layer k (1..k_max) is the
/// k-uniform hypergraph (V, E_k) on the full vertex set; unrealized sizes give
/// an empty layer.
class LayerDecomposition {
 public:
  const Hypergraph& base() const noexcept { return base_; }
  std::size_t k_max() const noexcept { return layers_.size(); }

  /// 1-based: layer(k) holds exactly the edges of cardinality k.
  const Hypergraph& layer(std::size_t k) const;
  const std::vector<Hypergraph>& layers() const noexcept { return layers_; }

  /// Edge ids (into base) of the members of layer k, in family order.
  const std::vector<std::size_t>& origin(std::size_t k) const;

 private:
  friend LayerDecomposition decompose(const Hypergraph& h);

  Hypergraph base_;
  std::vector<Hypergraph> layers_;
  std::vector<std::vector<std::size_t>> origin_;
};

/// Throws Error when h has no edges (k_max undefined).
LayerDecomposition decompose(const Hypergraph& h);

/// Union of pairwise edge-disjoint hypergraphs on a common vertex count.
/// Throws Error on overlapping families, mismatched vertex counts or an empty
/// sequence.
Hypergraph direct_sum(std::span<const Hypergraph> parts);

}  // namespace eadj
