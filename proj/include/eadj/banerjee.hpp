#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "eadj/hypergraph.hpp"
#include "eadj/rational.hpp"
#include "eadj/symtensor.hpp"

namespace eadj {

/// Memoized p_s(m), the number of partitions of m into exactly s positive
/// parts. Not thread-safe; use one table per thread.
class PartitionTable {
 public:
  Integer count(std::size_t m, std::size_t s);

 private:
  std::map<std::pair<std::size_t, std::size_t>, Integer> memo_;
};

/// p_s(m); 0 when s > m or s == 0 (p_0(0) = 1).
Integer partitions_count(std::size_t m, std::size_t s);

/// Sum of k!/(k_1!...k_s!) over the compositions of k into s positive
/// parts, i.e. the number of surjections from k positions onto s labels.
/// Throws Error unless 1 <= s <= k.
Integer alpha(std::size_t k, std::size_t s);

/// Edge e of size s fills every position drawn from e that uses each of its
/// vertices at least once, with value s / alpha(k_max, s). Order k_max,
/// dimension n.
SymTensor banerjee_tensor(const Hypergraph& h);

struct ModelFigures {
  std::size_t order = 0;
  std::size_t dim = 0;
  Integer total_elements;
  Integer nnz_positions;
  /// Elements to describe before permutation of indices.
  Integer describe_count;
  /// Canonical keys actually stored by this implementation.
  std::size_t stored_keys = 0;
};

struct ComparisonReport {
  ModelFigures layered;
  ModelFigures banerjee;
  Rational layered_value;
  /// Entry value s/alpha(k_max, s) for every edge size s present.
  std::map<std::size_t, Rational> banerjee_values;
};

ComparisonReport compare(const Hypergraph& h);

/// `model.key=value` lines.
std::string to_keyvalue(const ComparisonReport& r);
/// Aligned table with one row per metric.
std::string to_table(const ComparisonReport& r);

}  // namespace eadj
