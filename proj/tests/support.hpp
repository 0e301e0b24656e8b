#pragma once

// Fixtures, random generators and brute-force oracles shared by the unit
// tests and the acceptance runner. Oracles deliberately avoid the library's
// canonical-key machinery.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "eadj/hypergraph.hpp"
#include "eadj/rational.hpp"
#include "eadj/symtensor.hpp"

namespace eadj::testing {

inline Hypergraph sample() {
  return Hypergraph(7, {{1, 2, 3}, {1, 2, 7}, {6, 7}, {5}, {4}, {3, 4}, {4, 7}});
}

inline Hypergraph triangle() { return Hypergraph(3, {{1, 2}, {1, 3}, {2, 3}}); }

inline Hypergraph single_edge_graph() { return Hypergraph(2, {{1, 2}}); }

struct RandomSpec {
  std::size_t max_n = 12;
  std::size_t max_k = 5;
  std::size_t max_edges = 14;
};

/// Random hypergraph with at least one edge and range exactly k, for a
/// per-instance k <= max_k. Edge sizes are drawn in [1, k]; the first edge
/// has size k; duplicates are dropped.
inline Hypergraph random_hypergraph(std::mt19937_64& rng, const RandomSpec& spec = {}) {
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  const std::size_t k = pick(1, std::min(spec.max_k, spec.max_n));
  const std::size_t n = pick(k, spec.max_n);
  const std::size_t m = pick(1, spec.max_edges);
  std::vector<VertexId> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = i + 1;
  std::set<Hyperedge> seen;
  std::vector<Hyperedge> edges;
  for (std::size_t j = 0; j < m; ++j) {
    std::shuffle(pool.begin(), pool.end(), rng);
    const std::size_t size = j == 0 ? k : pick(1, k);
    Hyperedge e(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
    std::sort(e.begin(), e.end());
    if (seen.insert(e).second) edges.push_back(e);
  }
  return Hypergraph(n, edges);
}

inline std::vector<Hypergraph> random_suite(std::size_t count, std::uint64_t seed,
                                            const RandomSpec& spec = {}) {
  std::mt19937_64 rng(seed);
  std::vector<Hypergraph> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_hypergraph(rng, spec));
  return out;
}

/// Random k-uniform hypergraph on n vertices (k <= n).
inline Hypergraph random_uniform(std::mt19937_64& rng, std::size_t n, std::size_t k,
                                 std::size_t max_edges) {
  std::vector<VertexId> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = i + 1;
  std::set<Hyperedge> seen;
  std::vector<Hyperedge> edges;
  const std::size_t m = std::uniform_int_distribution<std::size_t>(1, max_edges)(rng);
  for (std::size_t j = 0; j < m; ++j) {
    std::shuffle(pool.begin(), pool.end(), rng);
    Hyperedge e(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(e.begin(), e.end());
    if (seen.insert(e).second) edges.push_back(e);
  }
  return Hypergraph(n, edges);
}

inline std::vector<Hypergraph> random_uniform_suite(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Hypergraph> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 9)(rng);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(n, 5))(rng);
    out.push_back(random_uniform(rng, n, k, 10));
  }
  return out;
}

/// r-regular r-uniform hypergraphs: the r-uniform hypergraph with one edge
/// {1..r} (1-regular), the cycle-like family on Z_n with edges
/// {i, i+1, ..., i+r-1} (r-regular when n > r), and K_3 (2-regular graph).
inline std::vector<std::pair<Hypergraph, std::size_t>> regular_uniform_family() {
  std::vector<std::pair<Hypergraph, std::size_t>> out;
  out.emplace_back(Hypergraph(3, {{1, 2, 3}}), 1);
  out.emplace_back(triangle(), 2);
  for (std::size_t r = 2; r <= 4; ++r) {
    for (std::size_t n = r + 1; n <= 8; ++n) {
      std::vector<Hyperedge> edges;
      for (std::size_t i = 0; i < n; ++i) {
        Hyperedge e;
        for (std::size_t j = 0; j < r; ++j) e.push_back((i + j) % n + 1);
        std::sort(e.begin(), e.end());
        edges.push_back(e);
      }
      out.emplace_back(Hypergraph(n, edges), r);
    }
  }
  return out;
}

/// Full dense tensor: every position stored explicitly. Built by expanding
/// each canonical key with std::next_permutation.
class DenseTensor {
 public:
  DenseTensor(std::size_t order, std::size_t dim) : order_(order), dim_(dim) {
    std::size_t size = 1;
    for (std::size_t i = 0; i < order; ++i) size *= dim;
    data_.assign(size, Rational(0));
  }

  static DenseTensor from(const SymTensor& t) {
    DenseTensor d(t.order(), t.dim());
    for (const auto& [key, value] : t.entries()) {
      IndexTuple p = key;
      std::sort(p.begin(), p.end());
      do {
        d.at(p) = value;
      } while (std::next_permutation(p.begin(), p.end()));
    }
    return d;
  }

  Rational& at(const IndexTuple& idx) { return data_[offset(idx)]; }
  const Rational& at(const IndexTuple& idx) const { return data_[offset(idx)]; }

  /// Visits every position in row-major order.
  void for_each(const std::function<void(const IndexTuple&, const Rational&)>& f) const {
    if (dim_ == 0) return;
    IndexTuple idx(order_, 1);
    while (true) {
      f(idx, at(idx));
      std::size_t p = order_;
      while (p > 0 && idx[p - 1] == dim_) idx[--p] = 1;
      if (p == 0) return;
      ++idx[p - 1];
    }
  }

  Rational slice_sum(Index i) const {
    Rational s = 0;
    for_each([&](const IndexTuple& idx, const Rational& v) {
      if (idx[0] == i) s += v;
    });
    return s;
  }

  Rational total() const {
    Rational s = 0;
    for (const auto& v : data_) s += v;
    return s;
  }

  std::size_t nonzeros() const {
    return static_cast<std::size_t>(std::count_if(data_.begin(), data_.end(), [](const Rational& v) { return v != 0; }));
  }

  std::vector<Rational> apply(const std::vector<Rational>& x) const {
    std::vector<Rational> out(dim_, Rational(0));
    for_each([&](const IndexTuple& idx, const Rational& v) {
      if (v == 0) return;
      Rational term = v;
      for (std::size_t p = 1; p < idx.size(); ++p) term *= x[idx[p] - 1];
      out[idx[0] - 1] += term;
    });
    return out;
  }

  bool symmetric() const {
    bool ok = true;
    for_each([&](const IndexTuple& idx, const Rational& v) {
      IndexTuple p = idx;
      std::sort(p.begin(), p.end());
      do {
        ok = ok && at(p) == v;
      } while (std::next_permutation(p.begin(), p.end()));
    });
    return ok;
  }

 private:
  std::size_t offset(const IndexTuple& idx) const {
    std::size_t o = 0;
    for (Index i : idx) o = o * dim_ + (i - 1);
    return o;
  }

  std::size_t order_;
  std::size_t dim_;
  std::vector<Rational> data_;
};

/// Partitions of m into exactly s positive parts, by listing nonincreasing
/// sequences.
inline std::size_t enumerate_partitions(std::size_t m, std::size_t s) {
  std::size_t count = 0;
  std::function<void(std::size_t, std::size_t, std::size_t)> go = [&](std::size_t rest,
                                                                      std::size_t parts,
                                                                      std::size_t cap) {
    if (parts == 0) {
      count += rest == 0 ? 1 : 0;
      return;
    }
    for (std::size_t p = std::min(rest, cap); p >= 1; --p) {
      if (p * parts < rest) break;  // remaining parts cannot exceed p
      go(rest - p, parts - 1, p);
    }
  };
  go(m, s, m);
  return count;
}

/// Tuples in [s]^k that use every label, counted by full enumeration.
inline std::size_t count_surjections(std::size_t k, std::size_t s) {
  std::vector<std::size_t> t(k, 0);
  std::size_t count = 0;
  while (true) {
    std::vector<bool> hit(s, false);
    for (std::size_t v : t) hit[v] = true;
    if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) ++count;
    std::size_t p = 0;
    while (p < k && t[p] == s - 1) t[p++] = 0;
    if (p == k) return count;
    ++t[p];
  }
}

/// The layered tensor written down from its closed form: one key per edge,
/// sorted(e + {n+|e|, ..., n+k_max-1}), value 1/(k_max-1)!.
inline SymTensor closed_form_layered(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  const std::size_t k = h.max_cardinality();
  SymTensor t(k, n + k - 1);
  const Rational v(Integer(1), factorial(k - 1));
  for (const auto& e : h.edges()) {
    IndexTuple key = e;
    for (std::size_t j = e.size(); j <= k - 1; ++j) key.push_back(n + j);
    t.set(key, v);
  }
  return t;
}

}  // namespace eadj::testing
