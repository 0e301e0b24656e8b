#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <istream>
#include <map>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "eadj/error.hpp"
#include "eadj/hypergraph.hpp"
#include "eadj/rational.hpp"

namespace eadj {

/// 1-based tensor index; indices 1..n mirror vertices, n+1.. the added ones.
using Index = std::size_t;
using IndexTuple = std::vector<Index>;

/// Number of distinct positions obtained by permuting `key`:
/// m! / (m_1! ... m_j!) for index multiplicities m_1..m_j.
Integer multiplicity_weight(std::span<const Index> key);

/// Number of permutations of `key` that place `i` first; 0 if i is absent.
Integer permutations_with_first(std::span<const Index> key, Index i);

/// Symmetric cubical tensor of order m and dimension d stored sparsely by
/// canonical (nondecreasing) key. The stored value is the value of every
/// single position the key represents, not the orbit total. Zeros are never
/// stored.
template <class T>
class BasicSymTensor {
 public:
  using value_type = T;
  using Entries = std::map<IndexTuple, T>;

  BasicSymTensor(std::size_t order, std::size_t dim) : order_(order), dim_(dim) {
    if (order == 0) throw Error("tensor order must be positive");
  }

  std::size_t order() const noexcept { return order_; }
  std::size_t dim() const noexcept { return dim_; }
  const Entries& entries() const noexcept { return entries_; }
  std::size_t num_keys() const noexcept { return entries_.size(); }

  /// Value at an arbitrary position; symmetric by construction.
  T get(std::span<const Index> idx) const {
    auto it = entries_.find(canonical(idx));
    return it == entries_.end() ? T(0) : it->second;
  }

  /// Sets every position in the orbit of `idx` to `value`.
  void set(std::span<const Index> idx, const T& value) {
    IndexTuple key = canonical(idx);
    if (value == 0) {
      entries_.erase(key);
    } else {
      entries_[std::move(key)] = value;
    }
  }

  void add(std::span<const Index> idx, const T& delta) {
    IndexTuple key = canonical(idx);
    T& slot = entries_[key];
    slot += delta;
    if (slot == 0) entries_.erase(key);
  }

  IndexTuple canonical(std::span<const Index> idx) const {
    if (idx.size() != order_) {
      throw Error("index tuple of length " + std::to_string(idx.size()) + " for order " +
                  std::to_string(order_));
    }
    IndexTuple key(idx.begin(), idx.end());
    for (Index i : key) {
      if (i < 1 || i > dim_) {
        throw Error("index " + std::to_string(i) + " outside [1, " + std::to_string(dim_) + "]");
      }
    }
    std::sort(key.begin(), key.end());
    return key;
  }

  friend bool operator==(const BasicSymTensor&, const BasicSymTensor&) = default;

 private:
  std::size_t order_;
  std::size_t dim_;
  Entries entries_;
};

using SymTensor = BasicSymTensor<Rational>;
using RealSymTensor = BasicSymTensor<double>;

namespace detail {

template <class X>
X integer_as(const Integer& z) {
  if constexpr (std::is_same_v<X, double>) {
    return z.get_d();
  } else {
    return X(z);
  }
}

template <class X, class T>
X value_as(const T& v) {
  if constexpr (std::is_same_v<X, T>) {
    return v;
  } else {
    static_assert(std::is_same_v<X, double>, "exact vectors need an exact tensor");
    return to_double(v);
  }
}

}  // namespace detail

/// Sum over every position whose first index is i.
template <class T>
T slice_sum(const BasicSymTensor<T>& t, Index i) {
  if (i < 1 || i > t.dim()) throw Error("slice index out of range");
  T s(0);
  for (const auto& [key, value] : t.entries()) {
    Integer c = permutations_with_first(key, i);
    if (c != 0) s += value * detail::integer_as<T>(c);
  }
  return s;
}

/// Slice sum of absolute values, excluding the diagonal position (i,...,i).
template <class T>
T off_diagonal_abs_slice_sum(const BasicSymTensor<T>& t, Index i) {
  using std::abs;
  if (i < 1 || i > t.dim()) throw Error("slice index out of range");
  T s(0);
  for (const auto& [key, value] : t.entries()) {
    if (key.front() == key.back()) continue;
    Integer c = permutations_with_first(key, i);
    if (c != 0) s += abs(value) * detail::integer_as<T>(c);
  }
  return s;
}

template <class T>
T total_sum(const BasicSymTensor<T>& t) {
  T s(0);
  for (const auto& [key, value] : t.entries()) s += value * detail::integer_as<T>(multiplicity_weight(key));
  return s;
}

/// Number of nonzero positions (keys expanded by their permutations).
template <class T>
Integer nnz_positions(const BasicSymTensor<T>& t) {
  Integer s = 0;
  for (const auto& entry : t.entries()) s += multiplicity_weight(entry.first);
  return s;
}

/// (A x^{m-1})_i = sum over positions (i, i_2..i_m) of a * x_{i_2}...x_{i_m}.
template <class T, class X>
std::vector<X> apply(const BasicSymTensor<T>& t, std::span<const X> x) {
  if (x.size() != t.dim()) {
    throw Error("vector of length " + std::to_string(x.size()) + " for dimension " +
                std::to_string(t.dim()));
  }
  std::vector<X> out(t.dim(), X(0));
  IndexTuple rest;
  for (const auto& [key, value] : t.entries()) {
    const X v = detail::value_as<X>(value);
    for (std::size_t p = 0; p < key.size(); ++p) {
      if (p > 0 && key[p] == key[p - 1]) continue;  // one pass per distinct index
      rest.assign(key.begin(), key.end());
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(p));
      X prod = v * detail::integer_as<X>(multiplicity_weight(rest));
      for (Index j : rest) prod *= x[j - 1];
      out[key[p] - 1] += prod;
    }
  }
  return out;
}

template <class T, class X>
std::vector<X> apply(const BasicSymTensor<T>& t, const std::vector<X>& x) {
  return apply(t, std::span<const X>(x));
}

/// alpha * t + beta * I with I the full diagonal identity.
template <class T>
BasicSymTensor<T> scale_add_identity(const BasicSymTensor<T>& t, const T& alpha, const T& beta) {
  BasicSymTensor<T> r(t.order(), t.dim());
  for (const auto& [key, value] : t.entries()) r.set(key, alpha * value);
  IndexTuple diag(t.order());
  for (Index j = 1; j <= t.dim(); ++j) {
    std::fill(diag.begin(), diag.end(), j);
    r.add(diag, beta);
  }
  return r;
}

/// I - a, where I has 1 at (j,...,j) only for vertices with positive degree.
template <class T>
BasicSymTensor<T> laplacian(const BasicSymTensor<T>& a, std::span<const std::size_t> degrees) {
  if (degrees.size() != a.dim()) {
    throw Error("laplacian: " + std::to_string(degrees.size()) + " degrees for dimension " +
                std::to_string(a.dim()));
  }
  BasicSymTensor<T> l(a.order(), a.dim());
  for (const auto& [key, value] : a.entries()) l.set(key, -value);
  IndexTuple diag(a.order());
  for (Index j = 1; j <= a.dim(); ++j) {
    if (degrees[j - 1] == 0) continue;
    std::fill(diag.begin(), diag.end(), j);
    l.add(diag, T(1));
  }
  return l;
}

RealSymTensor to_real(const SymTensor& t);

/// Raw k-adjacency tensor of a k-uniform hypergraph: 1 per edge key.
SymTensor layer_tensor_raw(const Hypergraph& hk, std::size_t k);

/// Degree-normalized k-adjacency tensor: 1/(k-1)! per edge key.
SymTensor layer_tensor_degree_normalized(const Hypergraph& hk, std::size_t k);

/// Eigenvalue-normalized k-adjacency tensor, degrees taken from hk itself:
/// (1/(k-1)!) * prod_j d_{i_j}^{-1/k}.
RealSymTensor layer_tensor_eigen_normalized(const Hypergraph& hk, std::size_t k);

/// COO text: header `symtensor v1 order=m dim=d`, then `i_1 ... i_m value`
/// per canonical key in lexicographic key order.
std::string to_coo(const SymTensor& t);
std::string to_coo(const RealSymTensor& t);

/// Every position in row-major order of 1-based indices, zeros included.
std::string to_dense(const SymTensor& t);

/// Reads the COO format written by to_coo (exact values only).
SymTensor parse_coo(std::istream& in);
SymTensor parse_coo(const std::string& text);

}  // namespace eadj
