#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "eadj/hypergraph.hpp"
#include "eadj/symtensor.hpp"
#include "eadj/uniformization.hpp"

namespace eadj {

/// Homogeneous polynomial in reduced, ordered form: one monomial per
/// nondecreasing variable tuple of length `degree`. Variables are 1-based;
/// by convention 1..n are the vertex variables z and n+1.. the added y's.
class HomogeneousPolynomial {
 public:
  using Monomials = std::map<IndexTuple, Rational>;

  HomogeneousPolynomial(std::size_t degree, std::size_t var_count);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t var_count() const noexcept { return var_count_; }
  const Monomials& monomials() const noexcept { return monomials_; }
  bool is_zero() const noexcept { return monomials_.empty(); }

  Rational coefficient(std::span<const Index> vars) const;
  /// Adds to the coefficient of the monomial prod vars; zero results are
  /// dropped.
  void add(std::span<const Index> vars, const Rational& c);

  friend bool operator==(const HomogeneousPolynomial&, const HomogeneousPolynomial&) = default;

 private:
  IndexTuple canonical(std::span<const Index> vars) const;

  std::size_t degree_;
  std::size_t var_count_;
  Monomials monomials_;
};

/// Coefficient of the ordered monomial at key K is value(K) * multiplicity(K),
/// i.e. the symmetric sum over all positions collapsed onto one term.
HomogeneousPolynomial poly_from_tensor(const SymTensor& t);

/// Inverse of poly_from_tensor for monomials made of distinct variables.
/// Throws Error when a monomial repeats a variable.
SymTensor tensor_from_poly(const HomogeneousPolynomial& p);

/// r * y + c * p_next, with y = variable `y_index`, which must be larger than
/// every variable of r and p_next. p_next has degree r.degree() + 1 and may
/// be zero. The result has var_count y_index.
HomogeneousPolynomial homogenize_step(const HomogeneousPolynomial& r,
                                      const HomogeneousPolynomial& p_next,
                                      const Rational& c_next, Index y_index);

/// R_{k_max}: start from c_1 P_1 and homogenize layer by layer, with P_k the
/// polynomial of the degree-normalized layer tensor and y_k = n + k.
HomogeneousPolynomial build_R(const Hypergraph& h,
                              const CoefficientPolicy& policy = CoefficientPolicy::handshake());

/// Every intermediate R_1..R_{k_max}.
std::vector<HomogeneousPolynomial> build_R_sequence(
    const Hypergraph& h, const CoefficientPolicy& policy = CoefficientPolicy::handshake());

Rational evaluate(const HomogeneousPolynomial& p, std::span<const Rational> x);

/// Hyperedges of size j read off the monomials whose y-part is exactly
/// {n+j, ..., n+k_max-1}.
std::set<Hyperedge> dnf_layer_extract(const SymTensor& t, std::size_t n, std::size_t j);

/// Same set computed by differencing the boolean polynomial between two 0/1
/// settings of the y variables: y_1..y_{j-1} = 0, rest 1, minus
/// y_1..y_j = 0, rest 1 (the second term is absent for j = k_max).
std::set<Hyperedge> dnf_layer_extract_by_difference(const SymTensor& t, std::size_t n,
                                                    std::size_t j);

/// `coef * z_i*z_j*...` per monomial in key order; variables above n print
/// as y_{i-n}. Zero polynomial prints as `0`.
std::string to_text(const HomogeneousPolynomial& p, std::size_t n);

}  // namespace eadj
