#include "eadj/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "eadj/error.hpp"
#include "eadj/layers.hpp"

namespace eadj {

HomogeneousPolynomial::HomogeneousPolynomial(std::size_t degree, std::size_t var_count)
    : degree_(degree), var_count_(var_count) {
  if (degree == 0) throw Error("polynomial degree must be positive");
}

IndexTuple HomogeneousPolynomial::canonical(std::span<const Index> vars) const {
  if (vars.size() != degree_) {
    throw Error("monomial of degree " + std::to_string(vars.size()) + " in a degree " +
                std::to_string(degree_) + " polynomial");
  }
  IndexTuple key(vars.begin(), vars.end());
  for (Index v : key) {
    if (v < 1 || v > var_count_) {
      throw Error("variable " + std::to_string(v) + " outside [1, " + std::to_string(var_count_) + "]");
    }
  }
  std::sort(key.begin(), key.end());
  return key;
}

Rational HomogeneousPolynomial::coefficient(std::span<const Index> vars) const {
  auto it = monomials_.find(canonical(vars));
  return it == monomials_.end() ? Rational(0) : it->second;
}

void HomogeneousPolynomial::add(std::span<const Index> vars, const Rational& c) {
  IndexTuple key = canonical(vars);
  Rational& slot = monomials_[key];
  slot += c;
  if (slot == 0) monomials_.erase(key);
}

HomogeneousPolynomial poly_from_tensor(const SymTensor& t) {
  HomogeneousPolynomial p(t.order(), t.dim());
  for (const auto& [key, value] : t.entries()) p.add(key, value * Rational(multiplicity_weight(key)));
  return p;
}

SymTensor tensor_from_poly(const HomogeneousPolynomial& p) {
  SymTensor t(p.degree(), p.var_count());
  for (const auto& [key, c] : p.monomials()) {
    if (std::adjacent_find(key.begin(), key.end()) != key.end()) {
      throw Error("monomial repeats variable " +
                  std::to_string(*std::adjacent_find(key.begin(), key.end())) +
                  "; it cannot stand for a hyperedge");
    }
    t.set(key, c / Rational(multiplicity_weight(key)));
  }
  return t;
}

HomogeneousPolynomial homogenize_step(const HomogeneousPolynomial& r,
                                      const HomogeneousPolynomial& p_next,
                                      const Rational& c_next, Index y_index) {
  if (p_next.degree() != r.degree() + 1) {
    throw Error("next layer polynomial must have degree " + std::to_string(r.degree() + 1));
  }
  if (y_index <= r.var_count() || y_index <= p_next.var_count()) {
    throw Error("variable " + std::to_string(y_index) + " is not fresh");
  }
  HomogeneousPolynomial out(r.degree() + 1, y_index);
  IndexTuple key;
  for (const auto& [vars, c] : r.monomials()) {
    key = vars;
    key.push_back(y_index);
    out.add(key, c);
  }
  for (const auto& [vars, c] : p_next.monomials()) out.add(vars, c_next * c);
  return out;
}

std::vector<HomogeneousPolynomial> build_R_sequence(const Hypergraph& h,
                                                    const CoefficientPolicy& policy) {
  const LayerDecomposition layers = decompose(h);
  const std::size_t n = h.num_vertices();
  const std::size_t k_max = layers.k_max();
  auto layer_poly = [&](std::size_t k) {
    return poly_from_tensor(layer_tensor_degree_normalized(layers.layer(k), k));
  };

  std::vector<HomogeneousPolynomial> seq;
  HomogeneousPolynomial r1(1, n);
  const HomogeneousPolynomial p1 = layer_poly(1);
  for (const auto& [vars, c] : p1.monomials()) r1.add(vars, policy.coefficient(1, k_max) * c);
  seq.push_back(std::move(r1));
  for (std::size_t k = 1; k < k_max; ++k) {
    seq.push_back(homogenize_step(seq.back(), layer_poly(k + 1), policy.coefficient(k + 1, k_max), n + k));
  }
  return seq;
}

HomogeneousPolynomial build_R(const Hypergraph& h, const CoefficientPolicy& policy) {
  return build_R_sequence(h, policy).back();
}

Rational evaluate(const HomogeneousPolynomial& p, std::span<const Rational> x) {
  if (x.size() != p.var_count()) {
    throw Error("assignment of length " + std::to_string(x.size()) + " for " +
                std::to_string(p.var_count()) + " variables");
  }
  Rational s = 0;
  for (const auto& [vars, c] : p.monomials()) {
    Rational term = c;
    for (Index v : vars) term *= x[v - 1];
    s += term;
  }
  return s;
}

namespace {

void check_extract_args(const SymTensor& t, std::size_t n, std::size_t j) {
  if (j < 1 || j > t.order()) {
    throw Error("edge size " + std::to_string(j) + " outside [1, " + std::to_string(t.order()) + "]");
  }
  if (t.dim() != n + t.order() - 1) throw Error("tensor dimension does not match n + k_max - 1");
}

// Boolean polynomial with the y variables fixed to `y_values` (y_1 first):
// the monomials surviving, restricted to their z-part, all with coefficient 1.
std::map<Hyperedge, Rational> restrict_boolean(const HomogeneousPolynomial& pb, std::size_t n,
                                               const std::vector<int>& y_values) {
  std::map<Hyperedge, Rational> out;
  for (const auto& [vars, c] : pb.monomials()) {
    Rational term = 1;  // boolean: the coefficient is replaced by 1
    Hyperedge z;
    for (Index v : vars) {
      if (v <= n) {
        z.push_back(v);
      } else {
        term *= y_values[v - n - 1];
      }
    }
    if (term != 0) out[z] += term;
  }
  return out;
}

}  // namespace

std::set<Hyperedge> dnf_layer_extract(const SymTensor& t, std::size_t n, std::size_t j) {
  check_extract_args(t, n, j);
  const std::size_t k_max = t.order();
  const HomogeneousPolynomial p = poly_from_tensor(t);
  std::set<Hyperedge> out;
  for (const auto& [key, value] : p.monomials()) {
    auto split = std::find_if(key.begin(), key.end(), [n](Index v) { return v > n; });
    if (static_cast<std::size_t>(split - key.begin()) != j) continue;
    bool suffix = true;
    for (std::size_t s = j; s < k_max; ++s) suffix = suffix && key[s] == n + s;
    if (suffix) out.emplace(key.begin(), split);
  }
  return out;
}

std::set<Hyperedge> dnf_layer_extract_by_difference(const SymTensor& t, std::size_t n,
                                                    std::size_t j) {
  check_extract_args(t, n, j);
  const std::size_t k_max = t.order();
  const HomogeneousPolynomial pb = poly_from_tensor(t);

  // y_1..y_{zeros} = 0, the remaining y's = 1.
  auto setting = [&](std::size_t zeros) {
    std::vector<int> y(k_max - 1, 1);
    for (std::size_t i = 0; i < zeros && i < y.size(); ++i) y[i] = 0;
    return y;
  };

  std::map<Hyperedge, Rational> diff = restrict_boolean(pb, n, setting(j - 1));
  if (j < k_max) {
    for (const auto& [z, c] : restrict_boolean(pb, n, setting(j))) diff[z] -= c;
  }
  std::set<Hyperedge> out;
  for (const auto& [z, c] : diff) {
    if (c == 0) continue;
    if (c != 1) throw Error("boolean difference has a coefficient other than 0 or 1");
    out.insert(z);
  }
  return out;
}

std::string to_text(const HomogeneousPolynomial& p, std::size_t n) {
  if (p.is_zero()) return "0\n";
  std::ostringstream out;
  for (const auto& [vars, c] : p.monomials()) {
    out << to_string(c) << " *";
    for (std::size_t i = 0; i < vars.size(); ++i) {
      out << (i == 0 ? " " : "*");
      if (vars[i] <= n) {
        out << "z_" << vars[i];
      } else {
        out << "y_" << vars[i] - n;
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace eadj
