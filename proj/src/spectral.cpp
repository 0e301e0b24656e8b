#include "eadj/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "eadj/error.hpp"

namespace eadj {

namespace {

void check_vector(std::size_t dim, std::size_t len, bool all_zero) {
  if (len != dim) {
    throw Error("vector of length " + std::to_string(len) + " for dimension " + std::to_string(dim));
  }
  if (all_zero) throw Error("eigenvector must be nonzero");
}

template <class X>
X ipow(const X& v, std::size_t e) {
  X r(1);
  for (std::size_t i = 0; i < e; ++i) r *= v;
  return r;
}

}  // namespace

ResidualReport check_eigenpair(const RealSymTensor& t, double lambda, std::span<const double> x,
                               double tol) {
  check_vector(t.dim(), x.size(), std::all_of(x.begin(), x.end(), [](double v) { return v == 0.0; }));
  const std::vector<double> ax = eadj::apply(t, x);
  ResidualReport r;
  for (std::size_t i = 0; i < ax.size(); ++i) {
    r.residual = std::max(r.residual, std::abs(ax[i] - lambda * ipow(x[i], t.order() - 1)));
  }
  r.passed = r.residual <= tol * (1.0 + std::abs(lambda));
  return r;
}

ResidualReport check_eigenpair(const SymTensor& t, double lambda, std::span<const double> x,
                               double tol) {
  return check_eigenpair(to_real(t), lambda, x, tol);
}

Rational eigen_residual_exact(const SymTensor& t, const Rational& lambda,
                              std::span<const Rational> x) {
  check_vector(t.dim(), x.size(), std::all_of(x.begin(), x.end(), [](const Rational& v) { return v == 0; }));
  const std::vector<Rational> ax = eadj::apply(t, x);
  Rational worst = 0;
  for (std::size_t i = 0; i < ax.size(); ++i) {
    Rational d = abs(ax[i] - lambda * ipow(x[i], t.order() - 1));
    if (d > worst) worst = d;
  }
  return worst;
}

std::vector<Disk> gershgorin_disks(const SymTensor& t) {
  std::vector<Disk> disks(t.dim());
  IndexTuple diag(t.order());
  for (Index i = 1; i <= t.dim(); ++i) {
    std::fill(diag.begin(), diag.end(), i);
    disks[i - 1].center = t.get(diag);
    disks[i - 1].radius = off_diagonal_abs_slice_sum(t, i);
  }
  return disks;
}

bool in_disks(const std::vector<Disk>& disks, double lambda, double slack) {
  return std::any_of(disks.begin(), disks.end(), [&](const Disk& d) {
    return std::abs(lambda - d.center.get_d()) <= d.radius.get_d() + slack;
  });
}

BoundReport layer_bound(const Hypergraph& h) {
  if (h.empty()) throw Error("bound of an empty hypergraph");
  const SymTensor t = e_adjacency_tensor(h);
  const std::size_t n = h.num_vertices();
  BoundReport r;
  r.delta = 0;
  r.delta_star = 0;
  for (Index i = 1; i <= t.dim(); ++i) {
    const Rational s = slice_sum(t, i);
    Rational& target = i <= n ? r.delta : r.delta_star;
    if (s > target) target = s;
  }
  r.bound = std::max(r.delta, r.delta_star);
  r.disks = gershgorin_disks(t);
  return r;
}

namespace {

// Connected blocks of the indices with a nonempty slice; two indices are
// linked when they share a key.
std::vector<std::vector<Index>> support_blocks(const RealSymTensor& t) {
  std::vector<Index> parent(t.dim() + 1);
  std::iota(parent.begin(), parent.end(), Index{0});
  std::vector<bool> used(t.dim() + 1, false);
  auto find = [&](Index i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (const auto& entry : t.entries()) {
    const IndexTuple& key = entry.first;
    for (Index i : key) {
      used[i] = true;
      parent[find(i)] = find(key.front());
    }
  }
  std::map<Index, std::vector<Index>> by_root;
  for (Index i = 1; i <= t.dim(); ++i) {
    if (used[i]) by_root[find(i)].push_back(i);
  }
  std::vector<std::vector<Index>> blocks;
  for (auto& kv : by_root) blocks.push_back(std::move(kv.second));
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

struct BlockResult {
  double low = 0.0;
  double high = 0.0;
  std::vector<double> x;  // indexed like the block
  std::size_t iterations = 0;
  bool converged = false;
};

BlockResult iterate_block(const RealSymTensor& t, const std::vector<Index>& block, double tol,
                          std::size_t max_iter) {
  // Re-index the block as 1..b.
  std::map<Index, Index> local;
  for (std::size_t j = 0; j < block.size(); ++j) local[block[j]] = j + 1;
  RealSymTensor sub(t.order(), block.size());
  IndexTuple key;
  for (const auto& [k, v] : t.entries()) {
    if (!local.count(k.front())) continue;
    key.clear();
    for (Index i : k) key.push_back(local.at(i));
    sub.set(key, v);
  }

  const std::size_t m1 = t.order() - 1;
  BlockResult r;
  r.x.assign(block.size(), 1.0);
  std::vector<double> y;
  for (r.iterations = 1; r.iterations <= max_iter; ++r.iterations) {
    y = eadj::apply(sub, std::span<const double>(r.x));
    double lo = INFINITY;
    double hi = -INFINITY;
    for (std::size_t i = 0; i < y.size(); ++i) {
      const double xm = ipow(r.x[i], m1);
      const double ratio = y[i] / xm;
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
      y[i] += xm;  // shift by the identity
    }
    r.low = lo;
    r.high = hi;
    if (hi - lo <= tol) {
      r.converged = true;
      break;
    }
    double top = 0.0;
    for (double& v : y) {
      v = m1 == 1 ? v : std::pow(v, 1.0 / static_cast<double>(m1));
      top = std::max(top, v);
    }
    for (std::size_t i = 0; i < y.size(); ++i) r.x[i] = y[i] / top;
  }
  if (!r.converged) r.iterations = max_iter;
  return r;
}

}  // namespace

EigenPair power_iteration(const RealSymTensor& t, double tol, std::size_t max_iter) {
  if (t.order() < 2) throw Error("power iteration needs order >= 2");
  for (const auto& entry : t.entries()) {
    if (entry.second < 0) throw Error("power iteration needs a nonnegative tensor");
  }
  const auto blocks = support_blocks(t);
  if (blocks.empty()) throw Error("power iteration on an all-zero tensor");

  EigenPair out;
  out.lambda_low = -INFINITY;
  out.lambda_high = -INFINITY;
  out.x.assign(t.dim(), 0.0);
  double best_mid = -INFINITY;
  for (const auto& block : blocks) {
    const BlockResult r = iterate_block(t, block, tol, max_iter);
    out.lambda_low = std::max(out.lambda_low, r.low);
    out.lambda_high = std::max(out.lambda_high, r.high);
    out.iterations = std::max(out.iterations, r.iterations);
    const double mid = 0.5 * (r.low + r.high);
    if (mid > best_mid) {
      best_mid = mid;
      std::fill(out.x.begin(), out.x.end(), 0.0);
      for (std::size_t j = 0; j < block.size(); ++j) out.x[block[j] - 1] = r.x[j];
    }
  }
  out.lambda = 0.5 * (out.lambda_low + out.lambda_high);
  out.converged = out.lambda_high - out.lambda_low <= tol;
  const std::vector<double> ax = eadj::apply(t, std::span<const double>(out.x));
  for (std::size_t i = 0; i < ax.size(); ++i) {
    out.residual = std::max(out.residual, std::abs(ax[i] - out.lambda * ipow(out.x[i], t.order() - 1)));
  }
  return out;
}

EigenPair power_iteration(const SymTensor& t, double tol, std::size_t max_iter) {
  return power_iteration(to_real(t), tol, max_iter);
}

MatrixEigen matrix_power_iteration(const Matrix& a, double tol, std::size_t max_iter) {
  if (a.rows() != a.cols() || a.rows() == 0) throw Error("matrix power iteration needs a square matrix");
  const std::size_t n = a.rows();
  std::vector<double> dense(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) dense[i * n + j] = a.at(i + 1, j + 1).get_d();
  }
  MatrixEigen r;
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> y(n);
  double prev = INFINITY;
  for (r.iterations = 1; r.iterations <= max_iter; ++r.iterations) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = x[i];  // + I
      for (std::size_t j = 0; j < n; ++j) s += dense[i * n + j] * x[j];
      y[i] = s;
    }
    // Rayleigh quotient of A + I at the unit vector x.
    double rq = 0.0;
    for (std::size_t i = 0; i < n; ++i) rq += x[i] * y[i];
    double norm = 0.0;
    for (double v : y) norm += v * v;
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
    r.lambda = rq - 1.0;
    if (std::abs(rq - prev) <= tol * std::max(1.0, std::abs(rq))) {
      r.converged = true;
      break;
    }
    prev = rq;
  }
  if (!r.converged) r.iterations = max_iter;
  r.x = std::move(x);
  return r;
}

GraphCaseReport graph_case_check(const Hypergraph& g, double tol, const CoefficientPolicy& policy) {
  if (g.empty()) throw Error("graph check needs at least one edge");
  for (const auto& e : g.edges()) {
    if (e.size() != 2) throw Error("graph check needs a 2-uniform hypergraph");
  }
  const std::size_t n = g.num_vertices();
  GraphCaseReport r;
  r.c2 = policy.coefficient(2, 2);

  Matrix adj(n, n);
  for (const auto& e : g.edges()) {
    adj.at(e[0], e[1]) = 1;
    adj.at(e[1], e[0]) = 1;
  }
  const SymTensor t = e_adjacency_tensor(g, policy);

  r.block_ok = t.dim() == n + 1;
  for (Index i = 1; r.block_ok && i <= n + 1; ++i) {
    for (Index j = 1; r.block_ok && j <= n + 1; ++j) {
      const Index idx[2] = {i, j};
      const Rational expected = (i <= n && j <= n) ? Rational(r.c2 * adj.at(i, j)) : Rational(0);
      r.block_ok = t.get(idx) == expected;
    }
  }

  std::vector<Rational> e_last(n + 1, Rational(0));
  e_last[n] = 1;
  r.zero_eigenpair_ok = eigen_residual_exact(t, Rational(0), e_last) == 0;

  r.graph_dominant = matrix_power_iteration(adj).lambda;
  const EigenPair layered = power_iteration(t);
  r.layered_dominant = layered.lambda;
  r.dominant_ok = layered.converged &&
                  std::abs(r.layered_dominant - r.c2.get_d() * r.graph_dominant) <= tol;
  return r;
}

}  // namespace eadj
