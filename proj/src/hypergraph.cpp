#include "eadj/hypergraph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "eadj/error.hpp"

namespace eadj {

namespace {

Hyperedge sorted_copy(std::span<const VertexId> e) {
  Hyperedge s(e.begin(), e.end());
  std::sort(s.begin(), s.end());
  return s;
}

void check_vertex(const Hypergraph& h, VertexId v) {
  if (v < 1 || v > h.num_vertices()) {
    throw Error("vertex " + std::to_string(v) + " outside [1, " +
                std::to_string(h.num_vertices()) + "]");
  }
}

void check_vertex_set(const Hypergraph& h, std::span<const VertexId> s) {
  if (s.empty()) throw Error("vertex set must be non-empty");
  for (VertexId v : s) check_vertex(h, v);
}

}  // namespace

// --- Hypergraph -------------------------------------------------------------

Hypergraph::Hypergraph(std::size_t num_vertices, std::vector<Hyperedge> edges)
    : n_(num_vertices), edges_(std::move(edges)) {
  for (std::size_t id = 0; id < edges_.size(); ++id) {
    Hyperedge& e = edges_[id];
    if (e.empty()) throw Error("edge " + std::to_string(id + 1) + " is empty");
    std::sort(e.begin(), e.end());
    for (VertexId v : e) {
      if (v < 1 || v > n_) {
        throw Error("edge " + std::to_string(id + 1) + ": vertex " +
                    std::to_string(v) + " outside [1, " + std::to_string(n_) +
                    "]");
      }
    }
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw Error("edge " + std::to_string(id + 1) + " repeats a vertex");
    }
  }
  sorted_ids_.resize(edges_.size());
  std::iota(sorted_ids_.begin(), sorted_ids_.end(), std::size_t{0});
  std::sort(sorted_ids_.begin(), sorted_ids_.end(),
            [this](std::size_t a, std::size_t b) { return edges_[a] < edges_[b]; });
  for (std::size_t i = 1; i < sorted_ids_.size(); ++i) {
    if (edges_[sorted_ids_[i - 1]] == edges_[sorted_ids_[i]]) {
      throw Error("edge " + std::to_string(std::max(sorted_ids_[i - 1], sorted_ids_[i]) + 1) +
                  " duplicates edge " +
                  std::to_string(std::min(sorted_ids_[i - 1], sorted_ids_[i]) + 1));
    }
  }
}

const Hyperedge& Hypergraph::edge(std::size_t id) const {
  if (id < 1 || id > edges_.size()) {
    throw Error("edge id " + std::to_string(id) + " out of range");
  }
  return edges_[id - 1];
}

std::size_t Hypergraph::max_cardinality() const noexcept {
  std::size_t k = 0;
  for (const auto& e : edges_) k = std::max(k, e.size());
  return k;
}

std::size_t Hypergraph::find_edge(std::span<const VertexId> e) const {
  const Hyperedge key = sorted_copy(e);
  auto it = std::lower_bound(
      sorted_ids_.begin(), sorted_ids_.end(), key,
      [this](std::size_t id, const Hyperedge& k) { return edges_[id] < k; });
  if (it != sorted_ids_.end() && edges_[*it] == key) return *it + 1;
  return 0;
}

bool Hypergraph::contains_edge(std::span<const VertexId> e) const {
  return find_edge(e) != 0;
}

bool Hypergraph::same_edge_set(const Hypergraph& other) const {
  if (n_ != other.n_ || edges_.size() != other.edges_.size()) return false;
  for (std::size_t i = 0; i < sorted_ids_.size(); ++i) {
    if (edges_[sorted_ids_[i]] != other.edges_[other.sorted_ids_[i]]) return false;
  }
  return true;
}

// --- WeightedHypergraph -----------------------------------------------------

WeightedHypergraph::WeightedHypergraph(Hypergraph base, std::vector<Rational> weights)
    : base_(std::move(base)), weights_(std::move(weights)) {
  if (weights_.size() != base_.num_edges()) {
    throw Error("expected " + std::to_string(base_.num_edges()) + " weights, got " +
                std::to_string(weights_.size()));
  }
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] <= 0) {
      throw Error("weight of edge " + std::to_string(i + 1) + " is not positive");
    }
  }
}

WeightedHypergraph WeightedHypergraph::unit(Hypergraph base) {
  std::vector<Rational> w(base.num_edges(), Rational(1));
  return WeightedHypergraph(std::move(base), std::move(w));
}

const Rational& WeightedHypergraph::weight(std::size_t id) const {
  if (id < 1 || id > weights_.size()) {
    throw Error("edge id " + std::to_string(id) + " out of range");
  }
  return weights_[id - 1];
}

// --- Matrix -----------------------------------------------------------------

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Rational& Matrix::at(std::size_t row, std::size_t col) {
  if (row < 1 || row > rows_ || col < 1 || col > cols_) throw Error("matrix index out of range");
  return data_[(row - 1) * cols_ + (col - 1)];
}

const Rational& Matrix::at(std::size_t row, std::size_t col) const {
  if (row < 1 || row > rows_ || col < 1 || col > cols_) throw Error("matrix index out of range");
  return data_[(row - 1) * cols_ + (col - 1)];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 1; r <= rows_; ++r)
    for (std::size_t c = 1; c <= cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error("matrix product: dimension mismatch");
  Matrix p(a.rows_, b.cols_);
  for (std::size_t r = 1; r <= a.rows_; ++r)
    for (std::size_t k = 1; k <= a.cols_; ++k) {
      const Rational& lhs = a.at(r, k);
      if (lhs == 0) continue;
      for (std::size_t c = 1; c <= b.cols_; ++c) p.at(r, c) += lhs * b.at(k, c);
    }
  return p;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix difference: shape mismatch");
  Matrix d = a;
  for (std::size_t i = 0; i < d.data_.size(); ++i) d.data_[i] -= b.data_[i];
  return d;
}

// --- HG v1 reader/writer ----------------------------------------------------

Hypergraph parse_hypergraph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_n = false;
  std::size_t n = 0;
  std::vector<Hyperedge> edges;
  std::vector<std::size_t> edge_lines;
  std::size_t blank_line = 0;  // first blank line after the header, if any

  auto parse_uint = [&](std::string_view tok) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw ParseError("expected a non-negative integer, got '" + std::string(tok) + "'",
                       line_no);
    }
    return v;
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) {
      if (have_n && blank_line == 0) blank_line = line_no;
      continue;
    }
    if (line[first] == '#') continue;

    std::vector<std::size_t> values;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) values.push_back(parse_uint(tok));

    if (!have_n) {
      if (values.size() != 1) throw ParseError("header must be a single vertex count", line_no);
      n = values.front();
      have_n = true;
      continue;
    }
    if (blank_line != 0) throw ParseError("empty hyperedge line", blank_line);
    Hyperedge e(values.begin(), values.end());
    for (VertexId v : e) {
      if (v < 1 || v > n) {
        throw ParseError("vertex " + std::to_string(v) + " outside [1, " + std::to_string(n) + "]",
                         line_no);
      }
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw ParseError("duplicate vertex within hyperedge", line_no);
    }
    edges.push_back(std::move(e));
    edge_lines.push_back(line_no);
  }
  if (!have_n) throw ParseError("missing vertex count header", line_no);

  // Trailing blank lines are tolerated.
  std::set<Hyperedge> seen;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!seen.insert(edges[i]).second) throw ParseError("duplicate hyperedge", edge_lines[i]);
  }
  return Hypergraph(n, std::move(edges));
}

Hypergraph parse_hypergraph(const std::string& text) {
  std::istringstream in(text);
  return parse_hypergraph(in);
}

std::string to_hg_text(const Hypergraph& h) {
  std::ostringstream out;
  out << h.num_vertices() << '\n';
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
  return out.str();
}

// --- degrees, matrices, adjacency -------------------------------------------

std::size_t degree(const Hypergraph& h, VertexId v) {
  check_vertex(h, v);
  std::size_t d = 0;
  for (const auto& e : h.edges()) d += std::binary_search(e.begin(), e.end(), v) ? 1 : 0;
  return d;
}

std::vector<std::size_t> degrees(const Hypergraph& h) {
  std::vector<std::size_t> d(h.num_vertices(), 0);
  for (const auto& e : h.edges())
    for (VertexId v : e) ++d[v - 1];
  return d;
}

Matrix incidence_matrix(const Hypergraph& h) {
  Matrix m(h.num_vertices(), h.num_edges());
  for (std::size_t l = 1; l <= h.num_edges(); ++l)
    for (VertexId v : h.edge(l)) m.at(v, l) = 1;
  return m;
}

Matrix adjacency_matrix_bretto(const Hypergraph& h) {
  Matrix a(h.num_vertices(), h.num_vertices());
  for (const auto& e : h.edges())
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = 0; j < e.size(); ++j)
        if (i != j) a.at(e[i], e[j]) += 1;
  return a;
}

Matrix adjacency_matrix_zhou(const WeightedHypergraph& hw) {
  const Hypergraph& h = hw.base();
  const Matrix inc = incidence_matrix(h);
  Matrix w(h.num_edges(), h.num_edges());
  for (std::size_t l = 1; l <= h.num_edges(); ++l) w.at(l, l) = hw.weight(l);
  Matrix dv(h.num_vertices(), h.num_vertices());
  for (std::size_t l = 1; l <= h.num_edges(); ++l)
    for (VertexId v : h.edge(l)) dv.at(v, v) += hw.weight(l);
  return inc * w * inc.transpose() - dv;
}

Hypergraph two_section(const Hypergraph& h) {
  std::set<Hyperedge> pairs;
  for (const auto& e : h.edges())
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = i + 1; j < e.size(); ++j) pairs.insert({e[i], e[j]});
  return Hypergraph(h.num_vertices(), std::vector<Hyperedge>(pairs.begin(), pairs.end()));
}

bool is_k_adjacent(const Hypergraph& h, std::span<const VertexId> s) {
  check_vertex_set(h, s);
  const Hyperedge key = sorted_copy(s);
  return std::any_of(h.edges().begin(), h.edges().end(), [&](const Hyperedge& e) {
    return std::includes(e.begin(), e.end(), key.begin(), key.end());
  });
}

bool is_e_adjacent(const Hypergraph& h, std::span<const VertexId> s) {
  check_vertex_set(h, s);
  return h.contains_edge(s);
}

}  // namespace eadj
