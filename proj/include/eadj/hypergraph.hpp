#pragma once

#include <cstddef>
#include <istream>
#include <span>
#include <string>
#include <vector>

#include "eadj/rational.hpp"

namespace eadj {

/// Vertices are 1-based everywhere: a hypergraph on n vertices uses 1..n.
using VertexId = std::size_t;

/// Sorted, duplicate-free list of vertices.
using Hyperedge = std::vector<VertexId>;

/// Vertex set {1..n} together with a duplicate-free family of non-empty
/// hyperedges. Edge ids are 1-based positions in the family.
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Sorts every edge and validates it. Throws Error on an empty edge, a
  /// vertex outside [1, n], a repeated vertex inside an edge, or a repeated
  /// edge.
  Hypergraph(std::size_t num_vertices, std::vector<Hyperedge> edges);

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }

  const std::vector<Hyperedge>& edges() const noexcept { return edges_; }
  const Hyperedge& edge(std::size_t id) const;

  /// Largest edge cardinality, 0 when there are no edges.
  std::size_t max_cardinality() const noexcept;

  /// True iff `e` (in any order) is one of the hyperedges.
  bool contains_edge(std::span<const VertexId> e) const;

  /// 1-based edge id of `e`, or 0.
  std::size_t find_edge(std::span<const VertexId> e) const;

  /// Edge families compared as sets; vertex counts must agree.
  bool same_edge_set(const Hypergraph& other) const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Hyperedge> edges_;
  std::vector<std::size_t> sorted_ids_;  // edge indices ordered by edge content
};

/// Hypergraph with one strictly positive weight per edge.
class WeightedHypergraph {
 public:
  WeightedHypergraph() = default;
  WeightedHypergraph(Hypergraph base, std::vector<Rational> weights);

  /// Every edge weighted 1.
  static WeightedHypergraph unit(Hypergraph base);

  const Hypergraph& base() const noexcept { return base_; }
  const std::vector<Rational>& weights() const noexcept { return weights_; }
  const Rational& weight(std::size_t id) const;

  std::size_t num_vertices() const noexcept { return base_.num_vertices(); }
  std::size_t num_edges() const noexcept { return base_.num_edges(); }

 private:
  Hypergraph base_;
  std::vector<Rational> weights_;
};

/// Dense rows x cols matrix of exact rationals; at() is 1-based.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& at(std::size_t row, std::size_t col);
  const Rational& at(std::size_t row, std::size_t col) const;

  Matrix transpose() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reads the "HG v1" text format: '#' comment lines, then n, then one edge
/// per line. Throws ParseError.
Hypergraph parse_hypergraph(std::istream& in);
Hypergraph parse_hypergraph(const std::string& text);

/// Writes the "HG v1" format, edges in family order.
std::string to_hg_text(const Hypergraph& h);

std::size_t degree(const Hypergraph& h, VertexId v);
std::vector<std::size_t> degrees(const Hypergraph& h);

/// n x p incidence matrix, entry (v, l) = 1 iff v belongs to edge l.
Matrix incidence_matrix(const Hypergraph& h);

/// a_uv = number of edges containing both u and v, zero diagonal.
Matrix adjacency_matrix_bretto(const Hypergraph& h);

/// H W H^T - D_v where d(v) is the weighted degree.
Matrix adjacency_matrix_zhou(const WeightedHypergraph& hw);

/// Graph on the same vertices with every pair that shares an edge.
Hypergraph two_section(const Hypergraph& h);

/// True iff some edge contains all of `s`.
bool is_k_adjacent(const Hypergraph& h, std::span<const VertexId> s);

/// True iff `s` is exactly an edge.
bool is_e_adjacent(const Hypergraph& h, std::span<const VertexId> s);

}  // namespace eadj
