#include "eadj/symtensor.hpp"

#include <cmath>
#include <sstream>

namespace eadj {

namespace {

// Multiplicities of the runs in a sorted key.
std::vector<std::size_t> run_lengths(std::span<const Index> key) {
  std::vector<std::size_t> runs;
  for (std::size_t p = 0; p < key.size(); ++p) {
    if (p > 0 && key[p] == key[p - 1]) {
      ++runs.back();
    } else {
      runs.push_back(1);
    }
  }
  return runs;
}

IndexTuple sorted(std::span<const Index> key) {
  IndexTuple k(key.begin(), key.end());
  std::sort(k.begin(), k.end());
  return k;
}

void check_uniform(const Hypergraph& hk, std::size_t k) {
  if (k == 0) throw Error("layer order must be positive");
  for (const auto& e : hk.edges()) {
    if (e.size() != k) {
      throw Error("hypergraph is not " + std::to_string(k) + "-uniform (edge of size " +
                  std::to_string(e.size()) + ")");
    }
  }
}

template <class T>
void write_coo(std::ostream& out, const BasicSymTensor<T>& t) {
  out << "symtensor v1 order=" << t.order() << " dim=" << t.dim() << '\n';
  for (const auto& [key, value] : t.entries()) {
    for (Index i : key) out << i << ' ';
    if constexpr (std::is_same_v<T, double>) {
      out << format_real(value) << '\n';
    } else {
      out << to_string(value) << '\n';
    }
  }
}

}  // namespace

Integer multiplicity_weight(std::span<const Index> key) {
  const IndexTuple k = sorted(key);
  Integer w = factorial(k.size());
  for (std::size_t r : run_lengths(k)) w /= factorial(r);
  return w;
}

Integer permutations_with_first(std::span<const Index> key, Index i) {
  IndexTuple rest = sorted(key);
  auto it = std::find(rest.begin(), rest.end(), i);
  if (it == rest.end()) return 0;
  rest.erase(it);
  return multiplicity_weight(rest);
}

RealSymTensor to_real(const SymTensor& t) {
  RealSymTensor r(t.order(), t.dim());
  for (const auto& [key, value] : t.entries()) r.set(key, value.get_d());
  return r;
}

SymTensor layer_tensor_raw(const Hypergraph& hk, std::size_t k) {
  check_uniform(hk, k);
  SymTensor t(k, hk.num_vertices());
  for (const auto& e : hk.edges()) t.set(e, Rational(1));
  return t;
}

SymTensor layer_tensor_degree_normalized(const Hypergraph& hk, std::size_t k) {
  check_uniform(hk, k);
  SymTensor t(k, hk.num_vertices());
  const Rational value(Integer(1), factorial(k - 1));
  for (const auto& e : hk.edges()) t.set(e, value);
  return t;
}

RealSymTensor layer_tensor_eigen_normalized(const Hypergraph& hk, std::size_t k) {
  check_uniform(hk, k);
  const std::vector<std::size_t> d = degrees(hk);
  const double base = 1.0 / factorial(k - 1).get_d();
  RealSymTensor t(k, hk.num_vertices());
  for (const auto& e : hk.edges()) {
    double value = base;
    for (VertexId v : e) value /= std::pow(static_cast<double>(d[v - 1]), 1.0 / static_cast<double>(k));
    t.set(e, value);
  }
  return t;
}

std::string to_coo(const SymTensor& t) {
  std::ostringstream out;
  write_coo(out, t);
  return out.str();
}

std::string to_coo(const RealSymTensor& t) {
  std::ostringstream out;
  write_coo(out, t);
  return out.str();
}

std::string to_dense(const SymTensor& t) {
  std::ostringstream out;
  out << "symtensor-dense v1 order=" << t.order() << " dim=" << t.dim() << '\n';
  if (t.dim() == 0) return out.str();
  IndexTuple idx(t.order(), 1);
  while (true) {
    for (Index i : idx) out << i << ' ';
    out << to_string(t.get(idx)) << '\n';
    // Row-major: the last index varies fastest.
    std::size_t p = idx.size();
    while (p > 0 && idx[p - 1] == t.dim()) {
      idx[p - 1] = 1;
      --p;
    }
    if (p == 0) break;
    ++idx[p - 1];
  }
  return out.str();
}

SymTensor parse_coo(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t order = 0;
  std::size_t dim = 0;
  bool have_header = false;
  std::map<IndexTuple, Rational> entries;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ss(line);
    if (!have_header) {
      std::string magic, version, order_tok, dim_tok, extra;
      ss >> magic >> version >> order_tok >> dim_tok;
      if (magic != "symtensor" || version != "v1" || order_tok.rfind("order=", 0) != 0 ||
          dim_tok.rfind("dim=", 0) != 0 || (ss >> extra)) {
        throw ParseError("expected header 'symtensor v1 order=M dim=D'", line_no);
      }
      try {
        std::size_t used = 0;
        order = std::stoul(order_tok.substr(6), &used);
        if (used != order_tok.size() - 6) throw std::invalid_argument("order");
        dim = std::stoul(dim_tok.substr(4), &used);
        if (used != dim_tok.size() - 4) throw std::invalid_argument("dim");
      } catch (const std::exception&) {
        throw ParseError("malformed order/dim in header", line_no);
      }
      if (order == 0) throw ParseError("order must be positive", line_no);
      have_header = true;
      continue;
    }
    std::vector<std::string> toks;
    std::string tok;
    while (ss >> tok) toks.push_back(tok);
    if (toks.size() != order + 1) {
      throw ParseError("expected " + std::to_string(order) + " indices and a value", line_no);
    }
    IndexTuple key;
    for (std::size_t p = 0; p < order; ++p) {
      std::size_t used = 0;
      std::size_t v = 0;
      try {
        v = std::stoul(toks[p], &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != toks[p].size()) throw ParseError("bad index '" + toks[p] + "'", line_no);
      if (v < 1 || v > dim) throw ParseError("index " + toks[p] + " out of range", line_no);
      if (!key.empty() && v < key.back()) throw ParseError("key is not nondecreasing", line_no);
      key.push_back(v);
    }
    Rational value;
    try {
      value = parse_rational(toks.back());
    } catch (const Error& e) {
      throw ParseError(e.what(), line_no);
    }
    if (value == 0) throw ParseError("explicit zero entry", line_no);
    if (!entries.emplace(std::move(key), value).second) throw ParseError("duplicate key", line_no);
  }
  if (!have_header) throw ParseError("missing symtensor header", line_no);
  SymTensor t(order, dim);
  for (const auto& [key, value] : entries) t.set(key, value);
  return t;
}

SymTensor parse_coo(const std::string& text) {
  std::istringstream in(text);
  return parse_coo(in);
}

}  // namespace eadj
