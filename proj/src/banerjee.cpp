#include "eadj/banerjee.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "eadj/error.hpp"
#include "eadj/layers.hpp"
#include "eadj/uniformization.hpp"

namespace eadj {

Integer PartitionTable::count(std::size_t m, std::size_t s) {
  if (m == 0 && s == 0) return 1;
  if (s == 0 || s > m) return 0;
  if (s == 1 || s == m) return 1;
  const auto key = std::make_pair(m, s);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  // Either the smallest part is 1 (drop it) or every part is >= 2 (take one
  // from each).
  Integer v = count(m - s, s) + count(m - 1, s - 1);
  memo_.emplace(key, v);
  return v;
}

Integer partitions_count(std::size_t m, std::size_t s) {
  PartitionTable table;
  return table.count(m, s);
}

namespace {

Integer binomial(std::size_t n, std::size_t k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

Integer alpha(std::size_t k, std::size_t s) {
  if (s == 0 || s > k) {
    throw Error("alpha(" + std::to_string(k) + ", " + std::to_string(s) + ") needs 1 <= s <= k");
  }
  // a[j][s'] = compositions sum for j positions into s' parts; the first part
  // takes k1 positions.
  std::vector<std::vector<Integer>> a(k + 1, std::vector<Integer>(s + 1, 0));
  a[0][0] = 1;
  for (std::size_t parts = 1; parts <= s; ++parts) {
    for (std::size_t j = parts; j <= k; ++j) {
      Integer sum = 0;
      for (std::size_t k1 = 1; k1 + (parts - 1) <= j; ++k1) sum += binomial(j, k1) * a[j - k1][parts - 1];
      a[j][parts] = sum;
    }
  }
  return a[k][s];
}

namespace {

// Calls f(parts) for every composition of `total` into parts.size() positive
// parts, in lexicographic order.
template <class F>
void for_each_composition(std::size_t total, std::vector<std::size_t>& parts, std::size_t pos,
                          F&& f) {
  const std::size_t remaining_slots = parts.size() - pos;
  if (remaining_slots == 1) {
    parts[pos] = total;
    f(parts);
    return;
  }
  for (std::size_t p = 1; p + (remaining_slots - 1) <= total; ++p) {
    parts[pos] = p;
    for_each_composition(total - p, parts, pos + 1, f);
  }
}

}  // namespace

SymTensor banerjee_tensor(const Hypergraph& h) {
  if (h.empty()) throw Error("banerjee tensor of an empty hypergraph");
  const std::size_t k_max = h.max_cardinality();
  SymTensor t(k_max, h.num_vertices());
  std::map<std::size_t, Rational> value_by_size;
  IndexTuple key;
  for (const auto& e : h.edges()) {
    const std::size_t s = e.size();
    auto [it, fresh] = value_by_size.try_emplace(s);
    if (fresh) {
      it->second = Rational(Integer(s), alpha(k_max, s));
      it->second.canonicalize();
    }
    std::vector<std::size_t> parts(s);
    for_each_composition(k_max, parts, 0, [&](const std::vector<std::size_t>& c) {
      key.clear();
      for (std::size_t j = 0; j < s; ++j) key.insert(key.end(), c[j], e[j]);
      t.set(key, it->second);
    });
  }
  return t;
}

ComparisonReport compare(const Hypergraph& h) {
  if (h.empty()) throw Error("comparison of an empty hypergraph");
  const LayerDecomposition layers = decompose(h);
  const std::size_t n = h.num_vertices();
  const std::size_t k = layers.k_max();
  const Integer edges(static_cast<unsigned long>(h.num_edges()));
  PartitionTable table;

  ComparisonReport r;
  const SymTensor a = e_adjacency_tensor(h);
  r.layered.order = k;
  r.layered.dim = n + k - 1;
  mpz_ui_pow_ui(r.layered.total_elements.get_mpz_t(), r.layered.dim, k);
  r.layered.nnz_positions = factorial(k) * edges;
  r.layered.describe_count = edges;
  r.layered.stored_keys = a.num_keys();
  r.layered_value = Rational(Integer(1), factorial(k - 1));

  const SymTensor b = banerjee_tensor(h);
  r.banerjee.order = k;
  r.banerjee.dim = n;
  mpz_ui_pow_ui(r.banerjee.total_elements.get_mpz_t(), n, k);
  r.banerjee.nnz_positions = 0;
  r.banerjee.describe_count = 0;
  for (std::size_t s = 1; s <= k; ++s) {
    const Integer count(static_cast<unsigned long>(layers.layer(s).num_edges()));
    if (count == 0) continue;
    r.banerjee.nnz_positions += alpha(k, s) * count;
    r.banerjee.describe_count += table.count(k, s) * count;
    Rational v(Integer(s), alpha(k, s));
    v.canonicalize();
    r.banerjee_values.emplace(s, v);
  }
  r.banerjee.stored_keys = b.num_keys();
  return r;
}

namespace {

void put_figures(std::ostream& out, const std::string& model, const ModelFigures& f) {
  out << model << ".order=" << f.order << '\n'
      << model << ".dim=" << f.dim << '\n'
      << model << ".total_elements=" << f.total_elements.get_str() << '\n'
      << model << ".nnz_positions=" << f.nnz_positions.get_str() << '\n'
      << model << ".describe_count=" << f.describe_count.get_str() << '\n'
      << model << ".stored_keys=" << f.stored_keys << '\n';
}

}  // namespace

std::string to_keyvalue(const ComparisonReport& r) {
  std::ostringstream out;
  put_figures(out, "layered", r.layered);
  out << "layered.entry_value=" << to_string(r.layered_value) << '\n';
  put_figures(out, "banerjee", r.banerjee);
  for (const auto& [s, v] : r.banerjee_values) {
    out << "banerjee.entry_value[" << s << "]=" << to_string(v) << '\n';
  }
  return out.str();
}

std::string to_table(const ComparisonReport& r) {
  std::string values;
  for (const auto& [s, v] : r.banerjee_values) {
    if (!values.empty()) values += ' ';
    values += "s=" + std::to_string(s) + ":" + to_string(v);
  }
  const std::vector<std::array<std::string, 3>> rows = {
      {"metric", "layered", "banerjee"},
      {"order", std::to_string(r.layered.order), std::to_string(r.banerjee.order)},
      {"dim", std::to_string(r.layered.dim), std::to_string(r.banerjee.dim)},
      {"total_elements", r.layered.total_elements.get_str(), r.banerjee.total_elements.get_str()},
      {"nnz_positions", r.layered.nnz_positions.get_str(), r.banerjee.nnz_positions.get_str()},
      {"describe_count", r.layered.describe_count.get_str(), r.banerjee.describe_count.get_str()},
      {"stored_keys", std::to_string(r.layered.stored_keys), std::to_string(r.banerjee.stored_keys)},
      {"entry_value", to_string(r.layered_value), values},
  };
  std::size_t w0 = 0;
  std::size_t w1 = 0;
  for (const auto& row : rows) {
    w0 = std::max(w0, row[0].size());
    w1 = std::max(w1, row[1].size());
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    out << row[0] << std::string(w0 - row[0].size() + 2, ' ') << row[1]
        << std::string(w1 - row[1].size() + 2, ' ') << row[2] << '\n';
  }
  return out.str();
}

}  // namespace eadj
