#include "eadj/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "eadj/banerjee.hpp"
#include "eadj/error.hpp"
#include "eadj/hypergraph.hpp"
#include "eadj/layers.hpp"
#include "eadj/polynomial.hpp"
#include "eadj/spectral.hpp"
#include "eadj/symtensor.hpp"
#include "eadj/uniformization.hpp"

namespace eadj {

namespace {

struct Options {
  std::string input;
  std::string model = "layered";
  std::size_t layer = 0;
  std::string normalization = "degree";
  bool laplacian = false;
  std::string format;
  std::size_t vertices = 0;
  std::size_t size = 0;
  std::string route = "structural";
  std::size_t m = 0;
  std::size_t s = 0;
  std::size_t k = 0;
  double tol = 1e-10;
  std::size_t max_iter = 10000;
};

class Command {
 public:
  Command(const Options& opt, std::istream& in, std::ostream& out) : opt_(opt), in_(in), out_(out) {}

  int info();
  int layers();
  int tensor();
  int poly();
  int degrees_cmd();
  int cardinalities();
  int reconstruct_cmd();
  int dnf();
  int partitions();
  int alpha_cmd();
  int compare_cmd();
  int bound();
  int eig();
  int graph_check();

 private:
  std::istream& source() {
    if (opt_.input.empty() || opt_.input == "-") return in_;
    file_.open(opt_.input);
    if (!file_) throw Error("cannot read '" + opt_.input + "'");
    return file_;
  }
  Hypergraph read_hypergraph() { return parse_hypergraph(source()); }
  SymTensor read_tensor() { return parse_coo(source()); }

  const Options& opt_;
  std::istream& in_;
  std::ostream& out_;
  std::ifstream file_;
};

void print_edge(std::ostream& out, const Hyperedge& e) {
  for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
  out << '\n';
}

int Command::info() {
  const Hypergraph h = read_hypergraph();
  out_ << "vertices=" << h.num_vertices() << '\n' << "edges=" << h.num_edges() << '\n';
  if (h.empty()) return kExitOk;
  const LayerDecomposition d = decompose(h);
  out_ << "k_max=" << d.k_max() << '\n';
  for (std::size_t k = 1; k <= d.k_max(); ++k) {
    out_ << "edges_of_size[" << k << "]=" << d.layer(k).num_edges() << '\n';
  }
  return kExitOk;
}

int Command::layers() {
  const LayerDecomposition d = decompose(read_hypergraph());
  for (std::size_t k = 1; k <= d.k_max(); ++k) {
    const Hypergraph& hk = d.layer(k);
    out_ << "layer " << k << ": " << hk.num_edges() << " edges\n";
    for (const auto& e : hk.edges()) {
      out_ << "  ";
      print_edge(out_, e);
    }
  }
  return kExitOk;
}

int Command::tensor() {
  const std::string format = opt_.format.empty() ? "coo" : opt_.format;
  if (format != "coo" && format != "dense") throw Error("tensor --format must be coo or dense");
  const Hypergraph h = read_hypergraph();

  if (opt_.layer == 0) {
    if (opt_.laplacian) throw Error("--laplacian applies to a single layer (--layer K)");
    const SymTensor t = opt_.model == "banerjee" ? banerjee_tensor(h) : e_adjacency_tensor(h);
    out_ << (format == "dense" ? to_dense(t) : to_coo(t));
    return kExitOk;
  }
  if (opt_.model != "layered") throw Error("--layer applies to the layered model");
  const LayerDecomposition d = decompose(h);
  const Hypergraph& hk = d.layer(opt_.layer);
  const std::vector<std::size_t> deg = degrees(hk);

  if (opt_.normalization == "eigen") {
    if (format == "dense") throw Error("dense output is available for exact tensors only");
    RealSymTensor t = layer_tensor_eigen_normalized(hk, opt_.layer);
    if (opt_.laplacian) t = laplacian(t, std::span<const std::size_t>(deg));
    out_ << to_coo(t);
    return kExitOk;
  }
  SymTensor t = opt_.normalization == "raw" ? layer_tensor_raw(hk, opt_.layer)
                                            : layer_tensor_degree_normalized(hk, opt_.layer);
  if (opt_.laplacian) t = laplacian(t, std::span<const std::size_t>(deg));
  out_ << (format == "dense" ? to_dense(t) : to_coo(t));
  return kExitOk;
}

int Command::poly() {
  const Hypergraph h = read_hypergraph();
  out_ << to_text(build_R(h), h.num_vertices());
  return kExitOk;
}

int Command::degrees_cmd() {
  const Hypergraph h = read_hypergraph();
  if (h.empty()) throw Error("hypergraph has no edges");
  const std::vector<Rational> d = vertex_degrees_from_tensor(e_adjacency_tensor(h), h.num_vertices());
  for (std::size_t i = 0; i < d.size(); ++i) out_ << i + 1 << ' ' << to_string(d[i]) << '\n';
  return kExitOk;
}

int Command::cardinalities() {
  const Hypergraph h = read_hypergraph();
  if (h.empty()) throw Error("hypergraph has no edges");
  const LayerCounts c = layer_counts_from_tensor(e_adjacency_tensor(h), h.num_vertices());
  for (std::size_t s = 0; s < c.by_size.size(); ++s) out_ << s + 1 << ' ' << to_string(c.by_size[s]) << '\n';
  return kExitOk;
}

int Command::reconstruct_cmd() {
  if (opt_.vertices == 0) throw Error("reconstruct needs --vertices N");
  out_ << to_hg_text(reconstruct(read_tensor(), opt_.vertices));
  return kExitOk;
}

int Command::dnf() {
  if (opt_.route != "structural" && opt_.route != "difference") {
    throw Error("dnf --route must be structural or difference");
  }
  const Hypergraph h = read_hypergraph();
  if (h.empty()) throw Error("hypergraph has no edges");
  const SymTensor t = e_adjacency_tensor(h);
  const std::set<Hyperedge> edges = opt_.route == "structural"
                                        ? dnf_layer_extract(t, h.num_vertices(), opt_.size)
                                        : dnf_layer_extract_by_difference(t, h.num_vertices(), opt_.size);
  for (const auto& e : edges) print_edge(out_, e);
  return kExitOk;
}

int Command::partitions() {
  if (opt_.m == 0 || opt_.s == 0) throw Error("partitions needs --m >= 1 and --s >= 1");
  out_ << partitions_count(opt_.m, opt_.s).get_str() << '\n';
  return kExitOk;
}

int Command::alpha_cmd() {
  out_ << alpha(opt_.k, opt_.s).get_str() << '\n';
  return kExitOk;
}

int Command::compare_cmd() {
  const std::string format = opt_.format.empty() ? "text" : opt_.format;
  if (format != "text" && format != "keyvalue") throw Error("compare --format must be text or keyvalue");
  const ComparisonReport r = compare(read_hypergraph());
  out_ << (format == "text" ? to_table(r) : to_keyvalue(r));
  return kExitOk;
}

int Command::bound() {
  const BoundReport r = layer_bound(read_hypergraph());
  out_ << "delta=" << to_string(r.delta) << '\n'
       << "delta_star=" << to_string(r.delta_star) << '\n'
       << "bound=" << to_string(r.bound) << '\n';
  return kExitOk;
}

int Command::eig() {
  if (!(opt_.tol > 0)) throw Error("--tol must be positive");
  const Hypergraph h = read_hypergraph();
  const SymTensor t = opt_.model == "banerjee" ? banerjee_tensor(h) : e_adjacency_tensor(h);
  const EigenPair p = power_iteration(t, opt_.tol, opt_.max_iter);
  out_ << "lambda=" << format_real(p.lambda) << '\n'
       << "bracket_low=" << format_real(p.lambda_low) << '\n'
       << "bracket_high=" << format_real(p.lambda_high) << '\n'
       << "bracket_width=" << format_real(p.lambda_high - p.lambda_low) << '\n'
       << "iterations=" << p.iterations << '\n'
       << "converged=" << (p.converged ? "true" : "false") << '\n'
       << "residual=" << format_real(p.residual) << '\n';
  for (std::size_t i = 0; i < p.x.size(); ++i) out_ << "x " << i + 1 << ' ' << format_real(p.x[i]) << '\n';
  return p.converged ? kExitOk : kExitNumeric;
}

int Command::graph_check() {
  const GraphCaseReport r = graph_case_check(read_hypergraph());
  auto ok = [](bool b) { return b ? "ok" : "fail"; };
  out_ << "c2=" << to_string(r.c2) << '\n'
       << "block=" << ok(r.block_ok) << '\n'
       << "zero_eigenpair=" << ok(r.zero_eigenpair_ok) << '\n'
       << "graph_dominant=" << format_real(r.graph_dominant) << '\n'
       << "layered_dominant=" << format_real(r.layered_dominant) << '\n'
       << "dominant=" << ok(r.dominant_ok) << '\n'
       << "result=" << (r.passed() ? "pass" : "fail") << '\n';
  return r.passed() ? kExitOk : kExitNumeric;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Layered e-adjacency tensor toolkit for non-uniform hypergraphs", "eadj"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("-i,--input", opt.input, "Input file (default: standard input)");

  auto* info = app.add_subcommand("info", "Vertex, edge and layer counts");
  auto* layers = app.add_subcommand("layers", "Edges grouped by cardinality");
  auto* tensor = app.add_subcommand("tensor", "Export a tensor in COO or dense form");
  tensor->add_option("--model", opt.model)->check(CLI::IsMember({"layered", "banerjee"}));
  tensor->add_option("--layer", opt.layer, "Export only the k-adjacency tensor of layer K");
  tensor->add_option("--normalization", opt.normalization)
      ->check(CLI::IsMember({"raw", "degree", "eigen"}));
  tensor->add_flag("--laplacian", opt.laplacian, "Export I - A for the selected layer");
  tensor->add_option("--format", opt.format)->check(CLI::IsMember({"coo", "dense"}));
  auto* poly = app.add_subcommand("poly", "Homogenized polynomial R");
  auto* degrees = app.add_subcommand("degrees", "Vertex degrees read from the tensor");
  auto* cards = app.add_subcommand("cardinalities", "Edge counts per size read from the tensor");
  auto* recon = app.add_subcommand("reconstruct", "Hypergraph from a layered COO tensor");
  recon->add_option("--vertices", opt.vertices, "Number of original vertices")->required();
  auto* dnf = app.add_subcommand("dnf", "Edges of one size extracted from the polynomial");
  dnf->add_option("--size", opt.size)->required();
  dnf->add_option("--route", opt.route)->check(CLI::IsMember({"structural", "difference"}));
  auto* parts = app.add_subcommand("partitions", "Partitions of m into exactly s parts");
  parts->add_option("--m", opt.m)->required();
  parts->add_option("--s", opt.s)->required();
  auto* alpha = app.add_subcommand("alpha", "Surjections from k positions onto s labels");
  alpha->add_option("--k", opt.k)->required();
  alpha->add_option("--s", opt.s)->required();
  auto* cmp = app.add_subcommand("compare", "Layered vs Banerjee construction figures");
  cmp->add_option("--format", opt.format)->check(CLI::IsMember({"text", "keyvalue"}));
  auto* bound = app.add_subcommand("bound", "Spectral bound max(delta, delta*)");
  auto* eig = app.add_subcommand("eig", "Dominant H-eigenpair by power iteration");
  eig->add_option("--model", opt.model)->check(CLI::IsMember({"layered", "banerjee"}));
  eig->add_option("--tol", opt.tol);
  eig->add_option("--max-iter", opt.max_iter);
  auto* graph = app.add_subcommand("graph-check", "Graph special case consistency");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << "run 'eadj --help' for usage\n";
    return kExitUsage;
  }

  Command cmd(opt, in, out);
  try {
    if (info->parsed()) return cmd.info();
    if (layers->parsed()) return cmd.layers();
    if (tensor->parsed()) return cmd.tensor();
    if (poly->parsed()) return cmd.poly();
    if (degrees->parsed()) return cmd.degrees_cmd();
    if (cards->parsed()) return cmd.cardinalities();
    if (recon->parsed()) return cmd.reconstruct_cmd();
    if (dnf->parsed()) return cmd.dnf();
    if (parts->parsed()) return cmd.partitions();
    if (alpha->parsed()) return cmd.alpha_cmd();
    if (cmp->parsed()) return cmd.compare_cmd();
    if (bound->parsed()) return cmd.bound();
    if (eig->parsed()) return cmd.eig();
    if (graph->parsed()) return cmd.graph_check();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
  return kExitUsage;
}

}  // namespace eadj
