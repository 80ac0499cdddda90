#include "scarf/io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <json.hpp>

#include "scarf/error.hpp"

namespace scarf::io {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

Json parse(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::exception& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

const Json& field(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return obj.at(key);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Rational rational_from(const Json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Rational(mpz_class(std::to_string(j.get<std::uint64_t>())))
                                  : Rational(mpz_class(std::to_string(j.get<std::int64_t>())));
  }
  if (j.is_string()) return parse_rational(j.get<std::string>());
  bad("rationals must be integers or \"p/q\" strings, got " + j.dump());
}

Json rational_to(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  if (c.get_den() == 1 && c.get_num().fits_slong_p()) return Json(static_cast<std::int64_t>(c.get_num().get_si()));
  return Json(to_string(c));
}

std::size_t index_from(const Json& j, std::size_t limit, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  const auto v = j.get<std::int64_t>();
  if (v < 1 || static_cast<std::uint64_t>(v) > limit) {
    bad(std::string(what) + " " + std::to_string(v) + " out of range 1.." + std::to_string(limit));
  }
  return static_cast<std::size_t>(v - 1);
}

std::string label_from(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return j.dump();
  bad("labels must be strings or integers, got " + j.dump());
}

Json label_to(const std::string& s) {
  const bool numeric = !s.empty() && s.size() <= 18 && (s == "0" || s.front() != '0') &&
                       s.find_first_not_of("0123456789") == std::string::npos;
  if (numeric) return Json(std::stoll(s));
  return Json(s);
}

std::vector<std::string> labels_from(const Json& arr, const char* what) {
  if (!arr.is_array()) bad(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& j : arr) out.push_back(label_from(j));
  return out;
}

std::size_t lookup(const std::vector<std::string>& labels, const std::string& label) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return i;
  }
  bad("unknown label \"" + label + "\"");
}

Matrix matrix_from(const Json& j, const char* name) {
  if (!j.is_array()) bad(std::string(name) + " must be an array of rows");
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) bad(std::string(name) + " rows must be arrays");
    std::vector<Rational> r;
    for (const auto& x : row) r.push_back(rational_from(x));
    rows.push_back(std::move(r));
  }
  return Matrix::from_rows(rows);
}

Json matrix_to(const Matrix& a) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(rational_to(a(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string read_text(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::string& path, std::string_view text) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) bad("cannot write " + path);
  out << text;
}

ScarfInstance parse_scarf_instance(std::string_view json) {
  const Json doc = parse(json);
  ScarfInstance inst;
  const Json& m = field(doc, "m");
  const Json& n = field(doc, "n");
  if (!m.is_number_unsigned() || !n.is_number_unsigned()) bad("m and n must be positive integers");
  inst.m = m.get<std::size_t>();
  inst.n = n.get<std::size_t>();
  inst.B = matrix_from(field(doc, "B"), "B");
  inst.C = matrix_from(field(doc, "C"), "C");
  const Json& b = field(doc, "b");
  if (!b.is_array()) bad("b must be an array");
  for (const auto& x : b) inst.b.push_back(rational_from(x));
  if (inst.B.rows() != inst.m || inst.B.cols() != inst.n || inst.C.rows() != inst.m ||
      inst.C.cols() != inst.n || inst.b.size() != inst.m) {
    bad("B and C must be m x n and b of length m");
  }
  return inst;
}

std::string write_scarf_instance(const ScarfInstance& inst) {
  Json doc;
  doc["m"] = inst.m;
  doc["n"] = inst.n;
  doc["B"] = matrix_to(inst.B);
  Json b = Json::array();
  for (const auto& x : inst.b) b.push_back(rational_to(x));
  doc["b"] = std::move(b);
  doc["C"] = matrix_to(inst.C);
  return dump(doc);
}

ScarfSolution parse_scarf_solution(std::string_view json) {
  const Json doc = parse(json);
  ScarfSolution sol;
  const Json& alpha = field(doc, "alpha");
  if (!alpha.is_array()) bad("alpha must be an array");
  for (const auto& x : alpha) sol.alpha.push_back(rational_from(x));
  const std::size_t n = sol.alpha.size();
  const Json& J = field(doc, "J");
  if (!J.is_array()) bad("J must be an array");
  for (const auto& c : J) sol.J.push_back(index_from(c, n, "column"));
  if (doc.contains("witness")) {
    const Json& w = doc.at("witness");
    if (!w.is_object()) bad("witness must be an object");
    sol.witness.assign(n, 0);
    std::vector<bool> seen(n, false);
    for (const auto& [key, row] : w.items()) {
      std::size_t col = 0;
      try {
        col = index_from(Json(std::stoll(key)), n, "witness column");
      } catch (const std::logic_error&) {
        bad("witness keys must be column numbers");
      }
      if (!row.is_number_integer() || row.get<std::int64_t>() < 1) bad("witness rows must be positive integers");
      sol.witness[col] = static_cast<std::size_t>(row.get<std::int64_t>() - 1);
      seen[col] = true;
    }
    for (bool s : seen) {
      if (!s) bad("witness must cover every column");
    }
  }
  return sol;
}

std::string write_scarf_solution(const ScarfSolution& sol) {
  Json doc;
  Json J = Json::array();
  for (Column c : sol.J) J.push_back(c + 1);
  doc["J"] = std::move(J);
  Json alpha = Json::array();
  for (const auto& x : sol.alpha) alpha.push_back(rational_to(x));
  doc["alpha"] = std::move(alpha);
  Json witness = Json::object();
  for (std::size_t k = 0; k < sol.witness.size(); ++k) witness[std::to_string(k + 1)] = sol.witness[k] + 1;
  doc["witness"] = std::move(witness);
  return dump(doc);
}

kernels::Digraph parse_digraph(std::string_view json) {
  const Json doc = parse(json);
  auto labels = labels_from(field(doc, "vertices"), "vertices");
  std::vector<kernels::Arc> arcs;
  for (const auto& a : field(doc, "arcs")) {
    if (!a.is_array() || a.size() != 2) bad("arcs must be [u, v] pairs");
    arcs.emplace_back(lookup(labels, label_from(a[0])), lookup(labels, label_from(a[1])));
  }
  return kernels::Digraph(std::move(labels), std::move(arcs));
}

std::string write_digraph(const kernels::Digraph& d) {
  Json doc;
  Json vertices = Json::array();
  for (const auto& l : d.labels()) vertices.push_back(label_to(l));
  doc["vertices"] = std::move(vertices);
  Json arcs = Json::array();
  for (auto [u, v] : d.arcs()) arcs.push_back(Json::array({label_to(d.label(u)), label_to(d.label(v))}));
  doc["arcs"] = std::move(arcs);
  return dump(doc);
}

kernels::KernelFunction parse_kernel(std::string_view json, const kernels::Digraph& d) {
  const Json doc = parse(json);
  const Json& f = field(doc, "f");
  if (!f.is_object()) bad("f must be an object");
  kernels::KernelFunction out(d.size());
  std::vector<bool> seen(d.size(), false);
  for (const auto& [key, value] : f.items()) {
    auto v = d.find(key);
    if (!v) bad("kernel names unknown vertex \"" + key + "\"");
    out[*v] = rational_from(value);
    seen[*v] = true;
  }
  for (kernels::Vertex v = 0; v < d.size(); ++v) {
    if (!seen[v]) bad("kernel misses vertex \"" + d.label(v) + "\"");
  }
  return out;
}

std::string write_kernel(const kernels::Digraph& d, const kernels::KernelFunction& f) {
  Json values = Json::object();
  for (kernels::Vertex v = 0; v < d.size(); ++v) values[d.label(v)] = rational_to(f.at(v));
  Json doc;
  doc["f"] = std::move(values);
  return dump(doc);
}

matchings::HypergraphPrefSystem parse_hypergraph(std::string_view json) {
  const Json doc = parse(json);
  matchings::HypergraphPrefSystem h;
  h.labels = labels_from(field(doc, "vertices"), "vertices");
  for (const auto& e : field(doc, "edges")) {
    if (!e.is_array()) bad("edges must be arrays of vertices");
    std::vector<matchings::Vertex> edge;
    for (const auto& v : e) edge.push_back(lookup(h.labels, label_from(v)));
    h.edges.push_back(std::move(edge));
  }
  const Json& orders = field(doc, "orders");
  if (!orders.is_object()) bad("orders must be an object");
  h.orders.assign(h.labels.size(), {});
  std::vector<bool> seen(h.labels.size(), false);
  for (const auto& [key, list] : orders.items()) {
    const auto v = lookup(h.labels, key);
    if (!list.is_array()) bad("orders must map to arrays of edge indices");
    for (const auto& e : list) h.orders[v].push_back(index_from(e, h.edges.size(), "edge"));
    seen[v] = true;
  }
  for (std::size_t v = 0; v < seen.size(); ++v) {
    if (!seen[v]) bad("no order given for vertex \"" + h.labels[v] + "\"");
  }
  matchings::validate(h);
  return h;
}

std::string write_hypergraph(const matchings::HypergraphPrefSystem& h) {
  Json doc;
  Json vertices = Json::array();
  for (const auto& l : h.labels) vertices.push_back(label_to(l));
  doc["vertices"] = std::move(vertices);
  Json edges = Json::array();
  for (const auto& e : h.edges) {
    Json edge = Json::array();
    for (auto v : e) edge.push_back(label_to(h.labels[v]));
    edges.push_back(std::move(edge));
  }
  doc["edges"] = std::move(edges);
  Json orders = Json::object();
  for (std::size_t v = 0; v < h.labels.size(); ++v) {
    Json list = Json::array();
    for (auto e : h.orders[v]) list.push_back(e + 1);
    orders[h.labels[v]] = std::move(list);
  }
  doc["orders"] = std::move(orders);
  return dump(doc);
}

matchings::FractionalMatching parse_matching(std::string_view json, const matchings::HypergraphPrefSystem& h) {
  const Json doc = parse(json);
  const Json& w = field(doc, "w");
  if (!w.is_array() || w.size() != h.edge_count()) bad("w must hold one value per edge");
  matchings::FractionalMatching out;
  for (const auto& x : w) out.push_back(rational_from(x));
  return out;
}

std::string write_matching(const matchings::FractionalMatching& w) {
  Json values = Json::array();
  for (const auto& x : w) values.push_back(rational_to(x));
  Json doc;
  doc["w"] = std::move(values);
  return dump(doc);
}

fspp::FsppInstance parse_fspp(std::string_view json) {
  const Json doc = parse(json);
  auto labels = labels_from(field(doc, "nodes"), "nodes");
  const auto dest = lookup(labels, label_from(field(doc, "dest")));
  std::vector<std::pair<fspp::Node, fspp::Node>> edges;
  for (const auto& e : field(doc, "edges")) {
    if (!e.is_array() || e.size() != 2) bad("edges must be [a, b] pairs");
    edges.emplace_back(lookup(labels, label_from(e[0])), lookup(labels, label_from(e[1])));
  }
  std::vector<std::vector<fspp::PermittedPath>> paths(labels.size());
  const Json& all = field(doc, "paths");
  if (!all.is_object()) bad("paths must be an object");
  for (const auto& [key, list] : all.items()) {
    const auto v = lookup(labels, key);
    if (!list.is_array()) bad("paths must map nodes to arrays");
    for (const auto& entry : list) {
      fspp::PermittedPath pp;
      for (const auto& node : field(entry, "path")) pp.nodes.push_back(lookup(labels, label_from(node)));
      const Json& rank = field(entry, "rank");
      if (!rank.is_number_unsigned()) bad("rank must be a positive integer");
      pp.rank = rank.get<std::size_t>();
      paths[v].push_back(std::move(pp));
    }
  }
  return fspp::FsppInstance(std::move(labels), dest, std::move(edges), std::move(paths));
}

std::string write_fspp(const fspp::FsppInstance& inst) {
  Json doc;
  Json nodes = Json::array();
  for (const auto& l : inst.labels()) nodes.push_back(label_to(l));
  doc["nodes"] = std::move(nodes);
  doc["dest"] = label_to(inst.label(inst.dest()));
  Json edges = Json::array();
  for (auto [a, b] : inst.edges()) edges.push_back(Json::array({label_to(inst.label(a)), label_to(inst.label(b))}));
  doc["edges"] = std::move(edges);
  Json paths = Json::object();
  for (fspp::Node v = 0; v < inst.node_count(); ++v) {
    if (v == inst.dest()) continue;
    Json list = Json::array();
    for (const auto& pp : inst.paths(v)) {
      Json p = Json::array();
      for (auto node : pp.nodes) p.push_back(label_to(inst.label(node)));
      Json entry;
      entry["path"] = std::move(p);
      entry["rank"] = pp.rank;
      list.push_back(std::move(entry));
    }
    paths[inst.label(v)] = std::move(list);
  }
  doc["paths"] = std::move(paths);
  return dump(doc);
}

fspp::FsppWeights parse_fspp_weights(std::string_view json, const fspp::FsppInstance& inst) {
  const Json doc = parse(json);
  const Json& w = field(doc, "w");
  if (!w.is_object()) bad("w must be an object");
  auto out = fspp::zero_weights(inst);
  for (const auto& [key, value] : w.items()) {
    const auto slash = key.rfind('/');
    if (slash == std::string::npos) bad("weight keys must look like \"node/pathIndex\"");
    const auto v = lookup(inst.labels(), key.substr(0, slash));
    std::size_t idx = 0;
    try {
      idx = index_from(Json(std::stoll(key.substr(slash + 1))), inst.paths(v).size(), "path index");
    } catch (const std::logic_error&) {
      bad("weight keys must look like \"node/pathIndex\"");
    }
    out[v][idx] = rational_from(value);
  }
  return out;
}

std::string write_fspp_weights(const fspp::FsppInstance& inst, const fspp::FsppWeights& w) {
  Json values = Json::object();
  for (fspp::Node v = 0; v < inst.node_count(); ++v) {
    for (std::size_t p = 0; p < inst.paths(v).size(); ++p) {
      values[inst.label(v) + "/" + std::to_string(p + 1)] = rational_to(w.at(v).at(p));
    }
  }
  Json doc;
  doc["w"] = std::move(values);
  return dump(doc);
}

DocumentKind detect(std::string_view json) {
  const Json doc = parse(json);
  if (!doc.is_object()) return DocumentKind::Unknown;
  if (doc.contains("arcs")) return DocumentKind::Digraph;
  if (doc.contains("orders")) return DocumentKind::Hypergraph;
  if (doc.contains("dest")) return DocumentKind::Fspp;
  if (doc.contains("B")) return DocumentKind::ScarfInstance;
  if (doc.contains("alpha")) return DocumentKind::ScarfSolution;
  if (doc.contains("f")) return DocumentKind::Kernel;
  if (doc.contains("w")) return doc.at("w").is_array() ? DocumentKind::Matching : DocumentKind::FsppWeights;
  return DocumentKind::Unknown;
}

}  // namespace scarf::io
