#ifndef COPCUT_JSON_IO_HPP
#define COPCUT_JSON_IO_HPP

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "copcut/graph.hpp"
#include "copcut/matrix.hpp"
#include "copcut/mbqp.hpp"
#include "copcut/qubo.hpp"

namespace copcut {

using json = nlohmann::json;

namespace detail {

inline Eigen::MatrixXd matrix_from_json(const json& j, const std::string& name) {
  if (!j.is_array()) throw std::invalid_argument(name + ": expected array of rows");
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  Eigen::Index cols = 0;
  if (rows > 0) cols = static_cast<Eigen::Index>(j[0].size());
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    if (static_cast<Eigen::Index>(j[r].size()) != cols) {
      throw std::invalid_argument(name + ": ragged rows");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      m(r, c) = j[r][c].get<double>();
    }
  }
  return m;
}

inline Eigen::VectorXd vector_from_json(const json& j, const std::string& name) {
  if (!j.is_array()) throw std::invalid_argument(name + ": expected array");
  Eigen::VectorXd v(static_cast<Eigen::Index>(j.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = j[i].get<double>();
  return v;
}

inline json matrix_to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

inline json vector_to_json(const Eigen::VectorXd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

}  // namespace detail

/// {"n": int, "m": int, "Q": [[...]], "c": [...], "A": [[...]],
///  "b": [...], "binary": [int, ...]}
inline Mbqp mbqp_from_json(const json& j) {
  Mbqp p;
  p.n = j.at("n").get<Eigen::Index>();
  p.m = j.at("m").get<Eigen::Index>();
  p.Q = SymMatrix(detail::matrix_from_json(j.at("Q"), "Q"));
  p.c = detail::vector_from_json(j.at("c"), "c");
  Eigen::MatrixXd A = detail::matrix_from_json(j.at("A"), "A");
  if (A.size() == 0) A = Eigen::MatrixXd::Zero(p.m, p.n);
  p.A = A;
  p.b = detail::vector_from_json(j.at("b"), "b");
  if (j.contains("binary")) {
    p.binary_set = j.at("binary").get<std::vector<int>>();
  }
  validate(p);
  return p;
}

inline json mbqp_to_json(const Mbqp& p) {
  json j;
  j["n"] = p.n;
  j["m"] = p.m;
  j["Q"] = detail::matrix_to_json(p.Q.mat());
  j["c"] = detail::vector_to_json(p.c);
  j["A"] = detail::matrix_to_json(p.A);
  j["b"] = detail::vector_to_json(p.b);
  j["binary"] = p.binary_set;
  return j;
}

/// {"n": int, "coeffs": [[...]], "offset": real}
inline Qubo qubo_from_json(const json& j) {
  Qubo q;
  q.coeffs = SymMatrix(detail::matrix_from_json(j.at("coeffs"), "coeffs"));
  if (j.contains("n") &&
      j.at("n").get<Eigen::Index>() != q.coeffs.size()) {
    throw std::invalid_argument("qubo_from_json: n does not match coeffs");
  }
  q.offset = j.value("offset", 0.0);
  return q;
}

inline json qubo_to_json(const Qubo& q) {
  json j;
  j["n"] = q.n();
  j["coeffs"] = detail::matrix_to_json(q.coeffs.mat());
  j["offset"] = q.offset;
  return j;
}

/// {"size": n, "entries": [[...]]}
inline SymMatrix sym_matrix_from_json(const json& j) {
  Eigen::MatrixXd m = detail::matrix_from_json(j.at("entries"), "entries");
  if (j.contains("size") && j.at("size").get<Eigen::Index>() != m.rows()) {
    throw std::invalid_argument("sym_matrix_from_json: size does not match entries");
  }
  return SymMatrix(m);
}

/// {"n": int, "edges": [[i, j], ...]}
inline Graph graph_from_json(const json& j) {
  int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (e.size() != 2) throw std::invalid_argument("graph_from_json: bad edge");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return make_graph(n, std::move(edges));
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  return json::parse(in);
}

/// Loads a graph from a path, dispatching on content: JSON object or
/// DIMACS edge format.
inline Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  char first = 0;
  in >> first;
  in.seekg(0);
  if (first == '{') {
    return graph_from_json(json::parse(in));
  }
  return parse_dimacs(in);
}

}  // namespace copcut

#endif  // COPCUT_JSON_IO_HPP
