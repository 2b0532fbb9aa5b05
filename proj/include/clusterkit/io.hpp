// External formats: the matrix JSON document, graph exports (JSON and DOT),
// automorphism reports, and audit reports. All exports are deterministic,
// byte for byte, for a given input.
//
// Indices are 1-based in every document; the in-memory API is 0-based.
#pragma once

#include "clusterkit/audit.hpp"
#include "clusterkit/automorphism.hpp"
#include "clusterkit/exchange_graph.hpp"
#include "clusterkit/matrix.hpp"
#include "clusterkit/seed.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace clusterkit {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Matrix documents: {"rank": n, "matrix": [[...], ...]}

inline Json matrix_to_json(const ExchangeMatrix& m) {
  Json doc;
  doc["rank"] = m.rank();
  doc["matrix"] = detail::matrix_rows_json(m);
  return doc;
}

inline std::string matrix_document(const ExchangeMatrix& m) {
  return matrix_to_json(m).dump(2) + "\n";
}

/// Structural validation with field-naming diagnostics; the result is a
/// square integer matrix, not yet checked for exchange-matrix invariants.
inline ExchangeMatrix matrix_from_json(const Json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("matrix document: expected an object");
  if (!doc.contains("rank")) throw std::invalid_argument("matrix document: missing field \"rank\"");
  if (!doc["rank"].is_number_integer())
    throw std::invalid_argument("matrix document: field \"rank\" must be an integer");
  const int n = doc["rank"].get<int>();
  if (n <= 0) throw std::invalid_argument("matrix document: field \"rank\" must be positive");
  if (!doc.contains("matrix"))
    throw std::invalid_argument("matrix document: missing field \"matrix\"");
  const auto& rows = doc["matrix"];
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    throw std::invalid_argument("matrix document: field \"matrix\" must hold " +
                                std::to_string(n) + " rows");
  ExchangeMatrix m(n);
  for (int i = 0; i < n; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw std::invalid_argument("matrix document: row " + std::to_string(i + 1) +
                                  " must hold " + std::to_string(n) + " integers");
    for (int j = 0; j < n; ++j) {
      if (!row[j].is_number_integer())
        throw std::invalid_argument("matrix document: entry (" + std::to_string(i + 1) + "," +
                                    std::to_string(j + 1) + ") must be an integer");
      m.at(i, j) = row[j].get<std::int64_t>();
    }
  }
  return m;
}

/// Parses and fully validates a matrix document.
inline ExchangeMatrix load_matrix_document(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("matrix document: ") + e.what());
  }
  ExchangeMatrix m = matrix_from_json(doc);
  validate_exchange_matrix(m);
  return m;
}

// ---------------------------------------------------------------------------
// Graph exports

inline Json graph_to_json(const ExchangeGraph& g) {
  Json doc;
  doc["rank"] = g.rank();
  doc["complete"] = g.complete;
  doc["initial"] = g.initial;
  doc["node_count"] = g.nodes.size();
  Json nodes = Json::array();
  for (std::size_t id = 0; id < g.nodes.size(); ++id) {
    const auto& node = g.nodes[id];
    Json entry;
    entry["id"] = id;
    entry["key"] = node.key;
    Json cluster = Json::array();
    for (const auto& variable : node.seed.cluster()) cluster.push_back(variable.str());
    entry["cluster"] = std::move(cluster);
    entry["matrix"] = detail::matrix_rows_json(node.seed.matrix());
    Json path = Json::array();
    for (int k : node.seed.path()) path.push_back(k + 1);
    entry["path"] = std::move(path);
    Json neighbors = Json::array();
    for (std::size_t v : node.neighbors) {
      if (v == ExchangeGraph::npos) neighbors.push_back(nullptr);
      else neighbors.push_back(v);
    }
    entry["neighbors"] = std::move(neighbors);
    nodes.push_back(std::move(entry));
  }
  doc["nodes"] = std::move(nodes);
  return doc;
}

inline ExchangeGraph graph_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("rank") || !doc.contains("nodes"))
    throw std::invalid_argument("graph document: missing \"rank\" or \"nodes\"");
  const int n = doc["rank"].get<int>();
  ExchangeGraph g;
  g.complete = doc.value("complete", false);
  g.initial = doc.value("initial", std::size_t{0});
  for (const auto& entry : doc["nodes"]) {
    std::vector<LaurentPolynomial> cluster;
    for (const auto& rendered : entry["cluster"])
      cluster.push_back(parse_laurent(rendered.get<std::string>(), n));
    ExchangeMatrix m(n);
    const auto& rows = entry["matrix"];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = rows[i][j].get<std::int64_t>();
    std::vector<int> path;
    for (const auto& k : entry["path"]) path.push_back(k.get<int>() - 1);
    std::vector<std::size_t> neighbors;
    for (const auto& v : entry["neighbors"])
      neighbors.push_back(v.is_null() ? ExchangeGraph::npos : v.get<std::size_t>());
    g.nodes.push_back({Seed(std::move(cluster), std::move(m), std::move(path)),
                       entry["key"].get<std::string>(), std::move(neighbors)});
    g.index.emplace(g.nodes.back().key, g.nodes.size() - 1);
  }
  return g;
}

/// Undirected DOT rendering: nodes labeled by the sorted cluster, one edge per
/// unordered pair, labeled with the mutation direction at the lower endpoint.
inline std::string graph_to_dot(const ExchangeGraph& g) {
  std::ostringstream out;
  out << "graph exchange {\n";
  out << "  node [shape=box];\n";
  for (std::size_t id = 0; id < g.nodes.size(); ++id) {
    std::vector<LaurentPolynomial> sorted = g.nodes[id].seed.cluster();
    std::sort(sorted.begin(), sorted.end());
    out << "  n" << id << " [label=\"";
    for (std::size_t i = 0; i < sorted.size(); ++i)
      out << (i ? ", " : "") << sorted[i].str();
    out << "\"];\n";
  }
  for (std::size_t u = 0; u < g.nodes.size(); ++u)
    for (std::size_t k = 0; k < g.nodes[u].neighbors.size(); ++k) {
      const std::size_t v = g.nodes[u].neighbors[k];
      if (v == ExchangeGraph::npos || v < u) continue;
      out << "  n" << u << " -- n" << v << " [label=\"" << k + 1 << "\"];\n";
    }
  out << "}\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Automorphism reports

inline Json hom_to_json(const ClusterHom& hom) {
  Json doc;
  Json images = Json::array();
  for (const auto& img : hom.images) images.push_back(img.str());
  doc["images"] = std::move(images);
  doc["sigma"] = detail::sigma_json(hom.sigma);
  if (hom.sign) {
    Json signs = Json::array();
    for (int s : hom.sign->signs) signs.push_back(s);
    doc["sign"] = std::move(signs);
  } else {
    doc["sign"] = nullptr;
  }
  doc["target"] = hom.target_key;
  switch (hom.verified) {
    case VerifyState::Unchecked: doc["verified"] = "unchecked"; break;
    case VerifyState::Passed: doc["verified"] = "passed"; break;
    case VerifyState::Failed: doc["verified"] = "failed"; break;
  }
  return doc;
}

inline Json group_to_json(const AutomorphismGroup& group) {
  Json doc;
  doc["order"] = group.elements.size();
  doc["identity"] = group.identity;
  Json elements = Json::array();
  for (const auto& hom : group.elements) elements.push_back(hom_to_json(hom));
  doc["automorphisms"] = std::move(elements);
  Json table = Json::array();
  for (const auto& row : group.table) {
    Json cells = Json::array();
    for (std::size_t v : row) cells.push_back(v);
    table.push_back(std::move(cells));
  }
  doc["composition"] = std::move(table);
  return doc;
}

// ---------------------------------------------------------------------------
// Audit reports (elapsed time is intentionally not part of the canonical
// document so repeated runs stay byte-identical)

inline Json audit_to_json(const AuditReport& report) {
  Json doc;
  doc["subject"] = report.subject;
  doc["instances_checked"] = report.instances_checked;
  doc["partial"] = report.partial;
  doc["violation_count"] = report.violations.size();
  Json violations = Json::array();
  for (const auto& violation : report.violations) {
    Json entry;
    entry["kind"] = violation.kind;
    entry["witness"] = violation.witness;
    violations.push_back(std::move(entry));
  }
  doc["violations"] = std::move(violations);
  return doc;
}

}  // namespace clusterkit
