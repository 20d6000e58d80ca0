#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hyreg/berge.hpp"
#include "hyreg/complex.hpp"
#include "hyreg/decomposability.hpp"
#include "hyreg/homology.hpp"
#include "hyreg/hypergraph.hpp"
#include "hyreg/matching.hpp"

namespace hyreg {

using Json = nlohmann::ordered_json;

/// Parses the interchange format: {"n": <int>, "edges": [[v, ...], ...]}.
/// Structural problems raise ParseError; semantic ones use the same error
/// taxonomy as build_simple.
inline SimpleHypergraph parse_hypergraph(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(Errc::parse_error, e.what());
  }
  if (!doc.is_object()) fail(Errc::parse_error, "expected an object with fields n and edges");
  if (!doc.contains("n") || !doc["n"].is_number_integer())
    fail(Errc::parse_error, "field n must be an integer");
  if (!doc.contains("edges") || !doc["edges"].is_array())
    fail(Errc::parse_error, "field edges must be an array of arrays");
  long long n = doc["n"].get<long long>();
  if (n < 0 || n > kMaxVertices)
    fail(Errc::too_large, "ground set size " + std::to_string(n) + " outside [0, 64]");
  std::vector<std::vector<int>> edges;
  for (const Json& edge : doc["edges"]) {
    if (!edge.is_array()) fail(Errc::parse_error, "each edge must be an array of vertices");
    std::vector<int> members;
    for (const Json& v : edge) {
      if (!v.is_number_integer()) fail(Errc::parse_error, "vertices must be integers");
      long long value = v.get<long long>();
      if (value < 0 || value >= n)
        fail(Errc::out_of_range, "vertex " + std::to_string(value) + " outside [0, n)");
      members.push_back(static_cast<int>(value));
    }
    edges.push_back(std::move(members));
  }
  return build_simple(static_cast<int>(n), edges);
}

inline Json to_json(const SimpleHypergraph& h) {
  Json edges = Json::array();
  for (VertexSet e : h.edges) edges.push_back(e.to_vector());
  return Json{{"n", h.n}, {"edges", std::move(edges)}};
}

inline Json to_json(const GeneralHypergraph& h) {
  Json edges = Json::array();
  for (VertexSet e : h.edges) edges.push_back(e.to_vector());
  return Json{{"n", h.n}, {"edges", std::move(edges)}};
}

inline Json to_json(const Relabeling& r) {
  return Json{{"old_to_new", r.old_to_new}, {"new_to_old", r.new_to_old}};
}

inline Json to_json(const SimplicialComplex& c) {
  Json facets = Json::array();
  for (VertexSet f : c.facets) facets.push_back(f.to_vector());
  return Json{{"ground", c.ground}, {"void", c.void_flag}, {"facets", std::move(facets)}};
}

inline Json to_json(const SimpleHypergraph& owner, const MatchingCertificate& cert) {
  Json edges = Json::array();
  for (int i : cert.indices) edges.push_back(owner.edges[i].to_vector());
  Json out{{"kind", family_kind_name(cert.kind)},
           {"indices", cert.indices},
           {"edges", std::move(edges)}};
  if (cert.kind != FamilyKind::two_collage) out["weight"] = cert.weight;
  return out;
}

inline Json to_json(const SheddingTree& t) {
  Json out{{"kind", shedding_kind_name(t.kind)}};
  if (t.kind == SheddingTree::Kind::shed) {
    out["vertex"] = t.vertex;
    out["del"] = to_json(*t.del_subtree);
    out["link"] = to_json(*t.link_subtree);
  }
  return out;
}

inline Json to_json(const CycleWitness& w) {
  return Json{{"vertices", w.vertices}, {"edge_indices", w.edge_indices}};
}

inline Json to_json(const HomologyProfile& profile) {
  Json out = Json::array();
  for (auto& [t, r] : profile.ranks)
    if (r != 0) out.push_back(Json{{"dim", t}, {"rank", r}});
  return out;
}

inline Json to_json(const BettiTable& table) {
  Json entries = Json::array();
  for (auto& [ij, r] : table.entries)
    if (r != 0) entries.push_back(Json{{"i", ij.first}, {"j", ij.second}, {"rank", r}});
  return Json{{"field_char", table.field.value}, {"entries", std::move(entries)}};
}

}  // namespace hyreg
