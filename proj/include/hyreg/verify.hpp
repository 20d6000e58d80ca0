#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "hyreg/berge.hpp"
#include "hyreg/complex.hpp"
#include "hyreg/decomposability.hpp"
#include "hyreg/enumerate.hpp"
#include "hyreg/homology.hpp"
#include "hyreg/hypergraph.hpp"
#include "hyreg/io.hpp"
#include "hyreg/matching.hpp"

namespace hyreg {

struct VerifyOptions {
  FieldChar field = FieldChar{2};
  /// Regularity is evaluated only when n fits this ceiling (2^n subsets).
  int betti_ceiling = kDefaultBettiCeiling;
  /// Decomposability searches run only up to this ground size.
  int decomposability_ceiling = 14;
  /// Family enumerations (one claim needs all semi-induced families of a
  /// contraction) run only when the edge count fits.
  int family_enum_ceiling = 18;
  /// Collage minimization runs only when the edge count fits.
  int collage_ceiling = 22;
};

/// Claim identifiers, in report order.
inline const std::vector<std::string>& claim_registry() {
  static const std::vector<std::string> ids = {
      "thm-2.2",           "prop-2.5",
      "cor-2.6",           "rem-2.4-agreement",
      "def-2.7-graph-agreement",
      "rem-3.1-lower",     "rem-3.1-sandwich",
      "rem-3.1-collage-claimed",
      "lem-3.4",           "lem-3.5",
      "thm-3.6",           "cor-3.8-i",
      "cor-3.8-ii",        "cor-3.8-iii",
      "cor-3.8-iv",        "recursion-ineq",
  };
  return ids;
}

inline bool is_known_claim(const std::string& id) {
  for (const auto& known : claim_registry())
    if (known == id) return true;
  return false;
}

struct Hypothesis {
  std::string name;
  bool holds = false;
  Json witness;  // e.g. the cycle showing a freeness hypothesis fails
};

struct ClaimRecord {
  std::string id;
  std::string statement;
  bool claimed_only = false;  // upper bound whose cited proof is uncertain
  bool applicable = false;
  bool checked = true;  // false when a size ceiling stopped the evaluation
  std::optional<bool> holds;
  std::vector<Hypothesis> hypotheses;
  Json lhs;
  Json rhs;
  Json certificate;
  std::string note;

  bool failed() const { return applicable && checked && holds.has_value() && !*holds; }
};

struct VerificationReport {
  SimpleHypergraph input;
  FieldChar field;
  std::vector<ClaimRecord> claims;
  Json extra;  // demo payloads and similar sections
  long long timing_ms = 0;

  bool has_findings() const {
    for (const auto& c : claims)
      if (c.failed()) return true;
    return false;
  }
};

namespace detail {

// ----- independent oracles used by the agreement claims -----

/// Maximum number of pairwise 3-disjoint edges of a graph: vertex-disjoint
/// and not joined by any edge. Plain recursion, independent of the pruned
/// family search.
inline int graph_induced_matching_count(const SimpleHypergraph& g) {
  int best = 0;
  std::vector<int> chosen;
  auto joined = [&](VertexSet a, VertexSet b) {
    for (VertexSet e : g.edges)
      if ((e & a) != VertexSet{} && (e & b) != VertexSet{} && !e.intersects(a & b)) return true;
    return false;
  };
  auto rec = [&](auto&& self, int from) -> void {
    best = std::max(best, static_cast<int>(chosen.size()));
    for (int e = from; e < g.edge_count(); ++e) {
      bool ok = true;
      for (int c : chosen) {
        if (g.edges[c].intersects(g.edges[e]) || joined(g.edges[c], g.edges[e])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(e);
      self(self, e + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return best;
}

/// Classical maximum matching size of a graph by plain recursion.
inline int graph_max_matching_count(const SimpleHypergraph& g) {
  int best = 0;
  auto rec = [&](auto&& self, int from, VertexSet used, int count) -> void {
    best = std::max(best, count);
    for (int e = from; e < g.edge_count(); ++e) {
      if (g.edges[e].intersects(used)) continue;
      self(self, e + 1, used | g.edges[e], count + 1);
    }
  };
  rec(rec, 0, VertexSet{}, 0);
  return best;
}

// ----- lazily evaluated per-hypergraph quantities -----

struct ClaimContext {
  const SimpleHypergraph& h;
  VerifyOptions opts;

  explicit ClaimContext(const SimpleHypergraph& hypergraph, VerifyOptions options)
      : h(hypergraph), opts(options) {}

  const MatchingCertificate& c_cert() {
    if (!c_) c_ = induced_matching_number(h);
    return *c_;
  }
  const MatchingCertificate& cp_cert() {
    if (!cp_) cp_ = semi_induced_matching_number(h);
    return *cp_;
  }
  const MatchingCertificate& m_cert() {
    if (!m_) m_ = matching_number(h);
    return *m_;
  }
  const SimplicialComplex& delta() {
    if (!delta_) delta_ = independence_complex(h);
    return *delta_;
  }
  int dim_plus_one() { return *dimension(delta()) + 1; }

  bool two_uniform() { return uniformity(h) == std::optional<int>(2); }
  bool linear_intersections() {
    if (!linear_) linear_ = has_linear_d_intersections(h) && uniformity(h).has_value();
    return *linear_;
  }

  const std::optional<CycleWitness>& cycle2() {
    if (!cycle2_) cycle2_ = find_cycle(h, 2);
    return *cycle2_;
  }
  const std::optional<CycleWitness>& cycle5() {
    if (!cycle5_) cycle5_ = find_cycle(h, 5);
    return *cycle5_;
  }
  bool c2_free() { return !cycle2().has_value(); }
  bool c5_free() { return !cycle5().has_value(); }

  bool vd_known() const { return h.n <= opts.decomposability_ceiling; }
  const std::optional<SheddingTreePtr>& vd() {
    if (!vd_) vd_ = vertex_decomposable(delta());
    return *vd_;
  }

  bool reg_known() const { return h.n <= opts.betti_ceiling && h.n <= kMaxComplexGround; }
  int reg() {
    if (!reg_) reg_ = regularity(h, opts.field, opts.betti_ceiling);
    return *reg_;
  }

  bool collage_known() const { return h.edge_count() <= opts.collage_ceiling; }
  const MatchingCertificate& collage() {
    if (!collage_) collage_ = collage_bound(h);
    return *collage_;
  }

  std::vector<int> shedding_vertices() {
    std::vector<int> out;
    if (delta().is_void()) return out;
    for (int x = 0; x < h.n; ++x)
      if (is_shedding_vertex(delta(), x)) out.push_back(x);
    return out;
  }

 private:
  std::optional<MatchingCertificate> c_, cp_, m_, collage_;
  std::optional<SimplicialComplex> delta_;
  std::optional<bool> linear_;
  std::optional<std::optional<CycleWitness>> cycle2_, cycle5_;
  std::optional<std::optional<SheddingTreePtr>> vd_;
  std::optional<int> reg_;
};

inline Hypothesis freeness_hypothesis(const std::string& name,
                                      const std::optional<CycleWitness>& witness) {
  Hypothesis hyp{name, !witness.has_value(), Json()};
  if (witness) hyp.witness = to_json(*witness);
  return hyp;
}

/// Unique edge of H whose contraction by x is the given edge of H/x
/// (translated back to the labels of H); the antichain property forbids both
/// lifts existing at once.
inline int lift_contracted_edge(const SimpleHypergraph& h, VertexId x, VertexSet back_labels) {
  for (int i = 0; i < h.edge_count(); ++i) {
    if (h.edges[i] == back_labels || h.edges[i] == (back_labels | VertexSet::single(x)))
      return i;
  }
  return -1;
}

inline ClaimRecord eval_thm_2_2(ClaimContext& ctx) {
  ClaimRecord rec;
  rec.id = "thm-2.2";
  rec.statement = "c <= c' <= dim(independence complex) + 1";
  rec.applicable = true;
  int c = ctx.c_cert().weight, cp = ctx.cp_cert().weight, d1 = ctx.dim_plus_one();
  rec.lhs = Json{{"c", c}, {"c_prime", cp}};
  rec.rhs = Json{{"c_prime", cp}, {"dim_plus_one", d1}};
  rec.holds = c <= cp && cp <= d1;
  rec.certificate = Json{{"c_family", to_json(ctx.h, ctx.c_cert())},
                         {"c_prime_family", to_json(ctx.h, ctx.cp_cert())}};
  return rec;
}

inline ClaimRecord eval_prop_2_5(ClaimContext& ctx) {
  ClaimRecord rec;
  rec.id = "prop-2.5";
  rec.statement = "linear d-wise intersections force c = c'";
  rec.hypotheses.push_back({"d_uniform_linear_intersections", ctx.linear_intersections(), {}});
  rec.applicable = ctx.linear_intersections();
  if (!rec.applicable) return rec;
  rec.lhs = ctx.c_cert().weight;
  rec.rhs = ctx.cp_cert().weight;
  rec.holds = ctx.c_cert().weight == ctx.cp_cert().weight;
  rec.certificate = Json{{"c_family", to_json(ctx.h, ctx.c_cert())},
                         {"c_prime_family", to_json(ctx.h, ctx.cp_cert())}};
  return rec;
}

inline ClaimRecord eval_cor_2_6(ClaimContext& ctx) {
  ClaimRecord rec;
  rec.id = "cor-2.6";
  rec.statement = "graphs have c = c'";
  rec.hypotheses.push_back({"two_uniform", ctx.two_uniform(), {}});
  rec.applicable = ctx.two_uniform();
  if (!rec.applicable) return rec;
  rec.lhs = ctx.c_cert().weight;
  rec.rhs = ctx.cp_cert().weight;
  rec.holds = ctx.c_cert().weight == ctx.cp_cert().weight;
  rec.certificate = Json{{"c_family", to_json(ctx.h, ctx.c_cert())},
                         {"c_prime_family", to_json(ctx.h, ctx.cp_cert())}};
  return rec;
}

inline ClaimRecord eval_rem_2_4(ClaimContext& ctx) {
  ClaimRecord rec;
  rec.id = "rem-2.4-agreement";
  rec.statement = "graph c equals the classical induced matching number";
  rec.hypotheses.push_back({"two_uniform", ctx.two_uniform(), {}});
  rec.applicable = ctx.two_uniform();
  if (!rec.applicable) return rec;
  int oracle = graph_induced_matching_count(ctx.h);
  rec.lhs = ctx.c_cert().weight;
  rec.rhs = oracle;
  rec.holds = ctx.c_cert().weight == oracle;
  rec.certificate = to_json(ctx.h, ctx.c_cert());
  return rec;
}

inline ClaimRecord eval_def_2_7(ClaimContext& ctx) {
  ClaimRecord rec;
  rec.id = "def-2.7-graph-agreement";
  rec.statement = "graph m equals the classical maximum matching size";
  rec.hypotheses.push_back({"two_uniform", ctx.two_uniform(), {}});
  rec.applicable = ctx.two_uniform();
  if (!rec.applicable) return rec;
  int oracle = graph_max_matching_count(ctx.h);
  rec.lhs = ctx.m_cert().weight;
  rec.rhs = oracle;
  rec.holds = ctx.m_cert().weight == oracle;
  rec.certificate = to_json(ctx.h, ctx.m_cert());
  return rec;
}

inline ClaimRecord eval_rem_3_1_lower(ClaimContext& ctx) {
  ClaimRecord rec;
  rec.id = "rem-3.1-lower";
  rec.statement = "c is a lower bound for the regularity";
  rec.applicable = true;
  if (!ctx.reg_known()) {
    rec.checked = false;
    rec.note = "regularity ceiling exceeded";
    return rec;
  }
  rec.lhs = ctx.c_cert().weight;
  rec.rhs = ctx.reg();
  rec.holds = ctx.c_cert().weight <= ctx.reg();
  rec.certificate = to_json(ctx.h, ctx.c_cert());
  return rec;
}

inline ClaimRecord eval_rem_3_1_sandwich(ClaimContext& ctx) {
  ClaimRecord rec;
  rec.id = "rem-3.1-sandwich";
  rec.statement = "for graphs, c <= regularity <= m";
  rec.hypotheses.push_back({"two_uniform", ctx.two_uniform(), {}});
  rec.applicable = ctx.two_uniform();
  if (!rec.applicable) return rec;
  if (!ctx.reg_known()) {
    rec.checked = false;
    rec.note = "regularity ceiling exceeded";
    return rec;
  }
  rec.lhs = Json{{"c", ctx.c_cert().weight}};
  rec.rhs = Json{{"m", ctx.m_cert().weight}};
  rec.certificate = Json{{"regularity", ctx.reg()},
                         {"c_family", to_json(ctx.h, ctx.c_cert())},
                         {"m_family", to_json(ctx.h, ctx.m_cert())}};
  rec.holds = ctx.c_cert().weight <= ctx.reg() && ctx.reg() <= ctx.m_cert().weight;
  return rec;
}

inline ClaimRecord eval_rem_3_1_collage(ClaimContext& ctx) {
  ClaimRecord rec;
  rec.id = "rem-3.1-collage-claimed";
  rec.statement = "regularity is at most the best 2-collage bound (claimed)";
  rec.claimed_only = true;
  rec.hypotheses.push_back({"has_edges", ctx.h.edge_count() > 0, {}});
  rec.applicable = ctx.h.edge_count() > 0;
  if (!rec.applicable) return rec;
  if (!ctx.reg_known() || !ctx.collage_known()) {
    rec.checked = false;
    rec.note = "regularity or collage ceiling exceeded";
    return rec;
  }
  rec.lhs = ctx.reg();
  rec.rhs = ctx.collage().weight;
  rec.holds = ctx.reg() <= ctx.collage().weight;
  rec.certificate = to_json(ctx.h, ctx.collage());
  return rec;
}

inline ClaimRecord eval_lem_3_4(ClaimContext& ctx) {
  ClaimRecord rec;
  rec.id = "lem-3.4";
  rec.statement =
      "for C2-free H, the smallest optimal semi-induced family of each "
      "contraction lifts to a semi-induced family of H";
  rec.hypotheses.push_back(freeness_hypothesis("c2_free", ctx.cycle2()));
  rec.applicable = ctx.c2_free() && ctx.h.n > 0;
  if (!rec.applicable) return rec;
  bool all_ok = true;
  Json per_vertex = Json::array();
  for (int x = 0; x < ctx.h.n; ++x) {
    ContractionResult ctr = contract_vertex(ctx.h, x);
    MatchingCertificate best = semi_induced_matching_number(ctr.hypergraph);
    std::vector<int> lifted;
    bool contains_x = false;
    for (int idx : best.indices) {
      VertexSet back = ctr.relabeling.backward(ctr.hypergraph.edges[idx]);
      int lift = lift_contracted_edge(ctx.h, x, back);
      lifted.push_back(lift);
      if (lift >= 0 && ctx.h.edges[lift].contains(x)) contains_x = true;
    }
    bool lift_semi = std::find(lifted.begin(), lifted.end(), -1) == lifted.end() &&
                     is_semi_induced(ctx.h, lifted);
    bool ineq_ok = true;
    if (contains_x) ineq_ok = best.weight + 1 <= ctx.cp_cert().weight;
    all_ok = all_ok && lift_semi && ineq_ok;
    per_vertex.push_back(Json{{"x", x},
                              {"contraction_family", to_json(ctr.hypergraph, best)},
                              {"lifted_indices", lifted},
                              {"lift_semi_induced", lift_semi},
                              {"some_lift_contains_x", contains_x},
                              {"c_prime_contraction", best.weight},
                              {"c_prime", ctx.cp_cert().weight},
                              {"inequality_holds", ineq_ok}});
  }
  rec.lhs = Json();
  rec.rhs = Json();
  rec.holds = all_ok;
  rec.certificate = std::move(per_vertex);
  return rec;
}

inline ClaimRecord eval_lem_3_5(ClaimContext& ctx) {
  ClaimRecord rec;
  rec.id = "lem-3.5";
  rec.statement =
      "for (C2,C5)-free H and a shedding vertex x, semi-induced families of "
      "the contraction avoiding x extend by an edge through x";
  rec.hypotheses.push_back(freeness_hypothesis("c2_free", ctx.cycle2()));
  rec.hypotheses.push_back(freeness_hypothesis("c5_free", ctx.cycle5()));
  std::vector<int> sheds = ctx.shedding_vertices();
  rec.hypotheses.push_back({"has_shedding_vertex", !sheds.empty(), Json(sheds)});
  rec.applicable = ctx.c2_free() && ctx.c5_free() && !sheds.empty();
  if (!rec.applicable) return rec;
  bool all_ok = true;
  Json per_vertex = Json::array();
  for (int x : sheds) {
    ContractionResult ctr = contract_vertex(ctx.h, x);
    const SimpleHypergraph& hx = ctr.hypergraph;
    if (hx.edge_count() > ctx.opts.family_enum_ceiling) {
      rec.checked = false;
      rec.note = "family enumeration ceiling exceeded";
      return rec;
    }
    // Edges of H/x that are edges of H themselves (their lift avoids x).
    std::vector<int> eligible;
    for (int i = 0; i < hx.edge_count(); ++i) {
      VertexSet back = ctr.relabeling.backward(hx.edges[i]);
      int lift = lift_contracted_edge(ctx.h, x, back);
      if (lift >= 0 && !ctx.h.edges[lift].contains(x)) eligible.push_back(i);
    }
    std::vector<int> through_x;
    for (int i = 0; i < ctx.h.edge_count(); ++i)
      if (ctx.h.edges[i].contains(x)) through_x.push_back(i);

    long long families_checked = 0;
    Json violation;
    const std::uint64_t subsets = std::uint64_t{1} << eligible.size();
    for (std::uint64_t bits = 0; bits < subsets && violation.is_null(); ++bits) {
      std::vector<int> family;
      for (std::size_t i = 0; i < eligible.size(); ++i)
        if ((bits >> i) & 1) family.push_back(eligible[i]);
      if (!is_semi_induced(hx, family)) continue;
      ++families_checked;
      std::vector<int> lifted;
      for (int idx : family)
        lifted.push_back(lift_contracted_edge(ctx.h, x, ctr.relabeling.backward(hx.edges[idx])));
      bool extended = false;
      for (int f : through_x) {
        std::vector<int> with_f = lifted;
        with_f.push_back(f);
        if (is_semi_induced(ctx.h, with_f)) {
          extended = true;
          break;
        }
      }
      if (!extended) violation = Json{{"family", lifted}};
    }
    MatchingCertificate best = semi_induced_matching_number(hx);
    bool ineq_ok = best.weight + 1 <= ctx.cp_cert().weight;
    // When {x} itself is an edge it is the only edge through x, the
    // contraction just discards it, and the inequality genuinely fails; the
    // extension property above still holds. Reported separately so the
    // failure shows up as a finding with its cause attached.
    bool singleton_at_x = std::find(ctx.h.edges.begin(), ctx.h.edges.end(),
                                    VertexSet::single(x)) != ctx.h.edges.end();
    bool x_ok = violation.is_null() && ineq_ok;
    all_ok = all_ok && x_ok;
    per_vertex.push_back(Json{{"x", x},
                              {"families_checked", families_checked},
                              {"extension_holds", violation.is_null()},
                              {"violation", violation},
                              {"singleton_edge_at_x", singleton_at_x},
                              {"c_prime_contraction", best.weight},
                              {"c_prime", ctx.cp_cert().weight},
                              {"inequality_holds", ineq_ok}});
  }
  rec.holds = all_ok;
  rec.certificate = std::move(per_vertex);
  if (!all_ok)
    rec.note =
        "the extension property may hold while the inequality fails when the "
        "shedding vertex carries a singleton edge";
  return rec;
}

inline ClaimRecord eval_thm_3_6(ClaimContext& ctx) {
  ClaimRecord rec;
  rec.id = "thm-3.6";
  rec.statement = "(C2,C5)-free vertex decomposable H has reg <= c' <= dim + 1";
  rec.hypotheses.push_back(freeness_hypothesis("c2_free", ctx.cycle2()));
  rec.hypotheses.push_back(freeness_hypothesis("c5_free", ctx.cycle5()));
  if (!ctx.vd_known()) {
    rec.checked = false;
    rec.note = "decomposability ceiling exceeded";
    rec.applicable = ctx.c2_free() && ctx.c5_free();
    return rec;
  }
  bool vd = ctx.vd().has_value();
  rec.hypotheses.push_back({"vertex_decomposable", vd, {}});
  rec.applicable = ctx.c2_free() && ctx.c5_free() && vd;
  if (!rec.applicable) return rec;
  if (!ctx.reg_known()) {
    rec.checked = false;
    rec.note = "regularity ceiling exceeded";
    return rec;
  }
  rec.lhs = ctx.reg();
  rec.rhs = Json{{"c_prime", ctx.cp_cert().weight}, {"dim_plus_one", ctx.dim_plus_one()}};
  rec.holds = ctx.reg() <= ctx.cp_cert().weight && ctx.cp_cert().weight <= ctx.dim_plus_one();
  rec.certificate = Json{{"c_prime_family", to_json(ctx.h, ctx.cp_cert())},
                         {"shedding_tree", to_json(**ctx.vd())}};
  return rec;
}

inline ClaimRecord eval_cor_3_8(ClaimContext& ctx, int part) {
  ClaimRecord rec;
  switch (part) {
    case 1: rec.id = "cor-3.8-i"; break;
    case 2: rec.id = "cor-3.8-ii"; break;
    case 3: rec.id = "cor-3.8-iii"; break;
    default: rec.id = "cor-3.8-iv"; break;
  }
  int c = ctx.c_cert().weight, cp = ctx.cp_cert().weight;
  if (part == 4) {
    rec.statement = "linear intersections with c = m pin reg = c = c' = m (claimed)";
    rec.claimed_only = true;
    rec.hypotheses.push_back(
        {"d_uniform_linear_intersections", ctx.linear_intersections(), {}});
    rec.hypotheses.push_back({"c_equals_m", c == ctx.m_cert().weight, {}});
    rec.applicable = ctx.linear_intersections() && c == ctx.m_cert().weight;
  } else if (part == 3) {
    rec.statement = "C5-free vertex decomposable graphs have reg = c";
    rec.hypotheses.push_back({"two_uniform", ctx.two_uniform(), {}});
    rec.hypotheses.push_back(freeness_hypothesis("c5_free", ctx.cycle5()));
    if (!ctx.vd_known()) {
      rec.checked = false;
      rec.note = "decomposability ceiling exceeded";
      rec.applicable = ctx.two_uniform() && ctx.c5_free();
      return rec;
    }
    bool vd = ctx.vd().has_value();
    rec.hypotheses.push_back({"vertex_decomposable", vd, {}});
    rec.applicable = ctx.two_uniform() && ctx.c5_free() && vd;
  } else {
    rec.statement = part == 1 ? "(C2,C5)-free vertex decomposable H with c = dim + 1 pins all four"
                              : "(C2,C5)-free vertex decomposable H with c = c' has reg = c";
    rec.hypotheses.push_back(freeness_hypothesis("c2_free", ctx.cycle2()));
    rec.hypotheses.push_back(freeness_hypothesis("c5_free", ctx.cycle5()));
    if (!ctx.vd_known()) {
      rec.checked = false;
      rec.note = "decomposability ceiling exceeded";
      rec.applicable = false;
      return rec;
    }
    bool vd = ctx.vd().has_value();
    rec.hypotheses.push_back({"vertex_decomposable", vd, {}});
    bool extra = part == 1 ? c == ctx.dim_plus_one() : c == cp;
    rec.hypotheses.push_back({part == 1 ? "c_equals_dim_plus_one" : "c_equals_c_prime", extra, {}});
    rec.applicable = ctx.c2_free() && ctx.c5_free() && vd && extra;
  }
  if (!rec.applicable) return rec;
  if (!ctx.reg_known()) {
    rec.checked = false;
    rec.note = "regularity ceiling exceeded";
    return rec;
  }
  int reg = ctx.reg();
  rec.lhs = reg;
  switch (part) {
    case 1:
      rec.rhs = Json{{"c", c}, {"c_prime", cp}, {"dim_plus_one", ctx.dim_plus_one()}};
      rec.holds = reg == c && c == cp && cp == ctx.dim_plus_one();
      break;
    case 2:
    case 3:
      rec.rhs = Json{{"c", c}};
      rec.holds = reg == c;
      break;
    default:
      rec.rhs = Json{{"c", c}, {"c_prime", cp}, {"m", ctx.m_cert().weight}};
      rec.holds = reg == c && c == cp && cp == ctx.m_cert().weight;
      break;
  }
  rec.certificate = Json{{"c_family", to_json(ctx.h, ctx.c_cert())},
                         {"c_prime_family", to_json(ctx.h, ctx.cp_cert())},
                         {"m_family", to_json(ctx.h, ctx.m_cert())}};
  return rec;
}

inline ClaimRecord eval_recursion_ineq(ClaimContext& ctx) {
  ClaimRecord rec;
  rec.id = "recursion-ineq";
  rec.statement = "reg(H) <= max(reg(H minus x), reg(H contract x) + 1) for every x";
  rec.applicable = ctx.h.n > 0;
  if (!rec.applicable) return rec;
  if (!ctx.reg_known()) {
    rec.checked = false;
    rec.note = "regularity ceiling exceeded";
    return rec;
  }
  bool all_ok = true;
  Json per_vertex = Json::array();
  int worst_rhs = -1;
  for (int x = 0; x < ctx.h.n; ++x) {
    RecursionGap gap = recursion_gap(ctx.h, x, ctx.opts.field, ctx.opts.betti_ceiling);
    all_ok = all_ok && gap.lhs <= gap.rhs;
    worst_rhs = worst_rhs < 0 ? gap.rhs : std::min(worst_rhs, gap.rhs);
    per_vertex.push_back(Json{{"x", x}, {"lhs", gap.lhs}, {"rhs", gap.rhs}});
  }
  rec.lhs = ctx.reg();
  rec.rhs = worst_rhs;
  rec.holds = all_ok;
  rec.certificate = std::move(per_vertex);
  return rec;
}

inline ClaimRecord evaluate_claim(ClaimContext& ctx, const std::string& id) {
  if (id == "thm-2.2") return eval_thm_2_2(ctx);
  if (id == "prop-2.5") return eval_prop_2_5(ctx);
  if (id == "cor-2.6") return eval_cor_2_6(ctx);
  if (id == "rem-2.4-agreement") return eval_rem_2_4(ctx);
  if (id == "def-2.7-graph-agreement") return eval_def_2_7(ctx);
  if (id == "rem-3.1-lower") return eval_rem_3_1_lower(ctx);
  if (id == "rem-3.1-sandwich") return eval_rem_3_1_sandwich(ctx);
  if (id == "rem-3.1-collage-claimed") return eval_rem_3_1_collage(ctx);
  if (id == "lem-3.4") return eval_lem_3_4(ctx);
  if (id == "lem-3.5") return eval_lem_3_5(ctx);
  if (id == "thm-3.6") return eval_thm_3_6(ctx);
  if (id == "cor-3.8-i") return eval_cor_3_8(ctx, 1);
  if (id == "cor-3.8-ii") return eval_cor_3_8(ctx, 2);
  if (id == "cor-3.8-iii") return eval_cor_3_8(ctx, 3);
  if (id == "cor-3.8-iv") return eval_cor_3_8(ctx, 4);
  if (id == "recursion-ineq") return eval_recursion_ineq(ctx);
  fail(Errc::unknown_claim, id);
}

}  // namespace detail

/// Evaluates every registry claim against H.
inline VerificationReport verify(const SimpleHypergraph& h, const VerifyOptions& opts = {}) {
  if (h.n > kMaxComplexGround)
    fail(Errc::too_large, "verification is capped at ground size " +
                              std::to_string(kMaxComplexGround));
  auto start = std::chrono::steady_clock::now();
  detail::ClaimContext ctx(h, opts);
  VerificationReport report{h, opts.field, {}, Json(), 0};
  for (const auto& id : claim_registry()) report.claims.push_back(detail::evaluate_claim(ctx, id));
  report.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  return report;
}

/// Evaluates a single registry claim (shared context, cheap for sweeps).
inline ClaimRecord evaluate_claim(const SimpleHypergraph& h, const std::string& id,
                                  const VerifyOptions& opts = {}) {
  if (!is_known_claim(id)) fail(Errc::unknown_claim, id);
  detail::ClaimContext ctx(h, opts);
  return detail::evaluate_claim(ctx, id);
}

struct Finding {
  SimpleHypergraph input;
  ClaimRecord claim;
};

struct SearchBounds {
  int n_max = 5;
  int m_max = 8;
  EnumerationOptions enumeration;
  bool random = false;
  std::uint64_t seed = 0;
  long long trials = 0;
  GeneratorConfig generator;  // used when random
};

/// Runs one claim over enumerated (or seeded random) hypergraphs and reports
/// every applicable failure. Returns the number of hypergraphs examined.
template <class Emit>
long long search_counterexamples(const std::string& id, const SearchBounds& bounds,
                                 const VerifyOptions& opts, Emit&& emit) {
  if (!is_known_claim(id)) fail(Errc::unknown_claim, id);
  long long examined = 0;
  auto inspect = [&](const SimpleHypergraph& h) {
    ++examined;
    detail::ClaimContext ctx(h, opts);
    ClaimRecord rec = detail::evaluate_claim(ctx, id);
    if (rec.failed()) emit(Finding{h, std::move(rec)});
  };
  if (bounds.random) {
    GeneratorConfig cfg = bounds.generator;
    for (long long t = 0; t < bounds.trials; ++t) {
      cfg.seed = bounds.seed + static_cast<std::uint64_t>(t);
      inspect(random_hypergraph(cfg));
    }
  } else {
    enumerate_hypergraphs(bounds.n_max, bounds.m_max, bounds.enumeration, inspect);
  }
  return examined;
}

// ---------------------------------------------------------------------------
// Report serialization
// ---------------------------------------------------------------------------

inline Json to_json(const ClaimRecord& rec) {
  Json hyps = Json::array();
  for (const auto& hyp : rec.hypotheses) {
    Json one{{"name", hyp.name}, {"holds", hyp.holds}};
    if (!hyp.witness.is_null()) one["witness"] = hyp.witness;
    hyps.push_back(std::move(one));
  }
  Json out{{"id", rec.id},
           {"statement", rec.statement},
           {"status", rec.claimed_only ? "claimed" : "proved"},
           {"applicable", rec.applicable},
           {"checked", rec.checked},
           {"holds", rec.holds.has_value() ? Json(*rec.holds) : Json()},
           {"hypotheses", std::move(hyps)},
           {"lhs", rec.lhs},
           {"rhs", rec.rhs},
           {"certificate", rec.certificate}};
  if (!rec.note.empty()) out["note"] = rec.note;
  return out;
}

inline Json to_json(const VerificationReport& report) {
  Json claims = Json::array();
  Json findings = Json::array();
  for (const auto& rec : report.claims) {
    claims.push_back(to_json(rec));
    if (rec.failed())
      findings.push_back(Json{{"claim", rec.id},
                              {"status", rec.claimed_only ? "claimed" : "proved"},
                              {"lhs", rec.lhs},
                              {"rhs", rec.rhs},
                              {"certificate", rec.certificate}});
  }
  Json out{{"input", to_json(report.input)},
           {"field_char", report.field.value},
           {"claims", std::move(claims)},
           {"findings", std::move(findings)}};
  if (!report.extra.is_null()) out["demo"] = report.extra;
  out["timing_ms"] = report.timing_ms;
  return out;
}

inline Json to_json(const Finding& finding) {
  return Json{{"input", to_json(finding.input)}, {"claim", to_json(finding.claim)}};
}

// ---------------------------------------------------------------------------
// The collage-bound defect demonstration
// ---------------------------------------------------------------------------

/// The fixed six-vertex example whose singleton 2-collage breaks the union
/// construction used by the cited collage-bound proof: verifies that
/// {b,c,d,e} is a 2-collage while E ∪ {b,c,d,e} is never an edge of the
/// union-closure hypergraph of E, for every other edge E.
inline VerificationReport flaw_demo(const VerifyOptions& opts = {}) {
  SimpleHypergraph h = build_simple(
      6, std::vector<std::vector<int>>{{0, 1}, {0, 2}, {3, 5}, {4, 5}, {1, 2, 3, 4}});
  VerificationReport report = verify(h, opts);

  const VertexSet wide = VertexSet::of({1, 2, 3, 4});
  int wide_index = -1;
  for (int i = 0; i < h.edge_count(); ++i)
    if (h.edges[i] == wide) wide_index = i;

  Json demo;
  demo["vertex_names"] = Json{{"a", 0}, {"b", 1}, {"c", 2}, {"d", 3}, {"e", 4}, {"f", 5}};
  demo["collage_family"] = Json{{"indices", Json::array({wide_index})},
                                {"edges", Json::array({wide.to_vector()})}};
  demo["collage_holds"] = is_two_collage(h, {wide_index});
  Json per_edge = Json::array();
  bool all_hold = true;
  for (int e = 0; e < h.edge_count(); ++e) {
    if (e == wide_index) continue;
    SimpleHypergraph closure = edge_union_closure(h, e);
    VertexSet joined = h.edges[e] | wide;
    bool is_edge = std::find(closure.edges.begin(), closure.edges.end(), joined) !=
                   closure.edges.end();
    all_hold = all_hold && !is_edge;
    per_edge.push_back(Json{{"edge", h.edges[e].to_vector()},
                            {"union_closure", to_json(closure)},
                            {"union_with_collage", joined.to_vector()},
                            {"union_is_closure_edge", is_edge}});
  }
  demo["union_never_an_edge"] = all_hold;
  demo["per_edge"] = std::move(per_edge);
  report.extra = std::move(demo);
  return report;
}

// ---------------------------------------------------------------------------
// Invariants summary (the CLI's `invariants` subcommand)
// ---------------------------------------------------------------------------

inline Json invariants_report(const SimpleHypergraph& h, const VerifyOptions& opts = {}) {
  if (h.n > kMaxComplexGround)
    fail(Errc::too_large, "invariants are capped at ground size " +
                              std::to_string(kMaxComplexGround));
  detail::ClaimContext ctx(h, opts);
  Json out;
  out["input"] = to_json(h);
  out["field_char"] = opts.field.value;
  auto unif = uniformity(h);
  out["uniformity"] = unif ? Json(*unif) : Json();
  out["isolated_vertices"] = isolated_vertices(h).to_vector();
  out["linear_d_intersections"] = has_linear_d_intersections(h);
  out["strongly_connected"] =
      (unif || h.edge_count() <= 1) ? Json(is_strongly_connected(h)) : Json();
  out["c2_free"] = ctx.c2_free();
  out["c5_free"] = ctx.c5_free();
  if (ctx.cycle2()) out["c2_witness"] = to_json(*ctx.cycle2());
  if (ctx.cycle5()) out["c5_witness"] = to_json(*ctx.cycle5());
  out["matching"] = to_json(h, ctx.m_cert());
  out["induced_matching"] = to_json(h, ctx.c_cert());
  out["semi_induced_matching"] = to_json(h, ctx.cp_cert());
  out["independence_complex"] = to_json(ctx.delta());
  out["dim"] = *dimension(ctx.delta());
  if (ctx.vd_known()) {
    out["vertex_decomposable"] = ctx.vd().has_value();
    if (ctx.vd()) out["shedding_tree"] = to_json(**ctx.vd());
  } else {
    out["vertex_decomposable"] = Json();
  }
  if (ctx.collage_known()) out["collage_bound"] = to_json(h, ctx.collage());
  if (ctx.reg_known()) {
    BettiTable table = betti_table(h, opts.field, opts.betti_ceiling);
    out["betti"] = to_json(table);
    out["regularity"] = table.regularity();
    out["homology_of_independence_complex"] =
        to_json(reduced_homology(ctx.delta(), opts.field));
  }
  return out;
}

}  // namespace hyreg
