#ifndef HYPERPOLY_COREGEOM_HPP
#define HYPERPOLY_COREGEOM_HPP

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "hyperpoly/combinat.hpp"
#include "hyperpoly/error.hpp"
#include "hyperpoly/presentations.hpp"

namespace hyperpoly {

struct CoreComponent {
  enum class Kind { M, U } kind;
  std::optional<Subset> s;  // set for U_S
  int complex_dimension;

  std::string id() const { return kind == Kind::M ? "M" : "U_" + s->to_id(); }
  std::string label() const { return kind == Kind::M ? "M" : "U_" + s->to_string(); }
};

inline std::vector<CoreComponent> core_components(const Alpha& a) {
  std::vector<CoreComponent> out{{CoreComponent::Kind::M, std::nullopt, a.n() - 3}};
  for (const auto& s : core_shorts(a)) out.push_back({CoreComponent::Kind::U, s, a.n() - 3});
  return out;
}

struct FixedLocus {
  enum class Kind { MS, XTCapUS } kind;
  Subset t;  // S itself for M_S
  int complex_dimension;
  std::string model;

  std::string id() const { return (kind == Kind::MS ? "M_S_" : "XT_") + t.to_id(); }
};

namespace detail {

inline void require_core_subset(const Alpha& a, const Subset& s) {
  a.check(s);
  if (!is_short(a, s)) throw Error(ErrorCode::NotShort, s.to_string() + " is long");
  if (s.size() < 2) throw Error(ErrorCode::SubsetTooSmall, s.to_string() + " has fewer than 2 elements");
}

inline std::string polygon_model(const Alpha& a, const Subset& s) {
  std::string m = "polygon space with edges {";
  bool first = true;
  for (int j : s.complement().elements()) {
    m += (first ? "" : ",") + to_string(a.length(j));
    first = false;
  }
  return m + (first ? "" : ",") + to_string(a.sum(s)) + "}";
}

}  // namespace detail

/// Short supersets T of S (including S), in subset order.
inline std::vector<Subset> short_supersets(const Alpha& a, const Subset& s) {
  std::vector<Subset> out;
  for (const auto& t : enumerate_shorts(a, s.size()))
    if (s.is_subset_of(t)) out.push_back(t);
  return out;
}

inline std::vector<FixedLocus> fixed_loci(const Alpha& a, const Subset& s) {
  detail::require_core_subset(a, s);
  std::vector<FixedLocus> out{
      {FixedLocus::Kind::MS, s, a.n() - 2 - s.size(), detail::polygon_model(a, s)}};
  for (const auto& t : short_supersets(a, s))
    out.push_back({FixedLocus::Kind::XTCapUS, t, s.size() - 2,
                   "CP^" + std::to_string(s.size() - 2)});
  return out;
}

/// M_{C_1,...,C_r}: polygons with each (disjoint) C_i straight. Nonempty iff
/// every edge of the reduced polygon is short in it, i.e. every leftover
/// singleton is short and at least three edges remain.
inline bool polygon_subspace_nonempty(const Alpha& a, const std::vector<Subset>& blocks) {
  Subset used = Subset::empty(a.n());
  for (const auto& c : blocks) {
    if (!is_short(a, c)) return false;
    used = used | c;
  }
  const Subset rest = used.complement();
  if (rest.size() + static_cast<int>(blocks.size()) < 3) return false;
  for (int j : rest.elements())
    if (!is_short(a, Subset::of(a.n(), {j}))) return false;
  return true;
}

enum class IntersectionKind { PolygonSubspace, Empty, SubbundleInUUnion };

inline std::string_view to_string(IntersectionKind k) {
  switch (k) {
    case IntersectionKind::PolygonSubspace: return "POLYGON_SUBSPACE";
    case IntersectionKind::Empty: return "EMPTY";
    case IntersectionKind::SubbundleInUUnion: return "SUBBUNDLE_IN_U_UNION";
  }
  return "UNKNOWN";
}

struct IntersectionClass {
  IntersectionKind kind;
  std::vector<Subset> blocks;     // straight blocks of the polygon subspace
  std::optional<Subset> within;   // U_within for the subbundle case
  bool nonempty = true;
  std::string description;
};

/// Intersection of U_{S_1} n ... n U_{S_k}. Overlapping sets merge into
/// straight blocks; a long block gives EMPTY; a family with some disjoint
/// pair lies in M as the polygon subspace of the blocks; otherwise the
/// intersection is a subbundle inside U of the single block.
inline IntersectionClass classify_intersection(const Alpha& a, const std::vector<Subset>& family) {
  if (family.size() < 2) throw Error(ErrorCode::DimensionMismatch, "need at least two subsets");
  for (const auto& s : family) detail::require_core_subset(a, s);
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (family[i] == family[j])
        throw Error(ErrorCode::DimensionMismatch, "repeated subset " + family[i].to_string());

  std::vector<Subset> blocks;
  for (const auto& s : family) {
    Subset merged = s;
    std::vector<Subset> keep;
    for (const auto& b : blocks) {
      if ((b & merged).is_empty()) {
        keep.push_back(b);
      } else {
        merged = merged | b;
      }
    }
    keep.push_back(merged);
    blocks = std::move(keep);
  }
  // Merging can chain; repeat until stable.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < blocks.size() && !changed; ++i)
      for (std::size_t j = i + 1; j < blocks.size() && !changed; ++j)
        if (!(blocks[i] & blocks[j]).is_empty()) {
          blocks[i] = blocks[i] | blocks[j];
          blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(j));
          changed = true;
        }
  }
  sort_subsets(blocks);

  IntersectionClass out;
  out.blocks = blocks;
  for (const auto& c : blocks)
    if (is_long(a, c)) {
      out.kind = IntersectionKind::Empty;
      out.nonempty = false;
      out.description = "straight union " + c.to_string() + " is long";
      return out;
    }
  bool disjoint_pair = false;
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if ((family[i] & family[j]).is_empty()) disjoint_pair = true;
  if (disjoint_pair) {
    out.kind = IntersectionKind::PolygonSubspace;
    out.nonempty = polygon_subspace_nonempty(a, blocks);
    std::string names;
    for (const auto& c : blocks) names += (names.empty() ? "" : ", ") + c.to_string();
    out.description = "polygon subspace of M with " + names + " straight" +
                      (out.nonempty ? "" : " (empty)");
    return out;
  }
  out.kind = IntersectionKind::SubbundleInUUnion;
  out.within = blocks.front();
  Subset common = Subset::full(a.n());
  for (const auto& s : family) common = common & s;
  out.description = "subbundle of U_" + blocks.front().to_string() + " with p_j = 0 for j outside " +
                    common.to_string();
  return out;
}

inline IntersectionClass classify_intersection(const Alpha& a, const Subset& s, const Subset& t) {
  if (s == t) throw Error(ErrorCode::DimensionMismatch, "S and T must differ");
  return classify_intersection(a, std::vector<Subset>{s, t});
}

struct EulerCheck {
  Subset s;
  Relabeling relabeling;
  long long core = 0;              // euler(ORDCORE)
  long long polygon_subspace = 0;  // euler(M_S)
  long long supersets = 0;         // #{short T containing S}
  long long rhs() const { return polygon_subspace + (s.size() - 1) * supersets; }
  bool holds() const { return core == rhs(); }
};

inline EulerCheck euler_cross_check(const Alpha& a, const Subset& s, bool throw_on_violation = true,
                                    SliceOptions options = {}) {
  detail::require_core_subset(a, s);
  const auto rl = relabel_to_contain_one(a, s);
  EulerCheck out{s, rl.relabeling, 0, 0, 0};
  out.core = betti(core_ordinary_ideal(rl.alpha, rl.s), std::nullopt, options).euler();
  out.polygon_subspace =
      betti(x_to_zero(polygon_subspace_kernel(rl.alpha, rl.s)), std::nullopt, options).euler();
  out.supersets = static_cast<long long>(short_supersets(a, s).size());
  if (throw_on_violation && !out.holds())
    throw ClaimViolation("euler(U_" + s.to_string() + ") = " + std::to_string(out.core) +
                         " but euler(M_S) + (|S|-1)#T = " + std::to_string(out.rhs()));
  return out;
}

enum class GraphScope { Global, Component };
enum class GraphFormat { Dot, Json };

struct GraphNode {
  std::string id, label, kind;
  int dim;
  Subset subset;
};

struct GraphEdge {
  std::string source, target, kind;
  std::optional<std::string> within;
};

struct CoreGraph {
  std::vector<GraphNode> nodes;
  std::vector<GraphEdge> edges;
};

inline CoreGraph core_graph(const Alpha& a, GraphScope scope, std::optional<Subset> s = std::nullopt) {
  CoreGraph g;
  if (scope == GraphScope::Global) {
    const auto comps = core_components(a);
    for (const auto& c : comps)
      g.nodes.push_back({c.id(), c.label(), c.kind == CoreComponent::Kind::M ? "M" : "U_S",
                         c.complex_dimension, c.s.value_or(Subset::empty(a.n()))});
    for (std::size_t i = 1; i < comps.size(); ++i)
      if (polygon_subspace_nonempty(a, {*comps[i].s}))
        g.edges.push_back({"M", comps[i].id(), std::string(to_string(IntersectionKind::PolygonSubspace)),
                           std::nullopt});
    for (std::size_t i = 1; i < comps.size(); ++i)
      for (std::size_t j = i + 1; j < comps.size(); ++j) {
        const auto c = classify_intersection(a, *comps[i].s, *comps[j].s);
        if (!c.nonempty) continue;
        std::optional<std::string> within;
        if (c.within) within = "U_" + c.within->to_id();
        g.edges.push_back({comps[i].id(), comps[j].id(), std::string(to_string(c.kind)), within});
      }
    return g;
  }
  if (!s) throw Error(ErrorCode::EmptySubset, "component scope needs S");
  const auto loci = fixed_loci(a, *s);
  for (const auto& f : loci) {
    const bool ms = f.kind == FixedLocus::Kind::MS;
    g.nodes.push_back({f.id(), ms ? "M_" + f.t.to_string() : "X_" + f.t.to_string() + " n U_S",
                       ms ? "M_S" : "XT_CAP_US", f.complex_dimension, f.t});
  }
  const std::string ms_id = loci.front().id();
  for (std::size_t i = 1; i < loci.size(); ++i) {
    const bool self = loci[i].t == *s;
    g.edges.push_back({ms_id, loci[i].id(), self ? "FLOW_IN_U_S" : "CLOSURE_U_S_CAP_U_T",
                       std::nullopt});
  }
  return g;
}

inline std::string emit_core_graph(const Alpha& a, GraphScope scope, GraphFormat format,
                                   std::optional<Subset> s = std::nullopt) {
  const CoreGraph g = core_graph(a, scope, s);
  std::ostringstream os;
  auto quote = [](const std::string& t) { return "\"" + t + "\""; };
  if (format == GraphFormat::Dot) {
    os << "graph core {\n";
    os << "  // alpha = " << a.to_string() << "\n";
    for (const auto& n : g.nodes)
      os << "  " << quote(n.id) << " [label=" << quote(n.label) << ", dim=" << n.dim << "];\n";
    for (const auto& e : g.edges) {
      os << "  " << quote(e.source) << " -- " << quote(e.target) << " [kind=" << quote(e.kind);
      if (e.within) os << ", within=" << quote(*e.within);
      os << "];\n";
    }
    os << "}\n";
    return os.str();
  }
  using json = nlohmann::ordered_json;
  json out;
  out["scope"] = scope == GraphScope::Global ? "global" : "component";
  out["alpha"] = json::array();
  for (const auto& l : a.lengths()) out["alpha"].push_back(to_string(l));
  if (s) out["s"] = s->elements();
  out["nodes"] = json::array();
  for (const auto& n : g.nodes)
    out["nodes"].push_back({{"id", n.id}, {"label", n.label}, {"kind", n.kind}, {"dim", n.dim},
                            {"subset", n.subset.elements()}});
  out["edges"] = json::array();
  for (const auto& e : g.edges) {
    json je = {{"source", e.source}, {"target", e.target}, {"kind", e.kind}};
    if (e.within) je["within"] = *e.within;
    out["edges"].push_back(std::move(je));
  }
  return out.dump() + "\n";
}

}  // namespace hyperpoly

#endif  // HYPERPOLY_COREGEOM_HPP
