// hyperpoly: command-line front end for the hyperpoly library.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hyperpoly/hyperpoly.hpp"

using namespace hyperpoly;
using io::json;

namespace {

struct RunConfig {
  std::string alpha_inline;
  std::string alpha_file;
  std::string s;
  std::string t;
  std::string target = "x";
  std::string scope = "global";
  std::string format = "table";
  std::string mode = "auto";
  std::string point_file;
  std::optional<int> max_degree;
  double tol = kDefaultTolerance;
  std::uint64_t seed = 1;
  int samples = 1000;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, sep);) out.push_back(item);
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

Alpha load_alpha(const RunConfig& cfg) {
  if (cfg.alpha_inline.empty() == cfg.alpha_file.empty())
    throw Error(ErrorCode::ParseError, "give exactly one of --alpha and --alpha-file");
  if (!cfg.alpha_file.empty()) return io::alpha_from_json(read_json_file(cfg.alpha_file));
  const auto parts = split(cfg.alpha_inline, ',');
  return validate_alpha(std::span<const std::string>(parts));
}

Subset parse_subset(const std::string& text, int n, const char* flag) {
  std::vector<int> elems;
  for (const auto& part : split(text, ',')) {
    try {
      std::size_t used = 0;
      elems.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ParseError, std::string(flag) + ": not an index list: " + text);
    }
  }
  return Subset::of(n, elems);
}

std::optional<Subset> optional_subset(const std::string& text, int n, const char* flag) {
  if (text.empty()) return std::nullopt;
  return parse_subset(text, n, flag);
}

Subset require_subset(const std::string& text, int n, const char* flag) {
  if (text.empty()) throw Error(ErrorCode::ParseError, std::string(flag) + " is required here");
  return parse_subset(text, n, flag);
}

SliceOptions slice_options() {
  SliceOptions opts;
  if (const char* env = std::getenv("HYPERPOLY_MONOMIAL_BUDGET")) {
    try {
      opts.monomial_budget = std::stoull(env);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ParseError, "HYPERPOLY_MONOMIAL_BUDGET is not a number");
    }
  }
  return opts;
}

json relabeling_json(const Relabeling& r) { return r.perm; }

std::string relabeling_line(const Relabeling& r) {
  std::string s = "relabeling: perm [";
  for (std::size_t k = 0; k < r.perm.size(); ++k) s += (k ? "," : "") + std::to_string(r.perm[k]);
  return s + "] (new index k carries old edge perm[k])";
}

void print_json(const json& j) { std::cout << j.dump() << "\n"; }

std::string format_residual(double r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", r);
  return buf;
}

// Presentation for --target, with S relabeled to contain 1.
struct Targeted {
  Presentation pres;
  std::optional<Relabeling> relabeling;
};

Targeted build_target(const Alpha& a, const RunConfig& cfg) {
  const auto& t = cfg.target;
  if (t == "x") return {konno_ideal(a), std::nullopt};
  if (t == "x-eq") return {equivariant_ideal(a), std::nullopt};
  if (t != "core" && t != "core-eq" && t != "polygon-sub")
    throw Error(ErrorCode::ParseError, "unknown target " + t);
  const auto rl = relabel_to_contain_one(a, require_subset(cfg.s, a.n(), "--s"));
  std::optional<Relabeling> echo;
  if (!rl.relabeling.is_identity()) echo = rl.relabeling;
  if (t == "core") return {core_ordinary_ideal(rl.alpha, rl.s), echo};
  if (t == "core-eq") return {core_equivariant_ideal(rl.alpha, rl.s), echo};
  return {polygon_subspace_kernel(rl.alpha, rl.s), echo};
}

int cmd_shorts(const RunConfig& cfg) {
  const Alpha a = load_alpha(cfg);
  const auto shorts = enumerate_shorts(a, 1);
  const auto core = core_shorts(a);
  if (cfg.format == "json") {
    json out;
    out["alpha"] = io::to_json(a);
    out["shorts"] = json::array();
    for (const auto& s : shorts) out["shorts"].push_back(io::to_json(s));
    out["count"] = shorts.size();
    out["core"] = core.size();
    print_json(out);
  } else {
    std::cout << "alpha " << a.to_string() << "\n";
    for (const auto& s : shorts) std::cout << s.to_string() << "\n";
    std::cout << shorts.size() << " nonempty short subsets, " << core.size() << " of size >= 2\n";
  }
  return 0;
}

int cmd_betti(const RunConfig& cfg) {
  const Alpha a = load_alpha(cfg);
  const auto tgt = build_target(a, cfg);
  const auto table = betti(tgt.pres, cfg.max_degree, slice_options());
  if (cfg.format == "json") {
    json out = io::to_json(table);
    if (tgt.relabeling) out["relabeling"] = relabeling_json(*tgt.relabeling);
    print_json(out);
  } else {
    if (tgt.relabeling) std::cout << relabeling_line(*tgt.relabeling) << "\n";
    std::cout << "degree  dim\n";
    const auto dims = table.trimmed();
    for (std::size_t d = 0; d < dims.size(); ++d) std::cout << d << "  " << dims[d] << "\n";
    std::cout << "euler " << table.euler() << "\npoincare " << table.poincare() << "\n";
  }
  return 0;
}

int cmd_presentation(const RunConfig& cfg) {
  const Alpha a = load_alpha(cfg);
  const auto tgt = build_target(a, cfg);
  if (cfg.format == "json") {
    json out = io::to_json(tgt.pres);
    if (tgt.relabeling) out["relabeling"] = relabeling_json(*tgt.relabeling);
    print_json(out);
    return 0;
  }
  if (tgt.relabeling) std::cout << relabeling_line(*tgt.relabeling) << "\n";
  std::cout << to_string(tgt.pres.provenance) << " for alpha " << a.to_string() << "\nring Q[";
  const auto& vars = tgt.pres.ring()->variables();
  for (std::size_t i = 0; i < vars.size(); ++i) std::cout << (i ? ", " : "") << vars[i].name;
  std::cout << "]\n";
  for (const auto& g : tgt.pres.ideal.generators()) std::cout << "  " << g.to_string() << "\n";
  if (const auto& tr = tgt.pres.ideal.truncation_degree()) std::cout << "plus all monomials of degree " << *tr << "\n";
  return 0;
}

int cmd_claims_verify(const RunConfig& cfg) {
  const Alpha a = load_alpha(cfg);
  const int n = a.n();
  bool ok = true;
  json out;
  out["alpha"] = io::to_json(a);

  std::vector<std::string> lines;
  json vs_bad = json::array();
  int vs_count = 0;
  for (std::uint32_t m = 1; m + 1 < (1u << n); ++m, ++vs_count) {
    const auto e = expand_vS(Subset(n, m));
    if (!e.match) {
      vs_bad.push_back(describe(e));
      ok = false;
    }
  }
  out["vs"] = {{"checked", vs_count}, {"mismatches", vs_bad}};
  lines.push_back("vs: " + std::to_string(vs_count) + " subsets, " + std::to_string(vs_bad.size()) + " mismatches");

  json ws_bad = json::array();
  int ws_count = 0;
  const auto t_only = optional_subset(cfg.t, n, "--t");
  for (const auto& t : enumerate_shorts(a, 1)) {
    if (!t.contains(1) || (t_only && t != *t_only)) continue;
    ++ws_count;
    const auto c = check_w_T(t, a);
    if (!c.match) {
      ws_bad.push_back("w_" + t.to_string() + " at A=" + c.witness->to_string());
      ok = false;
    }
  }
  out["ws"] = {{"checked", ws_count}, {"mismatches", ws_bad}};
  lines.push_back("ws: " + std::to_string(ws_count) + " short T containing 1, " + std::to_string(ws_bad.size()) +
                  " mismatches");

  const auto tm = transition_matrix(a, false);
  ok = ok && tm.lower_unitriangular;
  out["transition"] = {{"lower_unitriangular", tm.lower_unitriangular}, {"detail", describe(tm)},
                       {"matrix", io::labeled_matrix(tm.q, tm.rows, tm.columns)}};
  lines.push_back("transition: " + describe(tm));

  const auto sp = spanning_check(a, std::nullopt, false);
  ok = ok && sp.spans;
  out["spanning"] = {{"slice_dimension", sp.slice_dimension}, {"rank", sp.rank}, {"spans", sp.spans}};
  lines.push_back("spanning: rank " + std::to_string(sp.rank) + " of " + std::to_string(sp.slice_dimension));
  out["ok"] = ok;

  if (cfg.format == "json") {
    print_json(out);
  } else {
    for (const auto& l : lines) std::cout << l << "\n";
    std::cout << (ok ? "all claims hold" : "CLAIM VIOLATION") << "\n";
  }
  return ok ? 0 : 2;
}

int cmd_core_graph(const RunConfig& cfg) {
  const Alpha a = load_alpha(cfg);
  GraphScope scope;
  if (cfg.scope == "global")
    scope = GraphScope::Global;
  else if (cfg.scope == "component")
    scope = GraphScope::Component;
  else
    throw Error(ErrorCode::ParseError, "unknown scope " + cfg.scope);
  const auto s = optional_subset(cfg.s, a.n(), "--s");
  if (cfg.format == "table") {
    const auto g = core_graph(a, scope, s);
    for (const auto& v : g.nodes) std::cout << "node " << v.id << " dim " << v.dim << " " << v.kind << "\n";
    for (const auto& e : g.edges) std::cout << "edge " << e.source << " -- " << e.target << " " << e.kind << "\n";
    return 0;
  }
  const auto fmt = cfg.format == "dot" ? GraphFormat::Dot : GraphFormat::Json;
  std::cout << emit_core_graph(a, scope, fmt, s);
  if (fmt == GraphFormat::Json) std::cout << "\n";
  return 0;
}

int cmd_core_classify(const RunConfig& cfg) {
  const Alpha a = load_alpha(cfg);
  const auto c = classify_intersection(a, require_subset(cfg.s, a.n(), "--s"), require_subset(cfg.t, a.n(), "--t"));
  if (cfg.format == "json") {
    json out;
    out["kind"] = std::string(to_string(c.kind));
    out["nonempty"] = c.nonempty;
    out["blocks"] = json::array();
    for (const auto& b : c.blocks) out["blocks"].push_back(io::to_json(b));
    out["within"] = c.within ? io::to_json(*c.within) : json(nullptr);
    out["description"] = c.description;
    print_json(out);
  } else {
    std::cout << to_string(c.kind) << (c.nonempty ? "" : " (empty)") << "\n" << c.description << "\n";
  }
  return 0;
}

int cmd_core_euler(const RunConfig& cfg) {
  const Alpha a = load_alpha(cfg);
  std::vector<Subset> targets;
  if (auto s = optional_subset(cfg.s, a.n(), "--s"))
    targets.push_back(*s);
  else
    targets = core_shorts(a);
  bool ok = true;
  json rows = json::array();
  for (const auto& s : targets) {
    const auto c = euler_cross_check(a, s, false, slice_options());
    ok = ok && c.holds();
    json row{{"s", io::to_json(s)},           {"euler_core", c.core}, {"euler_polygon_subspace", c.polygon_subspace},
             {"short_supersets", c.supersets}, {"rhs", c.rhs()},       {"holds", c.holds()}};
    if (!c.relabeling.is_identity()) row["relabeling"] = relabeling_json(c.relabeling);
    rows.push_back(row);
    if (cfg.format != "json")
      std::cout << "U_" << s.to_string() << ": " << c.core << " = " << c.polygon_subspace << " + " << s.size() - 1
                << "*" << c.supersets << (c.holds() ? "" : "  VIOLATED") << "\n";
  }
  if (cfg.format == "json") print_json({{"alpha", io::to_json(a)}, {"checks", rows}, {"ok", ok}});
  return ok ? 0 : 2;
}

std::vector<Polynomial> default_surface_basis(const Alpha& a, const Subset& s) {
  const RingPtr r = b_ring(a.n(), false);
  auto b = [&](int i) { return Polynomial::variable(r, "b_" + std::to_string(i)); };
  std::vector<Polynomial> basis{b(1)};
  for (int j : s.complement().elements())
    if (is_short(a, s.with(j))) {
      basis[0] -= b(j);
      basis.push_back(b(j));
    }
  const auto ord = core_ordinary_ideal(a, s);
  const auto dims = betti(ord, 1).dims;
  if (static_cast<long long>(basis.size()) == dims[1]) return basis;
  std::vector<Polynomial> fallback;
  for (const auto& m : GradedQuotient(ord.ideal).normal_form(b(1)).basis) fallback.push_back(Polynomial::from_monomial(r, m));
  return fallback;
}

int cmd_intersection_form(const RunConfig& cfg) {
  const Alpha a = load_alpha(cfg);
  const auto rl = relabel_to_contain_one(a, require_subset(cfg.s, a.n(), "--s"));
  IntersectionMode mode;
  if (cfg.mode == "auto")
    mode = IntersectionMode::Auto;
  else if (cfg.mode == "normalized")
    mode = IntersectionMode::Normalized;
  else if (cfg.mode == "unnormalized")
    mode = IntersectionMode::Unnormalized;
  else
    throw Error(ErrorCode::ParseError, "unknown mode " + cfg.mode);
  if (rl.alpha.n() != 5) throw Error(ErrorCode::NotASurface, "core components are surfaces only for n = 5");
  const auto basis = default_surface_basis(rl.alpha, rl.s);
  const auto f = intersection_form(rl.alpha, rl.s, basis, mode);
  if (cfg.format == "json") {
    json out;
    if (!rl.relabeling.is_identity()) out["relabeling"] = relabeling_json(rl.relabeling);
    out["basis"] = json::array();
    for (const auto& p : basis) out["basis"].push_back(p.to_string());
    out["gram"] = io::to_json(f.gram);
    out["diagonal"] = json::array();
    for (const auto& d : f.diagonalization.diagonal) out["diagonal"].push_back(io::to_json(d));
    out["signature"] = {f.diagonalization.positive, f.diagonalization.negative};
    out["determinant"] = io::to_json(f.determinant);
    out["normalized"] = f.normalized;
    out["normalizing_index"] = f.normalizing_index ? json(*f.normalizing_index) : json(nullptr);
    out["blowup_points"] = f.blowup_points ? json(*f.blowup_points) : json(nullptr);
    out["warning"] = f.warning ? json(*f.warning) : json(nullptr);
    print_json(out);
    return 0;
  }
  if (!rl.relabeling.is_identity()) std::cout << relabeling_line(rl.relabeling) << "\n";
  std::cout << "basis";
  for (const auto& p : basis) std::cout << "  " << p.to_string();
  std::cout << "\n";
  for (std::size_t i = 0; i < f.gram.rows(); ++i) {
    for (std::size_t j = 0; j < f.gram.cols(); ++j) std::cout << (j ? " " : "") << to_string(f.gram(i, j));
    std::cout << "\n";
  }
  std::cout << f.report << "\n";
  if (f.warning) std::cout << "warning: " << *f.warning << "\n";
  return 0;
}

int cmd_point_check(const RunConfig& cfg) {
  const Alpha a = load_alpha(cfg);
  if (cfg.point_file.empty()) throw Error(ErrorCode::ParseError, "--point-file is required");
  const PointPQ x = io::point_from_json(read_json_file(cfg.point_file));
  if (x.n() != a.n()) throw Error(ErrorCode::DimensionMismatch, "point and alpha disagree on n");
  const auto res = moment_residual(a, x);
  const auto st = is_stable(a, x, cfg.tol);
  json out;
  out["mu_real_residual"] = format_residual(res.real);
  out["mu_complex_residual"] = format_residual(res.complex);
  out["phi"] = phi_moment(x);
  out["stable"] = st.stable;
  out["stability"] = st.describe();
  if (auto s = optional_subset(cfg.s, a.n(), "--s")) out["polygon_pair"] = io::to_json(polygon_pair_from_point(a, *s, x, cfg.tol).data);
  if (cfg.format == "json") {
    print_json(out);
  } else {
    for (const auto& [k, v] : out.items()) std::cout << k << " " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
  return 0;
}

struct RoundTripStats {
  int samples = 0;
  double moment = 0, roundtrip = 0, norm_identity = 0;
  int stable = 0;
};

RoundTripStats sample_roundtrips(const Alpha& a, const Subset& s, int samples, std::mt19937_64& rng) {
  RoundTripStats st;
  for (int k = 0; k < samples; ++k) {
    const auto data = random_polygon_pair(a, s, rng);
    const auto back = point_from_polygon_pair(a, data);
    const auto fwd = polygon_pair_from_point(a, s, back.point, 1.0);
    st.moment = std::max(st.moment, back.moment.max());
    st.roundtrip = std::max(st.roundtrip, distance(fwd.data, data.conjugated(back.rotation)));
    st.norm_identity = std::max(st.norm_identity, fwd.norm_identity);
    st.stable += is_stable(a, back.point).stable;
    ++st.samples;
  }
  return st;
}

int cmd_point_roundtrip(const RunConfig& cfg) {
  const Alpha a = load_alpha(cfg);
  const Subset s = cfg.s.empty() ? Subset::empty(a.n()) : parse_subset(cfg.s, a.n(), "--s");
  std::mt19937_64 rng(cfg.seed);
  const auto st = sample_roundtrips(a, s, cfg.samples, rng);
  const bool ok = st.moment <= cfg.tol && st.roundtrip <= cfg.tol && st.norm_identity <= cfg.tol && st.stable == st.samples;
  json out{{"alpha", io::to_json(a)},
           {"s", io::to_json(s)},
           {"seed", cfg.seed},
           {"samples", st.samples},
           {"max_moment_residual", format_residual(st.moment)},
           {"max_roundtrip_residual", format_residual(st.roundtrip)},
           {"max_norm_identity_residual", format_residual(st.norm_identity)},
           {"stable", st.stable},
           {"ok", ok}};
  if (cfg.format == "json") {
    print_json(out);
  } else {
    for (const auto& [k, v] : out.items()) std::cout << k << " " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
  return ok ? 0 : 2;
}

const std::vector<std::vector<const char*>> kSelftestBattery = {
    {"1", "2", "2"},          {"1", "1", "1", "2"},       {"1", "2", "3", "3"},       {"2", "2", "2", "3"},
    {"1", "1", "3", "3", "3"}, {"1", "1", "1", "1", "1"}, {"1", "2", "2", "3", "3"}, {"2", "3", "4", "5", "7"},
    {"1", "1", "1", "1", "1", "2"}, {"1", "1", "1", "1", "2", "3"}, {"1", "2", "3", "4", "5", "6"},
    {"2", "2", "2", "2", "2", "1"}};

int cmd_selftest(const RunConfig& cfg) {
  const SliceOptions opts = slice_options();
  std::mt19937_64 rng(cfg.seed);
  bool ok = true;
  json runs = json::array();
  for (const auto& lengths : kSelftestBattery) {
    std::vector<std::string> strs(lengths.begin(), lengths.end());
    const Alpha a = validate_alpha(std::span<const std::string>(strs));
    const int n = a.n();
    json r;
    r["alpha"] = io::to_json(a);
    r["shorts"] = enumerate_shorts(a, 1).size();
    const auto konno = konno_ideal(a);
    r["konno"] = io::to_json(betti(konno, std::nullopt, opts));
    const auto fr = freeness_check(a, std::nullopt, std::nullopt, opts);
    const bool phi = ideal_slices_equal(x_to_zero(equivariant_ideal(a)).ideal, konno.ideal, n - 2).equal;
    r["free"] = fr.free;
    r["x_to_zero"] = phi;
    bool vs = true, ws = true;
    for (std::uint32_t m = 1; m + 1 < (1u << n); ++m) vs = vs && expand_vS(Subset(n, m)).match;
    for (const auto& t : enumerate_shorts(a, 1))
      if (t.contains(1)) ws = ws && check_w_T(t, a).match;
    const bool tri = transition_matrix(a, false).lower_unitriangular;
    const bool span = spanning_check(a, std::nullopt, false).spans;
    r["claims"] = {{"vs", vs}, {"ws", ws}, {"transition", tri}, {"spanning", span}};
    ok = ok && fr.free && phi && vs && ws && tri && span;

    json comps = json::array();
    for (const auto& s : core_shorts(a)) {
      const auto ec = euler_cross_check(a, s, false, opts);
      const auto g = core_graph(a, GraphScope::Component, s);
      const auto st = sample_roundtrips(a, s, 20, rng);
      const bool mm = st.moment <= cfg.tol && st.roundtrip <= cfg.tol && st.norm_identity <= cfg.tol &&
                      st.stable == st.samples;
      ok = ok && ec.holds() && mm;
      comps.push_back({{"s", io::to_json(s)},
                       {"euler", ec.core},
                       {"euler_rhs", ec.rhs()},
                       {"fixed_loci", g.nodes.size()},
                       {"edges", g.edges.size()},
                       {"max_roundtrip_residual", format_residual(std::max(st.moment, st.roundtrip))},
                       {"stable", st.stable}});
    }
    r["components"] = comps;
    runs.push_back(r);
  }
  print_json({{"seed", cfg.seed}, {"runs", runs}, {"ok", ok}});
  return ok ? 0 : 2;
}

void report_error(const Error& e, const RunConfig& cfg) {
  json out = io::error_json(e);
  if (const auto* ng = dynamic_cast<const Alpha::NonGeneric*>(&e)) out["witness"] = io::to_json(ng->witness());
  if (cfg.format == "json")
    std::cerr << out.dump() << "\n";
  else
    std::cerr << "error: " << e.what() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperpoly: invariants of hyperpolygon spaces and their cores"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--alpha", cfg.alpha_inline, "edge lengths, comma separated");
    sub->add_option("--alpha-file", cfg.alpha_file, "JSON file with the edge lengths");
    sub->add_option("--format", cfg.format, "table, json or dot")->check(CLI::IsMember({"table", "json", "dot"}));
    sub->add_option("--tol", cfg.tol, "floating-point tolerance");
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--max-degree", cfg.max_degree, "highest degree to compute");
    return sub;
  };
  auto with_s = [&](CLI::App* sub) {
    sub->add_option("--s", cfg.s, "subset S, comma separated 1-based indices");
    return sub;
  };

  std::function<int()> action;
  auto bind = [&](CLI::App* sub, int (*fn)(const RunConfig&)) {
    sub->callback([&action, fn, &cfg] { action = [fn, &cfg] { return fn(cfg); }; });
  };

  bind(common(app.add_subcommand("shorts", "list short subsets")), cmd_shorts);
  for (const char* name : {"betti", "presentation"}) {
    auto* sub = with_s(common(app.add_subcommand(name, std::string(name) == "betti" ? "Hilbert function" : "ring presentation")));
    sub->add_option("--target", cfg.target, "x, x-eq, core, core-eq or polygon-sub")
        ->check(CLI::IsMember({"x", "x-eq", "core", "core-eq", "polygon-sub"}));
    bind(sub, std::string(name) == "betti" ? cmd_betti : cmd_presentation);
  }
  auto* claims = app.add_subcommand("claims", "basis-change identities");
  claims->require_subcommand(1);
  auto* verify = common(claims->add_subcommand("verify", "check every identity for alpha"));
  verify->add_option("--t", cfg.t, "restrict the w_T check to one T");
  bind(verify, cmd_claims_verify);

  auto* core = app.add_subcommand("core", "core components");
  core->require_subcommand(1);
  auto* graph = with_s(common(core->add_subcommand("graph", "incidence graph")));
  graph->add_option("--scope", cfg.scope, "global or component")->check(CLI::IsMember({"global", "component"}));
  bind(graph, cmd_core_graph);
  bind(with_s(common(core->add_subcommand("euler-check", "Euler number cross-check"))), cmd_core_euler);
  auto* classify = with_s(common(core->add_subcommand("classify", "classify U_S meet U_T")));
  classify->add_option("--t", cfg.t, "subset T");
  bind(classify, cmd_core_classify);

  auto* form = with_s(common(app.add_subcommand("intersection-form", "intersection form of a surface component")));
  form->add_option("--mode", cfg.mode, "auto, normalized or unnormalized")
      ->check(CLI::IsMember({"auto", "normalized", "unnormalized"}));
  bind(form, cmd_intersection_form);

  auto* point = app.add_subcommand("point", "moment-map numerics");
  point->require_subcommand(1);
  auto* check = with_s(common(point->add_subcommand("check", "evaluate a point")));
  check->add_option("--point-file", cfg.point_file, "PointPQ JSON");
  bind(check, cmd_point_check);
  auto* rt = with_s(common(point->add_subcommand("roundtrip", "sampled polygon-pair round trips")));
  rt->add_option("--samples", cfg.samples, "number of samples")->check(CLI::PositiveNumber);
  bind(rt, cmd_point_roundtrip);

  bind(common(app.add_subcommand("selftest", "deterministic sweep over a fixed battery")), cmd_selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  try {
    return action();
  } catch (const ClaimViolation& e) {
    report_error(e, cfg);
    return 2;
  } catch (const Error& e) {
    report_error(e, cfg);
    return 1;
  }
}
