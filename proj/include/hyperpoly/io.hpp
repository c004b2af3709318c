#ifndef HYPERPOLY_IO_HPP
#define HYPERPOLY_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "hyperpoly/combinat.hpp"
#include "hyperpoly/error.hpp"
#include "hyperpoly/graded.hpp"
#include "hyperpoly/linalg.hpp"
#include "hyperpoly/momentmap.hpp"
#include "hyperpoly/poly.hpp"
#include "hyperpoly/presentations.hpp"

namespace hyperpoly::io {

using json = nlohmann::ordered_json;

namespace detail {

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

inline double number(const json& j) {
  if (!j.is_number()) throw Error(ErrorCode::ParseError, "expected a number, got " + j.dump());
  return j.get<double>();
}

}  // namespace detail

inline json to_json(const Rational& r) { return to_string(r); }

inline Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw Error(ErrorCode::ParseError, "expected a rational string, got " + j.dump());
}

inline json to_json(const Subset& s) { return s.elements(); }

inline Subset subset_from_json(const json& j, int n) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "expected a subset array, got " + j.dump());
  std::vector<int> elems;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw Error(ErrorCode::ParseError, "subset entries must be integers");
    elems.push_back(e.get<int>());
  }
  return Subset::of(n, elems);
}

inline json to_json(const Alpha& a) {
  json out = json::array();
  for (const auto& l : a.lengths()) out.push_back(to_json(l));
  return out;
}

// Accepts ["1","3/2",...], [1,2,...] or {"alpha": [...]}.
inline Alpha alpha_from_json(const json& j) {
  const json& arr = j.is_object() ? detail::field(j, "alpha") : j;
  if (!arr.is_array()) throw Error(ErrorCode::ParseError, "alpha must be an array");
  std::vector<Rational> lengths;
  for (const auto& e : arr) lengths.push_back(rational_from_json(e));
  return Alpha::from_rationals(std::move(lengths));
}

inline json to_json(const PolyRing& ring) {
  json out = json::array();
  for (const auto& v : ring.variables()) out.push_back({{"name", v.name}, {"degree", v.degree}});
  return out;
}

inline RingPtr ring_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "ring must be an array of variables");
  std::vector<Variable> vars;
  for (const auto& v : j) vars.push_back({detail::field(v, "name").get<std::string>(), detail::field(v, "degree").get<int>()});
  return make_ring(std::move(vars));
}

// Terms in descending graded-lex order.
inline json to_json(const Polynomial& f) {
  json out = json::array();
  for (const auto& [m, c] : f.terms()) {
    json exps = json::array();
    for (auto e : m.exps) exps.push_back(int(e));
    out.push_back({{"monomial", exps}, {"coeff", to_json(c)}});
  }
  return out;
}

inline Polynomial polynomial_from_json(const json& j, const RingPtr& ring) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "polynomial must be an array of terms");
  Polynomial f(ring);
  for (const auto& t : j) {
    std::vector<Exponent> exps;
    for (const auto& e : detail::field(t, "monomial")) {
      const int v = e.get<int>();
      if (v < 0 || v > 255) throw Error(ErrorCode::ParseError, "exponent out of range");
      exps.push_back(static_cast<Exponent>(v));
    }
    f.add_term(make_monomial(*ring, std::move(exps)), rational_from_json(detail::field(t, "coeff")));
  }
  return f;
}

inline json to_json(const HilbertTable& t) {
  json out;
  out["dims"] = t.trimmed();
  out["euler"] = t.euler();
  return out;
}

inline Provenance provenance_from_string(const std::string& s) {
  for (auto p : {Provenance::KonnoI, Provenance::MainJ, Provenance::EqcoreJS, Provenance::OrdcoreIS,
                 Provenance::PolsKer, Provenance::Derived})
    if (to_string(p) == s) return p;
  throw Error(ErrorCode::ParseError, "unknown provenance " + s);
}

inline json to_json(const Presentation& p) {
  json out;
  out["provenance"] = std::string(to_string(p.provenance));
  out["context"] = {{"alpha", to_json(p.alpha)}, {"s", p.s ? to_json(*p.s) : json(nullptr)}};
  out["ring"] = to_json(*p.ring());
  json gens = json::array();
  for (const auto& g : p.ideal.generators()) gens.push_back(to_json(g));
  out["generators"] = gens;
  out["truncation"] = p.ideal.truncation_degree() ? json(*p.ideal.truncation_degree()) : json(nullptr);
  return out;
}

inline Presentation presentation_from_json(const json& j) {
  const Alpha a = alpha_from_json(detail::field(detail::field(j, "context"), "alpha"));
  const json& sj = detail::field(detail::field(j, "context"), "s");
  std::optional<Subset> s;
  if (!sj.is_null()) s = subset_from_json(sj, a.n());
  const RingPtr ring = ring_from_json(detail::field(j, "ring"));
  std::vector<Polynomial> gens;
  for (const auto& g : detail::field(j, "generators")) gens.push_back(polynomial_from_json(g, ring));
  std::optional<int> trunc;
  if (const auto& t = detail::field(j, "truncation"); !t.is_null()) trunc = t.get<int>();
  return {provenance_from_string(detail::field(j, "provenance").get<std::string>()), a, s,
          GradedIdeal(ring, std::move(gens), trunc)};
}

inline json to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(row);
  }
  return out;
}

inline json labeled_matrix(const Matrix& m, const std::vector<Subset>& rows, const std::vector<Subset>& columns) {
  if (rows.size() != m.rows() || columns.size() != m.cols())
    throw Error(ErrorCode::DimensionMismatch, "label count does not match matrix shape");
  json out;
  out["rows"] = json::array();
  for (const auto& r : rows) out["rows"].push_back(to_json(r));
  out["columns"] = json::array();
  for (const auto& c : columns) out["columns"].push_back(to_json(c));
  out["entries"] = to_json(m);
  return out;
}

inline json to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

inline Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw Error(ErrorCode::ParseError, "complex numbers are [re, im]");
  return {detail::number(j[0]), detail::number(j[1])};
}

inline json to_json(const PointPQ& x) {
  json out;
  for (const auto* side : {&x.p, &x.q}) {
    json arr = json::array();
    for (const auto& v : *side) arr.push_back(json::array({to_json(v[0]), to_json(v[1])}));
    out[side == &x.p ? "p" : "q"] = arr;
  }
  return out;
}

inline PointPQ point_from_json(const json& j) {
  PointPQ x;
  for (const char* key : {"p", "q"}) {
    auto& side = key[0] == 'p' ? x.p : x.q;
    for (const auto& v : detail::field(j, key)) {
      if (!v.is_array() || v.size() != 2) throw Error(ErrorCode::ParseError, "each p_i, q_i has two entries");
      side.push_back({complex_from_json(v[0]), complex_from_json(v[1])});
    }
  }
  x.check();
  return x;
}

inline json to_json(const Su2Vector& v) { return json::array({v.x, v.y, v.z}); }

inline Su2Vector su2_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw Error(ErrorCode::ParseError, "3-vectors are [x, y, z]");
  return {detail::number(j[0]), detail::number(j[1]), detail::number(j[2])};
}

inline json to_json(const PolygonPairData& d) {
  json out;
  out["s"] = to_json(d.s);
  out["u"] = json::array();
  for (const auto& u : d.u) out["u"].push_back(to_json(u));
  out["v"] = json::array();
  for (const auto& v : d.v) out["v"].push_back(to_json(v));
  out["w"] = to_json(d.w);
  return out;
}

inline PolygonPairData polygon_pair_from_json(const json& j, int n) {
  PolygonPairData d{subset_from_json(detail::field(j, "s"), n), {}, {}, su2_from_json(detail::field(j, "w"))};
  for (const auto& u : detail::field(j, "u")) d.u.push_back(su2_from_json(u));
  for (const auto& v : detail::field(j, "v")) d.v.push_back(su2_from_json(v));
  if (d.u.size() != static_cast<std::size_t>(d.s.size()) ||
      d.v.size() != static_cast<std::size_t>(n - d.s.size()))
    throw Error(ErrorCode::DimensionMismatch, "u must have |S| entries and v must have n - |S|");
  return d;
}

inline json error_json(const Error& e) {
  return {{"error", std::string(to_string(e.code()))}, {"code", static_cast<int>(e.code())}, {"message", e.what()}};
}

}  // namespace hyperpoly::io

#endif  // HYPERPOLY_IO_HPP
