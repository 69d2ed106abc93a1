#pragma once

// JSON encodings of the domain types. Rationals travel as strings "p/q" or
// "p"; lattice points as integer arrays; floating diagnostics as strings
// with 17 significant digits so reports are byte-stable.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "json.hpp"
#include "okounkov/algebra.hpp"
#include "okounkov/bkk.hpp"
#include "okounkov/geometry.hpp"
#include "okounkov/mixedvol.hpp"
#include "okounkov/semigroup.hpp"
#include "okounkov/steiner.hpp"

namespace okounkov::io {

using Json = nlohmann::json;

inline std::string format_double(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<std::int64_t>())));
  throw InputError("rational must be a string \"p/q\" or an integer");
}

inline std::size_t dim_from_json(const Json& j) {
  const Json& d = require(j, "dim");
  if (!d.is_number_integer() || d.get<std::int64_t>() <= 0) throw InputError("dim must be a positive integer");
  return static_cast<std::size_t>(d.get<std::int64_t>());
}

inline LatticePoint lattice_point_from_json(const Json& j, std::size_t dim) {
  if (!j.is_array() || j.size() != dim) throw InputError("lattice point has wrong length");
  LatticePoint p;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw InputError("lattice coordinates must be integers");
    p.push_back(v.get<std::int64_t>());
  }
  return p;
}

inline Json to_json(const Rational& q) { return to_string(q); }

inline Json to_json(const LatticePoint& p) { return Json(p); }

inline Json to_json(const RationalPoint& p) {
  Json a = Json::array();
  for (const auto& c : p.coords()) a.push_back(to_string(c));
  return a;
}

inline RationalPoint rational_point_from_json(const Json& j, std::size_t dim) {
  if (!j.is_array() || j.size() != dim) throw InputError("point has wrong length");
  std::vector<Rational> c;
  for (const auto& v : j) c.push_back(rational_from_json(v));
  return RationalPoint(std::move(c));
}

// --- supports and polytopes -------------------------------------------------

inline Json to_json(const SupportSet& s) {
  Json pts = Json::array();
  for (const auto& p : s) pts.push_back(p);
  return {{"dim", s.dim()}, {"points", pts}};
}

inline SupportSet support_from_json(const Json& j) {
  const std::size_t dim = dim_from_json(j);
  const Json& pts = require(j, "points");
  if (!pts.is_array() || pts.empty()) throw InputError("support needs a nonempty points array");
  std::vector<LatticePoint> out;
  for (const auto& p : pts) out.push_back(lattice_point_from_json(p, dim));
  return SupportSet(dim, std::move(out));
}

inline Json to_json(const LatticePolytope& p) {
  Json v = Json::array();
  for (const auto& x : p.vertices()) v.push_back(to_json(x));
  return {{"dim", p.ambient_dim()}, {"vertices", v}};
}

/// Accepts the polytope encoding, or a support set (whose hull is taken).
inline LatticePolytope polytope_from_json(const Json& j) {
  if (j.is_object() && j.contains("points") && !j.contains("vertices")) return convex_hull(support_from_json(j));
  const std::size_t dim = dim_from_json(j);
  if (dim > kMaxDim) throw InputError("polytope dimension exceeds 4");
  const Json& v = require(j, "vertices");
  if (!v.is_array() || v.empty()) throw InputError("polytope needs a nonempty vertices array");
  std::vector<RationalPoint> pts;
  for (const auto& x : v) pts.push_back(rational_point_from_json(x, dim));
  return convex_hull(pts);
}

inline std::vector<LatticePolytope> polytopes_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw InputError("expected a nonempty array of bodies");
  std::vector<LatticePolytope> out;
  for (const auto& b : j) out.push_back(polytope_from_json(b));
  return out;
}

inline std::vector<SupportSet> supports_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw InputError("expected a nonempty array of supports");
  std::vector<SupportSet> out;
  for (const auto& s : j) out.push_back(support_from_json(s));
  return out;
}

inline Json bodies_json(const std::vector<LatticePolytope>& b) {
  Json a = Json::array();
  for (const auto& p : b) a.push_back(to_json(p));
  return a;
}

// --- graded slices ----------------------------------------------------------

inline Json to_json(const GradedSemigroupSlice& s) {
  Json levels = Json::object();
  for (std::size_t k = 1; k <= s.k_max(); ++k) {
    Json pts = Json::array();
    for (const auto& p : s.level(k)) pts.push_back(p);
    levels[std::to_string(k)] = pts;
  }
  return {{"dim", s.dim}, {"levels", levels}};
}

inline GradedSemigroupSlice slice_from_json(const Json& j) {
  GradedSemigroupSlice s;
  s.dim = dim_from_json(j);
  const Json& levels = require(j, "levels");
  if (!levels.is_object() || levels.empty()) throw InputError("levels must be a nonempty object");
  for (std::size_t k = 1; k <= levels.size(); ++k) {
    const std::string key = std::to_string(k);
    if (!levels.contains(key)) throw InputError("levels must be numbered 1..k without gaps");
    const Json& pts = levels.at(key);
    if (!pts.is_array() || pts.empty()) throw InputError("each level needs a nonempty point list");
    std::vector<LatticePoint> v;
    for (const auto& p : pts) v.push_back(lattice_point_from_json(p, s.dim));
    s.levels.emplace_back(s.dim, std::move(v));
  }
  s.validate();
  return s;
}

// --- polynomials, subspaces, orders -------------------------------------------

inline Json to_json(const LaurentPolynomial& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({{"exp", e}, {"coef", to_string(c)}});
  return {{"dim", f.dim()}, {"terms", terms}};
}

inline LaurentPolynomial polynomial_from_json(const Json& j) {
  const std::size_t dim = dim_from_json(j);
  LaurentPolynomial f(dim);
  const Json& terms = require(j, "terms");
  if (!terms.is_array()) throw InputError("terms must be an array");
  for (const auto& t : terms) f.add_term(lattice_point_from_json(require(t, "exp"), dim), rational_from_json(require(t, "coef")));
  return f;
}

inline Json to_json(const LaurentSubspace& l) {
  Json basis = Json::array();
  for (const auto& f : l.basis()) basis.push_back(to_json(f));
  return {{"dim", l.ambient_dim()}, {"basis", basis}};
}

inline LaurentSubspace subspace_from_json(const Json& j) {
  const std::size_t dim = dim_from_json(j);
  const Json& basis = require(j, "basis");
  if (!basis.is_array() || basis.empty()) throw InputError("basis must be a nonempty array");
  std::vector<LaurentPolynomial> gens;
  for (const auto& f : basis) {
    LaurentPolynomial p = polynomial_from_json(f);
    if (p.dim() != dim) throw InputError("basis polynomial has wrong dimension");
    gens.push_back(std::move(p));
  }
  return LaurentSubspace::span(dim, gens);
}

inline Json to_json(const MonomialOrder& o) {
  if (o.kind() == MonomialOrder::Kind::lex) return {{"kind", "lex"}};
  return {{"kind", "grlex"}, {"grading", o.grading()}};
}

inline MonomialOrder order_from_json(const Json& j) {
  const std::string kind = require(j, "kind").get<std::string>();
  if (kind == "lex") return MonomialOrder::lex();
  if (kind == "grlex") return MonomialOrder::graded_lex(require(j, "grading").get<std::vector<std::int64_t>>());
  throw InputError("unknown order kind \"" + kind + "\"");
}

// --- reports ----------------------------------------------------------------

inline Json to_json(const InequalityReport& r, const Json& witness) {
  return {{"lhs", to_string(r.lhs)}, {"rhs", to_string(r.rhs)}, {"holds", r.holds}, {"witness", witness}};
}

inline std::string comparison_name(Comparison c) {
  switch (c) {
    case Comparison::less: return "less";
    case Comparison::equal: return "equal";
    case Comparison::greater: return "greater";
  }
  return "?";
}

inline Json to_json(const RootSumReport& r, const Json& witness) {
  return {{"m", r.m},
          {"a", to_string(r.a)},
          {"b", to_string(r.b)},
          {"c", to_string(r.c)},
          {"lhs", format_double(r.lhs)},
          {"rhs", format_double(r.rhs)},
          {"relation", comparison_name(r.relation)},
          {"holds", r.holds},
          {"witness", witness}};
}

inline Json to_json(const CountReport& r) {
  Json j{{"predicted", to_string(r.predicted)},
         {"trials", r.trials},
         {"agreed", r.agreed},
         {"degenerate_trials", r.degenerate_trials},
         {"completion", {{"trials", r.completion_trials}, {"agreed", r.completion_agreed}}},
         {"inconclusive", r.inconclusive()},
         {"diagnostics",
          {{"max_residual", format_double(r.max_residual)}, {"min_separation", format_double(r.min_separation)}}}};
  j["modal"] = r.modal ? Json(*r.modal) : Json(nullptr);
  j["counted"] = j["modal"];
  j["completion"]["modal"] = r.completion_modal ? Json(*r.completion_modal) : Json(nullptr);
  return j;
}

inline std::string index_string(const LatticeIndex& i) { return i.finite() ? to_string(*i.value) : "INFINITE"; }

}  // namespace okounkov::io
