#pragma once

// Replayable corpus of small worked examples with known answers. Every case
// renders its result as a canonical string so the whole report is stable
// byte for byte.

#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "okounkov/io.hpp"

namespace okounkov::selftest {

struct Case {
  std::string name;
  std::string expected;
  std::function<std::string()> actual;
};

inline std::string str(const Rational& q) { return to_string(q); }
inline std::string str(const Integer& z) { return to_string(z); }
inline std::string str(std::size_t v) { return std::to_string(v); }
inline std::string str(int v) { return std::to_string(v); }
inline std::string str(bool b) { return b ? "true" : "false"; }

inline std::string str(const LatticePolytope& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    if (i) os << ' ';
    os << '(';
    const auto& v = p.vertices()[i];
    for (std::size_t c = 0; c < v.dim(); ++c) os << (c ? "," : "") << to_string(v[c]);
    os << ')';
  }
  return os.str();
}

inline std::string str(const SupportSet& s) {
  std::ostringstream os;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ' ';
    os << '(';
    for (std::size_t c = 0; c < s.dim(); ++c) os << (c ? "," : "") << s.points()[i][c];
    os << ')';
  }
  return os.str();
}

inline LatticePolytope poly(std::initializer_list<RationalPoint> pts) { return convex_hull(std::vector<RationalPoint>(pts)); }
inline SupportSet supp(std::size_t dim, std::vector<LatticePoint> pts) { return SupportSet(dim, std::move(pts)); }

inline LaurentPolynomial lp(std::size_t dim, std::vector<std::pair<Exponent, Rational>> terms) {
  LaurentPolynomial f(dim);
  for (auto& [e, c] : terms) f.add_term(e, c);
  return f;
}

inline ComplexLaurentPolynomial random_poly(const SupportSet& s, std::uint64_t seed, std::uint64_t stream) {
  return random_generic_system({s}, seed, stream).front();
}

inline std::vector<Case> corpus(std::uint64_t seed) {
  const auto square = poly({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  const auto simplex2 = poly({{0, 0}, {1, 0}, {0, 1}});
  const auto diag = poly({{0, 0}, {1, 1}});
  const auto e1seg = poly({{0, 0}, {1, 0}});
  const auto e2seg = poly({{0, 0}, {0, 1}});
  const auto cube = convex_hull(lattice_points(poly({{0, 0, 0}, {1, 1, 1}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                                                     {1, 1, 0}, {1, 0, 1}, {0, 1, 1}})));
  const auto lex = MonomialOrder::lex();
  const SupportSet s013 = supp(1, {{0}, {1}, {3}});
  const SupportSet s02 = supp(1, {{0}, {2}});
  const SupportSet tri = supp(2, {{0, 0}, {1, 0}, {0, 1}});
  const SupportSet diag_s = supp(2, {{0, 0}, {1, 1}});
  const SupportSet tri2 = supp(2, {{0, 0}, {2, 0}, {0, 2}});
  const SupportSet dense2 = supp(2, {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}});
  const LaurentSubspace one_xy = LaurentSubspace::span(2, {lp(2, {{{0, 0}, 1}}), lp(2, {{{1, 0}, 1}, {{0, 1}, 1}})});

  std::vector<Case> c;
  // geometry
  c.push_back({"hull drops interior point", "(0,0) (0,1) (1,0)",
               [] { return str(poly({{0, 0}, {1, 0}, {0, 1}, {Rational(1, 2), Rational(1, 4)}})); }});
  c.push_back({"hull drops boundary midpoint", "(0,0) (0,2) (2,0)",
               [] { return str(poly({{0, 0}, {2, 0}, {0, 2}, {1, 1}})); }});
  c.push_back({"sum of unit segments", "(0,0) (0,1) (1,0) (1,1)", [=] { return str(minkowski_sum(e1seg, e2seg)); }});
  c.push_back({"simplex plus diagonal", "(0,0) (0,1) (1,0) (1,2) (2,1)",
               [=] { return str(minkowski_sum(simplex2, diag)); }});
  c.push_back({"sum with a point translates", "(2,3) (2,4) (3,3)",
               [=] { return str(minkowski_sum(simplex2, poly({{2, 3}}))); }});
  c.push_back({"scale square by 2", "(0,0) (0,2) (2,0) (2,2)", [=] { return str(scale(square, 2)); }});
  c.push_back({"scale by 0", "(0,0)", [=] { return str(scale(square, 0)); }});
  c.push_back({"scale simplex by 3/2", "(0,0) (0,3/2) (3/2,0)", [=] { return str(scale(simplex2, Rational(3, 2))); }});
  c.push_back({"volume unit square", "1", [=] { return str(square.volume()); }});
  c.push_back({"volume simplex R^3", "1/6", [] { return str(poly({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}).volume()); }});
  c.push_back({"volume pentagon", "5/2", [] { return str(poly({{0, 0}, {1, 0}, {2, 1}, {1, 2}, {0, 1}}).volume()); }});
  c.push_back({"lattice points square", "(0,0) (0,1) (1,0) (1,1)", [=] { return str(lattice_points(square)); }});
  c.push_back({"lattice points 3*square", "16", [=] { return str(lattice_points(scale(square, 3)).size()); }});
  c.push_back({"lattice points [0,3]", "(0) (1) (2) (3)", [] { return str(lattice_points(poly({{0}, {3}}))); }});
  // mixed volumes
  c.push_back({"V(cube,cube,cube)", "1", [=] { return str(mixed_volume({cube, cube, cube})); }});
  c.push_back({"V(e1 segment, e2 segment)", "1/2", [=] { return str(mixed_volume({e1seg, e2seg})); }});
  c.push_back({"V(simplex, diagonal)", "1", [=] { return str(mixed_volume({simplex2, diag})); }});
  c.push_back({"interp V(cube,cube,cube)", "1", [=] { return str(mixed_volume_interp({cube, cube, cube})); }});
  c.push_back({"interp V(e1 segment, e2 segment)", "1/2", [=] { return str(mixed_volume_interp({e1seg, e2seg})); }});
  c.push_back({"interp V(simplex, diagonal)", "1", [=] { return str(mixed_volume_interp({simplex2, diag})); }});
  c.push_back({"V(square, square)", "1", [=] { return str(mixed_volume({square, square})); }});
  c.push_back({"V(2*simplex)", "1/2", [=] { return str(mixed_volume_repeated({{{simplex2, 2}}, {}})); }});
  c.push_back({"AF square simplex", "1 1/2 true", [=] {
                 const auto r = check_alexandrov_fenchel({square, simplex2});
                 return str(r.lhs) + " " + str(r.rhs) + " " + str(r.holds);
               }});
  c.push_back({"AF equal bodies", "true", [=] {
                 const auto r = check_alexandrov_fenchel({square, square});
                 return str(r.holds && r.lhs == r.rhs);
               }});
  c.push_back({"BM m=n doubled body is equality", "equal", [=] {
                 return io::comparison_name(check_generalized_bm(2, simplex2, simplex2, {}).relation);
               }});
  c.push_back({"BM square simplex", "1 1/2 7/2 true", [=] {
                 const auto r = check_generalized_bm(2, square, simplex2, {});
                 return str(r.a) + " " + str(r.b) + " " + str(r.c) + " " + str(r.holds);
               }});
  c.push_back({"isoperimetric square simplex", "1/2 1 true true", [=] {
                 const auto r = check_isoperimetric(square, simplex2);
                 return str(r.lhs) + " " + str(r.rhs) + " " + str(r.holds) + " " + str(r.expansion_identity);
               }});
  // semigroup
  c.push_back({"2*{0,1,3}", "(0) (1) (2) (3) (4) (6)", [=] { return str(sumset_power(s013, 2)); }});
  c.push_back({"3*{0,e1,e2} size", "10", [=] { return str(sumset_power(tri, 3).size()); }});
  c.push_back({"5*{0,2}", "(0) (2) (4) (6) (8) (10)", [=] { return str(sumset_power(s02, 5)); }});
  c.push_back({"completion {0,1,3}", "(0) (1) (2) (3)", [=] { return str(completion(s013)); }});
  c.push_back({"completion {0,2}", "(0) (1) (2)", [=] { return str(completion(s02)); }});
  c.push_back({"completion 2*simplex vertices", "6", [=] { return str(completion(tri2).size()); }});
  c.push_back({"cancelation example", "true",
               [=] { return str(check_cancelation(s013, supp(1, {{0}, {2}, {3}}), supp(1, {{0}, {1}}))); }});
  c.push_back({"index {0,e1,e2}", "1", [=] { return io::index_string(difference_lattice_index({tri})); }});
  c.push_back({"index {0,2}", "2", [=] { return io::index_string(difference_lattice_index({s02})); }});
  c.push_back({"index {0,2e1,3e2}", "6",
               [] { return io::index_string(difference_lattice_index({supp(2, {{0, 0}, {2, 0}, {0, 3}})})); }});
  c.push_back({"newton body simplex k=6", "(0,0) (0,1) (1,0)", [=] { return str(newton_body(sumset_slice(tri, 6)).polytope); }});
  c.push_back({"newton body {0,1,3} k=1", "(0) (3)", [=] { return str(newton_body(sumset_slice(s013, 1)).polytope); }});
  c.push_back({"newton body single ray", "(1,0) 0", [] {
                 GradedSemigroupSlice s{2, {}};
                 for (std::int64_t k = 1; k <= 5; ++k) s.levels.push_back(supp(2, {{k, 0}}));
                 const auto body = newton_body(s).polytope;
                 return str(body) + " " + str(body.affine_dim());
               }});
  c.push_back({"density simplex k=40", "861/1600", [=] { return str(density_sequence(sumset_slice(tri, 40)).entries.back().ratio); }});
  c.push_back({"density {0,1,3} k=50", "3", [=] { return str(density_sequence(sumset_slice(s013, 50)).entries.back().ratio); }});
  c.push_back({"density {0,2} flagged", "2 false 21/20 2", [=] {
                 const auto r = density_sequence(sumset_slice(s02, 20));
                 return io::index_string(r.index) + " " + str(r.ample) + " " + str(r.entries.back().ratio) + " " +
                        str(r.target_volume);
               }});
  c.push_back({"margin simplex C=0", "0", [=] {
                 std::size_t total = 0;
                 for (const auto& e : interior_margin(sumset_slice(tri, 12), 0)) total += e.missing_count;
                 return str(total);
               }});
  c.push_back({"margin {0,1,3} C=1", "0", [=] {
                 std::size_t total = 0;
                 for (const auto& e : interior_margin(sumset_slice(s013, 30), 1)) total += e.missing_count;
                 return str(total);
               }});
  c.push_back({"margin rejects non-ample", "rejected", [=] {
                 try {
                   interior_margin(sumset_slice(tri2, 3), 2);
                   return std::string("accepted");
                 } catch (const InputError&) {
                   return std::string("rejected");
                 }
               }});
  // algebra
  c.push_back({"v(3 + x)", "[0,0]", [=] { return io::Json(valuation(lp(2, {{{0, 0}, 3}, {{1, 0}, 1}}), lex)).dump(); }});
  c.push_back({"v(x/y + x^2)", "[1,-1]", [=] { return io::Json(valuation(lp(2, {{{1, -1}, 1}, {{2, 0}, 1}}), lex)).dump(); }});
  c.push_back({"dim L_{0,e1,e2}", "3", [=] { return str(monomial_subspace(tri).dimension()); }});
  c.push_back({"dim L_{0,2}", "2", [=] { return str(monomial_subspace(s02).dimension()); }});
  c.push_back({"L_A L_B = L_{A+B}", "true", [=] {
                 return str(product(monomial_subspace(tri), monomial_subspace(diag_s)) == monomial_subspace(sumset(tri, diag_s)));
               }});
  c.push_back({"span{1,x} span{1,y}", "4", [] {
                 return str(product(monomial_subspace(supp(2, {{0, 0}, {1, 0}})), monomial_subspace(supp(2, {{0, 0}, {0, 1}})))
                                .dimension());
               }});
  c.push_back({"span{1,x+y}^2", "3", [=] { return str(product(one_xy, one_xy).dimension()); }});
  c.push_back({"span{1,x}^3", "4", [] { return str(power(monomial_subspace(supp(1, {{0}, {1}})), 3).dimension()); }});
  c.push_back({"image span{1,x,y}", "(0,0) (0,1) (1,0)", [=] { return str(valuation_image(monomial_subspace(tri), lex).exponents); }});
  c.push_back({"image span{1+x,1-x}", "(0) (1)", [=] {
                 const auto l = LaurentSubspace::span(1, {lp(1, {{{0}, 1}, {{1}, 1}}), lp(1, {{{0}, 1}, {{1}, -1}})});
                 return str(valuation_image(l, lex).exponents);
               }});
  c.push_back({"image span{x+y,x-y,1}", "3", [] {
                 const auto l = LaurentSubspace::span(
                     2, {lp(2, {{{1, 0}, 1}, {{0, 1}, 1}}), lp(2, {{{1, 0}, 1}, {{0, 1}, -1}}), lp(2, {{{0, 0}, 1}})});
                 return str(valuation_image(l, MonomialOrder::lex()).exponents.size());
               }});
  c.push_back({"S(span{1,x+y}) level sizes", "2 3 4 5", [=] {
                 const auto s = semigroup_of_subspace(one_xy, lex, 4);
                 std::string out;
                 for (std::size_t k = 1; k <= 4; ++k) out += (k > 1 ? " " : "") + str(s.level(k).size());
                 return out;
               }});
  c.push_back({"S(L_A) = k*A", "true", [=] {
                 const auto s = semigroup_of_subspace(monomial_subspace(s013), lex, 5);
                 bool ok = true;
                 for (unsigned k = 1; k <= 5; ++k) ok = ok && s.level(k) == sumset_power(s013, k);
                 return str(ok);
               }});
  c.push_back({"Hilbert span{1,x,y}", "3 6 10 15 21", [=] {
                 std::string out;
                 for (const auto& p : hilbert_function(monomial_subspace(tri), 5)) out += (p.k > 1 ? " " : "") + str(p.dim);
                 return out;
               }});
  c.push_back({"Hilbert square vertices", "4 9 16 25", [] {
                 std::string out;
                 for (const auto& p : hilbert_function(monomial_subspace(supp(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}})), 4))
                   out += (p.k > 1 ? " " : "") + str(p.dim);
                 return out;
               }});
  c.push_back({"Hilbert span{1,x+y} degree", "1", [=] { return str(fit_hilbert_tail(hilbert_function(one_xy, 6)).degree); }});
  c.push_back({"body span{1,x,y}", "(0,0) (0,1) (1,0)", [=] { return str(newton_okounkov_body(monomial_subspace(tri), lex, 3).polytope); }});
  c.push_back({"body L_{0,2e1,3e2}", "(0,0) (0,3) (2,0)",
               [=] { return str(newton_okounkov_body(monomial_subspace(supp(2, {{0, 0}, {2, 0}, {0, 3}})), lex, 2).polytope); }});
  c.push_back({"body span{1,x+y} dim", "1", [=] { return str(newton_okounkov_body(one_xy, lex, 4).polytope.affine_dim()); }});
  c.push_back({"superadditivity span{1,x+y}, span{1,x}", "true", [=] {
                 return str(superadditivity_check(one_xy, monomial_subspace(supp(2, {{0, 0}, {1, 0}})), lex, 3).holds);
               }});
  // bkk
  c.push_back({"bkk {0,2}", "2", [=] { return str(bkk_number({s02})); }});
  c.push_back({"bkk simplex simplex", "1", [=] { return str(bkk_number({tri, tri})); }});
  c.push_back({"bkk simplex diagonal", "2", [=] { return str(bkk_number({tri, diag_s})); }});
  c.push_back({"bkk 2*simplex vertices", "4", [=] { return str(bkk_number({tri2, tri2})); }});
  c.push_back({"roots 1 + z^2", "2", [] {
                 ComplexLaurentPolynomial p(1);
                 p.add_term({0}, 1.0);
                 p.add_term({2}, 1.0);
                 return str(count_roots_1d(p));
               }});
  c.push_back({"roots random {0,1,3}", "3", [=] { return str(count_roots_1d(random_poly(s013, seed, 1))); }});
  c.push_back({"roots random {-1,0,1}", "2", [=] { return str(count_roots_1d(random_poly(supp(1, {{-1}, {0}, {1}}), seed, 2))); }});
  c.push_back({"solve x-1, y-1", "1", [] {
                 ComplexLaurentPolynomial p1(2), p2(2);
                 p1.add_term({1, 0}, 1.0);
                 p1.add_term({0, 0}, -1.0);
                 p2.add_term({0, 1}, 1.0);
                 p2.add_term({0, 0}, -1.0);
                 return str(count_solutions_2d(p1, p2));
               }});
  c.push_back({"solve random simplex diagonal", "2", [=] {
                 const auto sys = random_generic_system({tri, diag_s}, seed, 3);
                 return str(count_solutions_2d(sys[0], sys[1]));
               }});
  c.push_back({"solve random dense quadrics", "4", [=] {
                 const auto sys = random_generic_system({dense2, dense2}, seed, 4);
                 return str(count_solutions_2d(sys[0], sys[1]));
               }});
  c.push_back({"verify 2*simplex vertices", "4 4 true", [=] {
                 const auto r = verify_bkk({tri2, tri2}, 5, seed);
                 return str(r.predicted) + " " + (r.modal ? str(*r.modal) : "none") + " " + str(r.agreed && r.completion_agreed);
               }});
  c.push_back({"verify {0,2}", "2 2 2", [=] {
                 const auto r = verify_bkk({s02}, 5, seed);
                 return str(r.predicted) + " " + (r.modal ? str(*r.modal) : "none") + " " +
                        (r.completion_modal ? str(*r.completion_modal) : "none");
               }});
  c.push_back({"verify simplex diagonal", "2 2 true", [=] {
                 const auto r = verify_bkk({tri, diag_s}, 5, seed);
                 return str(r.predicted) + " " + (r.modal ? str(*r.modal) : "none") + " " + str(r.agreed && r.completion_agreed);
               }});
  // steiner
  c.push_back({"symmetrize triangle vertically", "1/2 true", [] {
                 const auto t = ConvexPolygon::hull_of({{0, 0}, {1, 0}, {0, 1}});
                 const auto s = steiner_symmetrize(t, {0, 1});
                 return str(s.area()) + " " + str(is_mirror_symmetric(s, {0, 1}));
               }});
  c.push_back({"symmetric polygon is fixed", "true", [] {
                 const auto p = ConvexPolygon::hull_of({{-1, -1}, {1, -1}, {2, 0}, {1, 1}, {-1, 1}});
                 return str(steiner_symmetrize(p, {0, 1}) == p);
               }});
  c.push_back({"profile equal bodies constant", "true", [=] {
                 const auto prof = section_profile(square, square, 4);
                 bool ok = true;
                 for (const auto& e : prof) ok = ok && e.volume == 1;
                 return str(ok);
               }});
  c.push_back({"profile square simplex concave", "9 0 true", [=] {
                 const auto r = check_profile_concavity(square, simplex2, section_profile(square, simplex2, 10));
                 return str(r.triples) + " " + str(r.violations) + " " + str(r.endpoint_bm);
               }});
  c.push_back({"profile segments in R^1", "0 true", [] {
                 const auto a = poly({{0}, {1}}), b = poly({{0}, {3}});
                 const auto r = check_profile_concavity(a, b, section_profile(a, b, 5));
                 return str(r.violations) + " " + str(r.holds());
               }});
  return c;
}

/// Runs the corpus; failures and exceptions are recorded per case.
inline io::Json run(std::uint64_t seed, int& failures) {
  io::Json cases = io::Json::array();
  failures = 0;
  for (const auto& c : corpus(seed)) {
    std::string actual;
    try {
      actual = c.actual();
    } catch (const std::exception& e) {
      actual = std::string("error: ") + e.what();
    }
    const bool pass = actual == c.expected;
    if (!pass) ++failures;
    cases.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", actual}, {"pass", pass}});
  }
  return {{"cases", cases}, {"total", cases.size()}, {"failed", failures}};
}

}  // namespace okounkov::selftest
