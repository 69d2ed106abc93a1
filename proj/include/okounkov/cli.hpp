#pragma once

// Command dispatcher behind okounkov-lab. `run` reads the input document,
// calls into the library, writes a JSON or CSV report and maps outcomes to
// exit codes.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "okounkov/io.hpp"
#include "okounkov/selftest.hpp"

namespace okounkov::cli {

inline constexpr const char* kToolName = "okounkov-lab";
inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { ok = 0, violation = 1, input_error = 2, inconclusive = 3 };

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"mixedvol", "af-check", "bm-check", "isoperimetric", "sumset",
                                              "density", "okounkov", "hilbert", "bkk-predict", "bkk-verify",
                                              "steiner", "profile", "selftest"};
  return names;
}

struct Command {
  std::string name;
  std::string input_path;   // empty or "-" reads stdin (selftest needs none)
  std::string output_path;  // empty writes to the output stream
  std::uint64_t seed = 0;
  int trials = 5;
  std::size_t kmax = 12;
  std::size_t max_subspace_dim = 8;
  std::optional<double> tol;
  std::string format = "json";
};

inline std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

/// Tabular view for --format csv.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Outcome {
  io::Json report;
  std::optional<Table> table;
  int code = ok;
};

namespace detail {

inline std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

inline Table key_value_table(const io::Json& report) {
  Table t{{"key", "value"}, {}};
  for (const auto& [k, v] : report.items()) t.rows.push_back({k, v.is_string() ? v.get<std::string>() : v.dump()});
  return t;
}

inline std::string render_csv(const Table& t) {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_cell(cells[i]);
    os << '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
  return os.str();
}

inline std::vector<LatticePolytope> bodies_field(const io::Json& in) { return io::polytopes_from_json(io::require(in, "bodies")); }

inline int holds_code(bool holds) { return holds ? ok : violation; }

inline void check_subspace_dim(const LaurentSubspace& l, const Command& cmd) {
  if (l.dimension() > cmd.max_subspace_dim) {
    throw InputError("subspace dimension " + std::to_string(l.dimension()) + " exceeds the cap " +
                     std::to_string(cmd.max_subspace_dim) + " (raise with --max-dim)");
  }
}

inline Outcome cmd_mixedvol(const io::Json& in) {
  const auto bodies = bodies_field(in);
  Outcome o;
  const Rational v = mixed_volume(bodies);
  o.report["mixed_volume"] = to_string(v);
  o.report["normalized"] = to_string(v * Rational(factorial(static_cast<unsigned>(bodies.size()))));
  if (bodies.size() <= 3) o.report["interpolation_check"] = mixed_volume_interp(bodies) == v;
  o.report["witness"] = io::bodies_json(bodies);
  return o;
}

inline Outcome cmd_af(const io::Json& in) {
  const auto bodies = bodies_field(in);
  Outcome o;
  const auto r = check_alexandrov_fenchel(bodies);
  o.report = io::to_json(r, io::bodies_json(bodies));
  o.code = holds_code(r.holds);
  return o;
}

inline Outcome cmd_bm(const io::Json& in) {
  const auto bodies = bodies_field(in);
  if (bodies.size() != 2) throw InputError("bm-check needs exactly two bodies");
  std::vector<LatticePolytope> fixed;
  if (in.contains("fixed")) fixed = io::polytopes_from_json(in.at("fixed"));
  const std::size_t n = bodies[0].ambient_dim();
  const unsigned m = in.contains("m") ? in.at("m").get<unsigned>() : static_cast<unsigned>(n - fixed.size());
  const auto r = check_generalized_bm(m, bodies[0], bodies[1], fixed);
  io::Json witness{{"bodies", io::bodies_json(bodies)}, {"fixed", io::bodies_json(fixed)}};
  Outcome o;
  o.report = io::to_json(r, witness);
  o.code = holds_code(r.holds);
  return o;
}

inline Outcome cmd_isoperimetric(const io::Json& in) {
  const auto bodies = bodies_field(in);
  if (bodies.size() != 2) throw InputError("isoperimetric needs exactly two bodies");
  const auto r = check_isoperimetric(bodies[0], bodies[1]);
  Outcome o;
  o.report = {{"area1", to_string(r.area1)},     {"area2", to_string(r.area2)},
              {"mixed_area", to_string(r.mixed_area)}, {"lhs", to_string(r.lhs)},
              {"rhs", to_string(r.rhs)},         {"holds", r.holds},
              {"expansion_identity", r.expansion_identity}, {"witness", io::bodies_json(bodies)}};
  o.code = holds_code(r.holds && r.expansion_identity);
  return o;
}

inline Outcome cmd_sumset(const io::Json& in) {
  const SupportSet a = io::support_from_json(io::require(in, "support"));
  const unsigned k = in.contains("k") ? in.at("k").get<unsigned>() : 2;
  const SupportSet s = in.contains("other") ? sumset(a, io::support_from_json(in.at("other"))) : sumset_power(a, k);
  Outcome o;
  o.report = {{"sumset", io::to_json(s)}, {"size", s.size()}, {"completion_size", completion(s).size()}};
  if (!in.contains("other")) o.report["k"] = k;
  Table t{{"point"}, {}};
  for (const auto& p : s) t.rows.push_back({io::Json(p).dump()});
  o.table = t;
  return o;
}

inline Outcome cmd_density(const io::Json& in, const Command& cmd) {
  std::optional<SupportSet> generator;
  GradedSemigroupSlice slice;
  if (in.contains("levels")) {
    slice = io::slice_from_json(in);
  } else {
    generator = io::support_from_json(in.contains("support") ? in.at("support") : in);
    slice = sumset_slice(*generator, cmd.kmax);
  }
  const DensityReport d = density_sequence(slice);
  Outcome o;
  std::optional<MarginSearch> margin;
  if (generator && d.ample) margin = find_margin_constant(slice);
  io::Json entries = io::Json::array();
  Table t{{"k", "ratio", "volume", "missing_count"}, {}};
  for (std::size_t i = 0; i < d.entries.size(); ++i) {
    const auto& e = d.entries[i];
    io::Json row{{"k", e.k}, {"ratio", to_string(e.ratio)}, {"ratio_float", io::format_double(e.ratio.get_d())},
                 {"volume", to_string(e.volume)}};
    std::string missing;
    if (margin) {
      row["missing_count"] = margin->entries[i].missing_count;
      missing = std::to_string(margin->entries[i].missing_count);
    }
    entries.push_back(row);
    t.rows.push_back({std::to_string(e.k), to_string(e.ratio), to_string(e.volume), missing});
  }
  o.report = {{"entries", entries},
              {"index", io::index_string(d.index)},
              {"ample", d.ample},
              {"flagged", !d.ample},
              {"target_volume", to_string(d.target_volume)},
              {"superadditive", slice.is_superadditive()}};
  if (margin) {
    o.report["margin_constant"] = margin->constant ? io::Json(to_string(*margin->constant)) : io::Json(nullptr);
  }
  o.table = t;
  return o;
}

inline MonomialOrder order_field(const io::Json& in) {
  return in.contains("order") ? io::order_from_json(in.at("order")) : MonomialOrder::lex();
}

inline LaurentSubspace subspace_field(const io::Json& in) {
  if (in.contains("subspace")) return io::subspace_from_json(in.at("subspace"));
  if (in.contains("support")) return monomial_subspace(io::support_from_json(in.at("support")));
  return io::subspace_from_json(in);
}

inline Outcome cmd_okounkov(const io::Json& in, const Command& cmd) {
  const LaurentSubspace l = subspace_field(in);
  check_subspace_dim(l, cmd);
  const MonomialOrder ord = order_field(in);
  const auto slice = semigroup_of_subspace(l, ord, cmd.kmax);
  const auto body = newton_body(slice).polytope;
  const auto d = density_sequence(slice);
  Outcome o;
  o.report = {{"order", io::to_json(ord)},
              {"kmax", cmd.kmax},
              {"body", io::to_json(body)},
              {"body_dim", body.affine_dim()},
              {"body_volume", to_string(body.volume())},
              {"index", io::index_string(d.index)},
              {"superadditive", slice.is_superadditive()},
              {"slice", io::to_json(slice)}};
  Table t{{"k", "size"}, {}};
  for (std::size_t k = 1; k <= slice.k_max(); ++k) t.rows.push_back({std::to_string(k), std::to_string(slice.level(k).size())});
  o.table = t;
  o.code = holds_code(slice.is_superadditive());
  return o;
}

inline Outcome cmd_hilbert(const io::Json& in, const Command& cmd) {
  const LaurentSubspace l = subspace_field(in);
  check_subspace_dim(l, cmd);
  const auto h = hilbert_function(l, cmd.kmax);
  const auto tail = fit_hilbert_tail(h);
  Outcome o;
  io::Json values = io::Json::array();
  Table t{{"k", "dim"}, {}};
  for (const auto& p : h) {
    values.push_back({{"k", p.k}, {"dim", p.dim}});
    t.rows.push_back({std::to_string(p.k), std::to_string(p.dim)});
  }
  o.report = {{"values", values},
              {"degree", tail.degree},
              {"leading_difference", to_string(tail.leading_difference)},
              {"leading_coefficient", to_string(tail.leading_coefficient)},
              {"stable", tail.stable}};
  o.table = t;
  return o;
}

inline Outcome cmd_bkk_predict(const io::Json& in) {
  const auto supports = io::supports_from_json(io::require(in, "supports"));
  Outcome o;
  o.report = {{"predicted", to_string(bkk_number(supports))}};
  return o;
}

inline Outcome cmd_bkk_verify(const io::Json& in, const Command& cmd) {
  const auto supports = io::supports_from_json(io::require(in, "supports"));
  SolverConfig cfg;
  if (cmd.tol) cfg.residual_tol = *cmd.tol;
  const CountReport r = verify_bkk(supports, cmd.trials, cmd.seed, cfg);
  Outcome o;
  o.report = io::to_json(r);
  io::Json witness = io::Json::array();
  for (const auto& s : supports) witness.push_back(io::to_json(s));
  o.report["witness"] = witness;
  Table t{{"trial", "count", "completion_count"}, {}};
  for (std::size_t i = 0; i < std::max(r.trials.size(), r.completion_trials.size()); ++i) {
    t.rows.push_back({std::to_string(i), i < r.trials.size() ? std::to_string(r.trials[i]) : "",
                      i < r.completion_trials.size() ? std::to_string(r.completion_trials[i]) : ""});
  }
  o.table = t;
  if (r.inconclusive()) {
    o.code = inconclusive;
  } else {
    o.code = holds_code(r.agreed && r.completion_agreed);
  }
  return o;
}

inline Outcome cmd_steiner(const io::Json& in, const Command& cmd) {
  const ConvexPolygon p = ConvexPolygon::from_polytope(io::polytope_from_json(io::require(in, "polygon")));
  Outcome o;
  if (in.contains("direction")) {
    const RationalPoint u = io::rational_point_from_json(in.at("direction"), 2);
    const ConvexPolygon s = steiner_symmetrize(p, u);
    o.report = {{"input", io::to_json(p.to_polytope())},
                {"output", io::to_json(s.to_polytope())},
                {"area_in", to_string(p.area())},
                {"area_out", to_string(s.area())},
                {"area_preserved", p.area() == s.area()},
                {"mirror_symmetric", is_mirror_symmetric(s, u)}};
    o.code = holds_code(p.area() == s.area() && is_mirror_symmetric(s, u));
    return o;
  }
  const int rounds = in.contains("rounds") ? in.at("rounds").get<int>() : 50;
  const auto rows = iterate_symmetrize(p, rounds, cmd.seed);
  const double slack = cmd.tol.value_or(1e-9);
  io::Json trace = io::Json::array();
  Table t{{"round", "area", "perimeter", "hausdorff"}, {}};
  double prev = p.perimeter();
  bool monotone = true, exact_steps = true;
  for (const auto& r : rows) {
    monotone = monotone && r.perimeter <= prev + slack;
    exact_steps = exact_steps && r.step_preserved;
    prev = r.perimeter;
    trace.push_back({{"round", r.round},
                     {"direction", io::to_json(r.direction)},
                     {"area", to_string(r.area)},
                     {"step_area_preserved", r.step_preserved},
                     {"approximation_loss", io::format_double(r.approximation_loss.get_d())},
                     {"perimeter", io::format_double(r.perimeter)},
                     {"hausdorff", io::format_double(r.hausdorff)},
                     {"vertices", r.vertices}});
    t.rows.push_back({std::to_string(r.round), to_string(r.area), io::format_double(r.perimeter),
                      io::format_double(r.hausdorff)});
  }
  const double radius = std::sqrt(p.area().get_d() / std::numbers::pi);
  o.report = {{"initial_area", to_string(p.area())},
              {"initial_perimeter", io::format_double(p.perimeter())},
              {"disc_radius", io::format_double(radius)},
              {"trace", trace},
              {"perimeter_nonincreasing", monotone},
              {"steps_area_exact", exact_steps}};
  o.table = t;
  o.code = holds_code(monotone && exact_steps);
  return o;
}

inline Outcome cmd_profile(const io::Json& in) {
  const auto bodies = bodies_field(in);
  if (bodies.size() != 2) throw InputError("profile needs exactly two bodies");
  const int samples = in.contains("samples") ? in.at("samples").get<int>() : 10;
  const auto prof = section_profile(bodies[0], bodies[1], samples);
  const auto c = check_profile_concavity(bodies[0], bodies[1], prof);
  Outcome o;
  io::Json entries = io::Json::array();
  Table t{{"h", "volume"}, {}};
  for (const auto& e : prof) {
    entries.push_back({{"h", to_string(e.h)}, {"volume", to_string(e.volume)}});
    t.rows.push_back({to_string(e.h), to_string(e.volume)});
  }
  o.report = {{"profile", entries},
              {"triples", c.triples},
              {"violations", c.violations},
              {"endpoint_bm", c.endpoint_bm},
              {"holds", c.holds()},
              {"witness", io::bodies_json(bodies)}};
  if (c.first_violation >= 0) o.report["first_violation"] = c.first_violation;
  o.table = t;
  o.code = holds_code(c.holds());
  return o;
}

inline Outcome cmd_selftest(const Command& cmd) {
  int failures = 0;
  Outcome o;
  o.report = selftest::run(cmd.seed, failures);
  Table t{{"name", "expected", "actual", "pass"}, {}};
  for (const auto& c : o.report.at("cases")) {
    t.rows.push_back({c.at("name").get<std::string>(), c.at("expected").get<std::string>(),
                      c.at("actual").get<std::string>(), c.at("pass").get<bool>() ? "true" : "false"});
  }
  o.table = t;
  o.code = failures == 0 ? ok : violation;
  return o;
}

inline std::string read_input(const Command& cmd) {
  if (cmd.input_path.empty() || cmd.input_path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream f(cmd.input_path, std::ios::binary);
  if (!f) throw InputError("cannot read input file " + cmd.input_path);
  return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

}  // namespace detail

/// Executes one command. The report goes to cmd.output_path when set,
/// otherwise to `out`; diagnostics go to `err`.
inline int run(const Command& cmd, std::ostream& out, std::ostream& err) {
  Outcome o;
  std::string raw;
  try {
    if (std::find(command_names().begin(), command_names().end(), cmd.name) == command_names().end()) {
      throw InputError("unknown command \"" + cmd.name + "\"");
    }
    if (cmd.format != "json" && cmd.format != "csv") throw InputError("format must be json or csv");
    if (cmd.trials < 3 && cmd.name == "bkk-verify") throw InputError("--trials must be at least 3");
    if (cmd.kmax == 0) throw InputError("--kmax must be positive");
    io::Json in = io::Json::object();
    if (cmd.name != "selftest") {
      raw = detail::read_input(cmd);
      try {
        in = io::Json::parse(raw);
      } catch (const io::Json::exception& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
      }
    }
    if (cmd.name == "mixedvol") o = detail::cmd_mixedvol(in);
    else if (cmd.name == "af-check") o = detail::cmd_af(in);
    else if (cmd.name == "bm-check") o = detail::cmd_bm(in);
    else if (cmd.name == "isoperimetric") o = detail::cmd_isoperimetric(in);
    else if (cmd.name == "sumset") o = detail::cmd_sumset(in);
    else if (cmd.name == "density") o = detail::cmd_density(in, cmd);
    else if (cmd.name == "okounkov") o = detail::cmd_okounkov(in, cmd);
    else if (cmd.name == "hilbert") o = detail::cmd_hilbert(in, cmd);
    else if (cmd.name == "bkk-predict") o = detail::cmd_bkk_predict(in);
    else if (cmd.name == "bkk-verify") o = detail::cmd_bkk_verify(in, cmd);
    else if (cmd.name == "steiner") o = detail::cmd_steiner(in, cmd);
    else if (cmd.name == "profile") o = detail::cmd_profile(in);
    else o = detail::cmd_selftest(cmd);
  } catch (const InputError& e) {
    err << kToolName << ": input error: " << e.what() << '\n';
    return input_error;
  } catch (const io::Json::exception& e) {
    err << kToolName << ": input error: " << e.what() << '\n';
    return input_error;
  } catch (const InconclusiveError& e) {
    err << kToolName << ": inconclusive: " << e.what() << '\n';
    return inconclusive;
  } catch (const NumericError& e) {
    err << kToolName << ": inconclusive: " << e.what() << '\n';
    return inconclusive;
  }

  o.report["tool"] = kToolName;
  o.report["version"] = kVersion;
  o.report["command"] = cmd.name;
  o.report["seed"] = cmd.seed;
  o.report["input_hash"] = "fnv1a64:" + hex64(fnv1a64(raw));
  o.report["exit_code"] = o.code;

  std::string text;
  if (cmd.format == "csv") {
    text = detail::render_csv(o.table ? *o.table : detail::key_value_table(o.report));
  } else {
    text = o.report.dump(2) + "\n";
  }
  if (cmd.output_path.empty()) {
    out << text;
  } else {
    std::ofstream f(cmd.output_path, std::ios::binary);
    if (!f) {
      err << kToolName << ": cannot write " << cmd.output_path << '\n';
      return input_error;
    }
    f << text;
  }
  return o.code;
}

}  // namespace okounkov::cli
