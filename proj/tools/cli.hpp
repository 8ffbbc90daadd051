#pragma once

// refnc command-line frontend. run() is separate from main so tests can drive it.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "refnc/catalog.hpp"
#include "refnc/chartab.hpp"
#include "refnc/error.hpp"
#include "refnc/group.hpp"
#include "refnc/invariants.hpp"
#include "refnc/io.hpp"
#include "refnc/mckay.hpp"
#include "refnc/skewgroup.hpp"

namespace refnc::cli {

struct RunConfig {
  std::string subcommand;
  std::string catalog_name;
  std::string input_path;
  std::string graph_path;
  std::optional<int> cutoff;
  std::string format = "json";
  std::string out_path;
  unsigned seed = 1;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline int threads_from_env() {
  const char* v = std::getenv("REFNC_THREADS");
  if (!v || !*v) return 1;
  char* end = nullptr;
  const long n = std::strtol(v, &end, 10);
  if (*end != '\0' || n < 1) throw UsageError("REFNC_THREADS must be a positive integer");
  return static_cast<int>(n);
}

inline MatGroup load_group(const RunConfig& c) {
  const bool cat = !c.catalog_name.empty();
  const bool in = !c.input_path.empty();
  if (cat == in) throw UsageError("exactly one of --catalog or --input is required");
  CatalogGroup g = cat ? catalog(c.catalog_name) : group_from_json(read_json_file(c.input_path));
  return close_group(g.generators, kDefaultMaxOrder, g.name);
}

inline bool reflection_group(const MatGroup& g) { return is_reflection_group(g, pseudo_reflections(g)); }

inline bool true_reflection_group(const MatGroup& g) {
  const auto r = pseudo_reflections(g);
  return r.all_order_two() && is_true_reflection_group(g, r);
}

inline int default_cutoff(const MatGroup& g) {
  if (!reflection_group(g)) return 12;
  int s = 0;
  for (int d : invariant_degrees(g)) s += d;
  return 2 * s;
}

inline Json group_summary(const MatGroup& g) {
  const auto refl = pseudo_reflections(g);
  const auto sl = sl_subgroup(g);
  Json j;
  j["name"] = g.name;
  j["dimension"] = g.dim;
  j["order"] = g.size();
  j["exponent"] = g.exponent;
  j["classes"] = g.class_count();
  j["reflections"] = refl.reflection_count();
  j["mirrors"] = refl.mirrors.size();
  j["reflection_group"] = is_reflection_group(g, refl);
  j["special_subgroup_order"] = sl.group.size();
  j["quotient_order"] = sl.quotient_order;
  j["generators"] = group_to_json(g.name, g.dim, g.generators)["generators"];
  return j;
}

inline Json discriminant_json(const MatGroup& g) {
  const auto f = basic_invariants(g);
  const auto d = arrangement_and_discriminant(g, f);
  Json j;
  Json vars = Json::array();
  for (std::size_t i = 0; i < f.polys.size(); ++i) vars.push_back("f" + std::to_string(i + 1) + " = " + f.polys[i].str());
  j["invariants"] = vars;
  j["z"] = d.z.str();
  j["J"] = d.J.str();
  j["delta_x"] = d.delta_x.str();
  j["delta_f"] = d.delta_f.str("f");
  j["units"] = {{"J", d.unit_J.str()}, {"delta", d.unit_delta.str()}};
  j["true_reflection"] = d.true_reflection;
  return j;
}

inline Json quiver_json(const Quiver& q) {
  Json j;
  j["vertices"] = Json::array();
  for (const auto& v : q.vertices) j["vertices"].push_back({{"label", v.label}, {"dim", v.dim}});
  j["arrows"] = q.arrows;
  j["trivial"] = q.trivial_index;
  return j;
}

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Runs one property; exceptions count as failures.
inline void run_check(std::vector<Check>& out, const std::string& name, const std::function<bool()>& f) {
  Check c{name, false, ""};
  try {
    c.pass = f();
  } catch (const std::exception& e) {
    c.detail = e.what();
  }
  out.push_back(std::move(c));
}

inline std::vector<Check> verify_group(const MatGroup& g, unsigned seed, std::optional<int> cutoff_flag) {
  std::vector<Check> out;
  const std::size_t n = g.size();
  run_check(out, "group axioms", [&] {
    for (std::size_t a = 0; a < n; ++a) {
      if (g.mult[0][a] != static_cast<int>(a) || g.mult[a][0] != static_cast<int>(a)) return false;
      if (g.mult[a][static_cast<std::size_t>(g.inverse[a])] != 0) return false;
    }
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int k = 0; k < 200; ++k) {
      const std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
      if (g.elements[static_cast<std::size_t>(g.mult[a][b])] != g.elements[a] * g.elements[b]) return false;
      const auto ab_c = g.mult[static_cast<std::size_t>(g.mult[a][b])][c];
      const auto a_bc = g.mult[a][static_cast<std::size_t>(g.mult[b][c])];
      if (ab_c != a_bc) return false;
    }
    return true;
  });
  run_check(out, "class sizes sum to |G|", [&] {
    long s = 0;
    for (std::size_t c = 0; c < g.class_count(); ++c) s += g.class_size(c);
    return s == static_cast<long>(n);
  });
  std::optional<CharTable> table;
  run_check(out, "character table orthogonality", [&] {
    table = character_table(g);
    detail::verify_table(*table, g);
    return true;
  });
  run_check(out, "sum of squared dimensions is |G|", [&] {
    if (!table) return false;
    long s = 0;
    for (long d : table->dims) s += d * d;
    return s == static_cast<long>(n);
  });
  run_check(out, "regular character decomposes by dimension", [&] {
    return table && decompose(regular_character(g), *table, g) == table->dims;
  });
  run_check(out, "Molien series matches invariant subspace dimensions", [&] {
    const int c = 4;
    const auto m = molien(g, std::nullopt, c);
    for (int d = 0; d <= c; ++d) {
      if (m[d] != static_cast<std::int64_t>(invariant_subspace_basis(g, d).size())) return false;
    }
    return true;
  });
  run_check(out, "isotypic series add up to the polynomial ring", [&] {
    if (!table) return false;
    const int c = 10;
    GradedSeries total(c);
    for (std::size_t i = 0; i < table->size(); ++i) total += table->dims[i] * molien(g, table->rows[i], c);
    return total == GradedSeries::polynomial_ring(g.dim, c);
  });
  const bool refl = reflection_group(g);
  if (refl) {
    std::optional<BasicInvariants> f;
    run_check(out, "degree product is |G| and degree sum counts reflections", [&] {
      const auto deg = invariant_degrees(g);
      long prod = 1, sum = 0;
      for (int d : deg) {
        prod *= d;
        sum += d - 1;
      }
      return prod == static_cast<long>(n) && sum == static_cast<long>(pseudo_reflections(g).reflection_count());
    });
    run_check(out, "freeness quotient is a nonnegative polynomial summing to |G|", [&] {
      coexponent_polynomial(g.dim, invariant_degrees(g), static_cast<long>(n));
      return true;
    });
    run_check(out, "basic invariants are invariant with nonzero Jacobian", [&] {
      f = basic_invariants(g);
      for (const auto& p : f->polys) {
        if (!is_invariant(p, g)) return false;
      }
      return !jacobian_det(f->polys).is_zero();
    });
    run_check(out, "Jacobian is anti-invariant", [&] {
      if (!f) return false;
      const MPoly j = jacobian_det(f->polys);
      for (const auto& m : g.generators) {
        if (act(m, j) != j * determinant(m).inverse()) return false;
      }
      return true;
    });
    run_check(out, "discriminant is invariant and rewrites in the basic invariants", [&] {
      if (!f) return false;
      const auto d = arrangement_and_discriminant(g, *f);
      if (!is_invariant(d.delta_x, g)) return false;
      if (d.J * d.z != d.delta_x * d.unit_delta) return false;
      return d.delta_f.substitute(f->polys) == d.delta_x;
    });
    if (true_reflection_group(g) && table) {
      run_check(out, "arrangement components add up and the det component vanishes", [&] {
        const auto comps = arrangement_module_series(g, *table, 12);
        return table->det_index >= 0 && comps[static_cast<std::size_t>(table->det_index)].series.is_zero();
      });
    }
  }
  if (g.dim == 2 && g.in_special_linear() && n > 1) {
    run_check(out, "McKay correspondence: fundamental cycle equals dimensions", [&] {
      correspondence_report(g, 12);
      return true;
    });
  }
  const int corner_cut = cutoff_flag.value_or(n <= 8 ? 8 : 4);
  run_check(out, "idempotent e satisfies e^2 = e", [&] {
    const auto e = trivial_idempotent(g);
    return skew_mul(g, e, e) == e;
  });
  run_check(out, "skew multiplication is associative", [&] {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> elem(0, static_cast<int>(n) - 1);
    std::uniform_int_distribution<int> coef(-3, 3);
    auto random = [&] {
      SkewElement a{g.dim, {}};
      for (int k = 0; k < 2; ++k) {
        MPoly p(g.dim);
        for (int v = 0; v < g.dim; ++v) p += MPoly::variable(g.dim, v) * CycNum(static_cast<long>(coef(rng)));
        a.add(elem(rng), p + MPoly::constant(g.dim, CycNum(static_cast<long>(coef(rng)))));
      }
      return a;
    };
    for (int k = 0; k < 5; ++k) {
      const auto a = random(), b = random(), c = random();
      if (skew_mul(g, skew_mul(g, a, b), c) != skew_mul(g, a, skew_mul(g, b, c))) return false;
    }
    return true;
  });
  run_check(out, "corner e A e has the invariant series", [&] {
    return corner_dims(g, trivial_idempotent(g), corner_cut) == molien(g, std::nullopt, corner_cut);
  });
  return out;
}

inline void emit(const RunConfig& c, std::ostream& out, const std::string& text) {
  if (c.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out_path);
  if (!f) throw InvalidArgument("cannot write " + c.out_path);
  f << text;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline std::string text_of(const Json& j) {
  std::ostringstream os;
  for (const auto& [k, v] : j.items()) os << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  return os.str();
}

/// Returns the process exit code; 0 success, 1 computation error or failed verify, 2 bad usage.
inline int execute(const RunConfig& c, std::ostream& out) {
  threads_from_env();
  const std::string& f = c.format;
  if (f != "json" && f != "text" && f != "dot") throw UsageError("--format must be json, text or dot");
  if (f == "dot" && c.subcommand != "mckay") throw UsageError("--format dot is only available for mckay");
  if (c.cutoff && *c.cutoff < 0) throw UsageError("--cutoff must be nonnegative");
  auto finish = [&](const Json& j) {
    emit(c, out, f == "text" ? text_of(j) : dump(j));
    return 0;
  };

  if (c.subcommand == "fundcycle") {
    DualGraph graph;
    if (!c.graph_path.empty()) {
      if (!c.catalog_name.empty() || !c.input_path.empty()) throw UsageError("--graph excludes --catalog and --input");
      graph = graph_from_json(read_json_file(c.graph_path));
    } else {
      const MatGroup g = load_group(c);
      graph = dual_graph_from_quiver(mckay_quiver(g, character_table(g)));
    }
    Json j;
    j["graph"] = graph_to_json(graph);
    j["fundamental_cycle"] = fundamental_cycle(graph);
    return finish(j);
  }

  const MatGroup g = load_group(c);
  if (c.subcommand == "group") return finish(group_summary(g));
  if (c.subcommand == "chartab") return finish(chartab_to_json(g, character_table(g)));
  if (c.subcommand == "invariants") {
    const auto b = basic_invariants(g);
    Json j;
    j["degrees"] = b.degrees;
    j["polys"] = poly_list(b.polys);
    j["power_sums"] = b.power_sums;
    j["coexponents"] = coexponent_polynomial(g.dim, b.degrees, static_cast<long>(g.size()));
    return finish(j);
  }
  if (c.subcommand == "discriminant") return finish(discriminant_json(g));
  if (c.subcommand == "molien") {
    const int cut = c.cutoff.value_or(default_cutoff(g));
    const auto t = character_table(g);
    Json j;
    j["cutoff"] = cut;
    j["series"] = series_to_json(molien(g, std::nullopt, cut));
    j["isotypic"] = Json::array();
    for (std::size_t i = 0; i < t.size(); ++i) {
      j["isotypic"].push_back({{"irrep", i}, {"dim", t.dims[i]}, {"series", series_to_json(molien(g, t.rows[i], cut))}});
    }
    return finish(j);
  }
  if (c.subcommand == "mckay") {
    const auto t = character_table(g);
    const Quiver q = mckay_quiver(g, t);
    if (f == "dot") {
      emit(c, out, quiver_to_dot(q));
      return 0;
    }
    Json j = quiver_json(q);
    if (g.dim == 2 && g.in_special_linear() && g.size() > 1) {
      const auto rep = correspondence_report(g, c.cutoff.value_or(12));
      j["ade"] = rep.ade.name();
      j["klein_equation"] = rep.ade.klein_equation;
      j["dual_graph"] = graph_to_json(rep.graph);
      j["fundamental_cycle"] = rep.cycle;
    } else {
      j["ade"] = nullptr;
    }
    return finish(j);
  }
  if (c.subcommand == "ncr") {
    const int cut = c.cutoff.value_or(default_cutoff(g));
    const auto e = trivial_idempotent(g);
    const auto hs_a = skew_ring_series(g, cut);
    const auto hs_aea = ideal_graded_dims(g, e, cut);
    Json j;
    j["cutoff"] = cut;
    j["hs_A"] = series_to_json(hs_a);
    j["hs_AeA"] = series_to_json(hs_aea);
    j["hs_Abar"] = series_to_json(hs_a - hs_aea);
    j["hs_corner"] = series_to_json(corner_dims(g, e, cut));
    if (true_reflection_group(g)) {
      const auto t = character_table(g);
      j["arrangement_components"] = Json::array();
      for (const auto& a : arrangement_module_series(g, t, cut)) {
        j["arrangement_components"].push_back({{"irrep", a.irrep}, {"dim", a.dim}, {"series", series_to_json(a.series)}});
      }
    } else {
      j["arrangement_components"] = nullptr;
    }
    // the cusp check concerns the reflection representation of S3 only
    if (g.dim == 2 && g.size() == 6 && true_reflection_group(g)) {
      const auto r = cusp_decomposition_check(cut);
      j["cusp_check"] = {{"holds", r.holds},
                         {"shift", r.shift},
                         {"unique", r.unique},
                         {"working_shifts", r.working_shifts},
                         {"multiplicity", r.multiplicity},
                         {"canonical_dim", r.canonical_dim},
                         {"canonical_irreducible", r.canonical_irreducible},
                         {"hs_S_mod_J", series_to_json(r.hs_s_mod_j)},
                         {"hs_T_mod_delta", series_to_json(r.hs_t_mod_delta)},
                         {"hs_m", series_to_json(r.hs_m)}};
    } else {
      j["cusp_check"] = nullptr;
    }
    return finish(j);
  }
  if (c.subcommand == "verify") {
    const auto checks = verify_group(g, c.seed, c.cutoff);
    bool all = true;
    for (const auto& k : checks) all = all && k.pass;
    if (f == "json") {
      Json j;
      j["group"] = g.name;
      j["checks"] = Json::array();
      for (const auto& k : checks) j["checks"].push_back({{"name", k.name}, {"pass", k.pass}, {"detail", k.detail}});
      j["all_pass"] = all;
      emit(c, out, dump(j));
    } else {
      std::ostringstream os;
      for (const auto& k : checks) os << (k.pass ? "PASS  " : "FAIL  ") << k.name << (k.detail.empty() ? "" : ": " + k.detail) << "\n";
      os << (all ? "all checks passed" : "some checks failed") << "\n";
      emit(c, out, os.str());
    }
    return all ? 0 : 1;
  }
  throw UsageError("unknown subcommand " + c.subcommand);
}

inline const char* error_kind(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  if (dynamic_cast<const InvalidArgument*>(&e)) return "InvalidArgument";
  if (dynamic_cast<const NonFiniteError*>(&e)) return "NonFiniteError";
  if (dynamic_cast<const VerificationError*>(&e)) return "VerificationError";
  return "Error";
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"refnc: exact invariant theory and McKay data for finite complex reflection groups", "refnc"};
  RunConfig c;
  app.require_subcommand(1, 1);
  app.add_option("--catalog", c.catalog_name, "catalog group, e.g. \"G(2,1,3)\", \"mu2^n:3\", \"binary-dihedral:2\"");
  app.add_option("--input", c.input_path, "group JSON file");
  app.add_option("--cutoff", c.cutoff, "series truncation degree");
  app.add_option("--format", c.format, "json | text | dot");
  app.add_option("--out", c.out_path, "write output to this file");
  app.add_option("--seed", c.seed, "seed for randomized checks");
  const std::vector<std::pair<const char*, const char*>> subs = {
      {"group", "order, exponent, classes, mirrors, |G cap SL|"},
      {"chartab", "character table"},
      {"invariants", "degrees and basic invariants"},
      {"discriminant", "arrangement, Jacobian and discriminant"},
      {"molien", "Molien series, plain and isotypic"},
      {"mckay", "McKay quiver, ADE type, fundamental cycle"},
      {"fundcycle", "fundamental cycle of a dual graph"},
      {"ncr", "graded dimensions of A, AeA, A/AeA and the corner"},
      {"verify", "run every property check for the group"},
  };
  for (const auto& [name, help] : subs) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    if (std::string(name) == "fundcycle") s->add_option("--graph", c.graph_path, "dual graph JSON file");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return 2;
  }
  c.subcommand = app.get_subcommands().front()->get_name();
  try {
    return execute(c, out);
  } catch (const UsageError& e) {
    err << e.what() << "\n" << app.help();
    return 2;
  } catch (const std::exception& e) {
    Json j;
    j["error"] = error_kind(e);
    j["message"] = e.what();
    j["subcommand"] = c.subcommand;
    err << j.dump() << "\n";
    return 1;
  }
}

}  // namespace refnc::cli
