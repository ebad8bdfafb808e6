// corado — exact matroid computations on the command line: duals, unions,
// intersections, Rado/coRado constructions, Bergman fans, Chow-ring
// monomials, gammoid recognition, and exhaustive verification sweeps.
//
// Exit codes: 0 success, 1 domain error (including a failed --check or a
// sweep counterexample), 2 usage error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "corado/corado.hpp"

namespace {

using namespace std::chrono;
using corado::bergman_fan;
using corado::bipartite_graph;
using corado::error;
using corado::ground_set;
using corado::mask_t;
using corado::matroid;
using corado::ordered_json;
using corado::set_system;
using corado::sweep_report;

int g_exit = 0;

double ms_since(steady_clock::time_point t0) {
  return duration<double, std::milli>(steady_clock::now() - t0).count();
}

std::string read_spec(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) corado::fail(corado::errc::validation_failed, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct emitter {
  bool json = false;
  steady_clock::time_point start = steady_clock::now();
  double parse_ms = 0;

  void parsed() { parse_ms = ms_since(start); }

  void emit(const std::string& text, ordered_json result,
            ordered_json witnesses = ordered_json()) const {
    if (!json) {
      std::cout << text;
      return;
    }
    ordered_json envelope;
    envelope["result"] = std::move(result);
    if (!witnesses.is_null()) envelope["witnesses"] = std::move(witnesses);
    envelope["timings"] = {{"parse_ms", parse_ms},
                           {"compute_ms", ms_since(start) - parse_ms}};
    std::cout << envelope.dump() << "\n";
  }
};

std::string matroid_text(const matroid& m) {
  std::ostringstream out;
  out << "ground: " << m.ground().set_string(m.ground().full_mask()) << "\n";
  out << "rank: " << m.rank() << "\n";
  out << "bases (" << m.bases().size() << "):";
  for (mask_t b : m.bases()) out << " " << m.ground().set_string(b);
  out << "\n";
  return out.str();
}

std::string family_text(const ground_set& g, const std::vector<mask_t>& family) {
  std::ostringstream out;
  for (mask_t s : family) out << " " << g.set_string(s);
  return out.str();
}

std::string fan_text(const bergman_fan& f) {
  std::ostringstream out;
  out << "ground: " << f.ground().set_string(f.ground().full_mask()) << "\n";
  out << "dimension: " << f.dimension() << "\n";
  out << "cones: " << f.cones().size() << "\n";
  out << "rays (" << f.rays().size() << "):";
  for (const auto& [flat, vec] : f.rays()) out << " " << f.ground().set_string(flat);
  out << "\n";
  auto maximal = f.maximal_cones();
  out << "maximal cones (" << maximal.size() << "):";
  for (const auto& cone : maximal) {
    out << " (";
    for (std::size_t i = 0; i < cone.size(); ++i) {
      if (i) out << " < ";
      out << f.ground().set_string(cone[i]);
    }
    out << ")";
  }
  out << "\n";
  return out.str();
}

std::string monomial_text(const matroid& m, const corado::simplicial_monomial& mono) {
  if (mono.flats().empty()) return "1";
  std::ostringstream out;
  for (std::size_t i = 0; i < mono.flats().size(); ++i) {
    if (i) out << " ";
    out << "h_" << m.ground().set_string(mono.flats()[i]) << "^" << mono.exponents()[i];
  }
  return out.str();
}

void emit_matroid(const emitter& e, const matroid& m, const std::string& extra_text = "",
                  ordered_json witnesses = ordered_json()) {
  e.emit(matroid_text(m) + extra_text, corado::matroid_to_json(m), std::move(witnesses));
}

void emit_sweep(const emitter& e, const sweep_report& r) {
  std::ostringstream text;
  ordered_json result;
  result["instances"] = r.instances;
  result["ok"] = r.ok;
  if (r.ok) {
    text << "checked " << r.instances << " instances: all agree\n";
  } else {
    text << "counterexample after " << r.instances << " instances: " << r.counterexample << "\n";
    result["counterexample"] = r.counterexample;
    g_exit = 1;
  }
  e.emit(text.str(), std::move(result));
}

void guard_sweep_size(int requested, bool force) {
  if (requested > 6 && !force)
    corado::fail(corado::errc::search_too_large,
                 "sweeps above 6 elements need --force (requested " +
                     std::to_string(requested) + ")");
}

mask_t parse_subset_arg(const std::string& text, const ground_set& g, const char* what) {
  return corado::io_detail::subset_of_ground(corado::io_detail::parse_text(text), g, what);
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* cap = std::getenv("CORADO_MAX_GROUND")) {
    char* end = nullptr;
    long v = std::strtol(cap, &end, 10);
    if (end == cap || *end != '\0' || v < 1 || v > corado::ground_set::hard_cap) {
      std::cerr << "CORADO_MAX_GROUND must be an integer between 1 and "
                << corado::ground_set::hard_cap << "\n";
      return 2;
    }
    corado::ground_set::set_max_size(static_cast<int>(v));
  }

  CLI::App app{"exact matroid computations: Rado/coRado constructions, Bergman fans,\n"
               "Chow-ring simplicial monomials, and exhaustive verification sweeps"};
  app.require_subcommand(1);
  bool json_out = false;
  app.add_flag("--json", json_out, "machine-readable output {result, witnesses?, timings}");

  auto add_sub = [&](const std::string& name, const std::string& desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->fallthrough();
    return sub;
  };

  // ---- show ----------------------------------------------------------
  static std::string show_file;
  CLI::App* show = add_sub("show", "print bases, rank, flats, circuits, loops");
  show->add_option("matroid", show_file, "matroid spec file or '-'")->required();
  show->callback([&] {
    emitter e{json_out};
    matroid m = corado::parse_matroid(read_spec(show_file));
    e.parsed();
    std::ostringstream text;
    text << matroid_text(m);
    text << "flats (" << m.flats().size() << "):" << family_text(m.ground(), m.flats()) << "\n";
    text << "circuits (" << m.circuits().size() << "):" << family_text(m.ground(), m.circuits())
         << "\n";
    text << "loops: " << m.ground().set_string(m.loops()) << "\n";
    ordered_json result;
    result["ground"] = corado::subset_to_json(m.ground(), m.ground().full_mask());
    result["rank"] = m.rank();
    result["bases"] = corado::matroid_to_json(m)["bases"];
    result["flats"] = ordered_json::array();
    for (mask_t f : m.flats()) result["flats"].push_back(corado::subset_to_json(m.ground(), f));
    result["circuits"] = ordered_json::array();
    for (mask_t c : m.circuits())
      result["circuits"].push_back(corado::subset_to_json(m.ground(), c));
    result["loops"] = corado::subset_to_json(m.ground(), m.loops());
    e.emit(text.str(), std::move(result));
  });

  // ---- dual ----------------------------------------------------------
  static std::string dual_file;
  CLI::App* dual = add_sub("dual", "dual matroid");
  dual->add_option("matroid", dual_file, "matroid spec file or '-'")->required();
  dual->callback([&] {
    emitter e{json_out};
    matroid m = corado::parse_matroid(read_spec(dual_file));
    e.parsed();
    emit_matroid(e, m.dual());
  });

  // ---- union ---------------------------------------------------------
  static std::vector<std::string> union_files;
  CLI::App* uni = add_sub("union", "matroid union");
  uni->add_option("matroids", union_files, "two matroid spec files")->required()->expected(2);
  uni->callback([&] {
    emitter e{json_out};
    matroid a = corado::parse_matroid(read_spec(union_files[0]));
    matroid b = corado::parse_matroid(read_spec(union_files[1]));
    e.parsed();
    emit_matroid(e, corado::matroid_union(a, b));
  });

  // ---- intersect -----------------------------------------------------
  static std::vector<std::string> meet_files;
  CLI::App* meet = add_sub("intersect", "matroid intersection (left fold over 2+ inputs)");
  meet->add_option("matroids", meet_files, "matroid spec files")->required()->expected(-2);
  meet->callback([&] {
    if (meet_files.size() < 2) throw CLI::ValidationError("intersect needs at least two matroids");
    emitter e{json_out};
    matroid acc = corado::parse_matroid(read_spec(meet_files[0]));
    std::vector<matroid> rest;
    for (std::size_t i = 1; i < meet_files.size(); ++i)
      rest.push_back(corado::parse_matroid(read_spec(meet_files[i])));
    e.parsed();
    for (const matroid& m : rest) acc = corado::matroid_intersection(acc, m);
    emit_matroid(e, acc);
  });

  // ---- truncate ------------------------------------------------------
  static std::string trunc_file, trunc_flat;
  CLI::App* trunc = add_sub("truncate", "principal truncation at a set");
  trunc->add_option("matroid", trunc_file, "matroid spec file or '-'")->required();
  trunc->add_option("--flat", trunc_flat, "subset as a JSON label array")->required();
  trunc->callback([&] {
    emitter e{json_out};
    matroid m = corado::parse_matroid(read_spec(trunc_file));
    mask_t f = parse_subset_arg(trunc_flat, m.ground(), "--flat");
    e.parsed();
    emit_matroid(e, corado::principal_truncation(m, f));
  });

  // ---- corado --------------------------------------------------------
  static std::string cor_file, cor_system;
  static bool cor_via_meet = false, cor_check = false;
  CLI::App* cor = add_sub("corado", "intersection with corank-1 matroids via the Rado dual");
  cor->add_option("matroid", cor_file, "matroid spec file or '-'")->required();
  cor->add_option("--system", cor_system, "set system JSON (members over the matroid's ground)")
      ->required();
  cor->add_flag("--via-intersection", cor_via_meet, "use the iterated-intersection route");
  cor->add_flag("--check", cor_check, "run both routes and compare");
  cor->callback([&] {
    emitter e{json_out};
    matroid m = corado::parse_matroid(read_spec(cor_file));
    set_system a = corado::parse_system(cor_system, m.ground());
    e.parsed();
    auto fold = [&] {
      matroid acc = m;
      for (mask_t s : a.members())
        acc = corado::matroid_intersection(acc, matroid::hyperplane(m.ground(), s));
      return acc;
    };
    if (cor_check) {
      matroid via_rado = corado::corado(m, a);
      matroid via_meet = fold();
      if (via_rado != via_meet) {
        std::cout << "routes disagree\nrado route:\n"
                  << matroid_text(via_rado) << "intersection route:\n"
                  << matroid_text(via_meet);
        g_exit = 1;
        return;
      }
      ordered_json result;
      result["matroid"] = corado::matroid_to_json(via_rado);
      result["routes_agree"] = true;
      e.emit(matroid_text(via_rado) + "routes agree\n", std::move(result));
      return;
    }
    emit_matroid(e, cor_via_meet ? fold() : corado::corado(m, a));
  });

  // ---- rado ----------------------------------------------------------
  static std::string rado_graph_file, rado_matroid_file;
  CLI::App* rado = add_sub("rado", "Rado matroid of a bipartite graph and a right-part matroid");
  rado->add_option("graph", rado_graph_file, "graph spec file or '-'")->required();
  rado->add_option("matroid", rado_matroid_file, "matroid spec file (on the right part)")
      ->required();
  rado->callback([&] {
    emitter e{json_out};
    bipartite_graph h = corado::parse_graph(read_spec(rado_graph_file));
    matroid n = corado::parse_matroid(read_spec(rado_matroid_file));
    e.parsed();
    matroid r = corado::rado_matroid(h, n);
    ordered_json witnesses;
    std::string extra;
    if (!r.bases().empty() && r.rank() > 0) {
      mask_t b = r.bases().front();
      if (auto match = corado::find_left_matching(h, n, b)) {
        std::ostringstream w;
        w << "matching for basis " << h.left().set_string(b) << ":";
        witnesses = ordered_json::array();
        for (auto [l, rt] : *match) {
          w << " " << h.left().label(l) << "->" << h.right().label(rt);
          witnesses.push_back({{"left", h.left().label(l)}, {"right", h.right().label(rt)}});
        }
        extra = w.str() + "\n";
      }
    }
    emit_matroid(e, r, extra, std::move(witnesses));
  });

  // ---- transversal ---------------------------------------------------
  static std::string tv_system;
  CLI::App* tv = add_sub("transversal", "transversal matroid of a standalone system (on A-labels)");
  tv->add_option("system", tv_system, "system spec file or '-' (needs \"ground\")")->required();
  tv->callback([&] {
    emitter e{json_out};
    set_system x = corado::parse_standalone_system(read_spec(tv_system));
    e.parsed();
    emit_matroid(e, corado::transversal_matroid(x));
  });

  // ---- bergman -------------------------------------------------------
  static std::string berg_file;
  CLI::App* berg = add_sub("bergman", "Bergman fan of a loopless matroid");
  berg->add_option("matroid", berg_file, "matroid spec file or '-'")->required();
  berg->callback([&] {
    emitter e{json_out};
    matroid m = corado::parse_matroid(read_spec(berg_file));
    e.parsed();
    bergman_fan f = bergman_fan::of(m);
    e.emit(fan_text(f), corado::fan_to_json(f));
  });

  // ---- stable-intersect ----------------------------------------------
  static std::string si_file, si_system;
  CLI::App* si = add_sub("stable-intersect", "stable intersection with tropical hyperplanes");
  si->add_option("matroid", si_file, "matroid spec file or '-'")->required();
  si->add_option("--system", si_system, "set system JSON")->required();
  si->callback([&] {
    emitter e{json_out};
    matroid m = corado::parse_matroid(read_spec(si_file));
    set_system a = corado::parse_system(si_system, m.ground());
    e.parsed();
    auto result = corado::stable_intersection_with_hyperplanes(m, a);
    if (std::holds_alternative<corado::vanished_t>(result)) {
      e.emit("vanished\n", ordered_json{{"vanished", true}});
    } else {
      const bergman_fan& f = std::get<bergman_fan>(result);
      e.emit(fan_text(f), corado::fan_to_json(f));
    }
  });

  // ---- chow ----------------------------------------------------------
  CLI::App* chow = add_sub("chow", "simplicial-generator layer of the Chow ring");
  chow->require_subcommand(1);

  static std::string cp_file, cp_system;
  CLI::App* cp = chow->add_subcommand("product", "product of generators as a Bergman class");
  cp->fallthrough();
  cp->add_option("matroid", cp_file, "matroid spec file or '-'")->required();
  cp->add_option("--system", cp_system, "set system JSON")->required();
  cp->callback([&] {
    emitter e{json_out};
    matroid m = corado::parse_matroid(read_spec(cp_file));
    set_system a = corado::parse_system(cp_system, m.ground());
    e.parsed();
    corado::bergman_class c = corado::product_class(m, a);
    if (c.is_zero()) {
      e.emit("zero\n", ordered_json{{"zero", true}});
    } else {
      ordered_json result;
      result["zero"] = false;
      result["matroid"] = corado::matroid_to_json(c.value());
      e.emit(matroid_text(c.value()), std::move(result));
    }
  });

  static std::string cb_file;
  static int cb_degree = 0;
  CLI::App* cb = chow->add_subcommand("basis", "degree-c monomials in the simplicial generators");
  cb->fallthrough();
  cb->add_option("matroid", cb_file, "matroid spec file or '-'")->required();
  cb->add_option("--degree", cb_degree, "total degree c")->required();
  cb->callback([&] {
    emitter e{json_out};
    matroid m = corado::parse_matroid(read_spec(cb_file));
    e.parsed();
    auto basis = corado::monomial_basis(m, cb_degree);
    std::ostringstream text;
    text << "monomials (" << basis.size() << "):\n";
    ordered_json result = ordered_json::array();
    for (const auto& mono : basis) {
      text << "  " << monomial_text(m, mono) << "\n";
      result.push_back(corado::monomial_to_json(m, mono));
    }
    e.emit(text.str(), std::move(result));
  });

  static std::string cq_file, cq_monomial;
  CLI::App* cq = chow->add_subcommand("quotient", "relative nested quotient of a monomial");
  cq->fallthrough();
  cq->add_option("matroid", cq_file, "matroid spec file or '-'")->required();
  cq->add_option("--monomial", cq_monomial, "monomial JSON {flats, exponents}")->required();
  cq->callback([&] {
    emitter e{json_out};
    matroid m = corado::parse_matroid(read_spec(cq_file));
    corado::simplicial_monomial mono =
        corado::monomial_from_json(corado::io_detail::parse_text(cq_monomial), m);
    e.parsed();
    emit_matroid(e, corado::relative_nested_quotient(m, mono));
  });

  // ---- dhr -----------------------------------------------------------
  static std::string dhr_file, dhr_system;
  CLI::App* dhr = add_sub("dhr", "Dragon-Hall-Rado condition");
  dhr->add_option("matroid", dhr_file, "matroid spec file or '-'")->required();
  dhr->add_option("--system", dhr_system, "set system JSON")->required();
  dhr->callback([&] {
    emitter e{json_out};
    matroid m = corado::parse_matroid(read_spec(dhr_file));
    set_system a = corado::parse_system(dhr_system, m.ground());
    e.parsed();
    auto [ok, witness] = corado::dhr_check(m, a);
    if (ok) {
      e.emit("true\n", ordered_json(true));
    } else {
      std::ostringstream text;
      text << "false, witness J={";
      ordered_json j = ordered_json::array();
      bool first = true;
      for (int pos : corado::bits_of(*witness)) {
        if (!first) text << ",";
        text << (pos + 1);
        j.push_back(pos + 1);
        first = false;
      }
      text << "}\n";
      e.emit(text.str(), ordered_json(false), ordered_json{{"J", j}});
    }
  });

  // ---- degree --------------------------------------------------------
  static std::string deg_file, deg_system;
  CLI::App* deg = add_sub("degree", "degree (0 or 1) of a top product of generators");
  deg->add_option("matroid", deg_file, "matroid spec file or '-'")->required();
  deg->add_option("--system", deg_system, "set system JSON with rank−1 members")->required();
  deg->callback([&] {
    emitter e{json_out};
    matroid m = corado::parse_matroid(read_spec(deg_file));
    set_system a = corado::parse_system(deg_system, m.ground());
    e.parsed();
    int d = corado::degree(m, a);
    e.emit(std::to_string(d) + "\n", ordered_json(d));
  });

  // ---- gammoid -------------------------------------------------------
  static std::string gam_file;
  static bool gam_force = false;
  CLI::App* gam = add_sub("gammoid", "strict-gammoid recognition (two agreeing routes)");
  gam->add_option("matroid", gam_file, "matroid spec file or '-'")->required();
  gam->add_flag("--force", gam_force, "allow searches above 8 elements");
  gam->callback([&] {
    emitter e{json_out};
    matroid m = corado::parse_matroid(read_spec(gam_file));
    e.parsed();
    auto [ok, witness] = corado::is_strict_gammoid(m, gam_force);
    if (ok && witness) {
      std::string text = "true\nhyperplane system: " +
                         corado::detail::describe_system(m.ground(), witness->members()) + "\n";
      e.emit(text, ordered_json(true), corado::system_to_json(*witness));
    } else {
      e.emit(ok ? "true\n" : "false\n", ordered_json(ok));
    }
  });

  // ---- transversal-check ----------------------------------------------
  static std::string tc_file;
  static bool tc_force = false;
  CLI::App* tc = add_sub("transversal-check", "is the matroid transversal on its ground set?");
  tc->add_option("matroid", tc_file, "matroid spec file or '-'")->required();
  tc->add_flag("--force", tc_force, "allow searches above 8 elements");
  tc->callback([&] {
    emitter e{json_out};
    matroid m = corado::parse_matroid(read_spec(tc_file));
    e.parsed();
    auto [ok, witness] = corado::is_transversal(m, tc_force);
    if (ok && witness) {
      std::string text = "true\npresentation: " +
                         corado::detail::describe_system(m.ground(), witness->members()) + "\n";
      e.emit(text, ordered_json(true), corado::system_to_json(*witness));
    } else {
      e.emit(ok ? "true\n" : "false\n", ordered_json(ok));
    }
  });

  // ---- verify ----------------------------------------------------------
  CLI::App* verify = add_sub("verify", "exhaustive verification sweeps");
  verify->require_subcommand(1);

  static int vt_elements = 4, vt_sets = 2;
  static bool vt_force = false, vt_iso = false;
  CLI::App* vt = verify->add_subcommand("theorem",
                                        "coRado construction vs. iterated intersection");
  vt->fallthrough();
  vt->add_option("--max-elements", vt_elements, "largest ground set (default 4)");
  vt->add_option("--max-sets", vt_sets, "largest system size (default 2)");
  vt->add_flag("--force", vt_force, "allow sweeps above 6 elements");
  vt->add_flag("--up-to-iso", vt_iso, "one matroid per isomorphism class");
  vt->callback([&] {
    emitter e{json_out};
    guard_sweep_size(vt_elements, vt_force);
    e.parsed();
    emit_sweep(e, corado::verify_theorem(vt_elements, vt_sets, vt_iso));
  });

  static int vd_elements = 4;
  static bool vd_force = false, vd_iso = false;
  CLI::App* vd = verify->add_subcommand("dhr", "degree=1 ⇔ DHR ⇔ avoidance transversals");
  vd->fallthrough();
  vd->add_option("--max-elements", vd_elements, "largest ground set (default 4)");
  vd->add_flag("--force", vd_force, "allow sweeps above 6 elements");
  vd->add_flag("--up-to-iso", vd_iso, "one matroid per isomorphism class");
  vd->callback([&] {
    emitter e{json_out};
    guard_sweep_size(vd_elements, vd_force);
    e.parsed();
    emit_sweep(e, corado::verify_dhr(vd_elements, vd_iso));
  });

  static int vr_left = 5, vr_right = 6, vr_families = 200;
  static unsigned vr_seed = 20260817u;
  static bool vr_force = false;
  CLI::App* vr = verify->add_subcommand("rado", "rank criterion vs. matching search");
  vr->fallthrough();
  vr->add_option("--max-left", vr_left, "largest left part (default 5)");
  vr->add_option("--max-right", vr_right, "largest right part (default 6)");
  vr->add_option("--families", vr_families, "random right-matroid budget (default 200)");
  vr->add_option("--seed", vr_seed, "sampling seed");
  vr->add_flag("--force", vr_force, "allow sweeps above 6 elements");
  vr->callback([&] {
    emitter e{json_out};
    guard_sweep_size(vr_left, vr_force);
    guard_sweep_size(vr_right, vr_force);
    e.parsed();
    emit_sweep(e, corado::verify_rado(vr_left, vr_right, vr_families, vr_seed));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int rc = app.exit(err);
    return rc == 0 ? 0 : 2;
  } catch (const error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return g_exit;
}
