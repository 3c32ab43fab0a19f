// ybx: command-line front end for the ybx library.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ybx/affine.hpp"
#include "ybx/catalog.hpp"
#include "ybx/constructions.hpp"
#include "ybx/enumerate.hpp"
#include "ybx/error.hpp"
#include "ybx/json_io.hpp"
#include "ybx/presentation.hpp"
#include "ybx/symmetric_engine.hpp"

namespace {

using namespace ybx;

constexpr int exit_ok = 0;
constexpr int exit_invalid = 1;
constexpr int exit_malformed = 2;
constexpr int exit_usage = 64;

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool json_output = false;

void emit(const Json& j) { std::cout << dump(j) << '\n'; }

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string witness_text(const std::vector<int>& w) {
  std::string out;
  for (int v : w) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

PresentationKind parse_kind(const std::string& k) {
  if (k == "standard") return PresentationKind::standard;
  if (k == "cycle_form" || k == "cycle-form") return PresentationKind::cycle_form;
  if (k == "derived") return PresentationKind::derived;
  throw Usage("unknown presentation kind " + k);
}

Vec parse_vector(const std::string& text, int n) {
  Vec v;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoll(part, &used));
      if (part.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(part);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::malformed, "bad vector entry \"" + part + "\"");
    }
  }
  if (static_cast<int>(v.size()) != n) throw Error(ErrorKind::malformed, "vector needs " + std::to_string(n) + " entries");
  return v;
}

// --- verify -----------------------------------------------------------------

int verify_solution(const Json& j, YbeMethod method) {
  const FiniteSolution s = solution_from_json(j);
  const SolutionReport r = check_ybe(s, method);
  if (json_output) {
    Json out = to_json(r);
    out["type"] = "solution_report";
    out["valid"] = r.all_valid();
    emit(out);
  } else {
    std::cout << "solution on " << s.size() << " points\n"
              << "bijective: " << yes_no(r.is_bijective) << "\n"
              << "non-degenerate: " << yes_no(r.is_non_degenerate) << "\n"
              << "yang-baxter: " << yes_no(r.is_ybe) << "\n"
              << "involutive: " << yes_no(r.is_involutive) << "\n"
              << "symmetric: " << yes_no(r.is_symmetric) << "\n";
    if (r.failure)
      std::cout << "failed: " << to_string(r.failure->condition) << " at (" << witness_text(r.failure->witness) << ")\n";
  }
  return r.all_valid() ? exit_ok : exit_invalid;
}

int verify_cycle_set(const Json& j) {
  const CycleSetReport r = validate_cycle_set(cycle_set_from_json(j));
  const bool ok = r.is_non_degenerate_cycle_set();
  if (json_output) {
    emit(Json{{"type", "cycle_set_report"},
              {"valid", ok},
              {"axiom", to_json(r.axiom)},
              {"left_multiplications_bijective", r.left_multiplications_bijective},
              {"square_bijective", r.square_bijective}});
  } else {
    std::cout << "cycle set axiom: " << (r.axiom ? "holds" : r.axiom.describe()) << "\n"
              << "left multiplications bijective: " << yes_no(r.left_multiplications_bijective) << "\n"
              << "square map bijective: " << yes_no(r.square_bijective) << "\n";
  }
  return ok ? exit_ok : exit_invalid;
}

int verify_cycle_action(const Json& j) {
  const CycleAction a = cycle_action_from_json(j);
  const CheckResult r = validate_cycle_action(a);
  const bool sets_ok = validate_cycle_set(a.X).is_non_degenerate_cycle_set() && validate_cycle_set(a.S).is_non_degenerate_cycle_set();
  if (json_output) {
    emit(Json{{"type", "cycle_action_report"}, {"valid", r.holds && sets_ok}, {"action", to_json(r)}, {"cycle_sets_non_degenerate", sets_ok}});
  } else {
    std::cout << "action: " << (r ? "valid" : r.describe()) << "\n"
              << "X and S non-degenerate: " << yes_no(sets_ok) << "\n";
  }
  return r.holds && sets_ok ? exit_ok : exit_invalid;
}

int verify_affine(const Json& j) {
  const AffineAction a = affine_from_json(j);
  const CheckResult r = validate_affine(a);
  const bool regular = r.holds && is_regular(a);
  if (json_output) {
    emit(Json{{"type", "affine_report"}, {"valid", r.holds}, {"check", to_json(r)}, {"regular", regular}});
  } else {
    std::cout << "affine action: " << (r ? "valid" : r.describe()) << "\n";
    if (r) std::cout << "regular: " << yes_no(regular) << "\n";
  }
  return r.holds ? exit_ok : exit_invalid;
}

int verify_pair(const Json& j) {
  const FiniteGroup g = group_from_json(j.at("group"));
  const CheckResult r = check_compatible_pair(g, pair_from_json(j));
  if (json_output)
    emit(Json{{"type", "compatible_pair_report"}, {"valid", r.holds}, {"check", to_json(r)}});
  else
    std::cout << "compatible pair: " << (r ? "valid" : r.describe()) << "\n";
  return r.holds ? exit_ok : exit_invalid;
}

int cmd_verify(const std::string& path, const std::string& method) {
  const Json j = read_json_file(path);
  const std::string type = json_type(j);
  if (type == "solution") return verify_solution(j, method == "lemma" ? YbeMethod::lemma : YbeMethod::braid);
  if (type == "cycle_set") return verify_cycle_set(j);
  if (type == "cycle_action") return verify_cycle_action(j);
  if (type == "affine") return verify_affine(j);
  if (type == "compatible_pair") return verify_pair(j);
  if (type == "group") {
    const FiniteGroup g = group_from_json(j);
    if (json_output)
      emit(Json{{"type", "group_report"}, {"valid", true}, {"order", g.order()}, {"abelian", g.is_abelian()}});
    else
      std::cout << "group of order " << g.order() << (g.is_abelian() ? ", abelian" : ", non-abelian") << "\n";
    return exit_ok;
  }
  if (type == "presentation") {
    const Presentation p = presentation_from_json(j);
    if (json_output)
      emit(Json{{"type", "presentation_report"}, {"valid", true}, {"relators", p.relators.size()}});
    else
      std::cout << "presentation with " << p.generator_count << " generators and " << p.relators.size() << " relators\n";
    return exit_ok;
  }
  throw Error(ErrorKind::malformed, "unknown document type \"" + type + "\"");
}

// --- enumerate / classify ----------------------------------------------------

struct EnumerateArgs {
  int n = 0;
  bool involutive = false;
  bool symmetric = false;
  bool count_only = false;
  bool allow_large = false;
  int jobs = 1;
  std::uint64_t budget = EnumerationOptions{}.budget;
};

SolutionFilter filter_of(const EnumerateArgs& a) {
  if (a.symmetric) return SolutionFilter::symmetric;
  if (a.involutive) return SolutionFilter::involutive;
  return SolutionFilter::all;
}

void guard_size(const EnumerateArgs& a) {
  if (a.n < 1) throw Usage("n must be at least 1");
  if (a.n > 4 && !a.allow_large) throw Usage("n > 4 needs --allow-large (the search may not finish)");
  if (a.jobs < 1) throw Usage("--jobs must be at least 1");
}

int cmd_enumerate(const EnumerateArgs& a) {
  guard_size(a);
  const EnumerationResult r = enumerate_solutions(a.n, {filter_of(a), a.budget, a.jobs});
  if (a.count_only) {
    if (json_output)
      emit(Json{{"type", "count"}, {"n", a.n}, {"count", r.solutions.size()}, {"complete", r.complete}});
    else
      std::cout << r.solutions.size() << '\n';
  } else {
    for (const auto& s : r.solutions) emit(to_json(s));
  }
  if (!r.complete) {
    std::cerr << "budget exhausted after " << r.nodes << " nodes; output is partial\n";
    return exit_invalid;
  }
  return exit_ok;
}

int cmd_classify(const EnumerateArgs& a, const std::string& out, bool append) {
  guard_size(a);
  std::vector<CatalogEntry> entries = classify(a.n, filter_of(a), a.jobs);
  if (append) {
    if (out.empty()) throw Usage("--append needs --out");
    if (std::filesystem::exists(out)) entries = merge_catalogs(catalog_from_json(read_json_file(out)), entries);
  }
  const std::string text = format_catalog(entries);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorKind::malformed, "cannot write " + out);
    f << text;
    if (!json_output) std::cerr << entries.size() << " classes written to " << out << "\n";
  }
  return exit_ok;
}

// --- construct -----------------------------------------------------------------

int cmd_construct(const std::string& op, const std::string& path, bool left, bool as_cycle_set) {
  const Json j = read_json_file(path);
  if (op == "dual" || op == "derived") {
    const FiniteSolution s = solution_from_json(j);
    if (!is_ybe_solution(s)) throw Error(ErrorKind::postcondition, "input is not a YBE solution");
    emit(to_json(op == "dual" ? dual(s) : derived(s, left ? DerivedSide::left : DerivedSide::right)));
    return exit_ok;
  }
  if (op == "semidirect") {
    const CycleAction a = cycle_action_from_json(j);
    if (as_cycle_set)
      emit(to_json(cycleset_semidirect(a)));
    else
      emit(to_json(semidirect_solution(a)));
    return exit_ok;
  }
  if (op == "lift") {
    if (json_type(j) != "lift") throw Error(ErrorKind::malformed, "lift expects a document of type \"lift\"");
    const AffineAction r = affine_from_json(j.at("affine"));
    const FiniteGroup h = group_from_json(j.at("H"));
    const LiftResult res = lift(r, h, permutation_rows(j.at("sigma"), "sigma"), int_list(j.at("theta"), "theta"));
    emit(Json{{"type", "lift_result"},
              {"group", to_json(res.group)},
              {"action", to_json(res.action)},
              {"inverse", res.inverse},
              {"equivariance", to_json(res.equivariance)}});
    return exit_ok;
  }
  throw Usage("unknown construction " + op);
}

// --- group ------------------------------------------------------------------

Presentation presentation_of(const Json& j, const std::string& kind) {
  if (json_type(j) == "presentation") return presentation_from_json(j);
  return structure_presentation(solution_from_json(j), parse_kind(kind));
}

int cmd_group(const std::string& sub, const std::string& path, const std::string& kind) {
  const Json j = read_json_file(path);
  if (sub == "present") {
    emit(to_json(presentation_of(j, kind)));
    return exit_ok;
  }
  if (sub == "abelianize") {
    const AbelianInvariants inv = abelianization(presentation_of(j, kind));
    if (json_output) {
      Json out = to_json(inv);
      out["type"] = "abelianization";
      emit(out);
    } else {
      std::cout << inv.to_string() << '\n';
    }
    return exit_ok;
  }
  if (sub == "pi-check") {
    const PiHomomorphismReport r = check_pi_homomorphism(cycle_action_from_json(j));
    if (json_output) {
      emit(Json{{"type", "pi_check"},
                {"extends", r.extends()},
                {"abelian_level", r.abelian_level},
                {"permutation_level", r.permutation_level},
                {"rank_source", r.rank_source},
                {"rank_target", r.rank_target},
                {"source", r.source.to_string()},
                {"target", r.target.to_string()}});
    } else {
      std::cout << "extends: " << yes_no(r.extends()) << "\n"
                << "source: " << r.source.to_string() << " (rank " << r.rank_source << ")\n"
                << "target: " << r.target.to_string() << " (rank " << r.rank_target << ")\n";
      if (!r.failure) std::cout << "failed: " << r.failure.describe() << "\n";
    }
    return r.extends() ? exit_ok : exit_invalid;
  }
  throw Usage("unknown group command " + sub);
}

// --- affine -----------------------------------------------------------------

int cmd_affine(const std::string& sub, const std::string& path) {
  const Json j = read_json_file(path);
  if (sub == "roundtrip" && json_type(j) == "compatible_pair") {
    const FiniteGroup g = group_from_json(j.at("group"));
    const CompatiblePair p = pair_from_json(j);
    const bool same = affine_to_pair(pair_to_affine(g, p)) == p;
    if (json_output)
      emit(Json{{"type", "roundtrip"}, {"pair_affine_pair", same}});
    else
      std::cout << "pair -> affine -> pair: " << (same ? "identity" : "differs") << "\n";
    return same ? exit_ok : exit_invalid;
  }
  const AffineAction r = affine_from_json(j);
  if (sub == "check") return verify_affine(j);
  if (sub == "regular") {
    if (auto c = validate_affine(r); !c) throw Error(ErrorKind::invalid_action, c.describe());
    const RegularityReport rep = regularity(r);
    if (json_output)
      emit(Json{{"type", "regularity"}, {"regular", rep.b_bijective}, {"b_bijective", rep.b_bijective}, {"orbit_regular", rep.orbit_regular}});
    else
      std::cout << "regular: " << yes_no(rep.b_bijective) << "\n";
    return rep.b_bijective ? exit_ok : exit_invalid;
  }
  if (sub == "to-solution") {
    emit(to_json(affine_to_solution(r)));
    return exit_ok;
  }
  if (sub == "roundtrip") {
    const CompatiblePair p = affine_to_pair(r);
    const AffineAction back = pair_to_affine(r.source, p);
    // back acts on (G, ⊙); b: (G, ⊙) -> A intertwines it with r.
    const EquivarianceReport eq = check_equivariant(r.b, back, r);
    const bool pair_same = affine_to_pair(back) == p;
    const bool ok = eq.equivariant && pair_same;
    if (json_output)
      emit(Json{{"type", "roundtrip"}, {"pair", to_json(p, r.source)}, {"conjugate_via_b", eq.equivariant}, {"pair_affine_pair", pair_same}});
    else
      std::cout << "affine -> pair -> affine: " << (eq.equivariant ? "conjugate via b" : "not conjugate") << "\n"
                << "pair -> affine -> pair: " << (pair_same ? "identity" : "differs") << "\n";
    return ok ? exit_ok : exit_invalid;
  }
  throw Usage("unknown affine command " + sub);
}

// --- symmetric engine ------------------------------------------------------------

int cmd_word_problem(const std::string& path, const std::string& w1, const std::string& w2) {
  const SymmetricEngine e(solution_from_json(read_json_file(path)));
  const LatticeElement a = e.cocycle_vector(parse_word(w1, e.size()));
  const LatticeElement b = e.cocycle_vector(parse_word(w2, e.size()));
  if (json_output)
    emit(Json{{"type", "word_problem"}, {"equal", a == b}, {"first", to_json(a)}, {"second", to_json(b)}});
  else
    std::cout << (a == b ? "equal" : "distinct") << '\n';
  return exit_ok;
}

int cmd_extend(const std::string& path, const std::string& vtext, const std::string& wtext) {
  const SymmetricEngine e(solution_from_json(read_json_file(path)));
  const auto [a, b] = e.extend(parse_vector(vtext, e.size()), parse_vector(wtext, e.size()));
  emit(Json{{"type", "extension_value"}, {"alpha", a}, {"beta", b}});
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite set-theoretic solutions of the Yang-Baxter equation"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", json_output, "Print machine-readable JSON reports");

  std::string path, method = "braid", kind = "standard", out, w1, w2, vtext, wtext;
  bool left = false, as_cycle_set = false, append = false;
  EnumerateArgs ea;

  auto* verify = app.add_subcommand("verify", "Validate a solution, cycle set, action, group or presentation");
  verify->add_option("file", path, "JSON document")->required();
  verify->add_option("--method", method, "braid or lemma")->check(CLI::IsMember({"braid", "lemma"}));

  auto add_enum_flags = [&](CLI::App* sub) {
    sub->add_option("n", ea.n, "Number of points")->required();
    auto* inv = sub->add_flag("--involutive", ea.involutive, "Only involutive solutions");
    sub->add_flag("--symmetric", ea.symmetric, "Only symmetric solutions")->excludes(inv);
    sub->add_option("--jobs,-j", ea.jobs, "Worker threads")->envname("YBX_JOBS");
    sub->add_flag("--allow-large", ea.allow_large, "Permit n > 4 (no runtime bound)");
  };
  auto* enumerate = app.add_subcommand("enumerate", "List every solution on n points");
  add_enum_flags(enumerate);
  enumerate->add_flag("--count-only", ea.count_only, "Print only the number of solutions");
  enumerate->add_option("--budget", ea.budget, "Search node limit");

  auto* classify_cmd = app.add_subcommand("classify", "Catalog the isomorphism classes on n points");
  add_enum_flags(classify_cmd);
  classify_cmd->add_option("--out,-o", out, "Catalog file (stdout if omitted)");
  classify_cmd->add_flag("--append", append, "Merge into an existing catalog file");

  auto* construct = app.add_subcommand("construct", "Build new objects from old");
  construct->require_subcommand(1);
  for (const char* op : {"dual", "derived", "semidirect", "lift"}) {
    auto* sub = construct->add_subcommand(op);
    sub->add_option("file", path, "Input JSON")->required();
    if (std::string(op) == "derived") sub->add_flag("--left", left, "Left derived solution");
    if (std::string(op) == "semidirect") sub->add_flag("--cycle-set", as_cycle_set, "Emit the product cycle set");
  }

  auto* group = app.add_subcommand("group", "Presentations and their invariants");
  group->require_subcommand(1);
  for (const char* op : {"present", "abelianize", "pi-check"}) {
    auto* sub = group->add_subcommand(op);
    sub->add_option("file", path, "Input JSON")->required();
    if (std::string(op) != "pi-check")
      sub->add_option("--kind", kind, "standard, cycle_form or derived")
          ->check(CLI::IsMember({"standard", "cycle_form", "cycle-form", "derived"}));
  }

  auto* affine = app.add_subcommand("affine", "Affine actions of finite groups");
  affine->require_subcommand(1);
  for (const char* op : {"check", "regular", "to-solution", "roundtrip"})
    affine->add_subcommand(op)->add_option("file", path, "Input JSON")->required();

  auto* word = app.add_subcommand("word-problem", "Decide equality of two words in G_X (symmetric solutions)");
  word->add_option("file", path, "Solution JSON")->required();
  word->add_option("first", w1, "Word such as \"x0 x1^-1\"")->required();
  word->add_option("second", w2, "Second word")->required();

  auto* extend = app.add_subcommand("extend", "Evaluate the universal extension at two lattice vectors");
  extend->add_option("file", path, "Solution JSON")->required();
  extend->add_option("--v", vtext, "Comma separated vector")->required();
  extend->add_option("--w", wtext, "Comma separated vector")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (verify->parsed()) return cmd_verify(path, method);
    if (enumerate->parsed()) return cmd_enumerate(ea);
    if (classify_cmd->parsed()) return cmd_classify(ea, out, append);
    if (construct->parsed()) return cmd_construct(construct->get_subcommands().front()->get_name(), path, left, as_cycle_set);
    if (group->parsed()) return cmd_group(group->get_subcommands().front()->get_name(), path, kind);
    if (affine->parsed()) return cmd_affine(affine->get_subcommands().front()->get_name(), path);
    if (word->parsed()) return cmd_word_problem(path, w1, w2);
    if (extend->parsed()) return cmd_extend(path, vtext, wtext);
  } catch (const Usage& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return e.kind() == ErrorKind::malformed ? exit_malformed : exit_invalid;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "malformed: " << e.what() << '\n';
    return exit_malformed;
  }
  return exit_usage;
}
