#include "ybx/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "ybx/error.hpp"

namespace ybx {

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::malformed, std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::malformed, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

std::string dump(const Json& j) { return j.dump(); }

std::string json_type(const Json& j) {
  if (j.is_object() && j.contains("type") && j["type"].is_string()) return j["type"].get<std::string>();
  return "";
}

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::malformed, std::string("missing member \"") + key + "\"");
  return j[key];
}

void expect_type(const Json& j, const char* type) {
  const std::string t = json_type(j);
  if (!t.empty() && t != type) throw Error(ErrorKind::malformed, "expected type \"" + std::string(type) + "\", got \"" + t + "\"");
}

int int_value(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw Error(ErrorKind::malformed, std::string(what) + " must be an integer");
  const auto v = j.get<long long>();
  if (v < -1000000000LL || v > 1000000000LL) throw Error(ErrorKind::malformed, std::string(what) + " is out of range");
  return static_cast<int>(v);
}

std::vector<int> flatten(const std::vector<std::vector<int>>& rows) {
  std::vector<int> out;
  for (const auto& r : rows) out.insert(out.end(), r.begin(), r.end());
  return out;
}

}  // namespace

std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorKind::malformed, std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& v : j) out.push_back(int_value(v, what));
  return out;
}

std::vector<std::vector<int>> int_rows(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorKind::malformed, std::string(what) + " must be an array of rows");
  std::vector<std::vector<int>> out;
  for (const auto& row : j) out.push_back(int_list(row, what));
  return out;
}

std::vector<Permutation> permutation_rows(const Json& j, const char* what) {
  std::vector<Permutation> out;
  for (auto& row : int_rows(j, what)) {
    if (!Permutation::is_bijection(row)) throw Error(ErrorKind::malformed, std::string(what) + " rows must be permutations");
    out.emplace_back(std::move(row));
  }
  return out;
}

Json to_json(const FiniteSolution& s) {
  return Json{{"type", "solution"}, {"n", s.size()}, {"alpha", s.alpha_rows()}, {"beta", s.beta_rows()}};
}

FiniteSolution solution_from_json(const Json& j) {
  expect_type(j, "solution");
  const int n = int_value(member(j, "n"), "n");
  const auto alpha = int_rows(member(j, "alpha"), "alpha");
  const auto beta = int_rows(member(j, "beta"), "beta");
  if (static_cast<int>(alpha.size()) != n || static_cast<int>(beta.size()) != n)
    throw Error(ErrorKind::malformed, "alpha and beta need n rows");
  for (const auto* rows : {&alpha, &beta})
    for (const auto& r : *rows)
      if (static_cast<int>(r.size()) != n) throw Error(ErrorKind::malformed, "ragged table row");
  return FiniteSolution(n, flatten(alpha), flatten(beta));
}

Json to_json(const CycleSet& c) { return Json{{"type", "cycle_set"}, {"n", c.size()}, {"table", c.rows()}}; }

CycleSet cycle_set_from_json(const Json& j) {
  expect_type(j, "cycle_set");
  const auto rows = int_rows(member(j, "table"), "table");
  if (j.contains("n") && int_value(j["n"], "n") != static_cast<int>(rows.size()))
    throw Error(ErrorKind::malformed, "cycle set n does not match its table");
  return CycleSet::from_rows(rows);
}

Json to_json(const CycleAction& a) {
  return Json{{"type", "cycle_action"}, {"X", to_json(a.X)}, {"S", to_json(a.S)}, {"pi", a.pi}};
}

CycleAction cycle_action_from_json(const Json& j) {
  expect_type(j, "cycle_action");
  CycleAction a{cycle_set_from_json(member(j, "X")), cycle_set_from_json(member(j, "S")), int_rows(member(j, "pi"), "pi")};
  if (static_cast<int>(a.pi.size()) != a.X.size()) throw Error(ErrorKind::malformed, "pi needs one row per element of X");
  for (const auto& r : a.pi)
    if (static_cast<int>(r.size()) != a.S.size()) throw Error(ErrorKind::malformed, "pi rows need |S| entries");
  return a;
}

Json to_json(const Presentation& p) {
  return Json{{"type", "presentation"}, {"generators", p.generator_count}, {"relators", p.relators}};
}

Presentation presentation_from_json(const Json& j) {
  expect_type(j, "presentation");
  const int g = int_value(member(j, "generators"), "generators");
  std::vector<Word> rel;
  for (auto& r : int_rows(member(j, "relators"), "relators")) rel.push_back(std::move(r));
  return make_presentation(g, rel);
}

Json to_json(const FiniteGroup& g) {
  Json out{{"type", "group"}, {"order", g.order()}, {"table", g.rows()}};
  if (!g.labels().empty()) out["labels"] = g.labels();
  return out;
}

FiniteGroup group_from_json(const Json& j) {
  expect_type(j, "group");
  const auto rows = int_rows(member(j, "table"), "table");
  if (j.contains("order") && int_value(j["order"], "order") != static_cast<int>(rows.size()))
    throw Error(ErrorKind::malformed, "group order does not match its table");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array()) throw Error(ErrorKind::malformed, "labels must be an array of strings");
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw Error(ErrorKind::malformed, "labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  return FiniteGroup(rows, std::move(labels));
}

Json to_json(const AffineAction& r) {
  Json pi = Json::array();
  for (const auto& p : r.pi) pi.push_back(p.images());
  return Json{{"type", "affine"}, {"group", to_json(r.source)}, {"target", to_json(r.target)}, {"pi", pi}, {"b", r.b}};
}

AffineAction affine_from_json(const Json& j) {
  expect_type(j, "affine");
  AffineAction r{group_from_json(member(j, "group")), group_from_json(member(j, "target")),
                 permutation_rows(member(j, "pi"), "pi"), int_list(member(j, "b"), "b")};
  if (static_cast<int>(r.pi.size()) != r.source.order() || static_cast<int>(r.b.size()) != r.source.order())
    throw Error(ErrorKind::malformed, "pi and b need one entry per group element");
  for (const auto& p : r.pi)
    if (p.size() != r.target.order()) throw Error(ErrorKind::malformed, "pi rows must permute the target group");
  for (int v : r.b)
    if (v < 0 || v >= r.target.order()) throw Error(ErrorKind::malformed, "b value outside the target group");
  return r;
}

Json to_json(const CompatiblePair& p, const FiniteGroup& g) {
  Json alpha = Json::array(), beta = Json::array();
  for (const auto& a : p.alpha) alpha.push_back(a.images());
  for (const auto& b : p.beta) beta.push_back(b.images());
  return Json{{"type", "compatible_pair"}, {"group", to_json(g)}, {"alpha", alpha}, {"beta", beta}};
}

CompatiblePair pair_from_json(const Json& j) {
  expect_type(j, "compatible_pair");
  return CompatiblePair{permutation_rows(member(j, "alpha"), "alpha"), permutation_rows(member(j, "beta"), "beta")};
}

Json to_json(const LatticeElement& e) { return Json{{"v", e.v}, {"lam", e.lam.images()}}; }

LatticeElement lattice_element_from_json(const Json& j) {
  Vec v;
  const Json& jv = member(j, "v");
  if (!jv.is_array()) throw Error(ErrorKind::malformed, "v must be an array");
  for (const auto& c : jv) {
    if (!c.is_number_integer()) throw Error(ErrorKind::malformed, "v entries must be integers");
    v.push_back(c.get<long long>());
  }
  auto lam = int_list(member(j, "lam"), "lam");
  if (!Permutation::is_bijection(lam)) throw Error(ErrorKind::malformed, "lam must be a permutation");
  return LatticeElement{std::move(v), Permutation(std::move(lam))};
}

Json to_json(const AbelianInvariants& a) {
  Json factors = Json::array();
  for (const auto& d : a.factors()) {
    if (d <= std::numeric_limits<long long>::max())
      factors.push_back(static_cast<long long>(d));
    else
      factors.push_back(d.str());
  }
  return Json{{"invariants", a.to_string()}, {"factors", factors}, {"free_rank", a.free_rank}};
}

Json to_json(const CheckResult& c) {
  Json out{{"holds", c.holds}};
  if (!c.holds) {
    out["condition"] = c.condition;
    out["witness"] = c.witness;
  }
  return out;
}

Json to_json(const SolutionReport& r) {
  Json out{{"is_bijective", r.is_bijective}, {"is_non_degenerate", r.is_non_degenerate}};
  if (r.ybe_checked) out["is_ybe"] = r.is_ybe;
  out["is_involutive"] = r.is_involutive;
  out["is_symmetric"] = r.is_symmetric;
  if (r.failure) {
    out["failed_condition"] = std::string(to_string(r.failure->condition));
    out["witness"] = r.failure->witness;
  }
  return out;
}

}  // namespace ybx
