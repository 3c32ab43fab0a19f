#include "ybx/catalog.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <optional>
#include <thread>

#include "ybx/error.hpp"

namespace ybx {

std::string solution_id(const FiniteSolution& canonical) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : dump(to_json(canonical))) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

CatalogEntry make_entry(const FiniteSolution& s) {
  CatalogEntry e{"", canonical_form(s), false, false, {}, {}};
  const SolutionReport r = validate(e.canonical);
  e.involutive = r.is_involutive;
  e.symmetric = r.is_symmetric;
  e.structure_group = abelianization(structure_presentation(e.canonical, PresentationKind::standard));
  e.derived_group = abelianization(structure_presentation(e.canonical, PresentationKind::derived));
  e.id = solution_id(e.canonical);
  return e;
}

namespace {

bool by_n_then_id(const CatalogEntry& a, const CatalogEntry& b) {
  return a.n() != b.n() ? a.n() < b.n() : a.id < b.id;
}

}  // namespace

std::vector<CatalogEntry> classify(int n, SolutionFilter filter, int jobs) {
  const auto solutions = enumerate_solutions(n, {filter, EnumerationOptions{}.budget, jobs}).solutions;
  std::vector<std::optional<FiniteSolution>> slots(solutions.size());
  const std::size_t workers = static_cast<std::size_t>(std::clamp(jobs, 1, 64));
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < solutions.size(); i += workers) slots[i] = canonical_form(solutions[i]);
      });
  }
  std::vector<FiniteSolution> canon;
  for (auto& s : slots) canon.push_back(std::move(*s));
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
  std::vector<CatalogEntry> out;
  for (const auto& c : canon) out.push_back(make_entry(c));
  return merge_catalogs({}, out);
}

std::vector<CatalogEntry> merge_catalogs(const std::vector<CatalogEntry>& existing, const std::vector<CatalogEntry>& added) {
  std::map<std::string, const CatalogEntry*> by_id;
  std::vector<CatalogEntry> out;
  for (const auto* list : {&existing, &added})
    for (const auto& e : *list) {
      auto [it, inserted] = by_id.emplace(e.id, &e);
      if (inserted) {
        out.push_back(e);
      } else if (!(it->second->canonical == e.canonical)) {
        throw Error(ErrorKind::postcondition, "catalog id collision on " + e.id);
      }
    }
  std::sort(out.begin(), out.end(), by_n_then_id);
  return out;
}

Json to_json(const CatalogEntry& e) {
  return Json{{"id", e.id},
              {"n", e.n()},
              {"involutive", e.involutive},
              {"symmetric", e.symmetric},
              {"structure_group", e.structure_group.to_string()},
              {"derived_group", e.derived_group.to_string()},
              {"alpha", e.canonical.alpha_rows()},
              {"beta", e.canonical.beta_rows()}};
}

CatalogEntry catalog_entry_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("alpha") || !j.contains("beta") || !j.contains("id"))
    throw Error(ErrorKind::malformed, "catalog entry needs id, alpha and beta");
  Json sol{{"type", "solution"}, {"n", j.value("n", 0)}, {"alpha", j["alpha"]}, {"beta", j["beta"]}};
  CatalogEntry e = make_entry(solution_from_json(sol));
  if (!j["id"].is_string() || j["id"].get<std::string>() != e.id)
    throw Error(ErrorKind::malformed, "catalog entry id does not match its solution");
  return e;
}

std::string format_catalog(const std::vector<CatalogEntry>& entries) {
  std::string out = "{\"type\":\"catalog\",\"entries\":[\n";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    out += dump(to_json(entries[i]));
    out += i + 1 < entries.size() ? ",\n" : "\n";
  }
  out += "]}\n";
  return out;
}

std::vector<CatalogEntry> catalog_from_json(const Json& j) {
  if (json_type(j) != "catalog" || !j.contains("entries") || !j["entries"].is_array())
    throw Error(ErrorKind::malformed, "not a catalog");
  std::vector<CatalogEntry> out;
  for (const auto& e : j["entries"]) out.push_back(catalog_entry_from_json(e));
  return merge_catalogs({}, out);
}

}  // namespace ybx
