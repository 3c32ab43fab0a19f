#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "fixtures.hpp"
#include "ybx/affine.hpp"
#include "ybx/enumerate.hpp"
#include "ybx/json_io.hpp"

namespace fs = std::filesystem;
using namespace ybx;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + std::string(YBX_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("ybx_cli_" + std::to_string(::getpid()))) { fs::create_directories(path); }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path / name, std::ios::binary) << text;
    return (path / name).string();
  }
};

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("verify exit codes") {
  TempDir t;
  CHECK(run("verify " + t.write("flip.json", dump(to_json(fixture::flip(2))))).code == 0);
  const auto ns2 = t.write("ns2.json", dump(to_json(fixture::ns2())));
  const auto bad = run("verify " + ns2);
  CHECK(bad.code == 1);
  CHECK(bad.out.find("failed: braid at (0 0 1)") != std::string::npos);
  const auto lemma = run("--json verify --method lemma " + ns2);
  CHECK(lemma.code == 1);
  const auto report = parse_json(lemma.out);
  CHECK(report["failed_condition"] == "lemma-ii");
  CHECK(report["witness"][0] == 0);
  CHECK(report["witness"][1] == 1);
  CHECK(run("verify " + t.write("trunc.json", R"({"type":"solution","n":2,"alpha":[[0,1])")).code == 2);
  CHECK(run("verify " + (t.path / "missing.json").string()).code == 2);
  CHECK(run("verify " + t.write("unknown.json", R"({"type":"banana"})")).code == 2);
  CHECK(run("verify " + t.write("cs.json", dump(to_json(to_cycle_set(fixture::p3()))))).code == 0);
  CHECK(run("verify " + t.write("act.json", dump(to_json(fixture::action_2x3())))).code == 0);
  CHECK(run("verify " + t.write("f4.json", dump(to_json(f4_action())))).code == 0);
  CHECK(run("verify --method sideways " + ns2).code == 64);
}

TEST_CASE("enumerate") {
  CHECK(run("enumerate 1 --count-only").out == "1\n");
  const auto n2 = enumerate_solutions(2).solutions.size();
  CHECK(run("enumerate 2 --count-only").out == std::to_string(n2) + "\n");
  CHECK(run("enumerate 3 --count-only").out == "66\n");
  const auto j1 = run("enumerate 3 --jobs 1"), j4 = run("enumerate 3 --jobs 4");
  CHECK(j1.code == 0);
  CHECK(j1.out == j4.out);
  CHECK(run("enumerate 3", "YBX_JOBS=3").out == j1.out);
  // Every listed line re-parses to a solution that serializes identically.
  std::size_t lines = 0, pos = 0;
  while (pos < j1.out.size()) {
    const auto end = j1.out.find('\n', pos);
    const auto line = j1.out.substr(pos, end - pos);
    CHECK(dump(to_json(solution_from_json(parse_json(line)))) == line);
    ++lines;
    pos = end + 1;
  }
  CHECK(lines == 66);
  CHECK(run("enumerate 5").code == 64);
  CHECK(run("enumerate 0").code == 64);
  CHECK(run("enumerate 3 --budget 10").code == 1);
  CHECK(run("enumerate").code == 64);
  CHECK(run("frobnicate").code == 64);
  const auto count = parse_json(run("--json enumerate 2 --count-only").out);
  CHECK(count["count"] == n2);
}

TEST_CASE("classify is idempotent and append-consistent") {
  TempDir t;
  const auto a = run("classify 2"), b = run("classify 2");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run("classify 3 -j 1").out == run("classify 3 -j 8").out);
  const auto cat = (t.path / "cat.json").string();
  CHECK(run("classify 2 --out " + cat).code == 0);
  CHECK(run("classify 3 --append --out " + cat).code == 0);
  CHECK(run("classify 2 --append --out " + cat).code == 0);
  std::ifstream in(cat);
  const std::string merged((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  // Each class line of the n = 2 catalog survives unchanged.
  std::size_t pos = a.out.find('\n') + 1;
  while (pos < a.out.size()) {
    auto end = a.out.find('\n', pos);
    std::string line = a.out.substr(pos, end - pos);
    if (line.rfind("]}", 0) != 0) {
      if (line.back() == ',') line.pop_back();
      CHECK(merged.find(line) != std::string::npos);
    }
    pos = end + 1;
  }
  CHECK(run("classify 2 --append").code == 64);
}

TEST_CASE("construct, group, affine and engine commands") {
  TempDir t;
  const auto p3 = t.write("p3.json", dump(to_json(fixture::p3())));
  const auto dual = run("construct dual " + p3);
  CHECK(dual.code == 0);
  CHECK(solution_from_json(parse_json(dual.out)) == FiniteSolution(3, fixture::p3().beta_table(), fixture::p3().alpha_table()));
  CHECK(solution_from_json(parse_json(run("construct derived " + p3).out)) == fixture::flip(3));
  CHECK(run("construct derived --left " + p3).code == 0);
  const auto act = t.write("act.json", dump(to_json(fixture::action_2x3())));
  CHECK(solution_from_json(parse_json(run("construct semidirect " + act).out)).size() == 6);
  CHECK(cycle_set_from_json(parse_json(run("construct semidirect --cycle-set " + act).out)).size() == 6);

  const auto flip3 = t.write("flip3.json", dump(to_json(fixture::flip(3))));
  CHECK(run("group abelianize " + flip3).out == "Z^3\n");
  const auto pres = t.write("pres.json", run("group present " + flip3).out);
  CHECK(run("group abelianize " + pres).out == "Z^3\n");
  CHECK(run("group abelianize " + p3).out == "Z^1 x Z/3\n");
  CHECK(run("group abelianize --kind derived " + p3).out == "Z^3\n");
  CHECK(run("group abelianize --kind cycle_form " + t.write("ns2.json", dump(to_json(fixture::ns2())))).code == 1);
  const auto triv = t.write("triv.json", dump(to_json(fixture::trivial_action(2, 3))));
  const auto pi = parse_json(run("--json group pi-check " + triv).out);
  CHECK(pi["extends"] == true);
  CHECK(pi["rank_source"] == 6);
  CHECK(pi["rank_target"] == 5);

  const auto f4 = t.write("f4.json", dump(to_json(f4_action())));
  CHECK(run("affine check " + f4).code == 0);
  CHECK(run("affine regular " + f4).out == "regular: yes\n");
  const auto sol = solution_from_json(parse_json(run("affine to-solution " + f4).out));
  CHECK(check_ybe(sol).all_valid());
  CHECK(run("affine roundtrip " + f4).code == 0);
  const auto pair = affine_to_pair(f4_action());
  CHECK(run("affine roundtrip " + t.write("pair.json", dump(to_json(pair, cyclic_group(4))))).code == 0);
  AffineAction constant{cyclic_group(2), cyclic_group(2), {Permutation::identity(2), Permutation::identity(2)}, {0, 0}};
  const auto cst = t.write("const.json", dump(to_json(constant)));
  CHECK(run("affine regular " + cst).code == 1);
  CHECK(run("affine to-solution " + cst).code == 1);

  CHECK(run("word-problem " + p3 + " 'x0 x1' 'x2 x2'").out == "equal\n");
  CHECK(run("word-problem " + p3 + " 'x0 x1' 'x1 x0'").out == "distinct\n");
  CHECK(run("word-problem " + p3 + " 'x0 x7' 'x1'").code == 1);
  const auto ext = parse_json(run("extend " + p3 + " --v 1,0,0 --w 0,1,0").out);
  CHECK(ext["alpha"] == Json::array({0, 0, 1}));
  CHECK(ext["beta"] == Json::array({0, 0, 1}));
  CHECK(run("extend " + p3 + " --v 1,0 --w 0,1,0").code == 2);
  CHECK(run("word-problem " + t.write("ns.json", dump(to_json(fixture::ns2()))) + " x0 x1").code == 1);
}

TEST_CASE("lift through the command line") {
  TempDir t;
  const auto f4 = f4_action();
  Json doc{{"type", "lift"}, {"affine", to_json(f4)}, {"H", to_json(f4.target)}, {"sigma", Json::array()}, {"theta", {0, 1, 2, 3}}};
  for (const auto& p : f4.pi) doc["sigma"].push_back(p.images());
  const auto r = run("construct lift " + t.write("lift.json", dump(doc)));
  CHECK(r.code == 0);
  const auto out = parse_json(r.out);
  CHECK(find_group_isomorphism(group_from_json(out["group"]), cyclic_group(4)));
  CHECK(out["equivariance"]["holds"] == true);
  CHECK(first_line(run("construct lift " + t.write("notlift.json", dump(to_json(f4)))).out).empty());
}
