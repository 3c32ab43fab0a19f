#include "ybx/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "ybx/check.hpp"
#include "ybx/error.hpp"

namespace ybx {

std::string CheckResult::describe() const {
  if (holds) return "holds";
  std::ostringstream os;
  os << "fails: " << condition;
  if (!witness.empty()) {
    os << " at (";
    for (std::size_t i = 0; i < witness.size(); ++i) os << (i ? "," : "") << witness[i];
    os << ')';
  }
  return os.str();
}

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l = -l;
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + static_cast<std::ptrdiff_t>(lo), r.begin() + static_cast<std::ptrdiff_t>(hi));
}

Word canonical_relator(const Word& w) {
  const Word r = cyclic_reduce(w);
  if (r.empty()) return r;
  Word best;
  for (const Word& base : {r, inverse_word(r)}) {
    for (std::size_t k = 0; k < base.size(); ++k) {
      Word rot(base.begin() + static_cast<std::ptrdiff_t>(k), base.end());
      rot.insert(rot.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(k));
      if (best.empty() || rot < best) best = std::move(rot);
    }
  }
  return best;
}

Word parse_word(std::string_view text, int generator_count) {
  Word out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*' || text[i] == ',')) ++i;
  };
  skip();
  if (text.substr(i) == "e") return out;
  while (i < text.size()) {
    if (text[i] != 'x') throw Error(ErrorKind::malformed, "word letters must look like x<index>");
    ++i;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) throw Error(ErrorKind::malformed, "missing generator index in word");
    const int g = std::stoi(std::string(text.substr(start, i - start)));
    if (g < 0 || g >= generator_count) throw Error(ErrorKind::out_of_range, "letter x" + std::to_string(g) + " out of range");
    bool inv = false;
    if (text.substr(i, 3) == "^-1") {
      inv = true;
      i += 3;
    } else if (i < text.size() && text[i] == '\'') {
      inv = true;
      ++i;
    }
    out.push_back(inv ? gen_inv(g) : gen(g));
    skip();
  }
  return out;
}

std::string format_word(const Word& w) {
  if (w.empty()) return "e";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    os << (i ? " " : "") << 'x' << generator_of(w[i]);
    if (is_inverse(w[i])) os << "^-1";
  }
  return os.str();
}

}  // namespace ybx
