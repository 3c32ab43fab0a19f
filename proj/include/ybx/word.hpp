#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ybx {

/// Signed, 1-indexed letter: +(g+1) is generator g, -(g+1) its inverse.
/// This is also the wire encoding of presentation relators.
using Letter = int;
using Word = std::vector<Letter>;

constexpr Letter gen(int g) noexcept { return g + 1; }
constexpr Letter gen_inv(int g) noexcept { return -(g + 1); }
constexpr int generator_of(Letter l) noexcept { return (l > 0 ? l : -l) - 1; }
constexpr bool is_inverse(Letter l) noexcept { return l < 0; }

Word inverse_word(const Word& w);
Word concat(const Word& a, const Word& b);
Word free_reduce(const Word& w);
/// Free reduction followed by cancelling inverse pairs across the ends.
Word cyclic_reduce(const Word& w);
/// Least word among all cyclic rotations of `w` and of its inverse, after
/// cyclic reduction. Two relators with the same canonical form generate the
/// same normal closure.
Word canonical_relator(const Word& w);

/// Parses "x0 x1^-1 x2", "x0*x1'", "" or "e"; letters are 0-indexed here.
Word parse_word(std::string_view text, int generator_count);
std::string format_word(const Word& w);

}  // namespace ybx
