#include "ybx/integer_matrix.hpp"

#include <optional>
#include <utility>

namespace ybx {

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r].at(c);
  return m;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src, const BigInt& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += k * (*this)(src, c);
}

void IntegerMatrix::add_col_multiple(std::size_t dst, std::size_t src, const BigInt& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += k * (*this)(r, src);
}

namespace {

using Pos = std::pair<std::size_t, std::size_t>;

// Nonzero entry of least absolute value in the trailing block starting at t.
std::optional<Pos> least_pivot(const IntegerMatrix& m, std::size_t t) {
  std::optional<Pos> best;
  BigInt best_abs;
  for (std::size_t r = t; r < m.rows(); ++r) {
    for (std::size_t c = t; c < m.cols(); ++c) {
      const BigInt& v = m(r, c);
      if (v == 0) continue;
      BigInt a = abs(v);
      if (!best || a < best_abs) {
        best = Pos{r, c};
        best_abs = std::move(a);
        if (best_abs == 1) return best;
      }
    }
  }
  return best;
}

}  // namespace

std::vector<BigInt> smith_normal_form(IntegerMatrix m) {
  const std::size_t k = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < k; ++t) {
    for (;;) {
      const auto pivot = least_pivot(m, t);
      if (!pivot) {
        std::vector<BigInt> diag;
        for (std::size_t i = 0; i < k; ++i) diag.push_back(abs(m(i, i)));
        return diag;
      }
      m.swap_rows(t, pivot->first);
      m.swap_cols(t, pivot->second);
      const BigInt p = m(t, t);

      bool clean = true;
      for (std::size_t r = t + 1; r < m.rows(); ++r) {
        m.add_row_multiple(r, t, -(m(r, t) / p));
        clean = clean && m(r, t) == 0;
      }
      for (std::size_t c = t + 1; c < m.cols(); ++c) {
        m.add_col_multiple(c, t, -(m(t, c) / p));
        clean = clean && m(t, c) == 0;
      }
      if (!clean) continue;  // a smaller remainder is now the pivot candidate

      std::optional<std::size_t> offending;
      for (std::size_t r = t + 1; r < m.rows() && !offending; ++r)
        for (std::size_t c = t + 1; c < m.cols(); ++c)
          if (m(r, c) % p != 0) {
            offending = r;
            break;
          }
      if (!offending) break;
      m.add_row_multiple(t, *offending, 1);
    }
    if (m(t, t) < 0) m(t, t) = -m(t, t);
  }
  std::vector<BigInt> diag;
  for (std::size_t i = 0; i < k; ++i) diag.push_back(abs(m(i, i)));
  return diag;
}

bool is_divisibility_chain(const std::vector<BigInt>& d) {
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    if (d[i] < 0) return false;
    if (d[i] == 0) {
      if (d[i + 1] != 0) return false;
    } else if (d[i + 1] % d[i] != 0) {
      return false;
    }
  }
  return d.empty() || d.back() >= 0;
}

}  // namespace ybx
