#include <utility>

#include "bts/fpgroup.hpp"

namespace bts {

namespace {

struct Reducer {
  IntMatrix a, u, v;

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < a.cols; ++j) std::swap(a.at(i, j), a.at(k, j));
    for (std::size_t j = 0; j < u.cols; ++j) std::swap(u.at(i, j), u.at(k, j));
  }
  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t i = 0; i < a.rows; ++i) std::swap(a.at(i, j), a.at(i, k));
    for (std::size_t i = 0; i < v.rows; ++i) std::swap(v.at(i, j), v.at(i, k));
  }
  // row_i += q * row_k
  void add_row(std::size_t i, std::size_t k, const BigInt& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < a.cols; ++j) a.at(i, j) += q * a.at(k, j);
    for (std::size_t j = 0; j < u.cols; ++j) u.at(i, j) += q * u.at(k, j);
  }
  // col_j += q * col_k
  void add_col(std::size_t j, std::size_t k, const BigInt& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < a.rows; ++i) a.at(i, j) += q * a.at(i, k);
    for (std::size_t i = 0; i < v.rows; ++i) v.at(i, j) += q * v.at(i, k);
  }
  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < a.cols; ++j) a.at(i, j) = -a.at(i, j);
    for (std::size_t j = 0; j < u.cols; ++j) u.at(i, j) = -u.at(i, j);
  }

  // Moves the smallest nonzero entry of the trailing block to (t, t).
  bool place_pivot(std::size_t t) {
    std::size_t pi = 0, pj = 0;
    BigInt best = 0;
    for (std::size_t i = t; i < a.rows; ++i) {
      for (std::size_t j = t; j < a.cols; ++j) {
        const BigInt x = abs(a.at(i, j));
        if (x != 0 && (best == 0 || x < best)) {
          best = x;
          pi = i;
          pj = j;
        }
      }
    }
    if (best == 0) return false;
    swap_rows(t, pi);
    swap_cols(t, pj);
    return true;
  }

  // Quotient rounded to nearest, so remainders are at most |p|/2.
  static BigInt nearest_quotient(const BigInt& x, const BigInt& p) {
    BigInt q = x / p;
    const BigInt r = x - q * p;
    if (2 * abs(r) > abs(p)) q += ((r < 0) == (p < 0)) ? 1 : -1;
    return q;
  }

  // Clears row and column t against the pivot; false if a remainder survived.
  bool clear_cross(std::size_t t) {
    const BigInt p = a.at(t, t);
    bool clean = true;
    for (std::size_t i = t + 1; i < a.rows; ++i) {
      add_row(i, t, -nearest_quotient(a.at(i, t), p));
      clean = clean && a.at(i, t) == 0;
    }
    for (std::size_t j = t + 1; j < a.cols; ++j) {
      add_col(j, t, -nearest_quotient(a.at(t, j), p));
      clean = clean && a.at(t, j) == 0;
    }
    return clean;
  }

  // Folds a row holding an entry not divisible by the pivot into row t.
  bool enforce_divisibility(std::size_t t) {
    const BigInt p = a.at(t, t);
    for (std::size_t i = t + 1; i < a.rows; ++i) {
      for (std::size_t j = t + 1; j < a.cols; ++j) {
        if (a.at(i, j) % p != 0) {
          add_row(t, i, 1);
          return false;
        }
      }
    }
    return true;
  }
};

}  // namespace

std::vector<BigInt> SmithResult::diagonal() const {
  std::vector<BigInt> d;
  for (std::size_t i = 0; i < S.rows && i < S.cols; ++i) d.push_back(S.at(i, i));
  return d;
}

SmithResult smith_normal_form(const IntMatrix& m) {
  Reducer r{m, IntMatrix::identity(m.rows), IntMatrix::identity(m.cols)};
  const std::size_t steps = std::min(m.rows, m.cols);
  for (std::size_t t = 0; t < steps; ++t) {
    bool nonzero = true;
    for (;;) {
      if (!r.place_pivot(t)) {
        nonzero = false;
        break;
      }
      if (!r.clear_cross(t)) continue;
      if (r.enforce_divisibility(t)) break;
    }
    if (!nonzero) break;
    if (r.a.at(t, t) < 0) r.negate_row(t);
  }
  return {std::move(r.a), std::move(r.u), std::move(r.v)};
}

}  // namespace bts
