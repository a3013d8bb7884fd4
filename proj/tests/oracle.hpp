#pragma once

// Test-side reimplementation of the localization sum. Shares only the catalog
// records with the engine; the arithmetic is redone here with plain loops and
// the closed form for lines:
//   h-coeff of -c^p / prod(n_i + d_i h) = c^p * sum_i (d_i / n_i) / prod(n_j).

#include "folbott/bottsum.hpp"

#include <vector>

namespace oracle {

using folbott::Rational;

inline Rational ev(const folbott::EigenWeight& e, const folbott::WeightVector& w) {
  Rational s = 0;
  for (int i = 0; i < 4; ++i) s += Rational(e.c[static_cast<std::size_t>(i)]) * Rational(w[static_cast<std::size_t>(i)]);
  return s;
}

inline Rational power(Rational b, int p) {
  Rational r = 1;
  for (int i = 0; i < p; ++i) r *= b;
  return r;
}

// Contribution of one flag (with the leading minus), as constant + coefficients of d1..d30.
inline folbott::LinearForm flag_total(const folbott::Flag& flag, const folbott::WeightVector& w, int p) {
  folbott::Catalog cat = folbott::build_catalog(flag);
  Rational flag_prod = 1;
  if (p == 13)
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b)
        flag_prod *= Rational(w[static_cast<std::size_t>(flag.perm[b])] - w[static_cast<std::size_t>(flag.perm[a])]);
  folbott::LinearForm out;
  for (const auto& pt : cat.points) {
    Rational den = flag_prod;
    for (const auto& t : pt.tangent) den *= ev(t, w);
    out.constant -= power(ev(pt.wfiber, w), p) / den;
  }
  for (const auto& l : cat.lines) {
    Rational prod = flag_prod;
    for (const auto& n : l.normal_base) prod *= ev(n, w);
    Rational c = power(ev(l.wfiber, w), p) / prod;
    for (std::size_t i = 0; i < 6; ++i)
      out.d[static_cast<std::size_t>(l.degree_slots[i] - 1)] += c / ev(l.normal_base[i], w);
  }
  return out;
}

// Rank of a list of affine forms (constant included) by plain elimination.
inline int rank(std::vector<folbott::LinearForm> rows) {
  auto get = [](const folbott::LinearForm& f, int col) -> Rational {
    return col == 0 ? f.constant : f.d[static_cast<std::size_t>(col - 1)];
  };
  auto set = [](folbott::LinearForm& f, int col, const Rational& v) {
    if (col == 0)
      f.constant = v;
    else
      f.d[static_cast<std::size_t>(col - 1)] = v;
  };
  int r = 0;
  for (int col = 30; col >= 0 && r < static_cast<int>(rows.size()); --col) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (get(rows[static_cast<std::size_t>(i)], col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[static_cast<std::size_t>(r)], rows[static_cast<std::size_t>(piv)]);
    const auto pr = rows[static_cast<std::size_t>(r)];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == r) continue;
      Rational k = get(rows[i], col) / get(pr, col);
      if (k == 0) continue;
      for (int c = 0; c <= 30; ++c) set(rows[i], c, get(rows[i], c) - k * get(pr, c));
    }
    ++r;
  }
  return r;
}

}  // namespace oracle
