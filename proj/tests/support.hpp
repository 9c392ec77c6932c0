#pragma once

// Independent oracles shared by the unit tests. Nothing here calls the
// library code it is used to check.

#include <cmath>
#include <random>
#include <vector>

#include "pbk/algebra.hpp"
#include "pbk/braid.hpp"

namespace oracle {

using Coeffs = std::vector<long>;  // c[k] is the coefficient of t^k

inline Coeffs mul(const Coeffs& a, const Coeffs& b) {
  Coeffs out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

/// Exact long division; the divisor must be monic and divide a.
inline Coeffs div(Coeffs a, const Coeffs& b) {
  Coeffs q(a.size() - b.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    q[k] = a[k + b.size() - 1] / b.back();
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= q[k] * b[j];
  }
  for (long r : a)
    if (r != 0) throw std::logic_error("oracle division is not exact");
  return q;
}

/// t^n - 1
inline Coeffs cyclotomic_numerator(int n) {
  Coeffs c(static_cast<std::size_t>(n) + 1, 0);
  c[0] = -1;
  c[static_cast<std::size_t>(n)] = 1;
  return c;
}

/// Alexander polynomial of the torus knot T(p, q):
/// (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)).
inline Coeffs torus_alexander(int p, int q) {
  Coeffs num = mul(cyclotomic_numerator(p * q), cyclotomic_numerator(1));
  return div(div(num, cyclotomic_numerator(p)), cyclotomic_numerator(q));
}

inline pbk::LaurentPoly to_poly(const Coeffs& c) {
  std::vector<pbk::Integer> z;
  for (long x : c) z.emplace_back(x);
  return pbk::LaurentPoly(0, z);
}

/// Signature by cyclic Jacobi eigenvalue iteration in double precision.
inline int float_signature(const pbk::IntMatrix& s) {
  const std::size_t n = s.rows();
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = s(i, j).get_d();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-22) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        double t = (theta >= 0 ? 1 : -1) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        double c = 1 / std::sqrt(t * t + 1), sn = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - sn * akq;
          a[k][q] = sn * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - sn * aqk;
          a[q][k] = sn * apk + c * aqk;
        }
      }
  }
  int sig = 0;
  for (std::size_t i = 0; i < n; ++i) sig += a[i][i] > 1e-7 ? 1 : a[i][i] < -1e-7 ? -1 : 0;
  return sig;
}

/// Number of closed curves of the braid closure, by following each strand
/// through the crossings.
inline int traced_components(const std::vector<int>& letters, int strands) {
  std::vector<bool> seen(static_cast<std::size_t>(strands) + 1, false);
  int count = 0;
  for (int start = 1; start <= strands; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ++count;
    int pos = start;
    while (!seen[static_cast<std::size_t>(pos)]) {
      seen[static_cast<std::size_t>(pos)] = true;
      for (int g : letters) {
        if (pos == g) pos = g + 1;
        else if (pos == g + 1) pos = g;
      }
    }
  }
  return count;
}

inline pbk::BraidWord random_word(std::mt19937& rng, int strands, int min_len, int max_len, bool each_twice = true) {
  std::uniform_int_distribution<int> len(min_len, max_len), gen(1, strands - 1);
  while (true) {
    std::vector<int> letters(static_cast<std::size_t>(len(rng)));
    for (int& x : letters) x = gen(rng);
    if (each_twice) {
      std::vector<int> occ(static_cast<std::size_t>(strands), 0);
      for (int x : letters) ++occ[static_cast<std::size_t>(x)];
      bool ok = true;
      for (int g = 1; g < strands; ++g) ok = ok && occ[static_cast<std::size_t>(g)] >= 2;
      if (!ok) continue;
    }
    return pbk::BraidWord(strands, std::move(letters));
  }
}

}  // namespace oracle
