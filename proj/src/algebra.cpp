#include "pbk/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "pbk/error.hpp"

namespace pbk {

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) coeffs_.emplace_back(constant);
}

LaurentPoly::LaurentPoly(int min_degree, std::vector<Integer> coeffs)
    : min_degree_(min_degree), coeffs_(std::move(coeffs)) {
  trim();
}

LaurentPoly LaurentPoly::monomial(const Integer& c, int k) { return LaurentPoly(k, {c}); }

void LaurentPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    min_degree_ += static_cast<int>(lead);
  }
  if (coeffs_.empty()) min_degree_ = 0;
}

Integer LaurentPoly::coeff(int degree) const {
  int idx = degree - min_degree_;
  if (idx < 0 || idx >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(idx)];
}

Integer LaurentPoly::eval_at_one() const {
  Integer s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out = *this;
  if (!out.is_zero()) out.min_degree_ += k;
  return out;
}

LaurentPoly LaurentPoly::normalized() const {
  if (is_zero()) return *this;
  LaurentPoly out = shifted(-min_degree_);
  if (out.leading() < 0) out = -out;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(min_degree_, o.min_degree_);
  int hi = std::max(max_degree(), o.max_degree());
  std::vector<Integer> c(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    c[i + static_cast<std::size_t>(min_degree_ - lo)] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    c[i + static_cast<std::size_t>(o.min_degree_ - lo)] += o.coeffs_[i];
  min_degree_ = lo;
  coeffs_ = std::move(c);
  trim();
  return *this;
}

LaurentPoly operator-(LaurentPoly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return LaurentPoly(a.min_degree_ + b.min_degree_, std::move(c));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    int deg = min_degree_ + static_cast<int>(i);
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (deg == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << "t";
    if (deg != 1) out << "^" << deg;
  }
  return out.str();
}

LaurentPoly t_var() { return LaurentPoly::monomial(1, 1); }

bool equal_up_to_unit(const LaurentPoly& p, const LaurentPoly& q) {
  return p.normalized() == q.normalized();
}

bool is_unit(const LaurentPoly& p) {
  return p.coeffs().size() == 1 && abs(p.coeffs().front()) == 1;
}

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw InternalError("divide_exact: division by zero polynomial");
  if (a.is_zero()) return {};
  if (a.span() < b.span()) throw InternalError("divide_exact: inexact division");
  std::vector<Integer> rem = a.coeffs();
  const auto& d = b.coeffs();
  std::size_t qlen = rem.size() - d.size() + 1;
  std::vector<Integer> q(qlen);
  for (std::size_t k = qlen; k-- > 0;) {
    Integer& top = rem[k + d.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), d.back().get_mpz_t()))
      throw InternalError("divide_exact: inexact division");
    mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), d.back().get_mpz_t());
    for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= q[k] * d[j];
  }
  for (const auto& r : rem)
    if (r != 0) throw InternalError("divide_exact: inexact division");
  return LaurentPoly(a.min_degree() - b.min_degree(), std::move(q));
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw PreconditionError("matrix product: shape mismatch");
  IntMatrix out(a.rows(), b.cols(), Integer(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw PreconditionError("matrix sum: shape mismatch");
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw PreconditionError("matrix difference: shape mismatch");
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

IntMatrix int_matrix(const std::vector<std::vector<long>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.front().size();
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw PreconditionError("int_matrix: ragged rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

PolyMatrix alexander_matrix(const IntMatrix& a) {
  if (!a.square()) throw PreconditionError("alexander_matrix: matrix must be square");
  std::size_t n = a.rows();
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = LaurentPoly(0, {a(i, j), -a(j, i)});
  return m;
}

LaurentPoly poly_det(const PolyMatrix& input) {
  if (!input.square()) throw PreconditionError("poly_det: matrix must be square");
  const std::size_t n = input.rows();
  if (n == 0) return LaurentPoly(1);

  // Clear negative exponents row by row so the elimination runs in Z[t].
  PolyMatrix m = input;
  int shift = 0;
  for (std::size_t i = 0; i < n; ++i) {
    int lo = 0;
    bool any = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j).is_zero()) continue;
      lo = any ? std::min(lo, m(i, j).min_degree()) : m(i, j).min_degree();
      any = true;
    }
    if (!any) return {};
    for (std::size_t j = 0; j < n; ++j) m(i, j) = m(i, j).shifted(-lo);
    shift += lo;
  }

  bool negate = false;
  LaurentPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return {};
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly num = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = k == 0 ? std::move(num) : divide_exact(num, prev);
      }
      m(i, k) = LaurentPoly();
    }
    prev = m(k, k);
  }
  LaurentPoly det = m(n - 1, n - 1);
  if (negate) det = -det;
  return det.shifted(shift);
}

Integer int_det(const IntMatrix& input) {
  if (!input.square()) throw PreconditionError("int_det: matrix must be square");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix m = input;
  bool negate = false;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return negate ? Integer(-m(n - 1, n - 1)) : m(n - 1, n - 1);
}

Inertia symmetric_inertia(const IntMatrix& s) {
  if (!s.square()) throw PreconditionError("symmetric_signature: matrix must be square");
  const std::size_t n = s.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (s(i, j) != s(j, i)) throw PreconditionError("symmetric_signature: matrix not symmetric");

  Matrix<Rational> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = s(i, j);

  std::vector<std::size_t> live(n);
  for (std::size_t i = 0; i < n; ++i) live[i] = i;
  Inertia out;

  while (!live.empty()) {
    auto diag = std::find_if(live.begin(), live.end(), [&](std::size_t i) { return m(i, i) != 0; });
    if (diag != live.end()) {
      std::size_t k = *diag;
      const Rational pivot = m(k, k);
      (pivot > 0 ? out.positive : out.negative) += 1;
      live.erase(diag);
      for (std::size_t i : live) {
        if (m(i, k) == 0) continue;
        Rational f = m(i, k) / pivot;
        for (std::size_t j : live) m(i, j) -= f * m(k, j);
      }
      continue;
    }
    // No diagonal pivot: a nonzero off-diagonal entry spans a hyperbolic plane.
    std::size_t k = n, l = n;
    for (std::size_t a = 0; a < live.size() && k == n; ++a)
      for (std::size_t b = a + 1; b < live.size(); ++b)
        if (m(live[a], live[b]) != 0) {
          k = live[a];
          l = live[b];
          break;
        }
    if (k == n) break;
    out.positive += 1;
    out.negative += 1;
    const Rational b = m(k, l);
    std::erase_if(live, [&](std::size_t i) { return i == k || i == l; });
    std::vector<Rational> rk, rl;
    for (std::size_t i : live) {
      rk.push_back(m(i, k));
      rl.push_back(m(i, l));
    }
    for (std::size_t a = 0; a < live.size(); ++a)
      for (std::size_t c = 0; c < live.size(); ++c)
        m(live[a], live[c]) -= (rk[a] * rl[c] + rl[a] * rk[c]) / b;
  }
  out.zero = static_cast<int>(n) - out.positive - out.negative;
  return out;
}

int symmetric_signature(const IntMatrix& s) {
  Inertia in = symmetric_inertia(s);
  return in.positive - in.negative;
}

std::size_t matrix_rank_rational(const IntMatrix& input) {
  Matrix<Rational> m(input.rows(), input.cols());
  for (std::size_t i = 0; i < input.rows(); ++i)
    for (std::size_t j = 0; j < input.cols(); ++j) m(i, j) = input(i, j);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t p = rank;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(rank, j), m(p, j));
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (m(i, col) == 0) continue;
      Rational f = m(i, col) / m(rank, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

}  // namespace pbk
