#include "sfs/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace sfs {

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in product");
  IntMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += x * b(k, j);
    }
  return p;
}

IntMatrix IntMatrix::direct_sum(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix s(a.rows_ + b.rows_, a.cols_ + b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t c = 0; c < a.cols_; ++c) s(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c) s(a.rows_ + r, a.cols_ + c) = b(r, c);
  return s;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c).get_str();
    os << '\n';
  }
  return os.str();
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

}  // namespace

std::vector<BigInt> smith_diagonal(IntMatrix m) {
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<BigInt> diag;
  BigInt q;
  for (std::size_t t = 0; t < R && t < C; ++t) {
    for (;;) {
      // Pivot: smallest nonzero |entry| in the trailing block, first in row-major scan.
      std::size_t pr = R, pc = C;
      for (std::size_t r = t; r < R; ++r)
        for (std::size_t c = t; c < C; ++c) {
          if (m(r, c) == 0) continue;
          if (pr == R || mpz_cmpabs(m(r, c).get_mpz_t(), m(pr, pc).get_mpz_t()) < 0) {
            pr = r;
            pc = c;
          }
        }
      if (pr == R) break;
      swap_rows(m, t, pr);
      swap_cols(m, t, pc);
      const BigInt piv = m(t, t);
      bool clean = true;
      for (std::size_t r = t + 1; r < R; ++r) {
        if (m(r, t) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), m(r, t).get_mpz_t(), piv.get_mpz_t());
        for (std::size_t c = t; c < C; ++c) m(r, c) -= q * m(t, c);
        if (m(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < C; ++c) {
        if (m(t, c) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), m(t, c).get_mpz_t(), piv.get_mpz_t());
        for (std::size_t r = t; r < R; ++r) m(r, c) -= q * m(r, t);
        if (m(t, c) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold any entry not divisible by the pivot into row t.
      std::size_t bad_r = R;
      for (std::size_t r = t + 1; r < R && bad_r == R; ++r)
        for (std::size_t c = t + 1; c < C; ++c)
          if (!mpz_divisible_p(m(r, c).get_mpz_t(), piv.get_mpz_t())) {
            bad_r = r;
            break;
          }
      if (bad_r == R) break;
      for (std::size_t c = t; c < C; ++c) m(t, c) += m(bad_r, c);
    }
    if (m(t, t) == 0) break;
    diag.push_back(abs(m(t, t)));
  }
  return diag;
}

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t s = k + 1;
      while (s < n && a(s, k) == 0) ++s;
      if (s == n) return 0;
      swap_rows(a, k, s);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::vector<BigInt> leading_minors(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("leading minors of a non-square matrix");
  std::vector<BigInt> out;
  for (std::size_t i = 1; i <= m.rows(); ++i) {
    IntMatrix s(i, i);
    for (std::size_t r = 0; r < i; ++r)
      for (std::size_t c = 0; c < i; ++c) s(r, c) = m(r, c);
    out.push_back(determinant(s));
  }
  return out;
}

}  // namespace sfs
