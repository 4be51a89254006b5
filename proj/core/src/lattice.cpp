#include "isoendo/lattice.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>

#include "isoendo/errors.hpp"

namespace isoendo {

QMat transpose(const QMat& m) {
  if (m.empty()) return {};
  QMat t(m[0].size(), QVec(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

QMat multiply(const QMat& a, const QMat& b) {
  if (!a.empty() && a[0].size() != b.size()) raise(ErrorKind::BadInput, "matrix shapes do not match");
  const size_t cols = b.empty() ? 0 : b[0].size();
  QMat c(a.size(), QVec(cols, Rational(0)));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

QMat to_rational(const ZMat& m) {
  QMat q(m.size());
  for (size_t i = 0; i < m.size(); ++i)
    for (const auto& v : m[i]) q[i].emplace_back(v);
  return q;
}

namespace {

// Row echelon form in place; returns the rank and the sign/scale product.
int eliminate(QMat& m, Rational* det) {
  const size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  int r = 0;
  if (det) *det = 1;
  for (size_t c = 0; c < cols && r < static_cast<int>(rows); ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) {
      if (det) *det = 0;
      continue;
    }
    if (piv != static_cast<size_t>(r)) {
      std::swap(m[piv], m[r]);
      if (det) *det = -*det;
    }
    if (det) *det *= m[r][c];
    for (size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace

Rational determinant(QMat m) {
  if (m.empty()) return 1;
  if (m.size() != m[0].size()) raise(ErrorKind::BadInput, "determinant of a non-square matrix");
  Rational det;
  if (eliminate(m, &det) < static_cast<int>(m.size())) return 0;
  return det;
}

int rank(QMat m) { return eliminate(m, nullptr); }

QMat inverse(const QMat& m) {
  const size_t n = m.size();
  QMat a(n, QVec(2 * n, Rational(0)));
  for (size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) raise(ErrorKind::BadInput, "inverse of a non-square matrix");
    for (size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) raise(ErrorKind::RankDeficient, "matrix is singular");
    std::swap(a[piv], a[c]);
    const Rational s = 1 / a[c][c];
    for (auto& x : a[c]) x *= s;
    for (size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  QMat inv(n);
  for (size_t i = 0; i < n; ++i) inv[i].assign(a[i].begin() + n, a[i].end());
  return inv;
}

QVec solve_row(const QMat& m, const QVec& v) { return multiply(QMat{v}, inverse(m))[0]; }

ZMat hnf(ZMat a) {
  const size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    for (;;) {
      size_t best = rows;
      for (size_t i = r; i < rows; ++i)
        if (a[i][c] != 0 && (best == rows || abs(a[i][c]) < abs(a[best][c]))) best = i;
      if (best == rows) break;
      std::swap(a[best], a[r]);
      bool done = true;
      for (size_t i = r + 1; i < rows; ++i) {
        if (a[i][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
        for (size_t j = c; j < cols; ++j) a[i][j] -= q * a[r][j];
        if (a[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (r >= rows || a[r][c] == 0) continue;
    if (a[r][c] < 0)
      for (auto& x : a[r]) x = -x;
    for (size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
      if (q != 0)
        for (size_t j = c; j < cols; ++j) a[i][j] -= q * a[r][j];
    }
    ++r;
  }
  a.resize(r);
  return a;
}

QMat lattice_basis(const QMat& generators) {
  Integer den = 1;
  for (const auto& row : generators)
    for (const auto& x : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  ZMat z;
  for (const auto& row : generators) {
    ZVec zr;
    for (const auto& x : row) zr.push_back(Integer(x * den));
    z.push_back(std::move(zr));
  }
  QMat out;
  for (const auto& row : hnf(std::move(z))) {
    QVec q;
    for (const auto& x : row) q.push_back(ratio(x, den));
    out.push_back(std::move(q));
  }
  return out;
}

namespace {

Integer round_nearest(const Rational& q) {
  Integer r;
  const Rational shifted = q + Rational(1, 2);
  mpz_fdiv_q(r.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  return r;
}

GramMatrix transform_gram(const ZMat& u, const GramMatrix& g) {
  const QMat uq = to_rational(u);
  return multiply(multiply(uq, g), transpose(uq));
}

// Gram-Schmidt data (mu, squared lengths) from a Gram matrix.
void gram_schmidt(const GramMatrix& g, QMat& mu, QVec& b) {
  const size_t n = g.size();
  mu.assign(n, QVec(n, Rational(0)));
  b.assign(n, Rational(0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < i; ++j) {
      Rational s = g[i][j];
      for (size_t k = 0; k < j; ++k) s -= mu[j][k] * mu[i][k] * b[k];
      mu[i][j] = s / b[j];
    }
    Rational s = g[i][i];
    for (size_t k = 0; k < i; ++k) s -= mu[i][k] * mu[i][k] * b[k];
    if (s <= 0) raise(ErrorKind::BadInput, "Gram matrix is not positive definite");
    b[i] = s;
  }
}

// Integer-scaled copy of a rational Gram matrix for fast exact evaluation.
struct IntForm {
  Integer scale;
  std::vector<std::vector<__int128>> m;

  explicit IntForm(const GramMatrix& g) : scale(1) {
    for (const auto& row : g)
      for (const auto& x : row) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());
    for (const auto& row : g) {
      std::vector<__int128> r;
      for (const auto& x : row) {
        const Integer v(x * scale);
        if (!v.fits_slong_p() || abs(v) > (Integer(1) << 40)) raise(ErrorKind::TooLarge, "Gram entries too large to enumerate");
        r.push_back(v.get_si());
      }
      m.push_back(std::move(r));
    }
  }

  __int128 eval(const std::vector<long>& x, const std::vector<long>& y) const {
    __int128 s = 0;
    for (size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0) continue;
      __int128 t = 0;
      for (size_t j = 0; j < y.size(); ++j) t += m[i][j] * y[j];
      s += t * x[i];
    }
    return s;
  }

  // value * scale as an exact integer; false when it is not one
  bool scaled(const Rational& v, __int128& out) const {
    const Rational s = v * scale;
    if (s.get_den() != 1) return false;
    const Integer n = s.get_num();
    if (!n.fits_slong_p()) raise(ErrorKind::TooLarge, "norm too large to enumerate");
    out = n.get_si();
    return true;
  }
};

}  // namespace

LllResult lll_reduce(const GramMatrix& g) {
  const size_t n = g.size();
  ZMat u(n, ZVec(n, Integer(0)));
  for (size_t i = 0; i < n; ++i) u[i][i] = 1;
  GramMatrix cur = g;
  QMat mu;
  QVec b;
  size_t k = 1;
  while (k < n) {
    for (size_t jj = k; jj-- > 0;) {
      gram_schmidt(cur, mu, b);
      const Integer r = round_nearest(mu[k][jj]);
      if (r == 0) continue;
      for (size_t c = 0; c < n; ++c) u[k][c] -= r * u[jj][c];
      cur = transform_gram(u, g);
    }
    gram_schmidt(cur, mu, b);
    if (b[k] >= (Rational(3, 4) - mu[k][k - 1] * mu[k][k - 1]) * b[k - 1]) {
      ++k;
    } else {
      std::swap(u[k], u[k - 1]);
      cur = transform_gram(u, g);
      k = k > 1 ? k - 1 : 1;
    }
  }
  return {cur, u};
}

namespace {

std::vector<std::vector<long>> enumerate_norm(const GramMatrix& reduced, const IntForm& form, const Rational& norm,
                                              std::size_t budget) {
  const size_t n = reduced.size();
  __int128 target;
  if (!form.scaled(norm, target)) return {};
  const QMat inv = inverse(reduced);
  std::vector<long> bound(n);
  double box = 1;
  for (size_t i = 0; i < n; ++i) {
    // x_i^2 <= N (G^-1)_ii by Cauchy-Schwarz
    const Rational r = norm * inv[i][i];
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    const Integer s = isqrt(fl);
    if (!s.fits_slong_p()) raise(ErrorKind::Budget, "short-vector box is too large");
    bound[i] = s.get_si();
    box *= 2.0 * static_cast<double>(bound[i]) + 1.0;
  }
  if (box > static_cast<double>(budget)) raise(ErrorKind::Budget, "short-vector box exceeds the enumeration budget");
  std::vector<std::vector<long>> out;
  std::vector<long> x(n, 0);
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == n) {
      if (form.eval(x, x) == target && std::any_of(x.begin(), x.end(), [](long v) { return v != 0; })) out.push_back(x);
      return;
    }
    for (long v = -bound[i]; v <= bound[i]; ++v) {
      x[i] = v;
      rec(i + 1);
    }
    x[i] = 0;
  };
  rec(0);
  return out;
}

}  // namespace

std::vector<std::vector<long>> vectors_of_norm(const GramMatrix& gram, const Rational& norm, std::size_t budget) {
  const LllResult red = lll_reduce(gram);
  const IntForm form(red.gram);
  std::vector<std::vector<long>> out;
  for (const auto& y : enumerate_norm(red.gram, form, norm, budget)) {
    std::vector<long> x(gram.size(), 0);
    for (size_t i = 0; i < y.size(); ++i)
      for (size_t c = 0; c < x.size(); ++c) x[c] += y[i] * red.transform[i][c].get_si();
    out.push_back(std::move(x));
  }
  return out;
}

bool is_isometric(const GramMatrix& g1, const GramMatrix& g2, std::size_t budget) {
  const size_t n = g1.size();
  if (g2.size() != n) return false;
  if (determinant(g1) != determinant(g2)) return false;
  const GramMatrix a = lll_reduce(g1).gram;
  const GramMatrix c = lll_reduce(g2).gram;
  const IntForm form(c);
  std::map<Rational, std::vector<std::vector<long>>> cache;
  std::vector<const std::vector<std::vector<long>>*> cand(n);
  for (size_t i = 0; i < n; ++i) {
    auto it = cache.find(a[i][i]);
    if (it == cache.end()) it = cache.emplace(a[i][i], enumerate_norm(c, form, a[i][i], budget)).first;
    if (it->second.empty()) return false;
    cand[i] = &it->second;
  }
  std::vector<std::vector<__int128>> target(n, std::vector<__int128>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (!form.scaled(a[i][j], target[i][j])) return false;

  std::vector<const std::vector<long>*> chosen(n);
  std::size_t steps = 0;
  std::function<bool(size_t)> rec = [&](size_t i) {
    if (i == n) return true;
    for (const auto& v : *cand[i]) {
      if (++steps > budget) raise(ErrorKind::Budget, "isometry search exceeds the enumeration budget");
      // the first image is fixed up to sign
      if (i == 0 && *std::find_if(v.begin(), v.end(), [](long x) { return x != 0; }) < 0) continue;
      bool ok = true;
      for (size_t j = 0; j < i && ok; ++j) ok = form.eval(*chosen[j], v) == target[j][i];
      if (!ok) continue;
      chosen[i] = &v;
      if (rec(i + 1)) return true;
    }
    return false;
  };
  // equal determinants force any Gram-preserving choice to be unimodular
  return rec(0);
}

}  // namespace isoendo
