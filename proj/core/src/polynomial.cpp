#include "isoendo/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "field_context.hpp"
#include "isoendo/errors.hpp"

namespace isoendo {

namespace {

// Unreduced polynomial over F_p[t]: slot i holds 2k-1 integer components.
struct Wide {
  const FieldContext* F;
  int width;
  int slots;
  std::vector<Integer> v;

  Wide(const FieldContext* ctx, int n) : F(ctx), width(2 * ctx->k - 1), slots(n), v(static_cast<size_t>(n) * width) {}
  Integer* slot(int i) { return v.data() + static_cast<size_t>(i) * width; }
};

void require_same(const Polynomial& a, const Polynomial& b) {
  if (a.field() != b.field()) raise(ErrorKind::BadInput, "polynomials over different fields");
}

Wide mul_wide(const Polynomial& a, const Polynomial& b) {
  const FieldContext* F = a.field().context();
  const int k = F->k;
  Wide w(F, a.degree() + b.degree() + 1);
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  for (size_t i = 0; i < ac.size(); ++i) {
    const auto& ai = ac[i].coeffs();
    for (size_t j = 0; j < bc.size(); ++j) {
      const auto& bj = bc[j].coeffs();
      Integer* out = w.slot(static_cast<int>(i + j));
      for (int s = 0; s < k; ++s) {
        if (ai[s] == 0) continue;
        for (int t = 0; t < k; ++t) mpz_addmul(out[s + t].get_mpz_t(), ai[s].get_mpz_t(), bj[t].get_mpz_t());
      }
    }
  }
  return w;
}

FieldElement reduce_slot(Wide& w, int i) {
  std::vector<Integer> tmp(w.slot(i), w.slot(i) + w.width);
  std::vector<Integer> out;
  FieldOps::reduce_wide(*w.F, tmp, out);
  return FieldOps::make(w.F, std::move(out));
}

// Reduces w modulo the monic polynomial h in place, recording the quotient
// coefficients when q is non-null.
void rem_wide(Wide& w, const Polynomial& h, std::vector<FieldElement>* q) {
  const int d = h.degree();
  const int k = w.F->k;
  const auto& hc = h.coeffs();
  if (q) q->assign(std::max(0, w.slots - d), FieldElement());
  for (int i = w.slots - 1; i >= d; --i) {
    FieldElement c = reduce_slot(w, i);
    if (q) (*q)[i - d] = c;
    if (c.is_zero()) continue;
    const auto& cc = c.coeffs();
    for (int j = 0; j < d; ++j) {
      const auto& hj = hc[j].coeffs();
      Integer* out = w.slot(i - d + j);
      for (int s = 0; s < k; ++s) {
        if (cc[s] == 0) continue;
        for (int t = 0; t < k; ++t) mpz_submul(out[s + t].get_mpz_t(), cc[s].get_mpz_t(), hj[t].get_mpz_t());
      }
    }
  }
  w.slots = std::min(w.slots, d);
}

Polynomial finish(const Field& F, Wide& w) {
  std::vector<FieldElement> c;
  c.reserve(w.slots);
  for (int i = 0; i < w.slots; ++i) c.push_back(reduce_slot(w, i));
  return Polynomial(F, std::move(c));
}

Wide to_wide(const Polynomial& a) {
  const FieldContext* F = a.field().context();
  Wide w(F, a.degree() + 1);
  for (int i = 0; i <= a.degree(); ++i) {
    const auto& c = a.coeffs()[i].coeffs();
    std::copy(c.begin(), c.end(), w.slot(i));
  }
  return w;
}

}  // namespace

Polynomial::Polynomial(const Field& F, std::vector<FieldElement> coeffs) : F_(F), c_(std::move(coeffs)) {
  for (auto& c : c_) {
    if (!c.valid()) c = F_.zero();
    else if (c.field() != F_) c = F_.embed(c);
  }
  trim();
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::constant(const FieldElement& c) { return Polynomial(c.field(), {c}); }

Polynomial Polynomial::x(const Field& F) { return Polynomial(F, {F.zero(), F.one()}); }

Polynomial Polynomial::monomial(const FieldElement& c, int degree) {
  std::vector<FieldElement> v(degree + 1, c.field().zero());
  v[degree] = c;
  return Polynomial(c.field(), std::move(v));
}

Polynomial Polynomial::from_roots(const Field& F, const std::vector<FieldElement>& roots) {
  Polynomial r(F, {F.one()});
  for (const auto& z : roots) r *= Polynomial(F, {-F.embed(z), F.one()});
  return r;
}

FieldElement Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return F_.zero();
  return c_[i];
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same(*this, o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F_.zero());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same(*this, o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F_.zero());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field());
  Wide w = mul_wide(a, b);
  return finish(a.field(), w);
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const FieldElement& s) {
  FieldElement e = s.field() == F_ ? s : F_.embed(s);
  for (auto& c : c_) c *= e;
  trim();
  return *this;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

Polynomial Polynomial::derivative() const {
  std::vector<FieldElement> d;
  for (size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return Polynomial(F_, std::move(d));
}

FieldElement Polynomial::operator()(const FieldElement& x) const {
  const Field L = x.field();
  if (L == F_) {
    FieldElement r = F_.zero();
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }
  FieldElement r = L.zero();
  for (size_t i = c_.size(); i-- > 0;) r = r * x + L.embed(c_[i]);
  return r;
}

Polynomial Polynomial::base_change(const Field& L) const {
  if (L == F_) return *this;
  std::vector<FieldElement> c;
  c.reserve(c_.size());
  for (const auto& e : c_) c.push_back(L.embed(e));
  return Polynomial(L, std::move(c));
}

std::optional<Polynomial> Polynomial::descend(const Field& sub) const {
  if (sub == F_) return *this;
  std::vector<FieldElement> c;
  for (const auto& e : c_) {
    auto d = F_.project(e, sub);
    if (!d) return std::nullopt;
    c.push_back(*d);
  }
  return Polynomial(sub, std::move(c));
}

bool Polynomial::operator<(const Polynomial& o) const {
  if (degree() != o.degree()) return degree() < o.degree();
  return std::lexicographical_compare(c_.begin(), c_.end(), o.c_.begin(), o.c_.end());
}

std::vector<std::string> Polynomial::encode() const {
  std::vector<std::string> out;
  for (const auto& c : c_) out.push_back(c.encode());
  return out;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const bool scalar = c_[i].is_prime_field();
    if (!(c_[i].is_one() && i > 0)) {
      if (scalar) os << c_[i].coeff(0);
      else os << "(" << c_[i].encode() << ")";
    }
    if (i > 0) os << "x";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
  require_same(a, b);
  if (b.is_zero()) raise(ErrorKind::DivisionByZero, "polynomial division by zero");
  const Field& F = a.field();
  if (a.degree() < b.degree()) return {Polynomial(F), a};
  FieldElement inv = b.leading().inverse();
  Polynomial bm = b.is_monic() ? b : b * inv;
  Wide w = to_wide(a);
  std::vector<FieldElement> q;
  rem_wide(w, bm, &q);
  Polynomial quotient(F, std::move(q));
  if (!b.is_monic()) quotient *= inv;
  return {std::move(quotient), finish(F, w)};
}

Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).quotient; }

Polynomial operator%(const Polynomial& a, const Polynomial& b) {
  require_same(a, b);
  if (b.is_zero()) raise(ErrorKind::DivisionByZero, "polynomial reduction by zero");
  if (a.degree() < b.degree()) return a;
  Polynomial bm = b.monic();
  Wide w = to_wide(a);
  rem_wide(w, bm, nullptr);
  return finish(a.field(), w);
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  require_same(a, b);
  Polynomial r0 = a, r1 = b;
  while (!r1.is_zero()) {
    Polynomial r2 = r0 % r1;
    r0 = std::move(r1);
    r1 = std::move(r2);
  }
  return r0.monic();
}

ExtendedGcd xgcd(const Polynomial& a, const Polynomial& b) {
  require_same(a, b);
  const Field& F = a.field();
  Polynomial r0 = a, r1 = b;
  Polynomial s0(F, {F.one()}), s1(F);
  Polynomial t0(F), t1(F, {F.one()});
  while (!r1.is_zero()) {
    DivMod qr = divmod(r0, r1);
    Polynomial s2 = s0 - qr.quotient * s1;
    Polynomial t2 = t0 - qr.quotient * t1;
    r0 = std::move(r1);
    r1 = std::move(qr.remainder);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  FieldElement inv = r0.leading().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

Polynomial mulmod(const Polynomial& a, const Polynomial& b, const Polynomial& h) {
  require_same(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field());
  Wide w = mul_wide(a, b);
  if (w.slots > h.degree()) {
    if (!h.is_monic()) return finish(a.field(), w) % h;
    rem_wide(w, h, nullptr);
  }
  return finish(a.field(), w);
}

Polynomial powmod(const Polynomial& a, const Integer& e, const Polynomial& h) {
  if (e < 0) raise(ErrorKind::BadInput, "negative exponent in powmod");
  const Polynomial hm = h.monic();
  Polynomial base = a % hm;
  Polynomial result = Polynomial(a.field(), {a.field().one()}) % hm;
  const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    result = mulmod(result, result, hm);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mulmod(result, base, hm);
  }
  return result;
}

Polynomial compose_mod(const Polynomial& f, const Polynomial& g, const Polynomial& h) {
  require_same(f, g);
  const Polynomial hm = h.monic();
  const Polynomial gr = g % hm;
  Polynomial r(f.field());
  for (int i = f.degree(); i >= 0; --i) {
    r = mulmod(r, gr, hm);
    r += Polynomial::constant(f.coeffs()[i]);
  }
  return r % hm;
}

bool is_irreducible(const Polynomial& f) {
  const int n = f.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  const Field& F = f.field();
  const Polynomial fm = f.monic();
  const Polynomial x = Polynomial::x(F);
  Polynomial h = x;
  for (int i = 1; i <= n / 2; ++i) {
    h = powmod(h, F.order(), fm);
    if (gcd(h - x, fm).degree() != 0) return false;
  }
  return true;
}

namespace {

void split_linear(const Polynomial& g, std::mt19937_64& rng, std::vector<FieldElement>& out) {
  const Field& F = g.field();
  if (g.degree() == 0) return;
  if (g.degree() == 1) {
    out.push_back(-g.coeffs()[0] / g.coeffs()[1]);
    return;
  }
  const Integer half = (F.order() - 1) / 2;
  const Polynomial x = Polynomial::x(F);
  const Polynomial one(F, {F.one()});
  for (;;) {
    Polynomial probe = x + Polynomial::constant(F.random(rng));
    Polynomial h = gcd(powmod(probe, half, g) - one, g);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      split_linear(h, rng, out);
      split_linear(g / h, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<FieldElement> roots(const Polynomial& f, std::mt19937_64& rng) {
  if (f.is_zero()) raise(ErrorKind::BadInput, "roots of the zero polynomial");
  const Field& F = f.field();
  std::vector<FieldElement> out;
  if (f.degree() <= 0) return out;
  const Polynomial fm = f.monic();
  const Polynomial x = Polynomial::x(F);
  Polynomial g = gcd(powmod(x, F.order(), fm) - x, fm);
  split_linear(g, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FieldElement> roots(const Polynomial& f) {
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  return roots(f, rng);
}

std::vector<std::pair<int, Polynomial>> distinct_degree_factor(const Polynomial& f) {
  const Field& F = f.field();
  std::vector<std::pair<int, Polynomial>> out;
  Polynomial rest = f.monic();
  const Polynomial x = Polynomial::x(F);
  Polynomial h = x;
  for (int d = 1; rest.degree() >= 2 * d; ++d) {
    h = powmod(h, F.order(), rest);
    Polynomial g = gcd(h - x, rest);
    if (g.degree() > 0) {
      out.emplace_back(d, g);
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest.degree(), rest);
  return out;
}

std::vector<Polynomial> equal_degree_factor(const Polynomial& f, int d, std::mt19937_64& rng) {
  const Field& F = f.field();
  const Polynomial fm = f.monic();
  if (fm.degree() == d) return {fm};
  if (fm.degree() % d != 0) raise(ErrorKind::BadInput, "degree is not a multiple of the factor degree");
  const Integer e = (ipow(F.characteristic(), static_cast<unsigned long>(F.degree()) * d) - 1) / 2;
  const Polynomial one(F, {F.one()});
  for (;;) {
    std::vector<FieldElement> c;
    for (int i = 0; i < fm.degree(); ++i) c.push_back(F.random(rng));
    Polynomial a(F, std::move(c));
    if (a.degree() <= 0) continue;
    Polynomial g = gcd(a, fm);
    if (g.degree() == 0) g = gcd(powmod(a, e, fm) - one, fm);
    if (g.degree() > 0 && g.degree() < fm.degree()) {
      auto left = equal_degree_factor(g, d, rng);
      auto right = equal_degree_factor(fm / g, d, rng);
      left.insert(left.end(), right.begin(), right.end());
      std::sort(left.begin(), left.end());
      return left;
    }
  }
}

std::vector<Polynomial> factor_squarefree(const Polynomial& f, std::mt19937_64& rng) {
  std::vector<Polynomial> out;
  for (const auto& [d, g] : distinct_degree_factor(f)) {
    auto parts = equal_degree_factor(g, d, rng);
    out.insert(out.end(), parts.begin(), parts.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Polynomial> irreducible_factor(const Polynomial& f, int max_degree, std::mt19937_64& rng) {
  for (const auto& [d, g] : distinct_degree_factor(f)) {
    if (d > max_degree) break;
    return equal_degree_factor(g, d, rng).front();
  }
  return std::nullopt;
}

}  // namespace isoendo
