#include "isoendo/curve.hpp"

#include <sstream>

#include "isoendo/errors.hpp"

namespace isoendo {

// ---------------------------------------------------------------- points

CurvePoint CurvePoint::infinity(const Field& F) {
  CurvePoint P;
  P.x_ = F.zero();
  P.y_ = F.one();
  return P;
}

CurvePoint CurvePoint::embed(const Field& L) const {
  if (inf_) return infinity(L);
  return CurvePoint(L.embed(x_), L.embed(y_));
}

bool CurvePoint::operator==(const CurvePoint& o) const {
  if (inf_ || o.inf_) return inf_ == o.inf_;
  return x_ == o.x_ && y_ == o.y_;
}

std::string CurvePoint::to_string() const {
  if (inf_) return "O";
  return "(" + x_.encode() + " : " + y_.encode() + ")";
}

// ---------------------------------------------------------------- curves

Curve::Curve(FieldElement A, FieldElement B) : F_(A.field()), A_(std::move(A)), B_(std::move(B)) {
  if (B_.field() != F_) raise(ErrorKind::BadInput, "curve coefficients in different fields");
  if (discriminant().is_zero()) raise(ErrorKind::BadInput, "singular curve: 4A^3 + 27B^2 = 0");
}

Curve Curve::base_change(const Field& L) const {
  if (L == F_) return *this;
  return Curve(L.embed(A_), L.embed(B_));
}

FieldElement Curve::discriminant() const { return 4 * A_ * A_ * A_ + 27 * B_ * B_; }

FieldElement Curve::j_invariant() const {
  // 256 * 27 * A^3 / (4A^3 + 27B^2)
  return 6912 * A_ * A_ * A_ / discriminant();
}

FieldElement Curve::rhs(const FieldElement& x) const {
  const Field L = x.field();
  if (L == F_) return (x * x + A_) * x + B_;
  return (x * x + L.embed(A_)) * x + L.embed(B_);
}

Polynomial Curve::rhs_poly() const { return Polynomial(F_, {B_, A_, F_.zero(), F_.one()}); }

bool Curve::is_on_curve(const CurvePoint& P) const {
  if (P.is_infinity()) return true;
  return P.y() * P.y() == rhs(P.x());
}

CurvePoint Curve::negate(const CurvePoint& P) const {
  if (P.is_infinity()) return P;
  return CurvePoint(P.x(), -P.y());
}

CurvePoint Curve::dbl(const CurvePoint& P) const {
  if (P.is_infinity()) return P;
  if (P.y().is_zero()) return CurvePoint::infinity(P.field());
  const Field L = P.field();
  const FieldElement a = L == F_ ? A_ : L.embed(A_);
  FieldElement lambda = (3 * P.x() * P.x() + a) / (2 * P.y());
  FieldElement x3 = lambda * lambda - 2 * P.x();
  FieldElement y3 = lambda * (P.x() - x3) - P.y();
  return CurvePoint(std::move(x3), std::move(y3));
}

CurvePoint Curve::add(const CurvePoint& P, const CurvePoint& Q) const {
  if (P.is_infinity()) return Q;
  if (Q.is_infinity()) return P;
  if (P.x() == Q.x()) {
    if (P.y() == Q.y()) return dbl(P);
    return CurvePoint::infinity(P.field());
  }
  FieldElement lambda = (Q.y() - P.y()) / (Q.x() - P.x());
  FieldElement x3 = lambda * lambda - P.x() - Q.x();
  FieldElement y3 = lambda * (P.x() - x3) - P.y();
  return CurvePoint(std::move(x3), std::move(y3));
}

CurvePoint Curve::scalar_mul(const Integer& n, const CurvePoint& P) const {
  if (n < 0) return scalar_mul(-n, negate(P));
  CurvePoint R = CurvePoint::infinity(P.is_infinity() ? F_ : P.field());
  const size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    R = dbl(R);
    if (mpz_tstbit(n.get_mpz_t(), i)) R = add(R, P);
  }
  return R;
}

CurvePoint Curve::random_point(const Field& L, std::mt19937_64& rng) const {
  for (;;) {
    FieldElement x = L.random(rng);
    auto y = rhs(x).try_sqrt();
    if (!y) continue;
    if (rng() & 1) *y = -*y;
    return CurvePoint(std::move(x), std::move(*y));
  }
}

std::string Curve::to_string() const {
  return "y^2 = x^3 + (" + A_.encode() + ")x + (" + B_.encode() + ")";
}

// ---------------------------------------------------------------- models

Curve curve_from_j(const FieldElement& j) {
  const Field F = j.field();
  if (j.is_zero()) return Curve(F.zero(), F.one());
  if (j == F.element(1728)) return Curve(F.one(), F.zero());
  // E(j): y^2 + xy = x^3 + a4 x + a6 with a4 = -36/(j-1728), a6 = -1/(j-1728).
  // With a1 = 1, a2 = a3 = 0 the standard invariants are c4 = 1 - 48 a4 and
  // c6 = -1 + 72 a4 - 864 a6; completing the square (y -> y - x/2) and
  // shifting x -> x - 1/12, then scaling by u = 1/6, gives
  // y^2 = x^3 - 27 c4 x - 54 c6.
  const FieldElement d = (j - F.element(1728)).inverse();
  const FieldElement a4 = -36 * d;
  const FieldElement a6 = -d;
  const FieldElement c4 = F.one() - 48 * a4;
  const FieldElement c6 = F.element(-1) + 72 * a4 - 864 * a6;
  return Curve(-27 * c4, -54 * c6);
}

FieldElement j_invariant(const Curve& E) { return E.j_invariant(); }

Curve quadratic_twist(const Curve& E, const FieldElement& delta) {
  const FieldElement d2 = delta * delta;
  return Curve(E.A() * d2, E.B() * d2 * delta);
}

bool has_frobenius_minus_p(const Curve& E) {
  const Field& F = E.field();
  if (F.degree() != 2) raise(ErrorKind::BadInput, "expected a curve over F_{p^2}");
  const Integer& p = F.characteristic();
  const FieldElement j = E.j_invariant();
  if (j.is_zero() || j == F.element(1728)) return count_points(E) == (p + 1) * (p + 1);
  // The two twists have groups (Z/(p+1))^2 and (Z/(p-1))^2; a point outside
  // E[2] separates them.
  std::mt19937_64 rng(0x5eed);
  for (;;) {
    CurvePoint P = E.random_point(F, rng);
    if (P.y().is_zero()) continue;
    return E.scalar_mul(p + 1, P).is_infinity();
  }
}

Curve normalized_model(const FieldElement& j) {
  const Field& F = j.field();
  if (F.degree() != 2) raise(ErrorKind::BadInput, "normalized models live over F_{p^2}");
  Curve E = curve_from_j(j);
  if (has_frobenius_minus_p(E)) return E;
  Curve T = quadratic_twist(E, F.nonresidue());
  if (!has_frobenius_minus_p(T)) raise(ErrorKind::BadInput, "j = " + j.encode() + " has no model with Frobenius -p");
  return T;
}

// ---------------------------------------------------------------- counting

Integer count_points(const Curve& E, const Integer& bound) {
  const Field& F = E.field();
  const Integer& q = F.order();
  if (q > bound) raise(ErrorKind::TooLarge, "exhaustive point count over a field of size " + q.get_str());
  Integer total = 1;
  const Integer& p = F.characteristic();
  for (Integer i = 0; i < q; ++i) {
    FieldElement v = E.rhs(F.from_index(i));
    if (v.is_zero()) {
      total += 1;
      continue;
    }
    total += 1 + jacobi(v.norm(), p);
  }
  return total;
}

Integer frobenius_trace(const Curve& E, const Integer& bound) {
  return E.field().order() + 1 - count_points(E, bound);
}

bool is_supersingular(const Curve& E) {
  const Field& F = E.field();
  const Integer& p = F.characteristic();
  if (F.degree() > 1 && E.A().is_prime_field() && E.B().is_prime_field()) {
    // Supersingularity is geometric: count over the prime field instead.
    Field Fp = Field::get(p, 1);
    Curve Ep(F.project_or_throw(E.A(), Fp), F.project_or_throw(E.B(), Fp));
    return mod(frobenius_trace(Ep), p) == 0;
  }
  return mod(frobenius_trace(E), p) == 0;
}

// ---------------------------------------------------------------- division polynomials

DivisionPolynomials::DivisionPolynomials(Curve E) : E_(std::move(E)) {
  const Field& F = E_.field();
  const FieldElement &A = E_.A(), &B = E_.B();
  Polynomial g = E_.rhs_poly();
  g2_ = g * g;
  memo_[0] = Polynomial(F);
  memo_[1] = Polynomial(F, {F.one()});
  memo_[2] = Polynomial(F, {F.element(2)});
  memo_[3] = Polynomial(F, {-(A * A), 12 * B, 6 * A, F.zero(), F.element(3)});
  memo_[4] = Polynomial(F, {-8 * B * B - A * A * A, -4 * A * B, -5 * A * A, 20 * B, 5 * A, F.zero(), F.one()}) *
             F.element(4);
}

const Polynomial& DivisionPolynomials::operator()(int k) {
  if (k < 0) raise(ErrorKind::BadInput, "negative division polynomial index");
  auto it = memo_.find(k);
  if (it != memo_.end()) return it->second;
  const int m = k / 2;
  Polynomial f;
  if (k % 2 == 1) {
    Polynomial a = (*this)(m + 2), b = (*this)(m), c = (*this)(m - 1), d = (*this)(m + 1);
    Polynomial b3 = b * b * b, d3 = d * d * d;
    if (m % 2 == 0) f = g2_ * a * b3 - c * d3;
    else f = a * b3 - g2_ * c * d3;
  } else {
    Polynomial a = (*this)(m + 2), b = (*this)(m - 1), c = (*this)(m - 2), d = (*this)(m + 1);
    Polynomial half = Polynomial::constant(E_.field().element(2).inverse());
    f = (*this)(m) * (a * b * b - c * d * d) * half;
  }
  return memo_.emplace(k, std::move(f)).first->second;
}

Polynomial division_polynomial(const Curve& E, int k) {
  if (k < 1) raise(ErrorKind::BadInput, "division polynomial index must be positive");
  if (mod(Integer(k), E.field().characteristic()) == 0)
    raise(ErrorKind::Unsupported, "division polynomial index divisible by the characteristic");
  DivisionPolynomials table(E);
  return table(k);
}

// ---------------------------------------------------------------- torsion

CurvePoint point_over_factor(const Curve& E, const Polynomial& h) {
  const Field& F = E.field();
  const Integer& p = F.characteristic();
  Field L = Field::get(p, F.degree() * h.degree());
  FieldElement x = roots(h.base_change(L)).front();
  FieldElement v = E.rhs(x);
  if (!v.is_square()) {
    L = Field::get(p, 2 * L.degree());
    x = L.embed(x);
    v = L.embed(v);
  }
  return CurvePoint(x, v.sqrt());
}

TorsionBasis torsion_basis(const Curve& E, int ell, std::mt19937_64& rng) {
  const Field& F = E.field();
  if (ell < 2 || !is_prime(Integer(ell))) raise(ErrorKind::BadInput, "torsion order must be prime");
  if (F.characteristic() == ell) raise(ErrorKind::Unsupported, "p-torsion is not handled");
  Polynomial f = ell == 2 ? E.rhs_poly() : division_polynomial(E, ell);
  std::vector<Polynomial> factors = factor_squarefree(f.monic(), rng);
  std::stable_sort(factors.begin(), factors.end(),
                   [](const Polynomial& a, const Polynomial& b) { return a.degree() < b.degree(); });

  CurvePoint P1 = point_over_factor(E, factors.front());
  Curve E1 = E.base_change(P1.field());
  std::vector<FieldElement> kernel_x;
  CurvePoint R = P1;
  for (int i = 1; i < ell; ++i) {
    kernel_x.push_back(R.x());
    R = E1.add(R, P1);
  }
  for (const auto& h : factors) {
    bool meets = false;
    for (const auto& x : kernel_x)
      if (h(x).is_zero()) {
        meets = true;
        break;
      }
    if (meets) continue;
    CurvePoint P2 = point_over_factor(E, h);
    Field L = Field::join(P1.field(), P2.field());
    return {L, P1.embed(L), P2.embed(L)};
  }
  raise(ErrorKind::IntegrityFailure, "no second torsion generator found");
}

TorsionBasis torsion_basis(const Curve& E, int ell) {
  std::mt19937_64 rng(0x70551);
  return torsion_basis(E, ell, rng);
}

std::optional<Integer> point_order(const Curve& E, const CurvePoint& P, long limit) {
  Curve EL = E.base_change(P.is_infinity() ? E.field() : P.field());
  CurvePoint R = P;
  for (long n = 1; n <= limit; ++n) {
    if (R.is_infinity()) return Integer(n);
    R = EL.add(R, P);
  }
  return std::nullopt;
}

}  // namespace isoendo
