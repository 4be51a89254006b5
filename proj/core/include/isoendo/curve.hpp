#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>

#include "isoendo/field.hpp"
#include "isoendo/polynomial.hpp"

namespace isoendo {

class CurvePoint {
 public:
  CurvePoint() = default;
  CurvePoint(FieldElement x, FieldElement y) : inf_(false), x_(std::move(x)), y_(std::move(y)) {}
  static CurvePoint infinity(const Field& F);

  bool is_infinity() const { return inf_; }
  const FieldElement& x() const { return x_; }
  const FieldElement& y() const { return y_; }
  Field field() const { return x_.field(); }
  CurvePoint embed(const Field& L) const;

  bool operator==(const CurvePoint& o) const;
  bool operator!=(const CurvePoint& o) const { return !(*this == o); }
  std::string to_string() const;

 private:
  bool inf_ = true;
  FieldElement x_, y_;  // for infinity only x_ carries the field
};

// y^2 = x^3 + A x + B
class Curve {
 public:
  Curve() = default;
  Curve(FieldElement A, FieldElement B);

  const Field& field() const { return F_; }
  const FieldElement& A() const { return A_; }
  const FieldElement& B() const { return B_; }
  Curve base_change(const Field& L) const;

  FieldElement j_invariant() const;
  FieldElement discriminant() const;  // 4A^3 + 27B^2
  FieldElement rhs(const FieldElement& x) const;
  Polynomial rhs_poly() const;

  bool is_on_curve(const CurvePoint& P) const;
  CurvePoint negate(const CurvePoint& P) const;
  CurvePoint add(const CurvePoint& P, const CurvePoint& Q) const;
  CurvePoint dbl(const CurvePoint& P) const;
  CurvePoint scalar_mul(const Integer& n, const CurvePoint& P) const;
  // Uniform-ish random affine point with coordinates in L (an extension of the
  // curve's field).
  CurvePoint random_point(const Field& L, std::mt19937_64& rng) const;

  bool operator==(const Curve& o) const { return F_ == o.F_ && A_ == o.A_ && B_ == o.B_; }
  bool operator!=(const Curve& o) const { return !(*this == o); }
  std::string to_string() const;

 private:
  Field F_;
  FieldElement A_, B_;
};

// Short Weierstrass model of E(j); see the definition for the substitution.
Curve curve_from_j(const FieldElement& j);
FieldElement j_invariant(const Curve& E);

// Model of E(j) over F_{p^2} whose p^2-Frobenius acts as [-p], i.e.
// #E(F_{p^2}) = (p+1)^2. Requires j supersingular.
Curve normalized_model(const FieldElement& j);
Curve quadratic_twist(const Curve& E, const FieldElement& delta);
// Whether the p^2-Frobenius of a supersingular curve over F_{p^2} is [-p].
bool has_frobenius_minus_p(const Curve& E);

// #E(F_q) by an exhaustive sweep over x; TooLarge above `bound` elements.
Integer count_points(const Curve& E, const Integer& bound = Integer(1) << 26);
// Trace t of the q-power Frobenius, q = #field.
Integer frobenius_trace(const Curve& E, const Integer& bound = Integer(1) << 26);
bool is_supersingular(const Curve& E);

// Univariate division polynomials: f_k = psi_k for odd k and psi_k / y for
// even k, so f_2 = 2 and psi_2^2 = 4(x^3 + Ax + B) is folded into the
// recurrences. Roots of f_k for odd k are the x-coordinates of E[k] \ {O}.
class DivisionPolynomials {
 public:
  explicit DivisionPolynomials(Curve E);
  const Polynomial& operator()(int k);
  const Curve& curve() const { return E_; }

 private:
  Curve E_;
  Polynomial g2_;  // (x^3 + Ax + B)^2
  std::map<int, Polynomial> memo_;
};

Polynomial division_polynomial(const Curve& E, int k);

struct TorsionBasis {
  Field field;  // extension holding both points
  CurvePoint P1, P2;
};

TorsionBasis torsion_basis(const Curve& E, int ell, std::mt19937_64& rng);
// A point whose x-coordinate is the least root of the irreducible h, over the
// smallest extension holding its y-coordinate.
CurvePoint point_over_factor(const Curve& E, const Polynomial& h);
TorsionBasis torsion_basis(const Curve& E, int ell);

// Order of P by brute force (multiples up to `limit`); nullopt past the limit.
std::optional<Integer> point_order(const Curve& E, const CurvePoint& P, long limit);

}  // namespace isoendo
