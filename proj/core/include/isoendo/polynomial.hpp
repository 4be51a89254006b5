#pragma once

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "isoendo/field.hpp"

namespace isoendo {

// Dense univariate polynomial over a finite field, ascending coefficients,
// always trimmed so the leading coefficient is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(const Field& F) : F_(F) {}
  Polynomial(const Field& F, std::vector<FieldElement> coeffs);

  static Polynomial constant(const FieldElement& c);
  static Polynomial x(const Field& F);
  static Polynomial monomial(const FieldElement& c, int degree);
  // prod (x - r) over the given roots
  static Polynomial from_roots(const Field& F, const std::vector<FieldElement>& roots);

  const Field& field() const { return F_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  const std::vector<FieldElement>& coeffs() const { return c_; }
  FieldElement coeff(int i) const;
  const FieldElement& leading() const { return c_.back(); }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const FieldElement& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const FieldElement& s) { return a *= s; }

  Polynomial monic() const;
  Polynomial derivative() const;
  // Evaluates at x; x may live in any extension of the coefficient field.
  FieldElement operator()(const FieldElement& x) const;
  Polynomial base_change(const Field& L) const;
  // Coefficientwise projection into a subfield, if every coefficient lies there.
  std::optional<Polynomial> descend(const Field& sub) const;

  bool operator==(const Polynomial& o) const { return F_ == o.F_ && c_ == o.c_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }
  // Degree first, then coefficients from the constant term upward.
  bool operator<(const Polynomial& o) const;

  // Coefficient encodings, constant term first.
  std::vector<std::string> encode() const;
  std::string to_string() const;

 private:
  void trim();
  Field F_;
  std::vector<FieldElement> c_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

DivMod divmod(const Polynomial& a, const Polynomial& b);
Polynomial operator/(const Polynomial& a, const Polynomial& b);
Polynomial operator%(const Polynomial& a, const Polynomial& b);

// Monic gcd (zero if both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

struct ExtendedGcd {
  Polynomial g;  // monic
  Polynomial s;
  Polynomial t;  // s*a + t*b = g
};
ExtendedGcd xgcd(const Polynomial& a, const Polynomial& b);

Polynomial mulmod(const Polynomial& a, const Polynomial& b, const Polynomial& h);
Polynomial powmod(const Polynomial& a, const Integer& e, const Polynomial& h);
// f(g) mod h by Horner's rule in the residue ring.
Polynomial compose_mod(const Polynomial& f, const Polynomial& g, const Polynomial& h);

bool is_irreducible(const Polynomial& f);

// Distinct roots in the coefficient field, sorted.
std::vector<FieldElement> roots(const Polynomial& f, std::mt19937_64& rng);
std::vector<FieldElement> roots(const Polynomial& f);

// For squarefree monic f: pairs (d, product of all irreducible factors of degree d).
std::vector<std::pair<int, Polynomial>> distinct_degree_factor(const Polynomial& f);
// Splits a product of irreducibles of degree d into its factors (sorted).
std::vector<Polynomial> equal_degree_factor(const Polynomial& f, int d, std::mt19937_64& rng);
// All monic irreducible factors of a squarefree polynomial, sorted.
std::vector<Polynomial> factor_squarefree(const Polynomial& f, std::mt19937_64& rng);
// One irreducible factor of smallest degree <= max_degree (the least in the
// sort order), or nullopt when f has none.
std::optional<Polynomial> irreducible_factor(const Polynomial& f, int max_degree, std::mt19937_64& rng);

}  // namespace isoendo
