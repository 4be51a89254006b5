#pragma once

#include <memory>

#include "isoendo/errors.hpp"
#include "isoendo/polynomial.hpp"

namespace isoendo {

// Raised when an element of F[x]/(h) turns out to be a nonzero non-unit;
// factor() is the nontrivial monic gcd with h.
class ModulusSplit : public Error {
 public:
  explicit ModulusSplit(Polynomial factor);
  const Polynomial& factor() const { return factor_; }

 private:
  Polynomial factor_;
};

// Element of F[x]/(h), represented by its remainder of degree < deg h.
class ResidueElement {
 public:
  ResidueElement() = default;
  ResidueElement(std::shared_ptr<const Polynomial> modulus, const Polynomial& rep);

  static std::shared_ptr<const Polynomial> make_modulus(const Polynomial& h);

  const Polynomial& rep() const { return rep_; }
  const Polynomial& modulus() const { return *h_; }
  const std::shared_ptr<const Polynomial>& modulus_ptr() const { return h_; }

  bool is_zero() const { return rep_.is_zero(); }
  bool is_one() const { return rep_.is_one(); }

  ResidueElement operator-() const;
  friend ResidueElement operator+(const ResidueElement& a, const ResidueElement& b);
  friend ResidueElement operator-(const ResidueElement& a, const ResidueElement& b);
  friend ResidueElement operator*(const ResidueElement& a, const ResidueElement& b);
  ResidueElement square() const { return *this * *this; }
  // Throws ModulusSplit for a nonzero non-unit and DivisionByZero for zero.
  ResidueElement inverse() const;

  ResidueElement constant(const FieldElement& c) const;
  ResidueElement lift(const Polynomial& f) const;
  // f evaluated at this element.
  ResidueElement evaluate(const Polynomial& f) const;

  bool operator==(const ResidueElement& o) const { return rep_ == o.rep_; }
  bool operator!=(const ResidueElement& o) const { return rep_ != o.rep_; }

 private:
  std::shared_ptr<const Polynomial> h_;
  Polynomial rep_;
};

}  // namespace isoendo
