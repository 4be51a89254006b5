#include "isoendo/residue.hpp"

namespace isoendo {

ModulusSplit::ModulusSplit(Polynomial factor)
    : Error(ErrorKind::ModulusSplit, "non-invertible residue, gcd of degree " + std::to_string(factor.degree())),
      factor_(std::move(factor)) {}

std::shared_ptr<const Polynomial> ResidueElement::make_modulus(const Polynomial& h) {
  if (h.degree() < 1) raise(ErrorKind::BadInput, "residue modulus must have positive degree");
  return std::make_shared<const Polynomial>(h.monic());
}

ResidueElement::ResidueElement(std::shared_ptr<const Polynomial> modulus, const Polynomial& rep)
    : h_(std::move(modulus)), rep_(rep % *h_) {}

ResidueElement ResidueElement::operator-() const {
  ResidueElement r = *this;
  r.rep_ = -rep_;
  return r;
}

ResidueElement operator+(const ResidueElement& a, const ResidueElement& b) {
  ResidueElement r = a;
  r.rep_ += b.rep_;
  return r;
}

ResidueElement operator-(const ResidueElement& a, const ResidueElement& b) {
  ResidueElement r = a;
  r.rep_ -= b.rep_;
  return r;
}

ResidueElement operator*(const ResidueElement& a, const ResidueElement& b) {
  ResidueElement r = a;
  r.rep_ = mulmod(a.rep_, b.rep_, *a.h_);
  return r;
}

ResidueElement ResidueElement::inverse() const {
  if (rep_.is_zero()) raise(ErrorKind::DivisionByZero, "inverse of zero residue");
  ExtendedGcd e = xgcd(rep_, *h_);
  if (e.g.degree() > 0) throw ModulusSplit(e.g);
  ResidueElement r = *this;
  r.rep_ = e.s % *h_;
  return r;
}

ResidueElement ResidueElement::constant(const FieldElement& c) const {
  return ResidueElement(h_, Polynomial::constant(c));
}

ResidueElement ResidueElement::lift(const Polynomial& f) const { return ResidueElement(h_, f); }

ResidueElement ResidueElement::evaluate(const Polynomial& f) const {
  ResidueElement r(h_, Polynomial(h_->field()));
  for (int i = f.degree(); i >= 0; --i) {
    r = r * *this;
    r.rep_ += Polynomial::constant(f.coeffs()[i]);
  }
  return r;
}

}  // namespace isoendo
