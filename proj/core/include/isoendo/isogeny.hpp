#pragma once

#include <vector>

#include "isoendo/curve.hpp"

namespace isoendo {

// Separable isogeny (x, y) -> (X(x), y * V(x)) with X = x_num / x_den and
// V = y_num / y_den, all polynomials over the domain's field. scale() is the
// constant c with phi^* (dX / 2Y) = c (dx / 2y).
class IsogenyMap {
 public:
  IsogenyMap() = default;

  const Curve& domain() const { return domain_; }
  const Curve& codomain() const { return codomain_; }
  int degree() const { return degree_; }
  const Polynomial& kernel_polynomial() const { return kernel_; }
  const Polynomial& x_num() const { return x_num_; }
  const Polynomial& x_den() const { return x_den_; }
  const Polynomial& y_num() const { return y_num_; }
  const Polynomial& y_den() const { return y_den_; }
  const FieldElement& scale() const { return scale_; }

  // P may have coordinates in any extension of the domain's field.
  CurvePoint evaluate(const CurvePoint& P) const;

  // (x, y) -> (u^2 x, u^3 y) applied after this map; `target` must equal the
  // image of the codomain under that isomorphism.
  IsogenyMap then_isomorphism(const FieldElement& u, const Curve& target) const;
  IsogenyMap base_change(const Field& L) const;

 private:
  friend IsogenyMap velu(const Curve& E, const CurvePoint& Q, int ell);
  Curve domain_, codomain_;
  int degree_ = 0;
  Polynomial kernel_;
  Polynomial x_num_, x_den_, y_num_, y_den_;
  FieldElement scale_;
};

// Vélu's formulas for the kernel <Q>, Q of prime order ell with coordinates in
// an extension of E's field; the maps are descended to E's field, which
// requires <Q> to be Galois-stable (BadKernel otherwise).
IsogenyMap velu(const Curve& E, const CurvePoint& Q, int ell);

// Same map, with the kernel given by its kernel polynomial over E's field.
IsogenyMap velu_from_kernel_polynomial(const Curve& E, const Polynomial& kernel, int ell);

// x-coordinates of <Q> \ {O}, one per pair +-R, as a monic polynomial over
// E's field.
Polynomial kernel_polynomial(const Curve& E, const CurvePoint& Q, int ell);

// All u in the field of C with A_M = u^4 A_C and B_M = u^6 B_C, sorted.
std::vector<FieldElement> isomorphism_scales(const Curve& C, const Curve& M);

// Kernel polynomial of phi(E[ell]) on the codomain.
Polynomial image_kernel_polynomial(const IsogenyMap& phi);
// ker(psi) == phi(E[ell])
bool dual_edge(const IsogenyMap& phi, const IsogenyMap& psi);
// The isogeny psi : codomain -> domain with psi o phi = [ell] exactly.
IsogenyMap exact_dual(const IsogenyMap& phi);

class IsogenyChain {
 public:
  IsogenyChain() = default;
  explicit IsogenyChain(std::vector<IsogenyMap> maps);

  const std::vector<IsogenyMap>& maps() const { return maps_; }
  size_t length() const { return maps_.size(); }
  const Curve& domain() const { return maps_.front().domain(); }
  const Curve& codomain() const { return maps_.back().codomain(); }
  bool is_closed() const { return !maps_.empty() && domain() == codomain(); }
  Integer degree() const;
  FieldElement scale() const;
  CurvePoint evaluate(const CurvePoint& P) const;
  IsogenyChain base_change(const Field& L) const;
  // this chain followed by `next`
  IsogenyChain then(const IsogenyChain& next) const;

 private:
  std::vector<IsogenyMap> maps_;
};

// Throws BadChain when consecutive maps do not compose.
IsogenyChain compose_chain(std::vector<IsogenyMap> maps);

}  // namespace isoendo
