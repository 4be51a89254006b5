#pragma once

#include <utility>
#include <vector>

#include "isoendo/isogeny.hpp"
#include "isoendo/residue.hpp"

namespace isoendo {

// A homomorphism E0[m] -> E restricted to the torsion cut out by a factor h
// of the m-th division polynomial of E0, stored as the image of the generic
// point (x, y): (u(x), y v(x)) with u, v in F[x]/(h). y^2 is always E0's
// right-hand side.
class EndoModM {
 public:
  EndoModM() = default;
  // The identity on E0[m], modulo f_m or a factor h of it.
  static EndoModM identity(const Curve& E0, int m);
  static EndoModM identity(const Curve& E0, int m, const Polynomial& h);

  const Curve& domain() const { return E0_; }
  const Curve& codomain() const { return E_; }
  int m() const { return m_; }
  const Polynomial& modulus() const { return *h_; }
  bool is_zero() const { return zero_; }
  const ResidueElement& u() const { return u_; }
  const ResidueElement& v() const { return v_; }

  EndoModM zero() const;
  EndoModM operator-() const;
  // Pointwise sum on the codomain; ModulusSplit when the summands agree on
  // some but not all of the torsion.
  friend EndoModM operator+(const EndoModM& f, const EndoModM& g);
  EndoModM dbl() const;
  EndoModM scalar(long k) const;
  // this o g; g's codomain must be this map's domain.
  EndoModM compose(const EndoModM& g) const;
  // phi o this
  EndoModM then(const IsogenyMap& phi) const;

  bool operator==(const EndoModM& o) const;
  bool operator!=(const EndoModM& o) const { return !(*this == o); }

 private:
  EndoModM with(ResidueElement u, ResidueElement v) const;

  Curve E0_, E_;
  int m_ = 0;
  std::shared_ptr<const Polynomial> h_;
  ResidueElement g0_;  // E0's x^3 + Ax + B
  bool zero_ = false;
  ResidueElement u_, v_;
};

// The chain's action on E0[m] modulo h (default f_m).
EndoModM reduce_mod_m(const IsogenyChain& chain, int m);
EndoModM reduce_mod_m(const IsogenyChain& chain, int m, const Polynomial& h);

// t mod m in [0, m) for a closed chain; m odd prime, m not p and not ell.
long trace_mod_m(const IsogenyChain& chain, int m);

enum class TraceBound {
  Sharp,  // product of primes exceeds 4 sqrt(norm) + 1
  Paper,  // product of primes exceeds 2 norm
};

struct TraceResult {
  Integer trace;
  Integer norm;
  std::vector<std::pair<long, long>> residues;  // (m, t mod m)
};

// Ascending odd primes other than p and ell until the bound is met.
std::vector<long> trace_primes(const Integer& p, int ell, const Integer& norm, TraceBound mode);

TraceResult trace(const IsogenyChain& chain, TraceBound mode = TraceBound::Sharp);

}  // namespace isoendo
