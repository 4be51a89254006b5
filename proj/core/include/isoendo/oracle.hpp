#pragma once

#include <random>
#include <vector>

#include "isoendo/isogeny.hpp"

namespace isoendo {

// For a normalized curve over F_{p^2} (Frobenius acting as [-p]), E[m] is
// rational over F_{p^{2k}} with k the order of -p modulo m.
int torsion_field_degree(const Integer& p, long m);

// A point of exact order m on a normalized curve, over F_{p^{2k}}.
CurvePoint torsion_point(const Curve& E, long m, std::mt19937_64& rng);
// Two points spanning E[m].
std::pair<CurvePoint, CurvePoint> torsion_pair(const Curve& E, long m, std::mt19937_64& rng);

// Odd primes m other than p and ell, ordered by (torsion field degree, m),
// with torsion field degree at most max_degree.
std::vector<long> oracle_primes(const Integer& p, int ell, int max_degree);

// Trace of a closed chain on a normalized curve from explicit torsion points:
// t mod m is read off psi(psi(P)) + [n]P = [t] psi(P) for one point P of
// order m, and the candidates |t| <= 2 sqrt(n) are intersected across m.
// Throws TooLarge when 2 sqrt(n) exceeds `bound`.
Integer trace_oracle(const IsogenyChain& chain, const Integer& bound = Integer(1) << 20);

}  // namespace isoendo
