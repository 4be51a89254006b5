#include "isoendo/oracle.hpp"

#include <algorithm>

#include "isoendo/errors.hpp"

namespace isoendo {

int torsion_field_degree(const Integer& p, long m) {
  const long q = mod(-p, Integer(m)).get_si();
  if (q == 0) raise(ErrorKind::BadInput, "m divides p");
  long r = q;
  for (int k = 1; k <= m; ++k, r = r * q % m)
    if (r == 1) return k;
  raise(ErrorKind::BadInput, "-p is not a unit modulo m");
}

namespace {

// E(F_{p^{2k}}) = (Z/M)^2 with M = |1 - (-p)^k| on a normalized curve.
Integer group_exponent(const Integer& p, int k) {
  Integer M = 1 - ipow(Integer(-p), k);
  return abs(M);
}

}  // namespace

CurvePoint torsion_point(const Curve& E, long m, std::mt19937_64& rng) {
  const Integer& p = E.field().characteristic();
  const int k = torsion_field_degree(p, m);
  const Field L = Field::get(p, 2 * k);
  const Curve EL = E.base_change(L);
  Integer cofactor = group_exponent(p, k);
  while (cofactor % m == 0) cofactor /= m;
  for (;;) {
    CurvePoint P = EL.scalar_mul(cofactor, EL.random_point(L, rng));
    if (P.is_infinity()) continue;
    for (CurvePoint Q = EL.scalar_mul(m, P); !Q.is_infinity(); Q = EL.scalar_mul(m, P)) P = Q;
    return P;
  }
}

std::pair<CurvePoint, CurvePoint> torsion_pair(const Curve& E, long m, std::mt19937_64& rng) {
  const CurvePoint P = torsion_point(E, m, rng);
  const Curve EL = E.base_change(P.field());
  for (;;) {
    const CurvePoint Q = torsion_point(E, m, rng);
    // Q outside <P>
    bool inside = false;
    CurvePoint R = CurvePoint::infinity(P.field());
    for (long i = 0; i < m && !inside; ++i, R = EL.add(R, P)) inside = R == Q;
    if (!inside) return {P, Q};
  }
}

std::vector<long> oracle_primes(const Integer& p, int ell, int max_degree) {
  std::vector<std::pair<int, long>> found;
  for (long m = 3; m < 400; m = next_prime(Integer(m)).get_si()) {
    if (m == ell || p == m) continue;
    const int k = torsion_field_degree(p, m);
    if (k <= max_degree) found.emplace_back(k, m);
  }
  std::sort(found.begin(), found.end());
  std::vector<long> out;
  for (const auto& [k, m] : found) out.push_back(m);
  return out;
}

Integer trace_oracle(const IsogenyChain& chain, const Integer& bound) {
  if (!chain.is_closed()) raise(ErrorKind::BadChain, "trace needs a closed chain");
  const Curve& E = chain.domain();
  const Integer n = chain.degree();
  const Integer r = isqrt(4 * n);  // |t| <= floor(2 sqrt(n))
  if (r > bound) raise(ErrorKind::TooLarge, "trace range 2 sqrt(" + n.get_str() + ") exceeds the oracle bound");
  const int ell = chain.maps().front().degree();

  std::vector<Integer> candidates;
  for (Integer t = -r; t <= r; ++t) candidates.push_back(t);
  std::mt19937_64 rng(0x0ac1e);
  for (long m : oracle_primes(E.field().characteristic(), ell, 6)) {
    if (candidates.size() <= 1) break;
    if (n % m == 0) continue;
    const CurvePoint P = torsion_point(E, m, rng);
    const Curve EL = E.base_change(P.field());
    const CurvePoint psiP = chain.evaluate(P);
    const CurvePoint lhs = EL.add(chain.evaluate(psiP), EL.scalar_mul(n % m, P));
    long tau = -1;
    CurvePoint acc = CurvePoint::infinity(P.field());
    for (long t = 0; t < m; ++t, acc = EL.add(acc, psiP))
      if (acc == lhs) {
        tau = t;
        break;
      }
    if (tau < 0) raise(ErrorKind::IntegrityFailure, "no residue modulo " + std::to_string(m) + " fits the point relation");
    std::vector<Integer> kept;
    for (const auto& t : candidates)
      if (mod(t, m) == tau) kept.push_back(t);
    candidates = std::move(kept);
  }
  if (candidates.size() != 1) raise(ErrorKind::IntegrityFailure, "oracle could not isolate the trace");
  return candidates.front();
}

}  // namespace isoendo
