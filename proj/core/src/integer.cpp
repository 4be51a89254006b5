#include "isoendo/integer.hpp"

#include "isoendo/errors.hpp"

namespace isoendo {

Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

Integer next_prime(const Integer& n) {
  Integer r;
  mpz_nextprime(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Integer isqrt(const Integer& n) {
  if (n < 0) raise(ErrorKind::BadInput, "isqrt of negative number");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_square(const Integer& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Integer crt(const std::vector<std::pair<Integer, Integer>>& residues) {
  Integer value = 0;
  Integer modulus = 1;
  for (const auto& [v, m] : residues) {
    if (m <= 0) raise(ErrorKind::BadModuli, "modulus must be positive");
    Integer g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), modulus.get_mpz_t(), m.get_mpz_t());
    if (g != 1) raise(ErrorKind::BadModuli, "moduli " + modulus.get_str() + " and " + m.get_str() + " share a factor");
    // value + modulus * k = v (mod m), with modulus^{-1} = s (mod m)
    Integer k = mod((v - value) * s, m);
    value += modulus * k;
    modulus *= m;
  }
  value = mod(value, modulus);
  if (2 * value > modulus) value -= modulus;
  return value;
}

int jacobi(const Integer& a, const Integer& n) { return mpz_jacobi(a.get_mpz_t(), n.get_mpz_t()); }

std::string to_string(const Integer& v) { return v.get_str(); }

std::string to_string(const Rational& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) raise(ErrorKind::DivisionByZero, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace isoendo
