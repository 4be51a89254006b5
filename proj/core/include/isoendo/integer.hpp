#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace isoendo {

using Integer = mpz_class;
using Rational = mpq_class;

// Reduction into [0, m).
Integer mod(const Integer& a, const Integer& m);

bool is_prime(const Integer& n);
Integer next_prime(const Integer& n);

// floor(sqrt(n)) for n >= 0
Integer isqrt(const Integer& n);
bool is_square(const Integer& n);

Integer ipow(const Integer& base, unsigned long e);

// Unique r with r = v_i mod m_i and -N/2 < r <= N/2, N the product of moduli.
// Throws BadModuli when the moduli are not pairwise coprime.
Integer crt(const std::vector<std::pair<Integer, Integer>>& residues);

// num/den in lowest terms. Throws DivisionByZero when den == 0.
Rational ratio(const Integer& num, const Integer& den);

// Legendre/Jacobi symbol (a/n) for odd n.
int jacobi(const Integer& a, const Integer& n);

std::string to_string(const Integer& v);
std::string to_string(const Rational& v);

}  // namespace isoendo
