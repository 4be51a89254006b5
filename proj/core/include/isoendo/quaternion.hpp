#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "isoendo/lattice.hpp"

namespace isoendo {

// H(a, b) = Q + Qi + Qj + Qij with i^2 = a, j^2 = b, ij = -ji.
struct QuatAlgebra {
  Integer a, b;

  bool operator==(const QuatAlgebra&) const = default;
  bool is_definite() const { return a < 0 && b < 0; }
};

// Hilbert symbol (a, b)_v at a finite prime v, or at the real place for v = 0.
int hilbert_symbol(const Integer& a, const Integer& b, const Integer& v);
// Finite primes where H(a, b) ramifies, ascending.
std::vector<Integer> ramified_primes(const QuatAlgebra& B);

// Definite algebra ramified exactly at p and infinity:
//   p = 2: (-1, -1); p = 3 mod 4: (-1, -p); p = 5 mod 8: (-2, -p);
//   p = 1 mod 8: (-p, -q) with q the least prime, q = 3 mod 4, non-residue mod p.
QuatAlgebra b_p_infty(const Integer& p);

class QuatElement {
 public:
  QuatElement() = default;
  QuatElement(QuatAlgebra B, Rational c0, Rational c1 = 0, Rational c2 = 0, Rational c3 = 0);
  static QuatElement from_coords(const QuatAlgebra& B, const QVec& c);

  const QuatAlgebra& algebra() const { return B_; }
  const std::array<Rational, 4>& coords() const { return c_; }
  const Rational& operator[](int k) const { return c_[k]; }
  QVec to_vec() const { return {c_.begin(), c_.end()}; }

  QuatElement conj() const;
  Rational trd() const { return 2 * c_[0]; }
  Rational nrd() const;
  bool is_integral() const;

  QuatElement operator-() const;
  friend QuatElement operator+(const QuatElement& x, const QuatElement& y);
  friend QuatElement operator-(const QuatElement& x, const QuatElement& y);
  friend QuatElement operator*(const QuatElement& x, const QuatElement& y);
  friend QuatElement operator*(const Rational& s, const QuatElement& x);
  bool operator==(const QuatElement& o) const { return B_ == o.B_ && c_ == o.c_; }

  // e.g. "1/2 - 1/2*j"
  std::string to_string() const;
  // Inverse of to_string; '*' is optional. Throws BadInput.
  static QuatElement parse(const QuatAlgebra& B, const std::string& text);

 private:
  QuatAlgebra B_;
  std::array<Rational, 4> c_{};
};

// Trd(x * conj(y))
Rational trace_pairing(const QuatElement& x, const QuatElement& y);
GramMatrix gram_matrix(const std::vector<QuatElement>& basis);

// Gram matrix of (1, alpha, beta, alpha*beta) from reduced traces and norms.
// Throws NotRealizable unless t^2 <= 4n for alpha and beta.
GramMatrix gram_from_traces(const Integer& ta, const Integer& na, const Integer& tb, const Integer& nb,
                            const Integer& tab);

// sqrt(|det G|). Throws RankDeficient on a singular G.
Rational reduced_discriminant(const GramMatrix& gram);

// A rank-4 Z-lattice in a quaternion algebra, held by its canonical basis.
class QuatOrder {
 public:
  // Lattice spanned by the given elements. Throws RankDeficient if not rank 4.
  static QuatOrder from_basis(const QuatAlgebra& B, const std::vector<QuatElement>& elems);
  // Smallest lattice containing 1 and the generators that is closed under
  // multiplication. Throws NotRealizable if it contains a non-integral element.
  static QuatOrder generated_by(const QuatAlgebra& B, const std::vector<QuatElement>& gens);

  const QuatAlgebra& algebra() const { return B_; }
  const std::vector<QuatElement>& basis() const { return basis_; }
  GramMatrix gram() const { return gram_matrix(basis_); }
  Rational reduced_discriminant() const { return isoendo::reduced_discriminant(gram()); }

  struct Check {
    bool contains_one = false;
    bool closed = false;
    bool integral = false;
    bool ok() const { return contains_one && closed && integral; }
  };
  Check check() const;

  bool contains(const QuatElement& x) const;
  // Coordinates of x in the canonical basis.
  QVec coordinates(const QuatElement& x) const;
  bool operator==(const QuatOrder& o) const { return B_ == o.B_ && basis_ == o.basis_; }
  bool operator<(const QuatOrder& o) const;

 private:
  QuatAlgebra B_;
  std::vector<QuatElement> basis_;
};

// Pair (alpha, beta) realizing trace data in an algebra H(a, b) built from
// the data itself: alpha = t_a/2 + i/2, beta = t_b/2 + lambda*i + mu*j.
struct Realization {
  QuatAlgebra algebra;
  QuatElement alpha, beta;
};
// Throws NotRealizable when the data do not fit a definite quaternion algebra
// and RankDeficient when alpha and beta commute.
Realization realize_from_traces(const Integer& ta, const Integer& na, const Integer& tb, const Integer& nb,
                                const Integer& tab);

// Order Z<1, alpha, beta, alpha*beta> for realized trace data.
QuatOrder order_from_traces(const Integer& ta, const Integer& na, const Integer& tb, const Integer& nb,
                            const Integer& tab);

// Denominators tried first by the element searches.
const std::vector<int>& preferred_denominators();

// Some x in B with Trd x = t and Nrd x = n whose coordinates share a
// denominator d <= denom_bound. Throws NotFound.
QuatElement find_element(const QuatAlgebra& B, const Integer& t, const Integer& n, int denom_bound);

// alpha, beta in B with the given traces, norms and Trd(alpha*beta), alpha
// as returned by find_element. Throws NotFound.
std::pair<QuatElement, QuatElement> find_pair(const QuatAlgebra& B, const Integer& ta, const Integer& na,
                                              const Integer& tb, const Integer& nb, const Integer& tab,
                                              int denom_bound);

// Maximal orders containing O, where maximal means reduced discriminant equal
// to the algebra's ramified prime p. All of them when limit is 0, otherwise
// the search stops after `limit` are found.
std::vector<QuatOrder> maximal_superorders(const QuatOrder& O, const Integer& p, std::size_t limit = 0);

// One representative per isometry class of Gram matrices, in input order.
std::vector<QuatOrder> up_to_isometry(const std::vector<QuatOrder>& orders);

}  // namespace isoendo
