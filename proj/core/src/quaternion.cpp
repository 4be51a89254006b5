#include "isoendo/quaternion.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>

#include "isoendo/errors.hpp"

namespace isoendo {

namespace {

// v-adic valuation and unit part.
int split_valuation(Integer& x, const Integer& v) {
  int k = 0;
  while (x != 0 && x % v == 0) {
    x /= v;
    ++k;
  }
  return k;
}

std::vector<Integer> prime_divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> out;
  for (Integer q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    out.push_back(q);
    while (n % q == 0) n /= q;
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace

int hilbert_symbol(const Integer& a, const Integer& b, const Integer& v) {
  if (a == 0 || b == 0) raise(ErrorKind::BadInput, "Hilbert symbol of zero");
  if (v == 0) return (a < 0 && b < 0) ? -1 : 1;
  if (!is_prime(v)) raise(ErrorKind::BadInput, "Hilbert symbol needs a prime place");
  Integer u = a, w = b;
  const int alpha = split_valuation(u, v), beta = split_valuation(w, v);
  if (v == 2) {
    auto eps = [](const Integer& x) { return mod((x - 1) / 2, 2) == 1 ? 1 : 0; };
    auto omega = [](const Integer& x) { return mod((x * x - 1) / 8, 2) == 1 ? 1 : 0; };
    const int e = eps(u) * eps(w) + alpha * omega(w) + beta * omega(u);
    return e % 2 ? -1 : 1;
  }
  int s = 1;
  if ((alpha * beta) % 2 == 1 && mod(v, 4) == 3) s = -s;
  if (beta % 2 == 1) s *= jacobi(u, v);
  if (alpha % 2 == 1) s *= jacobi(w, v);
  return s;
}

std::vector<Integer> ramified_primes(const QuatAlgebra& B) {
  std::set<Integer> places;
  places.insert(2);
  for (const auto& q : prime_divisors(B.a)) places.insert(q);
  for (const auto& q : prime_divisors(B.b)) places.insert(q);
  std::vector<Integer> out;
  for (const auto& q : places)
    if (hilbert_symbol(B.a, B.b, q) == -1) out.push_back(q);
  return out;
}

QuatAlgebra b_p_infty(const Integer& p) {
  if (!is_prime(p)) raise(ErrorKind::BadInput, "b_p_infty needs a prime");
  if (p == 2) return {-1, -1};
  if (mod(p, 4) == 3) return {-1, -p};
  if (mod(p, 8) == 5) return {-2, -p};
  for (Integer q = 3;; q = next_prime(q))
    if (mod(q, 4) == 3 && jacobi(q, p) == -1) return {-p, -q};
}

QuatElement::QuatElement(QuatAlgebra B, Rational c0, Rational c1, Rational c2, Rational c3)
    : B_(std::move(B)), c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {
  for (auto& c : c_) c.canonicalize();
}

QuatElement QuatElement::from_coords(const QuatAlgebra& B, const QVec& c) {
  if (c.size() != 4) raise(ErrorKind::BadInput, "quaternion needs four coordinates");
  return QuatElement(B, c[0], c[1], c[2], c[3]);
}

QuatElement QuatElement::conj() const { return QuatElement(B_, c_[0], -c_[1], -c_[2], -c_[3]); }

Rational QuatElement::nrd() const {
  return c_[0] * c_[0] - B_.a * c_[1] * c_[1] - B_.b * c_[2] * c_[2] + B_.a * B_.b * c_[3] * c_[3];
}

bool QuatElement::is_integral() const { return is_integer(trd()) && is_integer(nrd()); }

QuatElement QuatElement::operator-() const { return QuatElement(B_, -c_[0], -c_[1], -c_[2], -c_[3]); }

QuatElement operator+(const QuatElement& x, const QuatElement& y) {
  if (!(x.B_ == y.B_)) raise(ErrorKind::BadInput, "quaternions from different algebras");
  return QuatElement(x.B_, x.c_[0] + y.c_[0], x.c_[1] + y.c_[1], x.c_[2] + y.c_[2], x.c_[3] + y.c_[3]);
}

QuatElement operator-(const QuatElement& x, const QuatElement& y) { return x + (-y); }

QuatElement operator*(const QuatElement& x, const QuatElement& y) {
  if (!(x.B_ == y.B_)) raise(ErrorKind::BadInput, "quaternions from different algebras");
  const Rational a(x.B_.a), b(x.B_.b);
  const auto& u = x.c_;
  const auto& v = y.c_;
  return QuatElement(x.B_, u[0] * v[0] + a * u[1] * v[1] + b * u[2] * v[2] - a * b * u[3] * v[3],
                     u[0] * v[1] + u[1] * v[0] - b * u[2] * v[3] + b * u[3] * v[2],
                     u[0] * v[2] + u[2] * v[0] + a * u[1] * v[3] - a * u[3] * v[1],
                     u[0] * v[3] + u[3] * v[0] + u[1] * v[2] - u[2] * v[1]);
}

QuatElement operator*(const Rational& s, const QuatElement& x) {
  return QuatElement(x.B_, s * x.c_[0], s * x.c_[1], s * x.c_[2], s * x.c_[3]);
}

std::string QuatElement::to_string() const {
  static const char* const units[] = {"", "*i", "*j", "*ij"};
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < 4; ++k) {
    if (c_[k] == 0) continue;
    const Rational mag = abs(c_[k]);
    if (first)
      os << (c_[k] < 0 ? "-" : "");
    else
      os << (c_[k] < 0 ? " - " : " + ");
    if (k == 0 || mag != 1)
      os << isoendo::to_string(mag) << units[k];
    else
      os << units[k] + 1;
    first = false;
  }
  return first ? "0" : os.str();
}

QuatElement QuatElement::parse(const QuatAlgebra& B, const std::string& text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '*') s += ch;
  if (s.empty()) raise(ErrorKind::BadInput, "empty quaternion");
  std::array<Rational, 4> c{};
  size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') sign = s[pos++] == '-' ? -1 : 1;
    size_t end = pos;
    while (end < s.size() && (std::isdigit(static_cast<unsigned char>(s[end])) || s[end] == '/')) ++end;
    Rational coef = 1;
    if (end > pos) {
      try {
        coef = Rational(s.substr(pos, end - pos));
      } catch (const std::invalid_argument&) {
        raise(ErrorKind::BadInput, "bad coefficient in '" + text + "'");
      }
      if (coef.get_den() == 0) raise(ErrorKind::BadInput, "zero denominator in '" + text + "'");
      coef.canonicalize();
    }
    int unit = 0;
    if (s.compare(end, 2, "ij") == 0) {
      unit = 3;
      end += 2;
    } else if (end < s.size() && s[end] == 'i') {
      unit = 1;
      ++end;
    } else if (end < s.size() && s[end] == 'j') {
      unit = 2;
      ++end;
    } else if (end == pos) {
      raise(ErrorKind::BadInput, "bad term in '" + text + "'");
    }
    if (end < s.size() && s[end] != '+' && s[end] != '-') raise(ErrorKind::BadInput, "bad term in '" + text + "'");
    c[unit] += sign * coef;
    pos = end;
  }
  return QuatElement(B, c[0], c[1], c[2], c[3]);
}

Rational trace_pairing(const QuatElement& x, const QuatElement& y) {
  const QuatAlgebra& B = x.algebra();
  return 2 * (x[0] * y[0] - B.a * x[1] * y[1] - B.b * x[2] * y[2] + B.a * B.b * x[3] * y[3]);
}

GramMatrix gram_matrix(const std::vector<QuatElement>& basis) {
  GramMatrix g(basis.size(), QVec(basis.size()));
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j <= i; ++j) g[i][j] = g[j][i] = trace_pairing(basis[i], basis[j]);
  return g;
}

GramMatrix gram_from_traces(const Integer& ta, const Integer& na, const Integer& tb, const Integer& nb,
                            const Integer& tab) {
  if (ta * ta > 4 * na || tb * tb > 4 * nb)
    raise(ErrorKind::NotRealizable, "trace and norm violate t^2 <= 4n");
  const Integer m01 = ta * tb - tab;
  const std::vector<std::vector<Integer>> z = {
      {2, ta, tb, tab},
      {ta, 2 * na, m01, na * tb},
      {tb, m01, 2 * nb, nb * ta},
      {tab, na * tb, nb * ta, 2 * na * nb},
  };
  return to_rational(z);
}

Rational reduced_discriminant(const GramMatrix& gram) {
  const Rational det = abs(determinant(gram));
  if (det == 0) raise(ErrorKind::RankDeficient, "Gram matrix is singular");
  if (!is_square(det.get_num()) || !is_square(det.get_den()))
    raise(ErrorKind::IntegrityFailure, "Gram determinant " + isoendo::to_string(det) + " is not a square");
  return ratio(isqrt(det.get_num()), isqrt(det.get_den()));
}

namespace {

std::vector<QuatElement> canonical_basis(const QuatAlgebra& B, const std::vector<QuatElement>& elems) {
  QMat rows;
  for (const auto& e : elems) rows.push_back(e.to_vec());
  std::vector<QuatElement> out;
  for (const auto& r : lattice_basis(rows)) out.push_back(QuatElement::from_coords(B, r));
  return out;
}

bool integral_lattice(const std::vector<QuatElement>& basis) {
  for (const auto& e : basis)
    if (!e.is_integral()) return false;
  for (const auto& row : gram_matrix(basis))
    for (const auto& x : row)
      if (!is_integer(x)) return false;
  return true;
}

}  // namespace

QuatOrder QuatOrder::from_basis(const QuatAlgebra& B, const std::vector<QuatElement>& elems) {
  QuatOrder O;
  O.B_ = B;
  O.basis_ = canonical_basis(B, elems);
  if (O.basis_.size() != 4) raise(ErrorKind::RankDeficient, "lattice has rank " + std::to_string(O.basis_.size()));
  return O;
}

QuatOrder QuatOrder::generated_by(const QuatAlgebra& B, const std::vector<QuatElement>& gens) {
  std::vector<QuatElement> cur = gens;
  cur.push_back(QuatElement(B, 1));
  cur = canonical_basis(B, cur);
  for (;;) {
    if (!integral_lattice(cur)) raise(ErrorKind::NotRealizable, "generated ring contains a non-integral element");
    std::vector<QuatElement> next = cur;
    for (const auto& x : cur)
      for (const auto& y : cur) next.push_back(x * y);
    next = canonical_basis(B, next);
    if (next == cur) break;
    cur = std::move(next);
  }
  if (cur.size() != 4) raise(ErrorKind::RankDeficient, "generated ring has rank " + std::to_string(cur.size()));
  QuatOrder O;
  O.B_ = B;
  O.basis_ = std::move(cur);
  return O;
}

QVec QuatOrder::coordinates(const QuatElement& x) const {
  QMat m;
  for (const auto& e : basis_) m.push_back(e.to_vec());
  return solve_row(m, x.to_vec());
}

bool QuatOrder::contains(const QuatElement& x) const {
  for (const auto& c : coordinates(x))
    if (!is_integer(c)) return false;
  return true;
}

QuatOrder::Check QuatOrder::check() const {
  Check c;
  c.contains_one = contains(QuatElement(B_, 1));
  c.closed = true;
  for (const auto& x : basis_)
    for (const auto& y : basis_) c.closed = c.closed && contains(x * y);
  c.integral = integral_lattice(basis_);
  return c;
}

bool QuatOrder::operator<(const QuatOrder& o) const {
  auto key = [](const QuatOrder& O) {
    std::vector<Rational> k = {Rational(O.B_.a), Rational(O.B_.b)};
    for (const auto& e : O.basis_)
      for (const auto& c : e.coords()) k.push_back(c);
    return k;
  };
  return key(*this) < key(o);
}

namespace {

// Largest f with f^2 | n, by trial division.
Integer square_part(const Integer& n) {
  Integer m = abs(n), f = 1;
  for (Integer q = 2; q * q <= m; ++q)
    while (m % (q * q) == 0) {
      m /= q * q;
      f *= q;
    }
  return f;
}

}  // namespace

Realization realize_from_traces(const Integer& ta, const Integer& na, const Integer& tb, const Integer& nb,
                                const Integer& tab) {
  const Integer da = 4 * na - ta * ta;
  const Integer db = 4 * nb - tb * tb;
  if (da < 0 || db < 0) raise(ErrorKind::NotRealizable, "trace and norm violate t^2 <= 4n");
  if (da == 0) raise(ErrorKind::RankDeficient, "alpha is a rational scalar");
  // alpha = ta/2 + i/2 with i^2 = -da
  const Integer a = -da;
  // beta - tb/2 = lambda*i + mu*j; Trd((alpha - ta/2)(beta - tb/2)) = lambda*a
  const Rational s = Rational(tab) - ratio(ta * tb, 2);
  const Rational lambda = s / a;
  const Rational c = ratio(db, 4) + a * lambda * lambda;  // Nrd(mu*j)
  if (c < 0) raise(ErrorKind::NotRealizable, "trace data do not fit a definite quaternion algebra");
  if (c == 0) raise(ErrorKind::RankDeficient, "alpha and beta commute");
  const Integer m = c.get_num() * c.get_den();
  const Integer f = square_part(m);
  const Integer b = -(m / (f * f));
  Realization r;
  r.algebra = {a, b};
  r.alpha = QuatElement(r.algebra, ratio(ta, 2), Rational(1, 2));
  r.beta = QuatElement(r.algebra, ratio(tb, 2), lambda, ratio(f, c.get_den()));
  return r;
}

QuatOrder order_from_traces(const Integer& ta, const Integer& na, const Integer& tb, const Integer& nb,
                            const Integer& tab) {
  const Realization r = realize_from_traces(ta, na, tb, nb, tab);
  QuatOrder O = QuatOrder::from_basis(r.algebra, {QuatElement(r.algebra, 1), r.alpha, r.beta, r.alpha * r.beta});
  if (!O.check().ok()) raise(ErrorKind::IntegrityFailure, "Z<1, alpha, beta, alpha*beta> is not an order");
  return O;
}

const std::vector<int>& preferred_denominators() {
  static const std::vector<int> d = {1, 2, 3, 4, 6, 8, 12, 14, 20, 28};
  return d;
}

namespace {

std::vector<int> denominator_order(int bound) {
  std::vector<int> out;
  for (int d : preferred_denominators())
    if (d <= bound) out.push_back(d);
  for (int d = 1; d <= bound; ++d)
    if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
  return out;
}

// Calls visit(x1, x2, x3) for integer solutions of A x1^2 + Bq x2^2 + C x3^2 = R
// with positive weights, in a fixed order; stops when visit returns true.
bool ternary_solutions(const Integer& A, const Integer& Bq, const Integer& C, const Integer& R,
                       const std::function<bool(const Integer&, const Integer&, const Integer&)>& visit) {
  if (R < 0) return false;
  const Integer b3 = isqrt(R / C);
  for (Integer k3 = 0; k3 <= b3; ++k3) {
    const Integer r3 = R - C * k3 * k3;
    const Integer b2 = isqrt(r3 / Bq);
    for (Integer k2 = 0; k2 <= b2; ++k2) {
      const Integer r2 = r3 - Bq * k2 * k2;
      if (r2 % A != 0 || !is_square(r2 / A)) continue;
      const Integer x1 = isqrt(r2 / A);
      for (int s3 : {1, -1}) {
        if (k3 == 0 && s3 < 0) continue;
        for (int s2 : {1, -1}) {
          if (k2 == 0 && s2 < 0) continue;
          for (int s1 : {1, -1}) {
            if (x1 == 0 && s1 < 0) continue;
            if (visit(s1 * x1, s2 * k2, s3 * k3)) return true;
          }
        }
      }
    }
  }
  return false;
}

}  // namespace

QuatElement find_element(const QuatAlgebra& B, const Integer& t, const Integer& n, int denom_bound) {
  if (!B.is_definite()) raise(ErrorKind::BadInput, "element search needs a definite algebra");
  if (t * t > 4 * n) raise(ErrorKind::NotRealizable, "trace and norm violate t^2 <= 4n");
  for (int d : denominator_order(denom_bound)) {
    if ((d * t) % 2 != 0) continue;
    const Integer R4 = Integer(d) * d * (4 * n - t * t);
    if (R4 % 4 != 0) continue;
    QuatElement found;
    if (ternary_solutions(-B.a, -B.b, B.a * B.b, R4 / 4, [&](const Integer& x1, const Integer& x2, const Integer& x3) {
          found = QuatElement(B, ratio(t, 2), ratio(x1, d), ratio(x2, d), ratio(x3, d));
          return true;
        }))
      return found;
  }
  raise(ErrorKind::NotFound, "no element with trace " + t.get_str() + " and norm " + n.get_str() +
                                 " and denominator <= " + std::to_string(denom_bound));
}

std::pair<QuatElement, QuatElement> find_pair(const QuatAlgebra& B, const Integer& ta, const Integer& na,
                                              const Integer& tb, const Integer& nb, const Integer& tab,
                                              int denom_bound) {
  const QuatElement alpha = find_element(B, ta, na, denom_bound);
  for (int d : denominator_order(denom_bound)) {
    if ((d * tb) % 2 != 0) continue;
    const Integer R4 = Integer(d) * d * (4 * nb - tb * tb);
    if (R4 % 4 != 0) continue;
    QuatElement found;
    if (ternary_solutions(-B.a, -B.b, B.a * B.b, R4 / 4, [&](const Integer& x1, const Integer& x2, const Integer& x3) {
          QuatElement beta(B, ratio(tb, 2), ratio(x1, d), ratio(x2, d), ratio(x3, d));
          if ((alpha * beta).trd() != tab) return false;
          found = beta;
          return true;
        }))
      return {alpha, found};
  }
  raise(ErrorKind::NotFound, "no pair realizing the trace data with denominator <= " + std::to_string(denom_bound));
}

std::vector<QuatOrder> maximal_superorders(const QuatOrder& O, const Integer& p, std::size_t limit) {
  std::set<QuatOrder> seen, maximal;
  std::function<void(const QuatOrder&)> explore = [&](const QuatOrder& R) {
    if (limit && maximal.size() >= limit) return;
    if (!seen.insert(R).second) return;
    const Rational disc = R.reduced_discriminant();
    if (disc == p) {
      maximal.insert(R);
      return;
    }
    const Rational index = disc / p;
    if (!is_integer(index)) raise(ErrorKind::IntegrityFailure, "reduced discriminant is not a multiple of p");
    const auto& basis = R.basis();
    for (const auto& q : prime_divisors(index.get_num())) {
      const long qq = q.get_si();
      // lines of R/qR: vectors whose first nonzero coordinate is 1
      std::vector<long> x(4, 0);
      for (long code = 1; code < qq * qq * qq * qq; ++code) {
        long c = code;
        for (auto& xi : x) {
          xi = c % qq;
          c /= qq;
        }
        const long lead = *std::find_if(x.begin(), x.end(), [](long v) { return v != 0; });
        if (lead != 1) continue;
        QuatElement y(R.algebra(), 0);
        for (int k = 0; k < 4; ++k)
          if (x[k]) y = y + ratio(x[k], qq) * basis[k];
        if (!y.is_integral()) continue;
        std::vector<QuatElement> gens = basis;
        gens.push_back(y);
        try {
          explore(QuatOrder::generated_by(R.algebra(), gens));
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::NotRealizable) throw;
        }
      }
    }
  };
  const QuatOrder::Check c = O.check();
  if (!c.ok()) raise(ErrorKind::BadInput, "maximal_superorders needs an order");
  explore(O);
  return {maximal.begin(), maximal.end()};
}

std::vector<QuatOrder> up_to_isometry(const std::vector<QuatOrder>& orders) {
  std::vector<QuatOrder> reps;
  for (const auto& O : orders)
    if (std::none_of(reps.begin(), reps.end(), [&](const QuatOrder& R) { return is_isometric(R.gram(), O.gram()); }))
      reps.push_back(O);
  return reps;
}

}  // namespace isoendo
