#include "isoendo/schoof.hpp"

#include "isoendo/errors.hpp"

namespace isoendo {

EndoModM EndoModM::identity(const Curve& E0, int m) { return identity(E0, m, division_polynomial(E0, m)); }

EndoModM EndoModM::identity(const Curve& E0, int m, const Polynomial& h) {
  if (m < 3 || m % 2 == 0) raise(ErrorKind::BadInput, "m must be an odd prime");
  EndoModM f;
  f.E0_ = E0;
  f.E_ = E0;
  f.m_ = m;
  f.h_ = ResidueElement::make_modulus(h);
  const ResidueElement x(f.h_, Polynomial::x(E0.field()));
  f.g0_ = x.evaluate(E0.rhs_poly());
  f.u_ = x;
  f.v_ = x.constant(E0.field().one());
  return f;
}

EndoModM EndoModM::zero() const {
  EndoModM z = *this;
  z.zero_ = true;
  return z;
}

EndoModM EndoModM::with(ResidueElement u, ResidueElement v) const {
  EndoModM r = *this;
  r.zero_ = false;
  r.u_ = std::move(u);
  r.v_ = std::move(v);
  return r;
}

EndoModM EndoModM::operator-() const {
  if (zero_) return *this;
  return with(u_, -v_);
}

EndoModM EndoModM::dbl() const {
  if (zero_ || v_.is_zero()) return zero();
  // lambda = y (3u^2 + A) / (2 g0 v), so lambda^2 = (3u^2 + A)^2 / (4 g0 v^2)
  const FieldElement& A = E_.A();
  const ResidueElement num = u_.constant(E_.field().element(3)) * u_.square() + u_.constant(A);
  const ResidueElement den = (u_.constant(E_.field().element(2)) * g0_ * v_).inverse();
  const ResidueElement s = num * den;  // lambda / y
  const ResidueElement x3 = g0_ * s.square() - u_ - u_;
  const ResidueElement v3 = s * (u_ - x3) - v_;
  return with(x3, v3);
}

EndoModM operator+(const EndoModM& f, const EndoModM& g) {
  if (f.E_ != g.E_ || *f.h_ != *g.h_) raise(ErrorKind::BadInput, "adding maps with different codomains or moduli");
  if (f.zero_) return g;
  if (g.zero_) return f;
  const ResidueElement du = f.u_ - g.u_;
  if (du.is_zero()) {
    if (f.v_ == g.v_) return f.dbl();
    if ((f.v_ + g.v_).is_zero()) return f.zero();
    // the y-factors agree up to sign on each irreducible part of h
    throw ModulusSplit(gcd((f.v_ - g.v_).rep(), f.modulus()));
  }
  const ResidueElement s = (f.v_ - g.v_) * du.inverse();  // lambda / y
  const ResidueElement x3 = f.g0_ * s.square() - f.u_ - g.u_;
  const ResidueElement v3 = s * (f.u_ - x3) - f.v_;
  return f.with(x3, v3);
}

EndoModM EndoModM::scalar(long k) const {
  if (k < 0) return (-*this).scalar(-k);
  EndoModM r = zero();
  for (int bit = 62; bit >= 0; --bit) {
    r = r.dbl();
    if ((k >> bit) & 1) r = r + *this;
  }
  return r;
}

EndoModM EndoModM::compose(const EndoModM& g) const {
  if (g.E_ != E0_ || *g.h_ != *h_) raise(ErrorKind::BadInput, "composing maps that do not meet");
  if (zero_ || g.zero_) {
    EndoModM z = g.zero();
    z.E_ = E_;
    return z;
  }
  EndoModM r = g.with(g.u_.evaluate(u_.rep()), g.v_ * g.u_.evaluate(v_.rep()));
  r.E_ = E_;
  return r;
}

EndoModM EndoModM::then(const IsogenyMap& phi) const {
  if (phi.domain() != E_) raise(ErrorKind::BadChain, "isogeny does not start at the codomain");
  EndoModM r = *this;
  r.E_ = phi.codomain();
  if (zero_) return r;
  const ResidueElement xd = u_.evaluate(phi.x_den());
  if (xd.is_zero()) return r.zero();
  const ResidueElement yd = u_.evaluate(phi.y_den());
  r.u_ = u_.evaluate(phi.x_num()) * xd.inverse();
  r.v_ = v_ * u_.evaluate(phi.y_num()) * yd.inverse();
  return r;
}

bool EndoModM::operator==(const EndoModM& o) const {
  if (zero_ || o.zero_) return zero_ == o.zero_;
  return E_ == o.E_ && u_ == o.u_ && v_ == o.v_;
}

EndoModM reduce_mod_m(const IsogenyChain& chain, int m) {
  return reduce_mod_m(chain, m, division_polynomial(chain.domain(), m));
}

EndoModM reduce_mod_m(const IsogenyChain& chain, int m, const Polynomial& h) {
  EndoModM f = EndoModM::identity(chain.domain(), m, h);
  for (const auto& phi : chain.maps()) f = f.then(phi);
  return f;
}

namespace {

long trace_mod_factor(const IsogenyChain& chain, int m, const Polynomial& h) {
  try {
    const EndoModM id = EndoModM::identity(chain.domain(), m, h);
    EndoModM psi = id;
    for (const auto& phi : chain.maps()) psi = psi.then(phi);
    // scalar shortcut: psi = [1] or [-1] on this part of E[m]
    if (psi == id) return 2 % m;
    if (psi == -id) return m - 2;
    EndoModM psi2 = psi;
    for (const auto& phi : chain.maps()) psi2 = psi2.then(phi);
    const long n = mpz_fdiv_ui(chain.degree().get_mpz_t(), m);
    const EndoModM lhs = psi2 + id.scalar(n);
    EndoModM acc = id.zero();
    for (long tau = 0; tau < m; ++tau) {
      if (acc == lhs) return tau;
      acc = acc + psi;
    }
    raise(ErrorKind::IntegrityFailure, "no tau satisfies the characteristic equation modulo " + std::to_string(m));
  } catch (const ModulusSplit& split) {
    const Polynomial g = split.factor().monic();
    const long t1 = trace_mod_factor(chain, m, g);
    const long t2 = trace_mod_factor(chain, m, h / g);
    if (t1 != t2)
      raise(ErrorKind::IntegrityFailure, "factors of f_" + std::to_string(m) + " give different traces " +
                                             std::to_string(t1) + " and " + std::to_string(t2));
    return t1;
  }
}

}  // namespace

long trace_mod_m(const IsogenyChain& chain, int m) {
  if (!chain.is_closed()) raise(ErrorKind::BadChain, "trace needs a closed chain");
  const Integer& p = chain.domain().field().characteristic();
  if (m < 3 || !is_prime(Integer(m)) || p == m) raise(ErrorKind::BadInput, "m must be an odd prime other than p");
  if (mpz_divisible_ui_p(chain.degree().get_mpz_t(), m)) raise(ErrorKind::BadInput, "m divides the chain degree");
  return trace_mod_factor(chain, m, division_polynomial(chain.domain(), m));
}

std::vector<long> trace_primes(const Integer& p, int ell, const Integer& norm, TraceBound mode) {
  std::vector<long> out;
  Integer N = 1;
  auto done = [&] {
    if (mode == TraceBound::Paper) return N > 2 * norm;
    // N > 4 sqrt(norm) + 1  <=>  (N - 1)^2 > 16 norm
    return N > 1 && (N - 1) * (N - 1) > 16 * norm;
  };
  for (long m = 3; !done(); m = next_prime(Integer(m)).get_si()) {
    if (m == ell || p == m) continue;
    out.push_back(m);
    N *= m;
  }
  return out;
}

TraceResult trace(const IsogenyChain& chain, TraceBound mode) {
  if (!chain.is_closed()) raise(ErrorKind::BadChain, "trace needs a closed chain");
  TraceResult r;
  r.norm = chain.degree();
  const int ell = chain.maps().front().degree();
  for (const auto& phi : chain.maps())
    if (phi.degree() != ell) raise(ErrorKind::BadChain, "chain mixes isogeny degrees");
  std::vector<std::pair<Integer, Integer>> crt_input;
  for (long m : trace_primes(chain.domain().field().characteristic(), ell, r.norm, mode)) {
    const long t = trace_mod_m(chain, static_cast<int>(m));
    r.residues.emplace_back(m, t);
    crt_input.emplace_back(t, m);
  }
  r.trace = crt(crt_input);
  if (r.trace * r.trace > 4 * r.norm) raise(ErrorKind::IntegrityFailure, "trace " + r.trace.get_str() + " violates |t| <= 2 sqrt(n)");
  return r;
}

}  // namespace isoendo
