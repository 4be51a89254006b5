#include "isoendo/isogeny.hpp"

#include "isoendo/errors.hpp"

namespace isoendo {

namespace {

Polynomial descend_or_throw(const Polynomial& f, const Field& F, const char* what) {
  auto d = f.descend(F);
  if (!d) raise(ErrorKind::BadKernel, std::string("kernel is not defined over the base field (") + what + ")");
  return *d;
}

FieldElement descend_or_throw(const FieldElement& a, const Field& F, const char* what) {
  auto d = a.field().project(a, F);
  if (!d) raise(ErrorKind::BadKernel, std::string("kernel is not defined over the base field (") + what + ")");
  return *d;
}

// Nonzero points of <Q> up to sign.
std::vector<CurvePoint> half_kernel(const Curve& EL, const CurvePoint& Q, int ell) {
  std::vector<CurvePoint> pts;
  CurvePoint R = Q;
  const int count = ell == 2 ? 1 : (ell - 1) / 2;
  for (int i = 0; i < count; ++i) {
    if (R.is_infinity()) raise(ErrorKind::BadKernel, "kernel generator has order smaller than ell");
    pts.push_back(R);
    R = EL.add(R, Q);
  }
  return pts;
}

void check_kernel(const Curve& EL, const CurvePoint& Q, int ell) {
  if (ell < 2 || !is_prime(Integer(ell))) raise(ErrorKind::BadKernel, "isogeny degree must be prime");
  if (Q.is_infinity()) raise(ErrorKind::BadKernel, "kernel generator is the point at infinity");
  if (!EL.is_on_curve(Q)) raise(ErrorKind::BadKernel, "kernel generator is not on the curve");
  if (!EL.scalar_mul(ell, Q).is_infinity()) raise(ErrorKind::BadKernel, "kernel generator does not have order ell");
}

}  // namespace

CurvePoint IsogenyMap::evaluate(const CurvePoint& P) const {
  const Field L = P.is_infinity() ? domain_.field() : P.field();
  if (P.is_infinity()) return CurvePoint::infinity(L);
  FieldElement d = x_den_(P.x());
  if (d.is_zero()) return CurvePoint::infinity(L);
  FieldElement X = x_num_(P.x()) / d;
  FieldElement yd = y_den_(P.x());
  if (yd.is_zero()) raise(ErrorKind::IntegrityFailure, "isogeny y-denominator vanishes off the kernel");
  FieldElement Y = P.y() * y_num_(P.x()) / yd;
  return CurvePoint(std::move(X), std::move(Y));
}

IsogenyMap IsogenyMap::then_isomorphism(const FieldElement& u, const Curve& target) const {
  const FieldElement u2 = u * u, u3 = u2 * u;
  if (target.A() != u2 * u2 * codomain_.A() || target.B() != u3 * u3 * codomain_.B())
    raise(ErrorKind::BadInput, "scale does not map the codomain onto the target curve");
  IsogenyMap r = *this;
  r.codomain_ = target;
  r.x_num_ *= u2;
  r.y_num_ *= u3;
  r.scale_ = scale_ / u;
  return r;
}

IsogenyMap IsogenyMap::base_change(const Field& L) const {
  IsogenyMap r = *this;
  r.domain_ = domain_.base_change(L);
  r.codomain_ = codomain_.base_change(L);
  r.kernel_ = kernel_.base_change(L);
  r.x_num_ = x_num_.base_change(L);
  r.x_den_ = x_den_.base_change(L);
  r.y_num_ = y_num_.base_change(L);
  r.y_den_ = y_den_.base_change(L);
  r.scale_ = L.embed(scale_);
  return r;
}

Polynomial kernel_polynomial(const Curve& E, const CurvePoint& Q, int ell) {
  const Field L = Q.is_infinity() ? E.field() : Q.field();
  const Curve EL = E.base_change(L);
  check_kernel(EL, Q, ell);
  std::vector<FieldElement> xs;
  for (const auto& R : half_kernel(EL, Q, ell)) xs.push_back(R.x());
  return descend_or_throw(Polynomial::from_roots(L, xs), E.field(), "kernel polynomial");
}

IsogenyMap velu(const Curve& E, const CurvePoint& Q, int ell) {
  const Field& F = E.field();
  const Field L = Q.is_infinity() ? F : Q.field();
  const Curve EL = E.base_change(L);
  check_kernel(EL, Q, ell);
  const FieldElement a = EL.A(), b = EL.B();
  const Polynomial x = Polynomial::x(L);

  IsogenyMap phi;
  phi.domain_ = E;
  phi.degree_ = ell;
  phi.scale_ = F.one();
  FieldElement A2 = a, B2 = b;

  if (ell == 2) {
    if (!Q.y().is_zero()) raise(ErrorKind::BadKernel, "2-torsion generator must have y = 0");
    // X = x + t / (x - x0), t = 3 x0^2 + a
    const FieldElement& x0 = Q.x();
    const FieldElement t = 3 * x0 * x0 + a;
    Polynomial D(L, {-x0, L.one()});
    Polynomial N = x * D + Polynomial::constant(t);
    A2 = a - 5 * t;
    B2 = b - 7 * x0 * t;
    // X' = (N' D - N D') / D^2
    Polynomial Yn = N.derivative() * D - N;
    phi.kernel_ = descend_or_throw(D, F, "x-map");
    phi.x_num_ = descend_or_throw(N, F, "x-map");
    phi.x_den_ = phi.kernel_;
    phi.y_num_ = descend_or_throw(Yn, F, "y-map");
    phi.y_den_ = phi.kernel_ * phi.kernel_;
  } else {
    // X = x + sum_R [t_R / (x - x_R) + u_R / (x - x_R)^2] over half the kernel,
    // t_R = 6 x_R^2 + 2a, u_R = 4 y_R^2
    std::vector<CurvePoint> pts = half_kernel(EL, Q, ell);
    std::vector<FieldElement> xs;
    for (const auto& R : pts) xs.push_back(R.x());
    Polynomial D = Polynomial::from_roots(L, xs);
    Polynomial D2 = D * D;
    Polynomial N = x * D2;
    FieldElement tsum = L.zero(), wsum = L.zero();
    for (size_t i = 0; i < pts.size(); ++i) {
      const FieldElement& xr = pts[i].x();
      const FieldElement tr = 6 * xr * xr + 2 * a;
      const FieldElement ur = 4 * pts[i].y() * pts[i].y();
      tsum += tr;
      wsum += ur + xr * tr;
      Polynomial others(L, {L.one()});
      for (size_t k = 0; k < pts.size(); ++k)
        if (k != i) others *= Polynomial(L, {-pts[k].x(), L.one()});
      Polynomial lin(L, {ur - tr * xr, tr});  // t_R (x - x_R) + u_R
      N += lin * others * others;
    }
    A2 = a - 5 * tsum;
    B2 = b - 7 * wsum;
    // X' = (N' D - 2 N D') / D^3
    Polynomial Yn = N.derivative() * D - Polynomial::constant(L.element(2)) * N * D.derivative();
    phi.kernel_ = descend_or_throw(D, F, "kernel polynomial");
    phi.x_num_ = descend_or_throw(N, F, "x-map");
    phi.x_den_ = phi.kernel_ * phi.kernel_;
    phi.y_num_ = descend_or_throw(Yn, F, "y-map");
    phi.y_den_ = phi.x_den_ * phi.kernel_;
  }
  phi.codomain_ = Curve(descend_or_throw(A2, F, "codomain"), descend_or_throw(B2, F, "codomain"));
  return phi;
}

IsogenyMap velu_from_kernel_polynomial(const Curve& E, const Polynomial& kernel, int ell) {
  const int expected = ell == 2 ? 1 : (ell - 1) / 2;
  if (kernel.degree() != expected) raise(ErrorKind::BadKernel, "kernel polynomial has the wrong degree");
  std::mt19937_64 rng(0xfac7);
  Polynomial h = factor_squarefree(kernel.monic(), rng).front();
  IsogenyMap phi = velu(E, point_over_factor(E, h), ell);
  if (phi.kernel_polynomial() != kernel.monic()) raise(ErrorKind::BadKernel, "polynomial is not the kernel polynomial of a subgroup");
  return phi;
}

std::vector<FieldElement> isomorphism_scales(const Curve& C, const Curve& M) {
  const Field& F = C.field();
  if (M.field() != F) raise(ErrorKind::BadInput, "curves over different fields");
  // u^4 A_C = A_M, or u^6 B_C = B_M when A_C = 0
  Polynomial f = !C.A().is_zero()
                     ? Polynomial(F, {-M.A(), F.zero(), F.zero(), F.zero(), C.A()})
                     : Polynomial(F, {-M.B(), F.zero(), F.zero(), F.zero(), F.zero(), F.zero(), C.B()});
  std::vector<FieldElement> out;
  for (const auto& u : roots(f)) {
    const FieldElement u2 = u * u, u3 = u2 * u;
    if (u2 * u2 * C.A() == M.A() && u3 * u3 * C.B() == M.B()) out.push_back(u);
  }
  return out;
}

namespace {

// A generator of phi(E[ell]) over a field holding E[ell].
CurvePoint image_generator(const IsogenyMap& phi) {
  TorsionBasis tb = torsion_basis(phi.domain(), phi.degree());
  for (const auto& P : {tb.P1, tb.P2}) {
    CurvePoint R = phi.evaluate(P);
    if (!R.is_infinity()) return R;
  }
  raise(ErrorKind::IntegrityFailure, "isogeny kills the whole ell-torsion");
}

}  // namespace

Polynomial image_kernel_polynomial(const IsogenyMap& phi) {
  return kernel_polynomial(phi.codomain(), image_generator(phi), phi.degree());
}

bool dual_edge(const IsogenyMap& phi, const IsogenyMap& psi) {
  if (phi.codomain() != psi.domain() || phi.domain() != psi.codomain())
    raise(ErrorKind::BadInput, "dual_edge needs maps between the same pair of curves");
  if (phi.degree() != psi.degree()) return false;
  return image_kernel_polynomial(phi) == psi.kernel_polynomial();
}

IsogenyMap exact_dual(const IsogenyMap& phi) {
  IsogenyMap psi = velu(phi.codomain(), image_generator(phi), phi.degree());
  // psi^* omega = omega, so scaling by u leaves psi^* omega = omega / u; the
  // composite pulls back by c_phi / u, which must be ell.
  const FieldElement u = phi.scale() / phi.domain().field().element(phi.degree());
  return psi.then_isomorphism(u, phi.domain());
}

// ---------------------------------------------------------------- chains

IsogenyChain::IsogenyChain(std::vector<IsogenyMap> maps) : maps_(std::move(maps)) {
  if (maps_.empty()) raise(ErrorKind::BadChain, "empty isogeny chain");
  for (size_t i = 1; i < maps_.size(); ++i)
    if (maps_[i - 1].codomain() != maps_[i].domain())
      raise(ErrorKind::BadChain, "map " + std::to_string(i) + " does not start where map " + std::to_string(i - 1) + " ends");
}

Integer IsogenyChain::degree() const {
  Integer d = 1;
  for (const auto& m : maps_) d *= m.degree();
  return d;
}

FieldElement IsogenyChain::scale() const {
  FieldElement c = maps_.front().scale();
  for (size_t i = 1; i < maps_.size(); ++i) c *= maps_[i].scale();
  return c;
}

CurvePoint IsogenyChain::evaluate(const CurvePoint& P) const {
  CurvePoint R = P;
  for (const auto& m : maps_) R = m.evaluate(R);
  return R;
}

IsogenyChain IsogenyChain::base_change(const Field& L) const {
  std::vector<IsogenyMap> maps;
  for (const auto& m : maps_) maps.push_back(m.base_change(L));
  return IsogenyChain(std::move(maps));
}

IsogenyChain IsogenyChain::then(const IsogenyChain& next) const {
  std::vector<IsogenyMap> maps = maps_;
  maps.insert(maps.end(), next.maps_.begin(), next.maps_.end());
  return IsogenyChain(std::move(maps));
}

IsogenyChain compose_chain(std::vector<IsogenyMap> maps) { return IsogenyChain(std::move(maps)); }

}  // namespace isoendo
