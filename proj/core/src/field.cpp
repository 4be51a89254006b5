#include "isoendo/field.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "field_context.hpp"
#include "isoendo/errors.hpp"
#include "isoendo/polynomial.hpp"

namespace isoendo {

namespace {

std::mutex g_registry_mu;
std::map<std::pair<std::string, int>, std::unique_ptr<FieldContext>>& registry() {
  static std::map<std::pair<std::string, int>, std::unique_ptr<FieldContext>> r;
  return r;
}

Integer inv_mod(const Integer& a, const Integer& p) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0) raise(ErrorKind::DivisionByZero, "inverse of zero");
  return r;
}

void finish_context(FieldContext& F) {
  F.q = ipow(F.p, F.k);
  F.modulus_support.clear();
  for (int j = 0; j < F.k; ++j)
    if (F.modulus[j] != 0) F.modulus_support.push_back(j);
  Integer odd = F.q - 1;
  F.two_adicity = 0;
  while (odd % 2 == 0) {
    odd /= 2;
    ++F.two_adicity;
  }
  F.odd_part = odd;
}

// Enumerates monic degree-k polynomials over F_p by increasing base-p value of
// (c_{k-1}, ..., c_0) and returns the first irreducible one.
std::vector<Integer> least_irreducible(const Field& Fp, int k) {
  const Integer& p = Fp.characteristic();
  for (Integer n = 0;; ++n) {
    std::vector<FieldElement> c;
    Integer rest = n;
    for (int i = 0; i < k; ++i) {
      c.push_back(Fp.element(Integer(rest % p)));
      rest /= p;
    }
    if (rest != 0) break;
    if (c[0].is_zero()) continue;
    c.push_back(Fp.one());
    Polynomial f(Fp, c);
    if (is_irreducible(f)) {
      std::vector<Integer> m;
      for (const auto& e : f.coeffs()) m.push_back(e.coeff(0));
      return m;
    }
  }
  raise(ErrorKind::IntegrityFailure, "no irreducible polynomial found");
}

}  // namespace

void FieldOps::reduce_wide(const FieldContext& F, std::vector<Integer>& wide, std::vector<Integer>& out) {
  const int k = F.k;
  out.resize(k);
  if (k == 1) {
    mpz_mod(out[0].get_mpz_t(), wide[0].get_mpz_t(), F.p.get_mpz_t());
    return;
  }
  Integer c;
  for (int i = static_cast<int>(wide.size()) - 1; i >= k; --i) {
    mpz_mod(c.get_mpz_t(), wide[i].get_mpz_t(), F.p.get_mpz_t());
    if (c == 0) continue;
    for (int j : F.modulus_support) mpz_submul(wide[i - k + j].get_mpz_t(), c.get_mpz_t(), F.modulus[j].get_mpz_t());
  }
  for (int i = 0; i < k; ++i) mpz_mod(out[i].get_mpz_t(), wide[i].get_mpz_t(), F.p.get_mpz_t());
}

void FieldOps::mul_into(const FieldContext& F, const std::vector<Integer>& a, const std::vector<Integer>& b,
                        std::vector<Integer>& out) {
  const int k = F.k;
  if (k == 1) {
    out.resize(1);
    mpz_mul(out[0].get_mpz_t(), a[0].get_mpz_t(), b[0].get_mpz_t());
    mpz_mod(out[0].get_mpz_t(), out[0].get_mpz_t(), F.p.get_mpz_t());
    return;
  }
  std::vector<Integer> wide(2 * k - 1);
  for (int i = 0; i < k; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < k; ++j) mpz_addmul(wide[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  reduce_wide(F, wide, out);
}

// ---------------------------------------------------------------- Field

Field Field::get(const Integer& p, int k) {
  if (k < 1) raise(ErrorKind::BadInput, "extension degree must be positive");
  if (p < 2 || !is_prime(p)) raise(ErrorKind::BadInput, "characteristic " + p.get_str() + " is not prime");
  auto key = std::make_pair(p.get_str(), k);
  {
    std::lock_guard lock(g_registry_mu);
    auto it = registry().find(key);
    if (it != registry().end()) return Field(it->second.get());
  }
  const FieldContext* prime_ctx = nullptr;
  if (k > 1) prime_ctx = get(p, 1).ctx_;

  auto ctx = std::make_unique<FieldContext>();
  ctx->p = p;
  ctx->k = k;
  if (k == 1) {
    ctx->modulus = {Integer(0), Integer(1)};
    ctx->prime = ctx.get();
    finish_context(*ctx);
  } else {
    ctx->prime = prime_ctx;
    ctx->modulus = least_irreducible(Field(prime_ctx), k);
    finish_context(*ctx);
    // Frobenius table: t^{p i} for i < k
    Field self(ctx.get());
    FieldElement tp = self.gen().pow(p);
    FieldElement acc = self.one();
    for (int i = 0; i < k; ++i) {
      ctx->frob.push_back(acc.coeffs());
      acc *= tp;
    }
  }

  std::lock_guard lock(g_registry_mu);
  auto [it, inserted] = registry().emplace(key, std::move(ctx));
  (void)inserted;
  return Field(it->second.get());
}

const Integer& Field::characteristic() const { return ctx_->p; }
int Field::degree() const { return ctx_->k; }
const Integer& Field::order() const { return ctx_->q; }
const std::vector<Integer>& Field::modulus() const { return ctx_->modulus; }

FieldElement Field::zero() const { return FieldElement(ctx_, std::vector<Integer>(ctx_->k)); }
FieldElement Field::one() const { return element(1); }
FieldElement Field::gen() const {
  if (ctx_->k == 1) return zero();  // t = 0 modulo m(t) = t
  std::vector<Integer> c(ctx_->k);
  c[1] = 1;
  return FieldElement(ctx_, std::move(c));
}
FieldElement Field::element(long v) const { return element(Integer(v)); }
FieldElement Field::element(const Integer& v) const {
  std::vector<Integer> c(ctx_->k);
  c[0] = mod(v, ctx_->p);
  return FieldElement(ctx_, std::move(c));
}
FieldElement Field::element(std::vector<Integer> coeffs) const { return FieldElement(*this, std::move(coeffs)); }

FieldElement Field::decode(std::string_view text) const {
  std::vector<Integer> c;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string part(text.substr(start, end - start));
    part.erase(std::remove_if(part.begin(), part.end(), ::isspace), part.end());
    if (part.empty()) raise(ErrorKind::BadInput, "empty coefficient in field element '" + std::string(text) + "'");
    Integer v;
    if (v.set_str(part, 10) != 0) raise(ErrorKind::BadInput, "bad coefficient '" + part + "'");
    c.push_back(v);
    start = end + 1;
  }
  if (static_cast<int>(c.size()) > ctx_->k) raise(ErrorKind::BadInput, "too many coefficients for F_{p^k}");
  return element(std::move(c));
}

FieldElement Field::random(std::mt19937_64& rng) const {
  const size_t words = mpz_sizeinbase(ctx_->p.get_mpz_t(), 2) / 64 + 2;
  std::vector<Integer> c(ctx_->k);
  for (auto& v : c) {
    Integer acc = 0;
    for (size_t w = 0; w < words; ++w) {
      mpz_mul_2exp(acc.get_mpz_t(), acc.get_mpz_t(), 64);
      mpz_add_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(rng()));
    }
    v = mod(acc, ctx_->p);
  }
  return FieldElement(ctx_, std::move(c));
}

FieldElement Field::from_index(Integer index) const {
  std::vector<Integer> c(ctx_->k);
  for (auto& v : c) {
    v = index % ctx_->p;
    index /= ctx_->p;
  }
  return FieldElement(ctx_, std::move(c));
}

const FieldElement& Field::nonresidue() const {
  std::lock_guard lock(ctx_->mu);
  if (!ctx_->nonresidue) {
    for (Integer n = 2;; ++n) {
      FieldElement z = from_index(n);
      if (!z.is_square()) {
        ctx_->nonresidue = std::make_unique<FieldElement>(z);
        break;
      }
    }
  }
  return *ctx_->nonresidue;
}

bool Field::contains(const Field& sub) const {
  return sub.ctx_->p == ctx_->p && ctx_->k % sub.ctx_->k == 0;
}

Field Field::join(const Field& a, const Field& b) {
  if (a.characteristic() != b.characteristic()) raise(ErrorKind::BadInput, "fields of different characteristic");
  return get(a.characteristic(), std::lcm(a.degree(), b.degree()));
}

namespace {

std::shared_ptr<const EmbeddingData> embedding_data(const FieldContext* big, const FieldContext* sub) {
  {
    std::lock_guard lock(big->mu);
    auto it = big->embeddings.find(sub);
    if (it != big->embeddings.end()) return it->second;
  }
  const int k = big->k, j = sub->k;
  const Integer& p = big->p;
  Field L = Field::get(p, k);
  Field S = Field::get(p, j);
  // image of the subfield generator: least root of its modulus in L
  std::vector<FieldElement> mc;
  for (const auto& c : sub->modulus) mc.push_back(L.element(c));
  Polynomial m(L, mc);
  auto rts = roots(m);
  if (static_cast<int>(rts.size()) != j) raise(ErrorKind::IntegrityFailure, "subfield modulus does not split");
  FieldElement g = rts.front();

  auto data = std::make_shared<EmbeddingData>();
  data->sub_degree = j;
  FieldElement acc = L.one();
  for (int i = 0; i < j; ++i) {
    data->powers.push_back(acc.coeffs());
    acc *= g;
  }
  // Left inverse by Gauss-Jordan on [M | I_k], M the k x j matrix of powers.
  std::vector<std::vector<Integer>> aug(k, std::vector<Integer>(j + k));
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < j; ++c) aug[r][c] = data->powers[c][r];
    aug[r][j + r] = 1;
  }
  int row = 0;
  for (int col = 0; col < j; ++col) {
    int piv = -1;
    for (int r = row; r < k; ++r)
      if (aug[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) raise(ErrorKind::IntegrityFailure, "embedding matrix is singular");
    std::swap(aug[piv], aug[row]);
    Integer inv = inv_mod(aug[row][col], p);
    for (auto& v : aug[row]) v = mod(v * inv, p);
    for (int r = 0; r < k; ++r) {
      if (r == row || aug[r][col] == 0) continue;
      Integer f = aug[r][col];
      for (int c = 0; c < j + k; ++c) aug[r][c] = mod(aug[r][c] - f * aug[row][c], p);
    }
    ++row;
  }
  for (int r = 0; r < j; ++r) data->left_inverse.emplace_back(aug[r].begin() + j, aug[r].end());
  (void)S;

  std::lock_guard lock(big->mu);
  auto [it, inserted] = big->embeddings.emplace(sub, std::move(data));
  (void)inserted;
  return it->second;
}

}  // namespace

FieldElement Field::embed(const FieldElement& a) const {
  const FieldContext* sub = a.ctx_;
  if (sub == ctx_) return a;
  if (!contains(Field(sub))) raise(ErrorKind::BadInput, "cannot embed F_{p^" + std::to_string(sub->k) + "} into F_{p^" + std::to_string(ctx_->k) + "}");
  std::vector<Integer> c(ctx_->k);
  if (sub->k == 1) {
    c[0] = a.c_[0];
    return FieldElement(ctx_, std::move(c));
  }
  auto data = embedding_data(ctx_, sub);
  for (int i = 0; i < sub->k; ++i) {
    if (a.c_[i] == 0) continue;
    for (int r = 0; r < ctx_->k; ++r) mpz_addmul(c[r].get_mpz_t(), a.c_[i].get_mpz_t(), data->powers[i][r].get_mpz_t());
  }
  for (auto& v : c) v = mod(v, ctx_->p);
  return FieldElement(ctx_, std::move(c));
}

std::optional<FieldElement> Field::project(const FieldElement& a, const Field& sub) const {
  if (a.ctx_ != ctx_) raise(ErrorKind::BadInput, "element is not in this field");
  if (sub.ctx_ == ctx_) return a;
  if (!contains(sub)) raise(ErrorKind::BadInput, "not a subfield");
  const int j = sub.degree();
  std::vector<Integer> c(j);
  if (j == 1) {
    for (int i = 1; i < ctx_->k; ++i)
      if (a.c_[i] != 0) return std::nullopt;
    c[0] = a.c_[0];
    return FieldElement(sub.ctx_, std::move(c));
  }
  auto data = embedding_data(ctx_, sub.ctx_);
  for (int r = 0; r < j; ++r) {
    Integer acc = 0;
    for (int i = 0; i < ctx_->k; ++i) mpz_addmul(acc.get_mpz_t(), data->left_inverse[r][i].get_mpz_t(), a.c_[i].get_mpz_t());
    c[r] = mod(acc, ctx_->p);
  }
  FieldElement candidate(sub.ctx_, std::move(c));
  if (embed(candidate) != a) return std::nullopt;
  return candidate;
}

FieldElement Field::project_or_throw(const FieldElement& a, const Field& sub) const {
  auto r = project(a, sub);
  if (!r) raise(ErrorKind::IntegrityFailure, "element " + a.encode() + " does not descend to F_{p^" + std::to_string(sub.degree()) + "}");
  return *r;
}

// ---------------------------------------------------------------- FieldElement

FieldElement::FieldElement(const Field& F, std::vector<Integer> coeffs) : ctx_(F.ctx_) {
  if (static_cast<int>(coeffs.size()) > ctx_->k) raise(ErrorKind::BadInput, "coefficient vector longer than extension degree");
  coeffs.resize(ctx_->k);
  for (auto& v : coeffs) v = mod(v, ctx_->p);
  c_ = std::move(coeffs);
}

void FieldElement::check_same(const FieldElement& o) const {
  if (ctx_ != o.ctx_) raise(ErrorKind::BadInput, "field elements from different fields");
}

bool FieldElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Integer& v) { return v == 0; });
}

bool FieldElement::is_one() const {
  if (c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](const Integer& v) { return v == 0; });
}

bool FieldElement::is_prime_field() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const Integer& v) { return v == 0; });
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  for (auto& v : r.c_)
    if (v != 0) v = ctx_->p - v;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  check_same(o);
  for (int i = 0; i < ctx_->k; ++i) {
    c_[i] += o.c_[i];
    if (c_[i] >= ctx_->p) c_[i] -= ctx_->p;
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  check_same(o);
  for (int i = 0; i < ctx_->k; ++i) {
    c_[i] -= o.c_[i];
    if (c_[i] < 0) c_[i] += ctx_->p;
  }
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  check_same(o);
  std::vector<Integer> out;
  FieldOps::mul_into(*ctx_, c_, o.c_, out);
  c_ = std::move(out);
  return *this;
}

FieldElement& FieldElement::operator*=(long s) {
  for (auto& v : c_) {
    v *= s;
    v = mod(v, ctx_->p);
  }
  return *this;
}

FieldElement FieldElement::square() const { return *this * *this; }

FieldElement FieldElement::frobenius(int times) const {
  const int k = ctx_->k;
  times %= k;
  if (times < 0) times += k;
  FieldElement r = *this;
  for (int n = 0; n < times; ++n) {
    std::vector<Integer> c(k);
    for (int i = 0; i < k; ++i) {
      if (r.c_[i] == 0) continue;
      for (int j = 0; j < k; ++j) mpz_addmul(c[j].get_mpz_t(), r.c_[i].get_mpz_t(), ctx_->frob[i][j].get_mpz_t());
    }
    for (auto& v : c) v = mod(v, ctx_->p);
    r.c_ = std::move(c);
  }
  return r;
}

Integer FieldElement::norm() const {
  if (ctx_->k == 1) return c_[0];
  FieldElement acc = *this;
  FieldElement conj = *this;
  for (int i = 1; i < ctx_->k; ++i) {
    conj = conj.frobenius();
    acc *= conj;
  }
  return acc.c_[0];
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) raise(ErrorKind::DivisionByZero, "inverse of zero field element");
  if (ctx_->k == 1) {
    std::vector<Integer> c{inv_mod(c_[0], ctx_->p)};
    return FieldElement(ctx_, std::move(c));
  }
  // a^{-1} = (a^p a^{p^2} ... a^{p^{k-1}}) / N(a)
  FieldElement rest = Field(ctx_).one();
  FieldElement conj = *this;
  for (int i = 1; i < ctx_->k; ++i) {
    conj = conj.frobenius();
    rest *= conj;
  }
  FieldElement n = rest * *this;
  Integer ninv = inv_mod(n.c_[0], ctx_->p);
  for (auto& v : rest.c_) v = mod(v * ninv, ctx_->p);
  return rest;
}

FieldElement FieldElement::pow(const Integer& e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElement result = Field(ctx_).one();
  const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    result = result.square();
    if (mpz_tstbit(e.get_mpz_t(), i)) result *= *this;
  }
  return result;
}

bool FieldElement::is_square() const {
  if (is_zero()) return true;
  // chi_q(a) = chi_p(N(a))
  return jacobi(norm(), ctx_->p) == 1;
}

std::optional<FieldElement> FieldElement::try_sqrt() const {
  if (is_zero()) return *this;
  if (!is_square()) return std::nullopt;
  FieldElement r;
  if (ctx_->two_adicity == 1) {
    r = pow((ctx_->q + 1) / 4);
  } else {
    // Tonelli-Shanks
    const FieldElement& z = Field(ctx_).nonresidue();
    int m = ctx_->two_adicity;
    FieldElement c = z.pow(ctx_->odd_part);
    FieldElement t = pow(ctx_->odd_part);
    r = pow((ctx_->odd_part + 1) / 2);
    while (!t.is_one()) {
      int i = 0;
      FieldElement t2 = t;
      while (!t2.is_one()) {
        t2 = t2.square();
        ++i;
      }
      FieldElement b = c;
      for (int s = 0; s < m - i - 1; ++s) b = b.square();
      m = i;
      c = b.square();
      t *= c;
      r *= b;
    }
  }
  if (r.square() != *this) raise(ErrorKind::IntegrityFailure, "square root check failed");
  FieldElement neg = -r;
  return neg < r ? neg : r;
}

FieldElement FieldElement::sqrt() const {
  auto r = try_sqrt();
  if (!r) raise(ErrorKind::NotASquare, encode() + " is not a square in F_{p^" + std::to_string(ctx_->k) + "}");
  return *r;
}

std::string FieldElement::encode() const {
  std::string s;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ',';
    s += c_[i].get_str();
  }
  return s;
}

bool FieldElement::operator<(const FieldElement& o) const {
  return std::lexicographical_compare(c_.begin(), c_.end(), o.c_.begin(), o.c_.end());
}

}  // namespace isoendo
