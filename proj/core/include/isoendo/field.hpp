#pragma once

#include <compare>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "isoendo/integer.hpp"

namespace isoendo {

struct FieldContext;
class FieldElement;

// Handle to an interned finite field F_{p^k} = F_p[t]/(m(t)). Contexts live for
// the whole process, so handles are cheap to copy and compare by identity.
class Field {
 public:
  Field() = default;

  // m(t) is the lexicographically least monic irreducible of degree k, where
  // polynomials are ordered by (c_{k-1}, ..., c_0) read as a base-p number.
  static Field get(const Integer& p, int k);

  bool valid() const { return ctx_ != nullptr; }
  const Integer& characteristic() const;
  int degree() const;
  const Integer& order() const;
  // Monic modulus, ascending coefficients, size degree() + 1.
  const std::vector<Integer>& modulus() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement gen() const;
  FieldElement element(long v) const;
  FieldElement element(const Integer& v) const;
  FieldElement element(std::vector<Integer> coeffs) const;
  // Parses the "c0,c1,..." encoding; missing high coefficients are zero.
  FieldElement decode(std::string_view text) const;
  FieldElement random(std::mt19937_64& rng) const;
  // Smallest non-square in the enumeration order of coefficient vectors.
  const FieldElement& nonresidue() const;

  bool contains(const Field& sub) const;
  // Image of an element of a subfield under the canonical embedding.
  FieldElement embed(const FieldElement& a) const;
  // Preimage of a in the subfield `sub`, if a lies in it.
  std::optional<FieldElement> project(const FieldElement& a, const Field& sub) const;
  FieldElement project_or_throw(const FieldElement& a, const Field& sub) const;

  // Smallest common extension containing both fields.
  static Field join(const Field& a, const Field& b);

  // Element whose coefficients are the base-p digits of index (c0 lowest);
  // indices 0..q-1 enumerate the field in a fixed order.
  FieldElement from_index(Integer index) const;

  const FieldContext* context() const { return ctx_; }
  bool operator==(const Field& o) const { return ctx_ == o.ctx_; }
  bool operator!=(const Field& o) const { return ctx_ != o.ctx_; }

 private:
  explicit Field(const FieldContext* ctx) : ctx_(ctx) {}
  const FieldContext* ctx_ = nullptr;
  friend class FieldElement;
};

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const Field& F, std::vector<Integer> coeffs);

  Field field() const { return Field(ctx_); }
  bool valid() const { return ctx_ != nullptr; }
  const std::vector<Integer>& coeffs() const { return c_; }
  const Integer& coeff(int i) const { return c_[i]; }

  bool is_zero() const;
  bool is_one() const;
  // True when the element lies in the prime field.
  bool is_prime_field() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator*=(long s);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator*(FieldElement a, long s) { return a *= s; }
  friend FieldElement operator*(long s, FieldElement a) { return a *= s; }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

  FieldElement square() const;
  FieldElement inverse() const;
  FieldElement pow(const Integer& e) const;
  FieldElement frobenius(int times = 1) const;
  // Product of all Galois conjugates, as an element of F_p.
  Integer norm() const;

  bool is_square() const;
  // The root whose coefficient vector is lexicographically smaller
  // (c0 first). Throws NotASquare.
  FieldElement sqrt() const;
  std::optional<FieldElement> try_sqrt() const;

  std::string encode() const;

  bool operator==(const FieldElement& o) const { return ctx_ == o.ctx_ && c_ == o.c_; }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }
  // Lexicographic on (c0, c1, ...); only meaningful within one field.
  bool operator<(const FieldElement& o) const;

 private:
  FieldElement(const FieldContext* ctx, std::vector<Integer> c) : ctx_(ctx), c_(std::move(c)) {}
  void check_same(const FieldElement& o) const;

  const FieldContext* ctx_ = nullptr;
  std::vector<Integer> c_;
  friend class Field;
  friend struct FieldOps;
};

}  // namespace isoendo
