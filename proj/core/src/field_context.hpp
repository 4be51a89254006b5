#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "isoendo/field.hpp"

namespace isoendo {

struct EmbeddingData {
  int sub_degree = 1;
  // powers[i] = coefficient vector of g^i where g is the image of the
  // subfield generator
  std::vector<std::vector<Integer>> powers;
  // rows of a left inverse of the k x j matrix with columns powers[i]
  std::vector<std::vector<Integer>> left_inverse;
};

struct FieldContext {
  Integer p;
  int k = 1;
  Integer q;
  std::vector<Integer> modulus;
  std::vector<int> modulus_support;  // j < k with modulus[j] != 0
  std::vector<std::vector<Integer>> frob;  // frob[i] = t^{p i}
  const FieldContext* prime = nullptr;
  // q - 1 = 2^two_adicity * odd_part
  int two_adicity = 0;
  Integer odd_part;

  mutable std::mutex mu;
  mutable std::unique_ptr<FieldElement> nonresidue;
  mutable std::map<const FieldContext*, std::shared_ptr<const EmbeddingData>> embeddings;
};

// Raw coefficient kernels shared with the polynomial code.
struct FieldOps {
  // wide has length >= 1 and holds an unreduced element of F_p[t]; the result
  // is reduced modulo m(t) and p into out (length k).
  static void reduce_wide(const FieldContext& F, std::vector<Integer>& wide, std::vector<Integer>& out);
  static void mul_into(const FieldContext& F, const std::vector<Integer>& a, const std::vector<Integer>& b,
                       std::vector<Integer>& out);
  static FieldElement make(const FieldContext* F, std::vector<Integer> c) { return FieldElement(F, std::move(c)); }
  static std::vector<Integer>& raw(FieldElement& a) { return a.c_; }
  static const FieldContext* ctx(const FieldElement& a) { return a.ctx_; }
};

}  // namespace isoendo
