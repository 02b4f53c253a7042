#pragma once

#include <cstdint>
#include <vector>

namespace mms {

/// Table-driven arithmetic in F_q, q = p^e a prime power.
///
/// Elements are encoded as integers 0..q-1. For extension fields the base-p
/// digits of the encoding are the polynomial coefficients, lowest degree in
/// the least significant digit, so the integer order is the lexicographic
/// order on coefficient vectors read from highest degree down. The modulus
/// is the monic irreducible polynomial of degree e over F_p with the
/// smallest such encoding, so field construction is reproducible across
/// runs and platforms.
class Field {
 public:
  /// Shared immutable instance; q up to kMaxOrder, cached and thread-safe.
  static const Field& instance(unsigned q);

  static constexpr unsigned kMaxOrder = 256;

  unsigned q() const { return q_; }
  unsigned characteristic() const { return p_; }
  unsigned degree() const { return e_; }

  uint8_t add(uint8_t a, uint8_t b) const { return add_[idx(a, b)]; }
  uint8_t sub(uint8_t a, uint8_t b) const { return add_[idx(a, neg_[b])]; }
  uint8_t mul(uint8_t a, uint8_t b) const { return mul_[idx(a, b)]; }
  uint8_t neg(uint8_t a) const { return neg_[a]; }
  uint8_t inv(uint8_t a) const;  // throws on a == 0
  uint8_t div(uint8_t a, uint8_t b) const { return mul(a, inv(b)); }

  /// Exhaustive check of every field axiom (commutativity, associativity,
  /// identities, inverses, distributivity). O(q^3).
  bool satisfies_axioms() const;

  /// Modulus polynomial coefficients c_0..c_{e-1} of t^e + sum c_i t^i
  /// (empty for prime fields).
  const std::vector<uint8_t>& modulus() const { return modulus_; }

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

 private:
  explicit Field(unsigned q);
  size_t idx(uint8_t a, uint8_t b) const { return size_t(a) * q_ + b; }

  unsigned q_, p_, e_;
  std::vector<uint8_t> add_, mul_, neg_, inv_, modulus_;
};

/// Field handle for q <= 16 (the published cap for exhaustive desk-scale
/// work); throws std::invalid_argument for non-prime-powers or larger q.
const Field& make_field(unsigned q);

bool is_prime_power(unsigned q, unsigned* p_out = nullptr,
                    unsigned* e_out = nullptr);

}  // namespace mms
