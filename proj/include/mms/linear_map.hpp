#pragma once

#include <vector>

#include "mms/random.hpp"
#include "mms/subspace.hpp"

namespace mms {

/// Invertible linear transformation of F_q^n. Vectors are rows; the map
/// sends v to v * M.
class LinearMap {
 public:
  /// Throws if the matrix is singular.
  LinearMap(const Field& f, unsigned n, std::vector<uint8_t> matrix);
  static LinearMap identity(const Field& f, unsigned n);

  /// Uniform over GL(n, q); rejection sampling on the full matrix space.
  static LinearMap random_invertible(const Field& f, unsigned n, Rng& rng);

  /// Uniform over the setwise stabilizer of u in GL(n, q): conjugate of the
  /// block-triangular group that preserves the span of the leading
  /// coordinates.
  static LinearMap sample_stabilizer(const Subspace& u, Rng& rng);

  const Field& field() const { return *field_; }
  unsigned ambient_dim() const { return n_; }
  const std::vector<uint8_t>& matrix() const { return m_; }

  std::vector<uint8_t> apply(const std::vector<uint8_t>& v) const;
  Subspace apply(const Subspace& s) const;

  LinearMap inverse() const;
  LinearMap compose(const LinearMap& inner) const;  // this after inner

  bool operator==(const LinearMap& o) const {
    return field_ == o.field_ && n_ == o.n_ && m_ == o.m_;
  }

 private:
  LinearMap() = default;
  const Field* field_ = nullptr;
  unsigned n_ = 0;
  std::vector<uint8_t> m_;  // row-major n x n
};

}  // namespace mms
