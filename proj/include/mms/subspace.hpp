#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

#include "mms/field.hpp"

namespace mms {

/// Row-major matrix over F_q with a fixed column count.
struct FqMatrix {
  const Field* field = nullptr;
  unsigned cols = 0;
  std::vector<uint8_t> data;  // rows * cols digits

  unsigned rows() const { return cols ? unsigned(data.size() / cols) : 0; }
  uint8_t at(unsigned r, unsigned c) const { return data[size_t(r) * cols + c]; }
  uint8_t& at(unsigned r, unsigned c) { return data[size_t(r) * cols + c]; }

  /// In-place reduced row echelon form; returns the rank. Zero rows are
  /// moved to the bottom but not removed.
  unsigned rref();
};

/// A subspace of F_q^n held by its unique reduced-row-echelon basis, so
/// structural equality is subspace equality and the lexicographic order on
/// the basis digits is a canonical total order on subspaces of fixed shape.
class Subspace {
 public:
  /// Canonicalizes the row space of `rows` (k rows of length n, possibly
  /// dependent or zero).
  Subspace(const Field& f, unsigned n, const std::vector<uint8_t>& rows);
  static Subspace zero(const Field& f, unsigned n);
  static Subspace full(const Field& f, unsigned n);
  /// Span of coordinates [0, d).
  static Subspace first_coordinates(const Field& f, unsigned n, unsigned d);
  /// 1-dimensional span of a single vector (must be nonzero).
  static Subspace line(const Field& f, const std::vector<uint8_t>& v);

  const Field& field() const { return *field_; }
  unsigned q() const { return field_->q(); }
  unsigned ambient_dim() const { return n_; }
  unsigned dim() const { return k_; }
  /// Canonical basis, row-major, k rows of length n.
  const std::vector<uint8_t>& basis() const { return basis_; }
  std::vector<uint8_t> basis_row(unsigned i) const;

  bool contains(const std::vector<uint8_t>& v) const;
  bool contains(const Subspace& other) const;

  /// Monic representative (first nonzero coordinate 1) of each 1-subspace
  /// in this subspace, in canonical (lexicographic) order; [dim] entries.
  std::vector<std::vector<uint8_t>> points() const;

  friend Subspace intersect(const Subspace& a, const Subspace& b);
  friend Subspace join(const Subspace& a, const Subspace& b);
  /// dim(a ∩ b) without materializing the intersection.
  friend unsigned intersection_dim(const Subspace& a, const Subspace& b);

  bool operator==(const Subspace& o) const {
    return n_ == o.n_ && k_ == o.k_ && field_ == o.field_ && basis_ == o.basis_;
  }
  /// Lexicographic on (k, basis digits); total order within an ambient.
  bool operator<(const Subspace& o) const {
    if (k_ != o.k_) return k_ < o.k_;
    return basis_ < o.basis_;
  }

 private:
  Subspace() = default;
  const Field* field_ = nullptr;
  unsigned n_ = 0, k_ = 0;
  std::vector<uint8_t> basis_;
};

struct SubspaceHash {
  size_t operator()(const Subspace& s) const;
};

/// Monic scaling of a nonzero vector (first nonzero coordinate becomes 1).
std::vector<uint8_t> monic(const Field& f, std::vector<uint8_t> v);

/// All k-subspaces of F_q^n in canonical order. Throws when the count
/// exceeds `cap` (desk-scale guard).
std::vector<Subspace> enumerate_subspaces(const Field& f, unsigned n,
                                          unsigned k,
                                          uint64_t cap = 10'000'000);

/// All e-subspaces T with contain ⊆ T and dim(T ∩ avoid) = 0, canonical
/// order. Requires dim(contain ∩ avoid) = 0.
std::vector<Subspace> enumerate_flags(const Subspace& contain,
                                      const Subspace& avoid, unsigned e);

/// All (dim+1)-superspaces of s, canonical order.
std::vector<Subspace> superspaces_one_dim(const Subspace& s);

}  // namespace mms
