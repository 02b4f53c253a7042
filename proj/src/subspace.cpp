#include "mms/subspace.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "mms/qcount.hpp"

namespace mms {

unsigned FqMatrix::rref() {
  const Field& F = *field;
  const unsigned nrows = rows();
  unsigned r = 0;
  for (unsigned c = 0; c < cols && r < nrows; ++c) {
    unsigned piv = r;
    while (piv < nrows && at(piv, c) == 0) ++piv;
    if (piv == nrows) continue;
    if (piv != r)
      for (unsigned j = 0; j < cols; ++j) std::swap(at(piv, j), at(r, j));
    if (uint8_t lead = at(r, c); lead != 1) {
      uint8_t s = F.inv(lead);
      for (unsigned j = c; j < cols; ++j) at(r, j) = F.mul(at(r, j), s);
    }
    for (unsigned i = 0; i < nrows; ++i) {
      if (i == r) continue;
      uint8_t v = at(i, c);
      if (v == 0) continue;
      for (unsigned j = c; j < cols; ++j)
        at(i, j) = F.sub(at(i, j), F.mul(v, at(r, j)));
    }
    ++r;
  }
  return r;
}

Subspace::Subspace(const Field& f, unsigned n, const std::vector<uint8_t>& rows)
    : field_(&f), n_(n) {
  if (n == 0 || rows.size() % n != 0)
    throw std::invalid_argument("row data is not a multiple of the ambient dimension");
  for (uint8_t d : rows)
    if (d >= f.q()) throw std::invalid_argument("digit out of field range");
  FqMatrix m{&f, n, rows};
  k_ = m.rref();
  basis_.assign(m.data.begin(), m.data.begin() + size_t(k_) * n);
}

Subspace Subspace::zero(const Field& f, unsigned n) {
  Subspace s;
  s.field_ = &f;
  s.n_ = n;
  s.k_ = 0;
  return s;
}

Subspace Subspace::full(const Field& f, unsigned n) {
  return first_coordinates(f, n, n);
}

Subspace Subspace::first_coordinates(const Field& f, unsigned n, unsigned d) {
  if (d > n) throw std::invalid_argument("dimension exceeds ambient");
  std::vector<uint8_t> rows(size_t(d) * n, 0);
  for (unsigned i = 0; i < d; ++i) rows[size_t(i) * n + i] = 1;
  return Subspace(f, n, rows);
}

Subspace Subspace::line(const Field& f, const std::vector<uint8_t>& v) {
  Subspace s(f, unsigned(v.size()), v);
  if (s.dim() != 1) throw std::invalid_argument("line() needs a nonzero vector");
  return s;
}

std::vector<uint8_t> Subspace::basis_row(unsigned i) const {
  return {basis_.begin() + size_t(i) * n_, basis_.begin() + size_t(i + 1) * n_};
}

bool Subspace::contains(const std::vector<uint8_t>& v) const {
  if (v.size() != n_) throw std::invalid_argument("ambient mismatch");
  const Field& F = *field_;
  std::vector<uint8_t> w = v;
  for (unsigned i = 0; i < k_; ++i) {
    unsigned c = 0;
    while (c < n_ && basis_[size_t(i) * n_ + c] == 0) ++c;
    if (c == n_ || w[c] == 0) continue;
    uint8_t s = w[c];  // pivot entry of row i is 1
    for (unsigned j = c; j < n_; ++j)
      w[j] = F.sub(w[j], F.mul(s, basis_[size_t(i) * n_ + j]));
  }
  return std::all_of(w.begin(), w.end(), [](uint8_t d) { return d == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  if (field_ != other.field_ || n_ != other.n_)
    throw std::invalid_argument("ambient mismatch");
  for (unsigned i = 0; i < other.k_; ++i)
    if (!contains(other.basis_row(i))) return false;
  return true;
}

std::vector<uint8_t> monic(const Field& f, std::vector<uint8_t> v) {
  unsigned c = 0;
  while (c < v.size() && v[c] == 0) ++c;
  if (c == v.size()) throw std::invalid_argument("monic() of zero vector");
  if (v[c] != 1) {
    uint8_t s = f.inv(v[c]);
    for (unsigned j = c; j < v.size(); ++j) v[j] = f.mul(v[j], s);
  }
  return v;
}

std::vector<std::vector<uint8_t>> Subspace::points() const {
  const Field& F = *field_;
  std::vector<std::vector<uint8_t>> out;
  // Monic coefficient vectors pick one representative per 1-subspace.
  std::vector<uint8_t> coeff(k_, 0);
  for (unsigned lead = 0; lead < k_; ++lead) {
    std::fill(coeff.begin(), coeff.end(), 0);
    coeff[lead] = 1;
    while (true) {
      std::vector<uint8_t> v(n_, 0);
      for (unsigned i = lead; i < k_; ++i) {
        if (coeff[i] == 0) continue;
        for (unsigned j = 0; j < n_; ++j)
          v[j] = F.add(v[j], F.mul(coeff[i], basis_[size_t(i) * n_ + j]));
      }
      out.push_back(monic(F, std::move(v)));
      unsigned pos = lead + 1;
      while (pos < k_ && coeff[pos] == uint8_t(F.q() - 1)) coeff[pos++] = 0;
      if (pos == k_) break;
      ++coeff[pos];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

FqMatrix stack(const Subspace& a, const Subspace& b) {
  FqMatrix m{&a.field(), a.ambient_dim(), a.basis()};
  m.data.insert(m.data.end(), b.basis().begin(), b.basis().end());
  return m;
}

}  // namespace

unsigned intersection_dim(const Subspace& a, const Subspace& b) {
  if (a.field_ != b.field_ || a.n_ != b.n_)
    throw std::invalid_argument("ambient mismatch");
  FqMatrix m = stack(a, b);
  return a.k_ + b.k_ - m.rref();
}

Subspace join(const Subspace& a, const Subspace& b) {
  if (a.field_ != b.field_ || a.n_ != b.n_)
    throw std::invalid_argument("ambient mismatch");
  FqMatrix m = stack(a, b);
  return Subspace(*a.field_, a.n_, m.data);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.field_ != b.field_ || a.n_ != b.n_)
    throw std::invalid_argument("ambient mismatch");
  // Zassenhaus: reduce [A|A; B|0]; rows with zero left half span a ∩ b.
  const unsigned n = a.n_;
  FqMatrix z{a.field_, 2 * n, {}};
  z.data.resize(size_t(a.k_ + b.k_) * 2 * n, 0);
  for (unsigned i = 0; i < a.k_; ++i)
    for (unsigned j = 0; j < n; ++j) {
      z.at(i, j) = a.basis_[size_t(i) * n + j];
      z.at(i, n + j) = a.basis_[size_t(i) * n + j];
    }
  for (unsigned i = 0; i < b.k_; ++i)
    for (unsigned j = 0; j < n; ++j) z.at(a.k_ + i, j) = b.basis_[size_t(i) * n + j];
  unsigned rank = z.rref();
  std::vector<uint8_t> rows;
  for (unsigned i = 0; i < rank; ++i) {
    bool left_zero = true;
    for (unsigned j = 0; j < n && left_zero; ++j) left_zero = z.at(i, j) == 0;
    if (left_zero)
      for (unsigned j = 0; j < n; ++j) rows.push_back(z.at(i, n + j));
  }
  if (rows.empty()) return Subspace::zero(*a.field_, n);
  return Subspace(*a.field_, n, rows);
}

size_t SubspaceHash::operator()(const Subspace& s) const {
  size_t h = 1469598103934665603ull;
  auto mix = [&h](size_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(s.ambient_dim());
  mix(s.dim());
  mix(s.q());
  for (uint8_t d : s.basis()) mix(d);
  return h;
}

std::vector<Subspace> enumerate_subspaces(const Field& f, unsigned n, unsigned k,
                                          uint64_t cap) {
  if (k > n) throw std::invalid_argument("subspace dimension exceeds ambient");
  Int total = gaussian(n, k, f.q());
  if (total > cap)
    throw std::invalid_argument("enumeration size " + total.str() +
                                " exceeds cap");
  std::vector<Subspace> out;
  out.reserve(size_t(total));
  if (k == 0) {
    out.push_back(Subspace::zero(f, n));
    return out;
  }
  const unsigned q = f.q();
  std::vector<unsigned> piv(k);
  for (unsigned i = 0; i < k; ++i) piv[i] = i;
  while (true) {
    std::vector<bool> is_piv(n, false);
    for (unsigned p : piv) is_piv[p] = true;
    // Free slots: row i, columns past its pivot that are not pivots.
    std::vector<std::pair<unsigned, unsigned>> free_slots;
    for (unsigned i = 0; i < k; ++i)
      for (unsigned c = piv[i] + 1; c < n; ++c)
        if (!is_piv[c]) free_slots.emplace_back(i, c);
    std::vector<uint8_t> vals(free_slots.size(), 0);
    std::vector<uint8_t> base(size_t(k) * n, 0);
    for (unsigned i = 0; i < k; ++i) base[size_t(i) * n + piv[i]] = 1;
    while (true) {
      std::vector<uint8_t> rows = base;
      for (size_t s = 0; s < free_slots.size(); ++s)
        rows[size_t(free_slots[s].first) * n + free_slots[s].second] = vals[s];
      out.emplace_back(f, n, rows);
      size_t pos = 0;
      while (pos < vals.size() && vals[pos] == uint8_t(q - 1)) vals[pos++] = 0;
      if (pos == vals.size()) break;
      ++vals[pos];
    }
    // Next pivot combination in lexicographic order.
    int i = int(k) - 1;
    while (i >= 0 && piv[i] == n - k + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (unsigned j = unsigned(i) + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subspace> enumerate_flags(const Subspace& contain,
                                      const Subspace& avoid, unsigned e) {
  if (&contain.field() != &avoid.field() ||
      contain.ambient_dim() != avoid.ambient_dim())
    throw std::invalid_argument("ambient mismatch");
  if (intersection_dim(contain, avoid) != 0)
    throw std::invalid_argument("contain and avoid must intersect trivially");
  const unsigned n = contain.ambient_dim();
  if (e < contain.dim() || e + avoid.dim() > n)
    throw std::invalid_argument("target dimension out of range");
  std::vector<Subspace> out;
  for (const Subspace& t : enumerate_subspaces(contain.field(), n, e))
    if (t.contains(contain) && intersection_dim(t, avoid) == 0)
      out.push_back(t);
  return out;
}

std::vector<Subspace> superspaces_one_dim(const Subspace& s) {
  const Field& F = s.field();
  const unsigned n = s.ambient_dim();
  if (s.dim() >= n) throw std::invalid_argument("already the full space");
  std::unordered_set<Subspace, SubspaceHash> seen;
  for (const auto& pt : Subspace::full(F, n).points()) {
    if (s.contains(pt)) continue;
    std::vector<uint8_t> rows = s.basis();
    rows.insert(rows.end(), pt.begin(), pt.end());
    seen.emplace(F, n, rows);
  }
  std::vector<Subspace> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mms
