#include "mms/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace mms {
namespace {

// Dense polynomials over F_p, coefficient i = degree i.
using Poly = std::vector<uint8_t>;

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, unsigned p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = uint8_t((r[i + j] + a[i] * b[j]) % p);
  return trim(r);
}

// a mod m, m monic.
Poly poly_mod(Poly a, const Poly& m, unsigned p) {
  a = trim(a);
  while (a.size() >= m.size()) {
    unsigned lead = a.back();
    size_t shift = a.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i) {
      unsigned v = a[shift + i] + (p - 1) * lead * m[i];  // a - lead*m
      a[shift + i] = uint8_t(v % p);
    }
    a = trim(a);
  }
  return a;
}

// Monic polynomial of degree d from encoding (base-p digits are the
// coefficients below the leading 1).
Poly decode_monic(unsigned code, unsigned d, unsigned p) {
  Poly f(d + 1, 0);
  for (unsigned i = 0; i < d; ++i) {
    f[i] = uint8_t(code % p);
    code /= p;
  }
  f[d] = 1;
  return f;
}

bool divides(const Poly& g, const Poly& f, unsigned p) {
  return poly_mod(f, g, p).empty();
}

bool is_irreducible(const Poly& f, unsigned p) {
  unsigned d = unsigned(f.size() - 1);
  for (unsigned gd = 1; 2 * gd <= d; ++gd) {
    unsigned count = 1;
    for (unsigned i = 0; i < gd; ++i) count *= p;
    for (unsigned code = 0; code < count; ++code)
      if (divides(decode_monic(code, gd, p), f, p)) return false;
  }
  return true;
}

Poly smallest_irreducible(unsigned p, unsigned e) {
  unsigned count = 1;
  for (unsigned i = 0; i < e; ++i) count *= p;
  for (unsigned code = 0; code < count; ++code) {
    Poly f = decode_monic(code, e, p);
    if (is_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

Poly decode_elem(unsigned x, unsigned p, unsigned e) {
  Poly f(e, 0);
  for (unsigned i = 0; i < e; ++i) {
    f[i] = uint8_t(x % p);
    x /= p;
  }
  return trim(f);
}

unsigned encode_elem(const Poly& f, unsigned p) {
  unsigned x = 0;
  for (size_t i = f.size(); i-- > 0;) x = x * p + f[i];
  return x;
}

}  // namespace

bool is_prime_power(unsigned q, unsigned* p_out, unsigned* e_out) {
  if (q < 2) return false;
  unsigned p = 0;
  for (unsigned d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) p = q;  // q itself prime
  unsigned e = 0, m = q;
  while (m % p == 0) {
    m /= p;
    ++e;
  }
  if (m != 1) return false;
  if (p_out) *p_out = p;
  if (e_out) *e_out = e;
  return true;
}

Field::Field(unsigned q) : q_(q) {
  if (!is_prime_power(q, &p_, &e_) || q > kMaxOrder)
    throw std::invalid_argument("field order must be a prime power <= " +
                                std::to_string(kMaxOrder) + ", got " +
                                std::to_string(q));
  add_.resize(size_t(q) * q);
  mul_.resize(size_t(q) * q);
  neg_.resize(q);
  inv_.assign(q, 0);

  Poly mod;
  if (e_ > 1) {
    mod = smallest_irreducible(p_, e_);
    modulus_.assign(mod.begin(), mod.end() - 1);  // drop leading 1
  }
  for (unsigned a = 0; a < q; ++a) {
    Poly pa = decode_elem(a, p_, e_);
    for (unsigned b = 0; b < q; ++b) {
      Poly pb = decode_elem(b, p_, e_);
      Poly s(std::max(pa.size(), pb.size()), 0);
      for (size_t i = 0; i < s.size(); ++i) {
        unsigned v = (i < pa.size() ? pa[i] : 0) + (i < pb.size() ? pb[i] : 0);
        s[i] = uint8_t(v % p_);
      }
      add_[idx(uint8_t(a), uint8_t(b))] = uint8_t(encode_elem(trim(s), p_));
      Poly m = poly_mul(pa, pb, p_);
      if (e_ > 1) m = poly_mod(m, mod, p_);
      mul_[idx(uint8_t(a), uint8_t(b))] = uint8_t(encode_elem(m, p_));
    }
  }
  for (unsigned a = 0; a < q; ++a)
    for (unsigned b = 0; b < q; ++b) {
      if (add_[idx(uint8_t(a), uint8_t(b))] == 0) neg_[a] = uint8_t(b);
      if (a != 0 && mul_[idx(uint8_t(a), uint8_t(b))] == 1)
        inv_[a] = uint8_t(b);
    }
}

uint8_t Field::inv(uint8_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return inv_[a];
}

bool Field::satisfies_axioms() const {
  unsigned q = q_;
  for (unsigned a = 0; a < q; ++a) {
    if (add(uint8_t(a), 0) != a || mul(uint8_t(a), 1) != a) return false;
    if (add(uint8_t(a), neg_[a]) != 0) return false;
    if (a != 0 && mul(uint8_t(a), inv_[a]) != 1) return false;
    for (unsigned b = 0; b < q; ++b) {
      if (add(uint8_t(a), uint8_t(b)) != add(uint8_t(b), uint8_t(a)))
        return false;
      if (mul(uint8_t(a), uint8_t(b)) != mul(uint8_t(b), uint8_t(a)))
        return false;
      for (unsigned c = 0; c < q; ++c) {
        uint8_t x = uint8_t(a), y = uint8_t(b), z = uint8_t(c);
        if (add(add(x, y), z) != add(x, add(y, z))) return false;
        if (mul(mul(x, y), z) != mul(x, mul(y, z))) return false;
        if (mul(x, add(y, z)) != add(mul(x, y), mul(x, z))) return false;
      }
    }
  }
  return true;
}

const Field& Field::instance(unsigned q) {
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<Field>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it == cache.end())
    it = cache.emplace(q, std::unique_ptr<Field>(new Field(q))).first;
  return *it->second;
}

const Field& make_field(unsigned q) {
  if (!is_prime_power(q))
    throw std::invalid_argument("not a prime power: " + std::to_string(q));
  if (q > 16)
    throw std::invalid_argument("field order capped at 16, got " +
                                std::to_string(q));
  return Field::instance(q);
}

}  // namespace mms
