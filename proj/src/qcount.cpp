#include "mms/qcount.hpp"

#include <stdexcept>

namespace mms {

Int gaussian(long a, long k, unsigned q) {
  if (a < 0) throw std::invalid_argument("gaussian: negative dimension");
  if (q < 2) throw std::invalid_argument("gaussian: q must be >= 2");
  if (k < 0 || k > a) return 0;
  Int num = 1, den = 1;
  for (long i = 0; i < k; ++i) {
    num *= pow_int(q, unsigned(a - i)) - 1;
    den *= pow_int(q, unsigned(k - i)) - 1;
  }
  return num / den;  // exact: the product is an integer
}

Int bracket(long a, unsigned q) { return gaussian(a, 1, q); }

Int binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

Int flag_count(long n, long i, long f, long e, unsigned q) {
  if (i > e || i + f > n || e + f > n || i < 0 || f < 0)
    throw std::invalid_argument("flag_count: parameters out of range");
  return pow_int(q, unsigned(f * (e - i))) * gaussian(n - i - f, e - i, q);
}

bool check_q_pascal(long a, long k, unsigned q) {
  if (a < 1 || k < 1) throw std::invalid_argument("q-Pascal needs a, k >= 1");
  Int lhs = gaussian(a, k, q);
  if (k > a)
    return lhs == 0 && gaussian(a - 1, k - 1, q) == 0 && gaussian(a - 1, k, q) == 0;
  Int r1 = pow_int(q, unsigned(a - k)) * gaussian(a - 1, k - 1, q) +
           gaussian(a - 1, k, q);
  Int r2 = gaussian(a - 1, k - 1, q) + pow_int(q, unsigned(k)) * gaussian(a - 1, k, q);
  return lhs == r1 && lhs == r2;
}

bool check_simple_inequalities(long a, long b, unsigned q) {
  if (a < 1 || b < a || q < 2)
    throw std::invalid_argument("inequality sweep needs b >= a >= 1, q >= 2");
  if (b > a) {
    Rat lhs(Int(a - 1), Int(b - 1));
    Rat rhs(Int(a), Int(b));
    if (!(lhs < rhs)) return false;
  }
  Rat ratio(bracket(b, q), bracket(a, q));
  return ratio < pow_rat(q, b - a + 1);
}

}  // namespace mms
