#include "mms/bounds.hpp"

#include <stdexcept>

#include "mms/qcount.hpp"

namespace mms {
namespace {

void need(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

Rat one_minus_qpow(unsigned q, long e) { return Rat(1) - pow_rat(q, -e); }

}  // namespace

Rat bound_value(const std::string& id, const BoundParams& p) {
  const long n = p.n, k = p.k, a = p.a;
  const unsigned q = p.q;
  if (id == "usefulcomputation") {
    need(q >= 2 && k >= 1 && a >= k && a <= n - k, "usefulcomputation: need k <= a <= n-k");
    return pow_rat(q, -(a - k) * (k - 1)) * one_minus_qpow(q, n - a - k) *
           Rat(gaussian(n - 1, k - 1, q));
  }
  if (id == "packing") {
    need(q >= 2 && n >= 2 * k && k >= 1, "packing: need n >= 2k");
    return Rat(1) - Rat(Int(q) + 1) * pow_rat(q, -(n - 2 * k + 1));
  }
  if (id == "packingset") {
    need(n >= 2 * k && k >= 1, "packingset: need n >= 2k");
    return Rat(1) - Rat(Int((2 * k - 1) * (k - 1)), Int(n - 2 * k + 1));
  }
  if (id == "small") {
    need(q >= 2 && k >= 1, "small: need q >= 2, k >= 1");
    return pow_rat(q, -(n - 3 * k)) * Rat(gaussian(n - 1, k - 1, q));
  }
  if (id == "lotson1") {
    need(q >= 2 && k >= 1 && n >= 3 * k, "lotson1: need n >= 3k");
    Rat factor = Rat(1) - pow_rat(q, -(n - 3 * k)) - pow_rat(q, -(n - 2 * k - 1)) -
                 pow_rat(q, -(n - 2 * k)) - pow_rat(q, -(n - 2 * k + 1)) +
                 Rat(Int(q) + 1) * pow_rat(q, -(2 * n - 4 * k + 1));
    return factor * Rat(gaussian(n - 1, k - 1, q));
  }
  if (id == "lotson1k2") {
    need(q >= 2 && k == 2 && n >= 6, "lotson1k2: need k = 2, n >= 6");
    Rat factor = Rat(1) - pow_rat(q, -(n - 6)) - pow_rat(q, -(n - 3)) +
                 Rat(Int(q) + 1) * pow_rat(q, -(2 * n - 7));
    return factor * Rat(bracket(n - 1, q));
  }
  if (id == "lotson1sets") {
    need(n >= 2 * k && k >= 1, "lotson1sets: need n >= 2k");
    Rat factor = Rat(1) - Rat(Int((6 * k - 3) * (k - 1)), Int(n - 2 * k + 1));
    return factor * Rat(binomial(n - 1, k - 1));
  }
  if (id == "nonnegT") {
    need(q >= 2 && n >= 3 * k && k >= 1, "nonnegT: need n >= 3k");
    return one_minus_qpow(q, n - 3 * k + 1) * Rat(gaussian(n - 1, k - 1, q));
  }
  if (id == "nonnegTset") {
    need(n >= 2 * k && k >= 1, "nonnegTset: need n >= 2k");
    Rat factor = Rat(1) - Rat(Int((2 * k - 1) * (k - 1)), Int(n - 2 * k + 1));
    return factor * Rat(binomial(n - 1, k - 1));
  }
  if (id == "grandfinale") {
    need(q >= 2 && k >= 1 && n >= 3 * k, "grandfinale: need n >= 3k");
    Rat factor = Rat(2) - pow_rat(q, -(n - 3 * k)) - pow_rat(q, -(n - 3 * k + 1)) -
                 pow_rat(q, -(n - 2 * k - 1)) - pow_rat(q, -(n - 2 * k)) -
                 pow_rat(q, -(n - 2 * k + 1)) +
                 Rat(Int(q) + 1) * pow_rat(q, -(2 * n - 4 * k + 1));
    return factor * Rat(gaussian(n - 1, k - 1, q));
  }
  if (id == "grandfinalek2") {
    need(q >= 2 && k == 2 && n >= 6, "grandfinalek2: need k = 2, n >= 6");
    Rat factor = Rat(2) - pow_rat(q, -(n - 6)) - pow_rat(q, -(n - 5)) -
                 pow_rat(q, -(n - 3)) + Rat(Int(q) + 1) * pow_rat(q, -(2 * n - 7));
    return factor * Rat(bracket(n - 1, q));
  }
  if (id == "grandfinaleset") {
    need(n >= 2 * k && k >= 1, "grandfinaleset: need n >= 2k");
    Rat factor = Rat(2) - Rat(Int((8 * k - 4) * (k - 1)), Int(n - 2 * k + 1));
    return factor * Rat(binomial(n - 1, k - 1));
  }
  throw std::invalid_argument("unknown bound id: " + id);
}

bool check_usefulcomputation(long n, long k, long a, unsigned q) {
  Rat lhs = Rat(pow_int(q, unsigned(k * (k - 1))) * gaussian(n - a - 1, k - 1, q));
  return lhs >= bound_value("usefulcomputation", {n, k, q, a});
}

bool check_firstterm(long n, long k, long a, unsigned q) {
  need(k <= a && a <= n - k && k >= 1, "firstterm: need k <= a <= n-k");
  Rat lhs = Rat(bracket(a, q) * gaussian(n - 2, k - 2, q), gaussian(n - 1, k - 1, q));
  return lhs < pow_rat(q, -(n - a - k));
}

bool check_secondterm(long n, long k, unsigned q) {
  need(k >= 1 && n >= 2 * k, "secondterm: need n >= 2k");
  Rat lhs = Rat(pow_int(q, unsigned((k - 1) * (k - 2))) * bracket(k - 1, q) *
                    gaussian(n - k - 1, k - 2, q),
                gaussian(n - 1, k - 1, q));
  return lhs < pow_rat(q, -(n - 2 * k + 1));
}

bool check_bcsetsimplify1(long n, long k) {
  need(n >= 2 * k && k >= 1, "bcsetsimplify1: need n >= 2k");
  Rat lhs = Rat(binomial(n - k - 1, k - 1) - (k - 1) * binomial(n - k - 1, k - 2));
  Rat rhs = (Rat(1) - Rat(Int((k - 1) * (k - 1)), Int(n - 2 * k + 1))) *
            Rat(binomial(n - k - 1, k - 1));
  return lhs == rhs;
}

bool check_bcsetsimplify2(long n, long k) {
  need(n >= 2 * k && k >= 1, "bcsetsimplify2: need n >= 2k");
  Rat lhs(binomial(n - k - 1, k - 1), binomial(n - 1, k - 1));
  Rat base = Rat(1) - Rat(Int(k), Int(n - k + 1));
  Rat mid = 1;
  for (long i = 0; i < k - 1; ++i) mid *= base;
  Rat rhs = Rat(1) - Rat(Int(k * (k - 1)), Int(n - k + 1));
  // The chain is strict for k >= 3 and collapses to equalities for k <= 2.
  if (k >= 3) return lhs > mid && mid > rhs;
  return lhs >= mid && mid >= rhs;
}

bool check_firstmomentrepeat(long n, long k) {
  need(n >= 2 * k && k >= 1, "firstmomentrepeat: need n >= 2k");
  long r = n % k;
  Int first = binomial(n - k - r - 1, k - 1);
  Int second = binomial(n - 2 * k, k - 1);
  return Rat(first) >= Rat(second) &&
         Rat(second) >= bound_value("nonnegTset", {n, k, 0, -1});
}

}  // namespace mms
