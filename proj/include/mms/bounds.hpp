#pragma once

#include <string>

#include "mms/rational.hpp"

namespace mms {

/// Parameters for a named closed-form bound. `q` is ignored by set-case
/// bounds, `a` only applies to "usefulcomputation".
struct BoundParams {
  long n = 0;
  long k = 0;
  unsigned q = 0;
  long a = -1;
};

/// Exact rational value of a named bound from the verification ledger.
/// Ids are stable strings matching the lemma labels used throughout the
/// reports:
///   usefulcomputation  (1/q^{(a-k)(k-1)}) (1 - 1/q^{n-a-k}) gbin(n-1,k-1)
///   packing            1 - (q+1)/q^{n-2k+1}                    (vs. b_A)
///   packingset         1 - (2k-1)(k-1)/(n-2k+1)                (vs. b_A)
///   small              (1/q^{n-3k}) gbin(n-1,k-1)
///   lotson1            general through-v lower bound, times gbin(n-1,k-1)
///   lotson1k2          sharper k = 2 variant, times [n-1]
///   lotson1sets        (1 - (6k-3)(k-1)/(n-2k+1)) binom(n-1,k-1)
///   nonnegT            (1 - 1/q^{n-3k+1}) gbin(n-1,k-1)
///   nonnegTset         (1 - (2k-1)(k-1)/(n-2k+1)) binom(n-1,k-1)
///   grandfinale        combined lower bound, times gbin(n-1,k-1)
///   grandfinalek2      combined k = 2 lower bound, times [n-1]
///   grandfinaleset     (2 - (8k-4)(k-1)/(n-2k+1)) binom(n-1,k-1)
/// Throws std::invalid_argument on unknown ids or out-of-range parameters.
Rat bound_value(const std::string& id, const BoundParams& p);

/// q^{k(k-1)} gbin(n-a-1,k-1) >= bound_value("usefulcomputation"), exact.
bool check_usefulcomputation(long n, long k, long a, unsigned q);

/// [a] gbin(n-2,k-2) / gbin(n-1,k-1) < 1/q^{n-a-k}, exact.
bool check_firstterm(long n, long k, long a, unsigned q);

/// q^{(k-1)(k-2)} [k-1] gbin(n-k-1,k-2) / gbin(n-1,k-1) < 1/q^{n-2k+1}.
bool check_secondterm(long n, long k, unsigned q);

/// binom(n-k-1,k-1) - (k-1) binom(n-k-1,k-2)
///   == (1 - (k-1)^2/(n-2k+1)) binom(n-k-1,k-1), exact identity (n >= 2k).
bool check_bcsetsimplify1(long n, long k);

/// binom(n-k-1,k-1)/binom(n-1,k-1) >= (1 - k/(n-k+1))^{k-1}
///   >= 1 - k(k-1)/(n-k+1), with both inequalities strict for k >= 3
/// (they are equalities for k <= 2).
bool check_bcsetsimplify2(long n, long k);

/// binom(n-k-r-1,k-1) >= binom(n-2k,k-1)
///   >= (1 - (2k-1)(k-1)/(n-2k+1)) binom(n-1,k-1), with r = n mod k.
bool check_firstmomentrepeat(long n, long k);

}  // namespace mms
