#pragma once

#include "mms/rational.hpp"

namespace mms {

/// Gaussian binomial coefficient: the number of k-dimensional subspaces of
/// an a-dimensional space over F_q. Exact; 0 when k > a or k < 0.
Int gaussian(long a, long k, unsigned q);

/// [a] = gaussian(a, 1) = (q^a - 1)/(q - 1), the point count of an
/// a-dimensional space.
Int bracket(long a, unsigned q);

/// Ordinary binomial coefficient, exact; 0 when k > n or k < 0.
Int binomial(long n, long k);

/// Number of e-subspaces containing a fixed i-subspace and trivially
/// intersecting a fixed disjoint f-subspace: q^{f(e-i)} * gbin(n-i-f, e-i).
Int flag_count(long n, long i, long f, long e, unsigned q);

/// Both q-Pascal recurrences hold exactly at (a, k, q).
bool check_q_pascal(long a, long k, unsigned q);

/// (a-1)/(b-1) < a/b for b > a >= 1, and [b]/[a] < q^{b-a+1} for
/// b >= a >= 1. Exact rational comparison; the first is skipped when a = b.
bool check_simple_inequalities(long a, long b, unsigned q);

}  // namespace mms
