#pragma once

#include "latticeq/qpoly.hpp"
#include "latticeq/stats.hpp"

namespace latticeq {

// Closed forms for the maj distributions. Parameters outside the family's
// range give the zero polynomial, the value of an empty sum.

/// MacMahon: [l; l-m, l-n, m+n-l]_q. Independent of the step order.
QPoly mdel_closed(long long m, long long n, long long l);

/// q * MDel(n+1, n-1, l) when E<N, MDel(n+1, n-1, l) when E>N.
QPoly mbdel_closed(long long n, long long l, const StepOrder& order);

/// [2(l-n) choose l-n] [l choose 2n-l] / [l-n+1], times q^{l-n} when E>N.
/// The division is exact; a remainder surfaces as Error{NonExactDivision}.
QPoly msch_closed(long long n, long long l, const StepOrder& order);

}  // namespace latticeq
