#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "latticeq/paths.hpp"
#include "latticeq/stats.hpp"

namespace latticeq {

/// The block W_1 = w_{k-r} .. w_{k+s}: the pivot w_k together with the
/// maximal runs of D on either side. All indices are 1-based.
struct BlockDecomposition {
  std::size_t k = 0;
  std::size_t r = 0;
  std::size_t s = 0;
  std::size_t first() const noexcept { return k - r; }
  std::size_t last() const noexcept { return k + s; }
  friend bool operator==(const BlockDecomposition&, const BlockDecomposition&) = default;
};

/// Smallest k whose prefix depth is maximal. Throws Error{EmptyWord}.
std::size_t first_deepest(const LatticeWord& w);

/// k such that k-1 is the largest index in {0..l} attaining the maximal
/// depth, with the empty prefix w_0 at depth 0.
std::size_t last_deepest_predecessor(const LatticeWord& w);

/// Throws Error{IndexOutOfRange} unless 1 <= k <= l.
BlockDecomposition block_around(const LatticeWord& w, std::size_t k);

/// Which replacement rule the bijection applies for an order.
///   SinglePivot: E<D<N, N<E<D, D<N<E; only w_k changes.
///   BlockShift:  E<N<D, D<E<N, N<D<E; the whole block W_1 is rewritten.
enum class PhiCase { SinglePivot = 1, BlockShift = 2 };
PhiCase phi_case(const StepOrder& order);

/// SwappedSubcases exchanges the r = 0 and r >= 1 block rewrites while
/// keeping the block length; it is not a bijection and exists only as a
/// negative control for the verification sweep.
enum class PhiVariant { Standard, SwappedSubcases };

struct PhiTrace {
  LatticeWord image;
  BlockDecomposition block;
  PhiCase rule = PhiCase::SinglePivot;
  std::size_t maj_before = 0;
  std::size_t maj_after = 0;
};

/// BDel(n,n,l) -> Del(n+1,n-1,l). maj drops by exactly 1 when E<N and is
/// unchanged when E>N. Throws Error{NotABadPath} unless w ends on the
/// diagonal and rises above it.
LatticeWord phi(const LatticeWord& w, const StepOrder& order,
                PhiVariant variant = PhiVariant::Standard);
PhiTrace phi_traced(const LatticeWord& w, const StepOrder& order,
                    PhiVariant variant = PhiVariant::Standard);

/// Del(n+1,n-1,l) -> BDel(n,n,l). Throws Error{WrongEndpoint} unless the
/// word ends at (n+1, n-1) for some n >= 1.
LatticeWord phi_inverse(const LatticeWord& w, const StepOrder& order);
PhiTrace phi_inverse_traced(const LatticeWord& w, const StepOrder& order);

/// The original, non-injective correspondence: take the first step above
/// the diagonal and turn the last N of the run starting there into E.
/// Throws Error{NotABadPath}.
LatticeWord psi(const LatticeWord& w);

struct CollisionGroup {
  LatticeWord image;
  std::vector<LatticeWord> preimages;  // canonical order
};

/// Images of psi with two or more bad preimages in Del(n,n,l), sorted by
/// image. Throws Error{InvalidFamily} for invalid parameters.
std::vector<CollisionGroup> psi_collisions(long long n, long long l);

}  // namespace latticeq
