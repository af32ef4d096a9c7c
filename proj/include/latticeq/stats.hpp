#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "latticeq/paths.hpp"
#include "latticeq/qpoly.hpp"

namespace latticeq {

/// A linear ordering of {E, D, N}.
///
/// Orders split into the E<N class {E<D<N, E<N<D, D<E<N} and the E>N class
/// {N<E<D, N<D<E, D<N<E}; the closed forms only ever look at the class.
class StepOrder {
 public:
  /// Smallest letter first, e.g. {E, D, N} for "E<D<N". Throws
  /// Error{InvalidOrder} unless the three letters are distinct.
  explicit StepOrder(std::array<Step, 3> ascending);

  /// Accepts exactly "X<Y<Z" with {X,Y,Z} = {E,D,N}.
  static StepOrder parse(std::string_view text);
  /// The six orders in a fixed display order: the E<N class first.
  static const std::array<StepOrder, 6>& all();

  int rank(Step s) const noexcept { return rank_[static_cast<std::size_t>(s)]; }
  bool less(Step a, Step b) const noexcept { return rank(a) < rank(b); }
  bool e_before_n() const noexcept { return less(Step::E, Step::N); }
  const std::array<Step, 3>& ascending() const noexcept { return ascending_; }
  std::string str() const;

  friend bool operator==(const StepOrder& a, const StepOrder& b) noexcept {
    return a.ascending_ == b.ascending_;
  }

 private:
  std::array<Step, 3> ascending_;
  std::array<int, 3> rank_{};
};

/// Positions i in [1, l-1] with w_i > w_{i+1}, ascending.
std::vector<std::size_t> descent_set(const LatticeWord& w, const StepOrder& order);
std::size_t maj(const LatticeWord& w, const StepOrder& order);

/// Sum of q^maj(W) over the family. The default entry point splits the
/// family's rank space across OpenMP threads; the result is identical to
/// maj_distribution_serial.
QPoly maj_distribution(const PathFamily& family, const StepOrder& order);
QPoly maj_distribution_serial(const PathFamily& family, const StepOrder& order);

/// Histogram of maj over a range: entry k counts members with maj k.
std::vector<std::uint64_t> maj_histogram(const FamilyRange& range, const StepOrder& order);

}  // namespace latticeq
