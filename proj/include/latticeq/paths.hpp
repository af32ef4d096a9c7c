#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace latticeq {

/// Lattice steps E=(1,0), D=(1,1), N=(0,1). The enumerator values fix the
/// internal canonical letter order E < D < N used for enumeration and
/// sorting; statistics never rely on it (see StepOrder).
enum class Step : std::uint8_t { E = 0, D = 1, N = 2 };

char to_char(Step s);

struct Point {
  long long x = 0;
  long long y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

/// A word w_1 ... w_l over {E, D, N}. Positions in the public API are
/// 1-based, matching the w_i indexing used by every path statistic.
class LatticeWord {
 public:
  LatticeWord() = default;
  explicit LatticeWord(std::vector<Step> steps) : steps_(std::move(steps)) {}

  std::size_t length() const noexcept { return steps_.size(); }
  bool empty() const noexcept { return steps_.empty(); }
  /// w_i for 1 <= i <= length(); throws Error{IndexOutOfRange} otherwise.
  Step at(std::size_t i) const;

  const std::vector<Step>& steps() const noexcept { return steps_; }
  std::vector<Step>& steps() noexcept { return steps_; }

  std::size_t count(Step s) const noexcept;
  std::string str() const;

  friend bool operator==(const LatticeWord&, const LatticeWord&) = default;
  friend std::strong_ordering operator<=>(const LatticeWord& a, const LatticeWord& b) {
    return a.steps_ <=> b.steps_;
  }

 private:
  std::vector<Step> steps_;
};

/// Throws Error{InvalidCharacter} naming the 1-based offending position.
LatticeWord parse_word(std::string_view text);

Point endpoint(const LatticeWord& w);

/// Entry i-1 holds (#N - #E) over w_1..w_i. The empty prefix w_0 has depth 0
/// and is not stored.
std::vector<long long> depth_profile(const LatticeWord& w);

/// Ends at (n,n) and never rises above y = x.
bool is_schroeder(const LatticeWord& w, long long n);

/// Some prefix has more N than E. Throws Error{NotASquarePath} unless the
/// word ends at (n,n).
bool is_bad(const LatticeWord& w, long long n);

/// Letter multiplicities of a Delannoy family.
struct StepCounts {
  std::size_t e = 0;
  std::size_t d = 0;
  std::size_t n = 0;
  std::size_t total() const noexcept { return e + d + n; }
};

/// Del(m,n,l), Sch(n,l) or BDel(n,n,l).
class PathFamily {
 public:
  enum class Kind { Delannoy, Schroeder, Bad };

  static PathFamily del(long long m, long long n, long long l);
  static PathFamily sch(long long n, long long l);
  static PathFamily bdel(long long n, long long l);

  /// "del:m,n,l", "sch:n,l", "bdel:n,l". Throws std::invalid_argument on
  /// malformed text and Error{InvalidFamily} on negative step counts.
  static PathFamily parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  long long m() const noexcept { return m_; }
  long long n() const noexcept { return n_; }
  long long l() const noexcept { return l_; }
  std::string designator() const;

  /// Counts of the ambient Delannoy words. Throws Error{InvalidFamily} if any
  /// parameter or derived count is negative.
  StepCounts counts() const;
  bool contains(const LatticeWord& w) const;

  friend bool operator==(const PathFamily&, const PathFamily&) = default;

 private:
  PathFamily(Kind kind, long long m, long long n, long long l) : kind_(kind), m_(m), n_(n), l_(l) {}

  Kind kind_;
  long long m_;
  long long n_;
  long long l_;
};

/// Number of words with the given multiplicities. Throws std::overflow_error
/// past 2^64.
std::uint64_t multiset_permutation_count(const StepCounts& counts);
/// The rank-th word (0-based) in lexicographic E < D < N order.
LatticeWord unrank_word(const StepCounts& counts, std::uint64_t rank);

/// Lazy, lexicographically ordered view of a family's members.
///
/// Iteration walks the ambient Delannoy rank space [first, last) with
/// std::next_permutation and skips words outside the family, so disjoint
/// rank chunks enumerate disjoint members and concatenate to the full order.
class FamilyRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = LatticeWord;
    using difference_type = std::ptrdiff_t;
    using pointer = const LatticeWord*;
    using reference = const LatticeWord&;

    iterator() = default;

    reference operator*() const noexcept { return word_; }
    pointer operator->() const noexcept { return &word_; }
    iterator& operator++();
    iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    friend bool operator==(const iterator& a, const iterator& b) noexcept {
      return a.remaining_ == b.remaining_;
    }

   private:
    friend class FamilyRange;
    iterator(const FamilyRange* range, std::uint64_t first, std::uint64_t remaining);
    void skip_non_members();

    const FamilyRange* range_ = nullptr;
    LatticeWord word_;
    std::uint64_t remaining_ = 0;
  };

  explicit FamilyRange(PathFamily family);

  iterator begin() const { return iterator(this, first_, last_ - first_); }
  iterator end() const { return iterator(); }

  const PathFamily& family() const noexcept { return family_; }
  /// Size of the ambient Delannoy rank space, not the member count.
  std::uint64_t rank_space() const noexcept { return total_; }
  /// Sub-range restricted to ambient ranks [first, last).
  FamilyRange chunk(std::uint64_t first, std::uint64_t last) const;

 private:
  PathFamily family_;
  StepCounts counts_;
  std::uint64_t total_ = 0;
  std::uint64_t first_ = 0;
  std::uint64_t last_ = 0;
};

/// Streaming enumeration; propagates Error{InvalidFamily}.
FamilyRange enumerate(const PathFamily& family);

/// Materializes a range.
std::vector<LatticeWord> collect(const FamilyRange& range);

}  // namespace latticeq
