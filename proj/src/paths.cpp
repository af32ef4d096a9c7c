#include "latticeq/paths.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <stdexcept>

#include "latticeq/error.hpp"

namespace latticeq {

char to_char(Step s) {
  switch (s) {
    case Step::E: return 'E';
    case Step::D: return 'D';
    case Step::N: return 'N';
  }
  return '?';
}

Step LatticeWord::at(std::size_t i) const {
  if (i == 0 || i > steps_.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "position " + std::to_string(i) + " outside 1.." + std::to_string(steps_.size()));
  }
  return steps_[i - 1];
}

std::size_t LatticeWord::count(Step s) const noexcept {
  return static_cast<std::size_t>(std::count(steps_.begin(), steps_.end(), s));
}

std::string LatticeWord::str() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out.push_back(to_char(s));
  return out;
}

LatticeWord parse_word(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'E': steps.push_back(Step::E); break;
      case 'D': steps.push_back(Step::D); break;
      case 'N': steps.push_back(Step::N); break;
      default:
        throw Error(ErrorCode::InvalidCharacter, "unexpected '" + std::string(1, text[i]) +
                                                     "' at position " + std::to_string(i + 1));
    }
  }
  return LatticeWord(std::move(steps));
}

Point endpoint(const LatticeWord& w) {
  Point p;
  for (Step s : w.steps()) {
    if (s != Step::N) ++p.x;
    if (s != Step::E) ++p.y;
  }
  return p;
}

std::vector<long long> depth_profile(const LatticeWord& w) {
  std::vector<long long> out;
  out.reserve(w.length());
  long long depth = 0;
  for (Step s : w.steps()) {
    if (s == Step::N) ++depth;
    if (s == Step::E) --depth;
    out.push_back(depth);
  }
  return out;
}

namespace {

bool rises_above_diagonal(const LatticeWord& w) {
  long long depth = 0;
  for (Step s : w.steps()) {
    if (s == Step::N && ++depth > 0) return true;
    if (s == Step::E) --depth;
  }
  return false;
}

}  // namespace

bool is_schroeder(const LatticeWord& w, long long n) {
  return endpoint(w) == Point{n, n} && !rises_above_diagonal(w);
}

bool is_bad(const LatticeWord& w, long long n) {
  if (endpoint(w) != Point{n, n}) {
    throw Error(ErrorCode::NotASquarePath, w.str() + " does not end at (" + std::to_string(n) +
                                               "," + std::to_string(n) + ")");
  }
  return rises_above_diagonal(w);
}

PathFamily PathFamily::del(long long m, long long n, long long l) {
  PathFamily f(Kind::Delannoy, m, n, l);
  f.counts();
  return f;
}

PathFamily PathFamily::sch(long long n, long long l) {
  PathFamily f(Kind::Schroeder, n, n, l);
  f.counts();
  return f;
}

PathFamily PathFamily::bdel(long long n, long long l) {
  PathFamily f(Kind::Bad, n, n, l);
  f.counts();
  return f;
}

namespace {

std::vector<long long> parse_int_list(std::string_view text) {
  std::vector<long long> out;
  while (true) {
    const auto comma = text.find(',');
    const auto token = text.substr(0, comma);
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw std::invalid_argument("bad integer '" + std::string(token) + "'");
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

PathFamily PathFamily::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("family designator needs 'kind:params', got '" + std::string(text) +
                                "'");
  }
  const auto kind = text.substr(0, colon);
  const auto args = parse_int_list(text.substr(colon + 1));
  if (kind == "del" && args.size() == 3) return del(args[0], args[1], args[2]);
  if (kind == "sch" && args.size() == 2) return sch(args[0], args[1]);
  if (kind == "bdel" && args.size() == 2) return bdel(args[0], args[1]);
  throw std::invalid_argument("unknown family designator '" + std::string(text) +
                              "' (expected del:m,n,l | sch:n,l | bdel:n,l)");
}

std::string PathFamily::designator() const {
  switch (kind_) {
    case Kind::Delannoy:
      return "del:" + std::to_string(m_) + "," + std::to_string(n_) + "," + std::to_string(l_);
    case Kind::Schroeder: return "sch:" + std::to_string(n_) + "," + std::to_string(l_);
    case Kind::Bad: return "bdel:" + std::to_string(n_) + "," + std::to_string(l_);
  }
  return {};
}

StepCounts PathFamily::counts() const {
  const long long e = l_ - n_;
  const long long nn = l_ - m_;
  const long long d = m_ + n_ - l_;
  if (m_ < 0 || n_ < 0 || l_ < 0 || e < 0 || nn < 0 || d < 0) {
    throw Error(ErrorCode::InvalidFamily,
                designator() + " needs max(m,n) <= l <= m+n with nonnegative parameters");
  }
  return {static_cast<std::size_t>(e), static_cast<std::size_t>(d), static_cast<std::size_t>(nn)};
}

bool PathFamily::contains(const LatticeWord& w) const {
  if (endpoint(w) != Point{m_, n_} || w.length() != static_cast<std::size_t>(l_)) return false;
  switch (kind_) {
    case Kind::Delannoy: return true;
    case Kind::Schroeder: return !rises_above_diagonal(w);
    case Kind::Bad: return rises_above_diagonal(w);
  }
  return false;
}

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("family too large to rank");
  return out;
}

std::uint64_t binomial_u64(std::size_t n, std::size_t k) {
  k = std::min(k, n - k);
  std::uint64_t out = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    // out * (n-k+i) is divisible by i; go through 128 bits to stay exact.
    const unsigned __int128 wide = static_cast<unsigned __int128>(out) * (n - k + i) / i;
    if (wide > std::numeric_limits<std::uint64_t>::max()) {
      throw std::overflow_error("family too large to rank");
    }
    out = static_cast<std::uint64_t>(wide);
  }
  return out;
}

}  // namespace

std::uint64_t multiset_permutation_count(const StepCounts& c) {
  return checked_mul(binomial_u64(c.total(), c.e), binomial_u64(c.d + c.n, c.d));
}

LatticeWord unrank_word(const StepCounts& counts, std::uint64_t rank) {
  if (rank >= multiset_permutation_count(counts)) {
    throw Error(ErrorCode::IndexOutOfRange, "rank " + std::to_string(rank) + " past family size");
  }
  StepCounts left = counts;
  std::vector<Step> steps;
  steps.reserve(counts.total());
  while (left.total() > 0) {
    for (Step s : {Step::E, Step::D, Step::N}) {
      std::size_t& slot = s == Step::E ? left.e : s == Step::D ? left.d : left.n;
      if (slot == 0) continue;
      --slot;
      const std::uint64_t block = multiset_permutation_count(left);
      if (rank < block) {
        steps.push_back(s);
        break;
      }
      rank -= block;
      ++slot;
    }
  }
  return LatticeWord(std::move(steps));
}

FamilyRange::FamilyRange(PathFamily family)
    : family_(family), counts_(family.counts()), total_(multiset_permutation_count(counts_)),
      first_(0), last_(total_) {}

FamilyRange FamilyRange::chunk(std::uint64_t first, std::uint64_t last) const {
  FamilyRange out = *this;
  out.first_ = std::min(first, total_);
  out.last_ = std::clamp(last, out.first_, total_);
  return out;
}

FamilyRange::iterator::iterator(const FamilyRange* range, std::uint64_t first,
                                std::uint64_t remaining)
    : range_(range), remaining_(remaining) {
  if (remaining_ == 0) return;
  word_ = unrank_word(range_->counts_, first);
  skip_non_members();
}

void FamilyRange::iterator::skip_non_members() {
  if (range_->family_.kind() == PathFamily::Kind::Delannoy) return;
  while (remaining_ > 0 && !range_->family_.contains(word_)) {
    if (--remaining_ > 0) std::next_permutation(word_.steps().begin(), word_.steps().end());
  }
}

FamilyRange::iterator& FamilyRange::iterator::operator++() {
  if (--remaining_ > 0) {
    std::next_permutation(word_.steps().begin(), word_.steps().end());
    skip_non_members();
  }
  return *this;
}

FamilyRange enumerate(const PathFamily& family) { return FamilyRange(family); }

std::vector<LatticeWord> collect(const FamilyRange& range) {
  return std::vector<LatticeWord>(range.begin(), range.end());
}

}  // namespace latticeq
