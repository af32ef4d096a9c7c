#include "latticeq/stats.hpp"

#include <algorithm>

#include <omp.h>

#include "latticeq/error.hpp"

namespace latticeq {

StepOrder::StepOrder(std::array<Step, 3> ascending) : ascending_(ascending) {
  std::array<bool, 3> seen{};
  for (int r = 0; r < 3; ++r) {
    const auto idx = static_cast<std::size_t>(ascending[static_cast<std::size_t>(r)]);
    if (seen[idx]) throw Error(ErrorCode::InvalidOrder, "repeated letter in step order");
    seen[idx] = true;
    rank_[idx] = r;
  }
}

StepOrder StepOrder::parse(std::string_view text) {
  auto fail = [&] {
    return Error(ErrorCode::InvalidOrder,
                 "expected X<Y<Z over {E,D,N}, got '" + std::string(text) + "'");
  };
  if (text.size() != 5 || text[1] != '<' || text[3] != '<') throw fail();
  std::array<Step, 3> asc{};
  for (std::size_t i = 0; i < 3; ++i) {
    switch (text[2 * i]) {
      case 'E': asc[i] = Step::E; break;
      case 'D': asc[i] = Step::D; break;
      case 'N': asc[i] = Step::N; break;
      default: throw fail();
    }
  }
  try {
    return StepOrder(asc);
  } catch (const Error&) {
    throw fail();
  }
}

const std::array<StepOrder, 6>& StepOrder::all() {
  using enum Step;
  static const std::array<StepOrder, 6> orders{
      StepOrder({E, D, N}), StepOrder({E, N, D}), StepOrder({D, E, N}),
      StepOrder({N, E, D}), StepOrder({N, D, E}), StepOrder({D, N, E}),
  };
  return orders;
}

std::string StepOrder::str() const {
  return {to_char(ascending_[0]), '<', to_char(ascending_[1]), '<', to_char(ascending_[2])};
}

std::vector<std::size_t> descent_set(const LatticeWord& w, const StepOrder& order) {
  std::vector<std::size_t> out;
  const auto& s = w.steps();
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (order.less(s[i], s[i - 1])) out.push_back(i);
  }
  return out;
}

std::size_t maj(const LatticeWord& w, const StepOrder& order) {
  std::size_t total = 0;
  const auto& s = w.steps();
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (order.less(s[i], s[i - 1])) total += i;
  }
  return total;
}

std::vector<std::uint64_t> maj_histogram(const FamilyRange& range, const StepOrder& order) {
  std::vector<std::uint64_t> hist;
  for (const auto& w : range) {
    const std::size_t m = maj(w, order);
    if (m >= hist.size()) hist.resize(m + 1, 0);
    ++hist[m];
  }
  return hist;
}

namespace {

QPoly from_histogram(const std::vector<std::uint64_t>& hist) {
  std::vector<BigInt> coeffs(hist.begin(), hist.end());
  return QPoly(std::move(coeffs));
}

void accumulate(std::vector<std::uint64_t>& into, const std::vector<std::uint64_t>& part) {
  if (part.size() > into.size()) into.resize(part.size(), 0);
  for (std::size_t i = 0; i < part.size(); ++i) into[i] += part[i];
}

}  // namespace

QPoly maj_distribution_serial(const PathFamily& family, const StepOrder& order) {
  return from_histogram(maj_histogram(enumerate(family), order));
}

QPoly maj_distribution(const PathFamily& family, const StepOrder& order) {
  const FamilyRange range = enumerate(family);
  const std::uint64_t total = range.rank_space();
  constexpr std::uint64_t kMinChunk = 4096;
  if (total < 2 * kMinChunk) return from_histogram(maj_histogram(range, order));

  const auto chunks = static_cast<std::int64_t>((total + kMinChunk - 1) / kMinChunk);
  std::vector<std::vector<std::uint64_t>> partial(static_cast<std::size_t>(chunks));

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const auto first = static_cast<std::uint64_t>(c) * kMinChunk;
    partial[static_cast<std::size_t>(c)] =
        maj_histogram(range.chunk(first, std::min(first + kMinChunk, total)), order);
  }

  std::vector<std::uint64_t> hist;
  for (const auto& p : partial) accumulate(hist, p);
  return from_histogram(hist);
}

}  // namespace latticeq
