#include "latticeq/bijections.hpp"

#include <algorithm>
#include <map>

#include "latticeq/error.hpp"

namespace latticeq {

std::size_t first_deepest(const LatticeWord& w) {
  if (w.empty()) throw Error(ErrorCode::EmptyWord, "first_deepest of the empty word");
  const auto depth = depth_profile(w);
  const auto it = std::max_element(depth.begin(), depth.end());
  return static_cast<std::size_t>(it - depth.begin()) + 1;
}

std::size_t last_deepest_predecessor(const LatticeWord& w) {
  const auto depth = depth_profile(w);
  long long best = 0;
  std::size_t at = 0;
  for (std::size_t i = 0; i < depth.size(); ++i) {
    if (depth[i] >= best) {
      best = depth[i];
      at = i + 1;
    }
  }
  return at + 1;
}

BlockDecomposition block_around(const LatticeWord& w, std::size_t k) {
  if (k == 0 || k > w.length()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "pivot " + std::to_string(k) + " outside 1.." + std::to_string(w.length()));
  }
  const auto& s = w.steps();
  BlockDecomposition b{k, 0, 0};
  while (b.r + 1 < k && s[k - b.r - 2] == Step::D) ++b.r;
  while (k + b.s < s.size() && s[k + b.s] == Step::D) ++b.s;
  return b;
}

PhiCase phi_case(const StepOrder& order) {
  // Case (1) orders are the cyclic rotations of E<D<N.
  const auto& a = order.ascending();
  const bool rotation_of_edn = (a[0] == Step::E && a[1] == Step::D) ||
                               (a[0] == Step::D && a[1] == Step::N) ||
                               (a[0] == Step::N && a[1] == Step::E);
  return rotation_of_edn ? PhiCase::SinglePivot : PhiCase::BlockShift;
}

namespace {

// Overwrites positions [first, last] (1-based, inclusive) with `block`.
void replace_block(std::vector<Step>& steps, std::size_t first, std::size_t last,
                   const std::vector<Step>& block) {
  steps.erase(steps.begin() + static_cast<std::ptrdiff_t>(first - 1),
              steps.begin() + static_cast<std::ptrdiff_t>(last));
  steps.insert(steps.begin() + static_cast<std::ptrdiff_t>(first - 1), block.begin(), block.end());
}

std::vector<Step> run(std::size_t d_before, Step pivot, std::size_t d_after) {
  std::vector<Step> out(d_before, Step::D);
  out.push_back(pivot);
  out.insert(out.end(), d_after, Step::D);
  return out;
}

void require_bad(const LatticeWord& w) {
  const Point end = endpoint(w);
  if (end.x != end.y || !is_bad(w, end.x)) {
    throw Error(ErrorCode::NotABadPath, "'" + w.str() + "' is not a bad path in Del(n,n,l)");
  }
}

}  // namespace

PhiTrace phi_traced(const LatticeWord& w, const StepOrder& order, PhiVariant variant) {
  require_bad(w);
  PhiTrace t;
  t.rule = phi_case(order);
  t.block = block_around(w, first_deepest(w));
  const auto [k, r, s] = t.block;

  std::vector<Step> steps = w.steps();
  if (t.rule == PhiCase::SinglePivot) {
    steps[k - 1] = Step::E;
  } else if (variant == PhiVariant::Standard) {
    replace_block(steps, t.block.first(), t.block.last(),
                  r >= 1 ? run(r - 1, Step::E, s + 1) : run(s, Step::E, 0));
  } else {
    replace_block(steps, t.block.first(), t.block.last(),
                  r >= 1 ? run(r + s, Step::E, 0) : run(0, Step::E, s));
  }
  t.image = LatticeWord(std::move(steps));
  t.maj_before = maj(w, order);
  t.maj_after = maj(t.image, order);
  return t;
}

LatticeWord phi(const LatticeWord& w, const StepOrder& order, PhiVariant variant) {
  return phi_traced(w, order, variant).image;
}

PhiTrace phi_inverse_traced(const LatticeWord& w, const StepOrder& order) {
  const Point end = endpoint(w);
  if (end.y < 0 || end.x != end.y + 2) {
    throw Error(ErrorCode::WrongEndpoint, "'" + w.str() + "' ends at (" + std::to_string(end.x) +
                                              "," + std::to_string(end.y) +
                                              "), expected (n+1,n-1)");
  }
  PhiTrace t;
  t.rule = phi_case(order);
  t.block = block_around(w, last_deepest_predecessor(w));
  const auto [k, r, s] = t.block;

  std::vector<Step> steps = w.steps();
  if (t.rule == PhiCase::SinglePivot) {
    steps[k - 1] = Step::N;
  } else {
    replace_block(steps, t.block.first(), t.block.last(),
                  s >= 1 ? run(r + 1, Step::N, s - 1) : run(0, Step::N, r));
  }
  t.image = LatticeWord(std::move(steps));
  t.maj_before = maj(w, order);
  t.maj_after = maj(t.image, order);
  return t;
}

LatticeWord phi_inverse(const LatticeWord& w, const StepOrder& order) {
  return phi_inverse_traced(w, order).image;
}

LatticeWord psi(const LatticeWord& w) {
  require_bad(w);
  const auto depth = depth_profile(w);
  const auto first_above =
      static_cast<std::size_t>(std::find_if(depth.begin(), depth.end(),
                                            [](long long d) { return d >= 1; }) -
                               depth.begin());
  std::vector<Step> steps = w.steps();
  std::size_t j = first_above;
  while (j + 1 < steps.size() && steps[j + 1] == Step::N) ++j;
  steps[j] = Step::E;
  return LatticeWord(std::move(steps));
}

std::vector<CollisionGroup> psi_collisions(long long n, long long l) {
  std::map<LatticeWord, std::vector<LatticeWord>> by_image;
  for (const auto& w : enumerate(PathFamily::bdel(n, l))) by_image[psi(w)].push_back(w);

  std::vector<CollisionGroup> out;
  for (auto& [image, pre] : by_image) {
    if (pre.size() >= 2) out.push_back({image, std::move(pre)});
  }
  return out;
}

}  // namespace latticeq
