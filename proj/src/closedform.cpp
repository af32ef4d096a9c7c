#include "latticeq/closedform.hpp"

#include <algorithm>

namespace latticeq {

QPoly mdel_closed(long long m, long long n, long long l) {
  if (m < 0 || n < 0 || l < std::max(m, n) || l > m + n) return {};
  return q_multinomial(static_cast<std::size_t>(l),
                       {static_cast<std::size_t>(l - m), static_cast<std::size_t>(l - n),
                        static_cast<std::size_t>(m + n - l)});
}

QPoly mbdel_closed(long long n, long long l, const StepOrder& order) {
  const QPoly shifted_family = mdel_closed(n + 1, n - 1, l);
  return order.e_before_n() ? shifted_family.shifted(1) : shifted_family;
}

QPoly msch_closed(long long n, long long l, const StepOrder& order) {
  if (n < 0 || l < n || l > 2 * n) return {};
  const long long excess = l - n;
  // [l-n+1] divides the product but not necessarily either factor.
  const QPoly product = mul(q_binomial(2 * excess, excess), q_binomial(l, 2 * n - l));
  const QPoly base = exact_div(product, q_int(static_cast<std::size_t>(excess + 1)));
  return order.e_before_n() ? base : base.shifted(static_cast<std::size_t>(excess));
}

}  // namespace latticeq
