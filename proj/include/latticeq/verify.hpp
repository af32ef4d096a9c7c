#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "latticeq/bijections.hpp"
#include "latticeq/stats.hpp"

namespace latticeq {

enum class VerifyScope { Theorem, Lemma, Bijection, All };

VerifyScope parse_scope(std::string_view text);
std::string_view to_string(VerifyScope scope);

/// Outcome of one check on one (n, l, order) cell. expected/actual hold
/// polynomial JSON for distribution checks and decimal counts for the
/// bijection check.
struct CheckResult {
  std::string name;
  long long n = 0;
  long long l = 0;
  std::string order;
  bool pass = false;
  std::string expected;
  std::string actual;
  std::string detail;
};

struct VerificationReport {
  long long n_max = 0;
  VerifyScope scope = VerifyScope::All;
  std::vector<CheckResult> checks;

  std::size_t passed() const;
  std::size_t failed() const;
  bool ok() const { return failed() == 0; }
};

struct VerifyOptions {
  long long n_max = 7;
  VerifyScope scope = VerifyScope::All;
  PhiVariant phi_variant = PhiVariant::Standard;
  bool parallel = true;
};

// Single-cell checks. Each compares brute-force enumeration against the
// closed form (or, for the bijection, against the target family).

/// Brute MSch(n,l) vs msch_closed.
CheckResult check_theorem(long long n, long long l, const StepOrder& order);
/// Brute MBDel(n,n,l) vs q^[E<N] * brute MDel(n+1,n-1,l).
CheckResult check_lemma(long long n, long long l, const StepOrder& order);
/// Brute MBDel(n,n,l) vs mbdel_closed.
CheckResult check_lemma_closed(long long n, long long l, const StepOrder& order);
/// Brute MDel(m,n,l) vs the q-multinomial.
CheckResult check_macmahon(long long m, long long n, long long l, const StepOrder& order);
/// phi on BDel(n,n,l): lands in Del(n+1,n-1,l), injective, onto, inverted
/// by phi_inverse, and shifts maj by 1 (E<N) or 0 (E>N).
CheckResult check_bijection(long long n, long long l, const StepOrder& order,
                            PhiVariant variant = PhiVariant::Standard);

/// Sweeps n <= n_max, n <= l <= 2n, all six orders. Cells may run
/// concurrently; checks are reported in canonical (n, l, order, check) order.
VerificationReport run_verification(const VerifyOptions& options);

std::string to_json(const VerificationReport& report);
std::string summary(const VerificationReport& report);

}  // namespace latticeq
