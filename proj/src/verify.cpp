#include "latticeq/verify.hpp"

#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "latticeq/closedform.hpp"
#include "latticeq/error.hpp"

namespace latticeq {

VerifyScope parse_scope(std::string_view text) {
  if (text == "theorem") return VerifyScope::Theorem;
  if (text == "lemma") return VerifyScope::Lemma;
  if (text == "bijection") return VerifyScope::Bijection;
  if (text == "all") return VerifyScope::All;
  throw std::invalid_argument("unknown scope '" + std::string(text) + "'");
}

std::string_view to_string(VerifyScope scope) {
  switch (scope) {
    case VerifyScope::Theorem: return "theorem";
    case VerifyScope::Lemma: return "lemma";
    case VerifyScope::Bijection: return "bijection";
    case VerifyScope::All: return "all";
  }
  return "all";
}

std::size_t VerificationReport::passed() const {
  std::size_t count = 0;
  for (const auto& c : checks) count += c.pass ? 1 : 0;
  return count;
}

std::size_t VerificationReport::failed() const { return checks.size() - passed(); }

namespace {

// Brute-force distribution, zero when the family parameters are out of range.
QPoly brute_or_zero(long long m, long long n, long long l, const StepOrder& order) {
  if (m < 0 || n < 0 || l < 0 || l < m || l < n || l > m + n) return {};
  return maj_distribution_serial(PathFamily::del(m, n, l), order);
}

CheckResult compare(std::string name, long long n, long long l, const StepOrder& order,
                    const QPoly& expected, const QPoly& actual) {
  CheckResult r{std::move(name), n, l, order.str(), expected == actual, to_json(expected),
                to_json(actual), {}};
  if (!r.pass) r.detail = "expected " + to_string(expected) + ", got " + to_string(actual);
  return r;
}

CheckResult guarded(const std::string& name, long long n, long long l, const StepOrder& order,
                    const std::function<CheckResult()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return CheckResult{name, n, l, order.str(), false, {}, {}, e.what()};
  }
}

}  // namespace

CheckResult check_theorem(long long n, long long l, const StepOrder& order) {
  return guarded("theorem", n, l, order, [&] {
    return compare("theorem", n, l, order, msch_closed(n, l, order),
                   maj_distribution_serial(PathFamily::sch(n, l), order));
  });
}

CheckResult check_lemma(long long n, long long l, const StepOrder& order) {
  return guarded("lemma", n, l, order, [&] {
    const QPoly target = brute_or_zero(n + 1, n - 1, l, order);
    return compare("lemma", n, l, order, order.e_before_n() ? target.shifted(1) : target,
                   maj_distribution_serial(PathFamily::bdel(n, l), order));
  });
}

CheckResult check_lemma_closed(long long n, long long l, const StepOrder& order) {
  return guarded("lemma-closed", n, l, order, [&] {
    return compare("lemma-closed", n, l, order, mbdel_closed(n, l, order),
                   maj_distribution_serial(PathFamily::bdel(n, l), order));
  });
}

CheckResult check_macmahon(long long m, long long n, long long l, const StepOrder& order) {
  return guarded("macmahon", n, l, order, [&] {
    CheckResult r = compare("macmahon", n, l, order, mdel_closed(m, n, l),
                            maj_distribution_serial(PathFamily::del(m, n, l), order));
    if (m != n) r.detail = "m=" + std::to_string(m) + (r.detail.empty() ? "" : "; " + r.detail);
    return r;
  });
}

CheckResult check_bijection(long long n, long long l, const StepOrder& order,
                            PhiVariant variant) {
  return guarded("bijection", n, l, order, [&]() -> CheckResult {
    const bool target_nonempty = n >= 1 && l >= n + 1 && l <= 2 * n;
    const std::uint64_t target_size =
        target_nonempty ? multiset_permutation_count(PathFamily::del(n + 1, n - 1, l).counts())
                        : 0;
    const std::size_t shift = order.e_before_n() ? 1 : 0;

    std::set<LatticeWord> images;
    std::string failure;
    auto fail = [&](const std::string& what) {
      if (failure.empty()) failure = what;
    };

    for (const auto& w : enumerate(PathFamily::bdel(n, l))) {
      const PhiTrace t = phi_traced(w, order, variant);
      const LatticeWord& v = t.image;
      if (!target_nonempty || !PathFamily::del(n + 1, n - 1, l).contains(v)) {
        fail("phi(" + w.str() + ") = " + v.str() + " outside Del(n+1,n-1,l)");
        continue;
      }
      if (t.maj_before != t.maj_after + shift) {
        fail("maj(" + w.str() + ") = " + std::to_string(t.maj_before) + " but maj(phi) = " +
             std::to_string(t.maj_after));
      }
      if (!images.insert(v).second) fail("phi not injective at image " + v.str());
      const LatticeWord back = phi_inverse(v, order);
      if (back != w) fail("phi_inverse(" + v.str() + ") = " + back.str() + ", expected " + w.str());
    }
    if (images.size() != target_size) {
      fail("image size " + std::to_string(images.size()) + " != |Del(n+1,n-1,l)| = " +
           std::to_string(target_size));
    }
    return CheckResult{"bijection",
                       n,
                       l,
                       order.str(),
                       failure.empty(),
                       std::to_string(target_size),
                       std::to_string(images.size()),
                       failure};
  });
}

VerificationReport run_verification(const VerifyOptions& options) {
  if (options.n_max < 0) throw std::invalid_argument("n-max must be nonnegative");
  const VerifyScope scope = options.scope;
  const bool theorem = scope == VerifyScope::Theorem || scope == VerifyScope::All;
  const bool lemma = scope == VerifyScope::Lemma || scope == VerifyScope::All;
  const bool bijection = scope == VerifyScope::Bijection || scope == VerifyScope::All;

  std::vector<std::function<CheckResult()>> tasks;
  for (long long n = 0; n <= options.n_max; ++n) {
    for (long long l = n; l <= 2 * n; ++l) {
      for (const StepOrder& order : StepOrder::all()) {
        if (theorem) {
          tasks.emplace_back([=] { return check_theorem(n, l, order); });
          tasks.emplace_back([=] { return check_macmahon(n, n, l, order); });
        }
        if (lemma) {
          tasks.emplace_back([=] { return check_lemma(n, l, order); });
          tasks.emplace_back([=] { return check_lemma_closed(n, l, order); });
        }
        if (bijection) {
          const PhiVariant variant = options.phi_variant;
          tasks.emplace_back([=] { return check_bijection(n, l, order, variant); });
        }
      }
    }
  }

  VerificationReport report{options.n_max, scope, std::vector<CheckResult>(tasks.size())};
  const auto count = static_cast<std::int64_t>(tasks.size());
  if (options.parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
      report.checks[static_cast<std::size_t>(i)] = tasks[static_cast<std::size_t>(i)]();
    }
  } else {
    for (std::int64_t i = 0; i < count; ++i) {
      report.checks[static_cast<std::size_t>(i)] = tasks[static_cast<std::size_t>(i)]();
    }
  }
  return report;
}

std::string to_json(const VerificationReport& report) {
  using nlohmann::ordered_json;
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks) {
    ordered_json entry{{"check", c.name},
                       {"params", {{"n", c.n}, {"l", c.l}, {"order", c.order}}},
                       {"pass", c.pass}};
    const bool is_poly = c.name != "bijection";
    auto value = [&](const std::string& s) -> ordered_json {
      if (s.empty()) return nullptr;
      return is_poly ? ordered_json::parse(s) : ordered_json(s);
    };
    entry["expected"] = value(c.expected);
    entry["actual"] = value(c.actual);
    if (!c.detail.empty()) entry["detail"] = c.detail;
    checks.push_back(std::move(entry));
  }
  ordered_json doc{
      {"scope", {{"n_max", report.n_max}, {"scope", std::string(to_string(report.scope))}}},
      {"checks", std::move(checks)},
      {"summary",
       {{"total", report.checks.size()}, {"passed", report.passed()}, {"failed", report.failed()}}},
  };
  return doc.dump(2);
}

std::string summary(const VerificationReport& report) {
  std::ostringstream os;
  os << "verify scope=" << to_string(report.scope) << " n-max=" << report.n_max << ": "
     << report.passed() << "/" << report.checks.size() << " checks passed\n";
  for (const auto& c : report.checks) {
    if (c.pass) continue;
    os << "FAIL " << c.name << " n=" << c.n << " l=" << c.l << " " << c.order << ": " << c.detail
       << "\n";
  }
  os << (report.ok() ? "ALL PASS" : "FAILURES") << "\n";
  return os.str();
}

}  // namespace latticeq
