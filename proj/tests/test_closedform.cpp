#include "latticeq/closedform.hpp"

#include <gtest/gtest.h>

namespace latticeq {
namespace {

StepOrder O(const char* text) { return StepOrder::parse(text); }

TEST(ClosedForm, MDelExamples) {
  EXPECT_EQ(mdel_closed(1, 1, 2), QPoly({1, 1}));
  EXPECT_EQ(mdel_closed(1, 1, 2), maj_distribution(PathFamily::del(1, 1, 2), O("E<D<N")));
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(mdel_closed(n, n, n), QPoly::one());
  EXPECT_EQ(mdel_closed(3, 3, 6), q_binomial(6, 3));
  EXPECT_TRUE(mdel_closed(1, 3, 1).is_zero());
  EXPECT_TRUE(mdel_closed(1, -1, 0).is_zero());
  EXPECT_TRUE(mdel_closed(2, 2, 5).is_zero());
}

TEST(ClosedForm, MBDelExamples) {
  EXPECT_EQ(mbdel_closed(1, 2, O("E<D<N")), QPoly({0, 1}));
  EXPECT_EQ(mbdel_closed(1, 2, O("N<E<D")), QPoly::one());
  for (int n = 0; n <= 6; ++n) {
    for (const auto& o : StepOrder::all()) EXPECT_TRUE(mbdel_closed(n, n, o).is_zero());
  }
}

TEST(ClosedForm, MSchExamples) {
  EXPECT_EQ(msch_closed(3, 6, O("E<D<N")), QPoly({1, 0, 1, 1, 1, 0, 1}));
  for (int n = 0; n <= 6; ++n) {
    for (const auto& o : StepOrder::all()) EXPECT_EQ(msch_closed(n, n, o), QPoly::one());
  }
  EXPECT_EQ(msch_closed(1, 2, O("N<E<D")), QPoly({0, 1}));
  EXPECT_TRUE(msch_closed(3, 7, O("E<D<N")).is_zero());
  EXPECT_TRUE(msch_closed(3, 2, O("E<D<N")).is_zero());
  EXPECT_TRUE(msch_closed(-1, 0, O("E<D<N")).is_zero());
}

TEST(ClosedForm, OnlyTheOrderClassMatters) {
  for (int n = 0; n <= 6; ++n) {
    for (int l = n; l <= 2 * n; ++l) {
      for (const auto& a : StepOrder::all()) {
        for (const auto& b : StepOrder::all()) {
          if (a.e_before_n() != b.e_before_n()) continue;
          EXPECT_EQ(msch_closed(n, l, a), msch_closed(n, l, b));
          EXPECT_EQ(mbdel_closed(n, l, a), mbdel_closed(n, l, b));
        }
      }
    }
  }
}

TEST(ClosedForm, SchroederIsDelannoyMinusBad) {
  for (int n = 0; n <= 8; ++n) {
    for (int l = n; l <= 2 * n; ++l) {
      for (const auto& o : StepOrder::all()) {
        EXPECT_EQ(mdel_closed(n, n, l), msch_closed(n, l, o) + mbdel_closed(n, l, o))
            << n << "," << l << " " << o.str();
      }
    }
  }
}

TEST(ClosedForm, MultinomialFactorsIntoBinomials) {
  for (int n = 0; n <= 8; ++n) {
    for (int l = n; l <= 2 * n; ++l) {
      const auto e = static_cast<std::size_t>(l - n);
      EXPECT_EQ(q_multinomial(static_cast<std::size_t>(l), {e, e, static_cast<std::size_t>(2 * n - l)}),
                q_binomial(2 * (l - n), l - n) * q_binomial(l, 2 * n - l));
    }
  }
}

TEST(ClosedForm, NonnegativeAndCountsAgree) {
  for (int n = 0; n <= 6; ++n) {
    for (int l = n; l <= 2 * n; ++l) {
      const auto count = collect(enumerate(PathFamily::sch(n, l))).size();
      for (const auto& o : StepOrder::all()) {
        for (const auto& p : {msch_closed(n, l, o), mbdel_closed(n, l, o), mdel_closed(n, n, l)}) {
          for (const auto& c : p.coefficients()) EXPECT_GE(c, 0);
        }
        EXPECT_EQ(eval_at_one(msch_closed(n, l, o)), count);
      }
    }
  }
}

}  // namespace
}  // namespace latticeq
