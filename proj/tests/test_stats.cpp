#include "latticeq/stats.hpp"

#include <set>

#include <gtest/gtest.h>

#include "latticeq/error.hpp"

namespace latticeq {
namespace {

// Oracle straight from the definition: rank = position of the letter in the
// "X<Y<Z" text, descent at i when rank(w_i) > rank(w_{i+1}).
std::vector<std::size_t> descent_oracle(const std::string& word, const std::string& order) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i < word.size(); ++i) {
    if (order.find(word[i - 1]) > order.find(word[i])) out.push_back(i);
  }
  return out;
}

std::size_t maj_oracle(const std::string& word, const std::string& order) {
  std::size_t sum = 0;
  for (auto i : descent_oracle(word, order)) sum += i;
  return sum;
}

std::vector<std::string> all_words(std::size_t length) {
  std::vector<std::string> out{""};
  for (std::size_t i = 0; i < length; ++i) {
    std::vector<std::string> next;
    for (const auto& w : out) {
      for (char c : {'E', 'D', 'N'}) next.push_back(w + c);
    }
    out = std::move(next);
  }
  return out;
}

TEST(StepOrder, ParseAndPrint) {
  for (const char* text : {"E<D<N", "E<N<D", "D<E<N", "N<E<D", "N<D<E", "D<N<E"}) {
    EXPECT_EQ(StepOrder::parse(text).str(), text);
  }
  for (const char* text : {"", "E<D", "E<E<N", "E<D<X", "E>D>N", "E<D<N ", "e<d<n", "E<<DN"}) {
    try {
      StepOrder::parse(text);
      FAIL() << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::InvalidOrder);
    }
  }
}

TEST(StepOrder, SixDistinctOrdersSplitIntoTwoClasses) {
  const auto& all = StepOrder::all();
  std::set<std::string> names;
  int en = 0;
  for (const auto& o : all) {
    names.insert(o.str());
    en += o.e_before_n() ? 1 : 0;
  }
  EXPECT_EQ(names.size(), 6u);
  EXPECT_EQ(en, 3);
  EXPECT_TRUE(StepOrder::parse("E<D<N").e_before_n());
  EXPECT_TRUE(StepOrder::parse("E<N<D").e_before_n());
  EXPECT_TRUE(StepOrder::parse("D<E<N").e_before_n());
  EXPECT_FALSE(StepOrder::parse("N<E<D").e_before_n());
  EXPECT_FALSE(StepOrder::parse("N<D<E").e_before_n());
  EXPECT_FALSE(StepOrder::parse("D<N<E").e_before_n());
}

TEST(Stats, DescentSetExamples) {
  const auto edn = StepOrder::parse("E<D<N");
  EXPECT_TRUE(descent_set(parse_word("EEENNN"), edn).empty());
  EXPECT_EQ(descent_set(parse_word("NE"), edn), (std::vector<std::size_t>{1}));
  EXPECT_EQ(descent_set(parse_word("NENNEE"), edn), (std::vector<std::size_t>{1, 4}));
  EXPECT_TRUE(descent_set(parse_word("N"), edn).empty());
  EXPECT_TRUE(descent_set(LatticeWord(), edn).empty());
}

TEST(Stats, MajExamples) {
  const auto edn = StepOrder::parse("E<D<N");
  EXPECT_EQ(maj(parse_word("EEENNN"), edn), 0u);
  EXPECT_EQ(maj(parse_word("NENNEE"), edn), 5u);
  // Frozen from descent_oracle: under E<N<D the only descent of NDE is D>E at 2.
  EXPECT_EQ(descent_oracle("NDE", "E<N<D"), (std::vector<std::size_t>{2}));
  EXPECT_EQ(maj(parse_word("NDE"), StepOrder::parse("E<N<D")), 2u);
}

TEST(Stats, MatchesDefinitionOracleOnAllShortWords) {
  for (std::size_t len = 0; len <= 6; ++len) {
    for (const auto& text : all_words(len)) {
      const auto w = parse_word(text);
      for (const auto& o : StepOrder::all()) {
        EXPECT_EQ(descent_set(w, o), descent_oracle(text, o.str()));
        EXPECT_EQ(maj(w, o), maj_oracle(text, o.str()));
        EXPECT_LE(maj(w, o), len * (len > 0 ? len - 1 : 0) / 2);
      }
    }
  }
}

TEST(Stats, MajDistributionExamples) {
  const auto edn = StepOrder::parse("E<D<N");
  EXPECT_EQ(maj_distribution(PathFamily::del(1, 1, 2), edn), QPoly({1, 1}));
  for (int n = 0; n <= 5; ++n) {
    for (const auto& o : StepOrder::all()) {
      EXPECT_EQ(maj_distribution(PathFamily::del(n, n, n), o), QPoly::one());
    }
  }
  EXPECT_EQ(maj_distribution(PathFamily::sch(3, 6), edn), QPoly({1, 0, 1, 1, 1, 0, 1}));
  EXPECT_EQ(maj_distribution(PathFamily::bdel(1, 2), edn), QPoly({0, 1}));
  EXPECT_TRUE(maj_distribution(PathFamily::bdel(2, 2), edn).is_zero());
  EXPECT_THROW(maj_distribution(PathFamily::parse("del:3,3,7"), edn), Error);
}

TEST(Stats, DFreeFamiliesIgnoreWhereDSits) {
  for (int n = 0; n <= 5; ++n) {
    for (const auto& w : enumerate(PathFamily::sch(n, 2 * n))) {
      const auto m = maj(w, StepOrder::parse("E<D<N"));
      EXPECT_EQ(m, maj(w, StepOrder::parse("E<N<D")));
      EXPECT_EQ(m, maj(w, StepOrder::parse("D<E<N")));
    }
  }
}

TEST(Stats, SquareDistributionSplitsIntoGoodAndBad) {
  for (int n = 0; n <= 6; ++n) {
    for (int l = n; l <= 2 * n; ++l) {
      for (const auto& o : StepOrder::all()) {
        const auto del = maj_distribution(PathFamily::del(n, n, l), o);
        const auto sch = maj_distribution(PathFamily::sch(n, l), o);
        const auto bad = maj_distribution(PathFamily::bdel(n, l), o);
        EXPECT_EQ(del, sch + bad) << n << "," << l << " " << o.str();
      }
    }
  }
}

TEST(Stats, CoefficientSumIsCardinality) {
  for (const auto& f : {PathFamily::del(4, 3, 5), PathFamily::sch(5, 7), PathFamily::bdel(5, 7)}) {
    const auto size = collect(enumerate(f)).size();
    for (const auto& o : StepOrder::all()) EXPECT_EQ(eval_at_one(maj_distribution(f, o)), size);
  }
}

TEST(Stats, ParallelMatchesSerial) {
  // Large enough to take the chunked path (rank space > 8192).
  for (const auto& f : {PathFamily::del(7, 7, 11), PathFamily::sch(8, 13), PathFamily::bdel(8, 13),
                        PathFamily::del(3, 2, 4)}) {
    for (const auto& o : StepOrder::all()) {
      EXPECT_EQ(maj_distribution(f, o), maj_distribution_serial(f, o)) << f.designator();
    }
  }
}

}  // namespace
}  // namespace latticeq
