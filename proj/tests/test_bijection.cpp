#include <doctest.h>

#include <string>
#include <vector>

#include "stoim/bijection.hpp"
#include "stoim/enumerate.hpp"
#include "stoim/matching.hpp"

using namespace stoim;

namespace {

Matching mk(const std::string& text) { return Matching::parse(text); }

template <typename F>
std::string thrown_message(F&& f) {
  try {
    f();
  } catch (const std::exception& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("remove_arc golden steps") {
  SUBCASE("a non-singleton level set loses just the reduction arc") {
    const auto step = remove_arc(mk("3 4 1 2 7 9 5 10 6 8"));
    CHECK(step.result == mk("3 4 1 2 6 5 8 7"));
    CHECK(step.extracted == 1);
    CHECK(step.rule == RuleTag::Rem1);
  }
  SUBCASE("a lone maximal-label arc is the rightmost one") {
    const auto step = remove_arc(mk("4 5 7 1 2 8 3 6 10 9"));
    CHECK(step.result == mk("4 5 7 1 2 8 3 6"));
    CHECK(step.extracted == 2);
    CHECK(step.rule == RuleTag::Rem2);
  }
  SUBCASE("block surgery, large example") {
    const auto step = remove_arc(mk("5 7 8 10 1 12 2 3 13 4 14 6 9 11"));
    CHECK(step.result == mk("5 7 9 10 1 11 2 12 3 4 6 8"));
    CHECK(step.extracted == 1);
    CHECK(step.rule == RuleTag::Rem3);
  }
  SUBCASE("block surgery, small example") {
    const auto step = remove_arc(mk("3 5 1 7 2 8 4 6"));
    CHECK(step.result == mk("3 5 1 6 2 4"));
    CHECK(step.extracted == 1);
    CHECK(step.rule == RuleTag::Rem3);
  }
  SUBCASE("two isolated arcs") {
    const auto step = remove_arc(mk("2 1 4 3"));
    CHECK(step.result == mk("2 1"));
    CHECK(step.extracted == 1);
    CHECK(step.rule == RuleTag::Rem2);
  }
}

TEST_CASE("remove_arc rejects bad input") {
  CHECK(thrown_message([] { remove_arc(mk("2 1")); }).find("two arcs") !=
        std::string::npos);
  CHECK(thrown_message([] { remove_arc(mk("4 3 2 1")); })
            .find("Stoimenow") != std::string::npos);
}

TEST_CASE("add_arc golden steps") {
  SUBCASE("appending a rightmost arc") {
    const auto step = add_arc(mk("2 1"), 1);
    CHECK(step.result == mk("2 1 4 3"));
    CHECK(step.rule == RuleTag::Add2);
  }
  SUBCASE("inserting into a label run") {
    const auto step = add_arc(mk("2 1"), 0);
    CHECK(step.result == mk("3 4 1 2"));
    CHECK(step.rule == RuleTag::Add1);
  }
  SUBCASE("block surgery inverse") {
    const auto step = add_arc(mk("3 5 1 6 2 4"), 1);
    CHECK(step.result == mk("3 5 1 7 2 8 4 6"));
    CHECK(step.rule == RuleTag::Add3);
  }
}

TEST_CASE("add_arc rejects bad input") {
  CHECK(thrown_message([] { add_arc(mk("2 1"), 2); }).find("out of range") !=
        std::string::npos);
  CHECK(thrown_message([] { add_arc(mk("2 1"), -1); }).find("out of range") !=
        std::string::npos);
  CHECK(thrown_message([] { add_arc(mk("4 3 2 1"), 0); }).find("Stoimenow") !=
        std::string::npos);
}

TEST_CASE("encode golden vectors") {
  CHECK(encode(mk("5 7 8 10 1 12 2 3 13 4 14 6 9 11")).values() ==
        std::vector<int>{0, 1, 0, 1, 0, 0, 1});
  CHECK(encode(mk("2 1")).values() == std::vector<int>{0});
  CHECK(encode(mk("3 4 1 2 6 5")).values() == std::vector<int>{0, 0, 1});
  CHECK(encode(mk("2 1 4 3 6 5")).values() == std::vector<int>{0, 1, 2});
}

TEST_CASE("decode golden vectors") {
  CHECK(decode(AscentSequence({0, 0, 0})) == mk("4 5 6 1 2 3"));
  CHECK(decode(AscentSequence({0, 1, 0})) == mk("3 5 1 6 2 4"));
  CHECK(decode(AscentSequence({0, 1, 0, 1, 0, 0, 1})) ==
        mk("5 7 8 10 1 12 2 3 13 4 14 6 9 11"));
}

TEST_CASE("trace_encode records every removal step") {
  SUBCASE("single step") {
    const auto trace = trace_encode(mk("2 1 4 3"));
    REQUIRE(trace.size() == 1);
    CHECK(trace[0].rule == RuleTag::Rem2);
    CHECK(trace[0].value == 1);
    CHECK(trace[0].before == mk("2 1 4 3"));
    CHECK(trace[0].after == mk("2 1"));
    CHECK(trace[0].to_string() == "Rem2 1: 2 1 4 3 -> 2 1");
  }
  SUBCASE("full decomposition of the large example") {
    const auto trace = trace_encode(mk("5 7 8 10 1 12 2 3 13 4 14 6 9 11"));
    REQUIRE(trace.size() == 6);
    const std::vector<RuleTag> rules{RuleTag::Rem3, RuleTag::Rem1,
                                     RuleTag::Rem1, RuleTag::Rem3,
                                     RuleTag::Rem1, RuleTag::Rem2};
    const std::vector<int> extracted{1, 0, 0, 1, 0, 1};
    for (std::size_t k = 0; k < trace.size(); ++k) {
      CHECK(trace[k].rule == rules[k]);
      CHECK(trace[k].value == extracted[k]);
    }
    // Steps chain together and feed encode's entries from the right.
    for (std::size_t k = 1; k < trace.size(); ++k) {
      CHECK(trace[k].before == trace[k - 1].after);
    }
  }
  SUBCASE("base case has no steps") {
    CHECK(trace_encode(mk("2 1")).empty());
  }
}

TEST_CASE("removal and addition invert each other exhaustively") {
  for (int n = 1; n <= 6; ++n) {
    for (const Matching& m : enumerate_matchings(n)) {
      const int top = stat_M(m);
      for (int i = 0; i <= 1 + top; ++i) {
        const auto added = add_arc(m, i);
        const auto removed = remove_arc(added.result);
        CHECK(removed.result == m);
        CHECK(removed.extracted == i);
      }
      if (n >= 2) {
        const auto removed = remove_arc(m);
        CHECK(add_arc(removed.result, removed.extracted).result == m);
      }
    }
  }
}

TEST_CASE("rules pair up across the inversion") {
  for (int n = 1; n <= 5; ++n) {
    for (const Matching& m : enumerate_matchings(n)) {
      for (int i = 0; i <= 1 + stat_M(m); ++i) {
        const auto added = add_arc(m, i);
        const auto removed = remove_arc(added.result);
        const auto expect =
            added.rule == RuleTag::Add1   ? RuleTag::Rem1
            : added.rule == RuleTag::Add2 ? RuleTag::Rem2
                                          : RuleTag::Rem3;
        CHECK(removed.rule == expect);
      }
    }
  }
}

TEST_CASE("statistics track the sequence exhaustively") {
  for (int n = 1; n <= 7; ++n) {
    for (const AscentSequence& x : enumerate_sequences(n)) {
      const Matching m = decode(x);
      CHECK(stat_m(m) == x.back());
      CHECK(stat_M(m) == x.ascents());
    }
  }
}

TEST_CASE("the maximal label updates consistently in both directions") {
  for (int n = 2; n <= 6; ++n) {
    for (const Matching& m : enumerate_matchings(n)) {
      for (const TraceEntry& step : trace_encode(m)) {
        CHECK(is_stoimenow(step.after));
        const int expected = (step.value <= stat_m(step.after))
                                 ? stat_M(step.before)
                                 : stat_M(step.before) - 1;
        CHECK(stat_M(step.after) == expected);
      }
    }
  }
  for (int n = 1; n <= 5; ++n) {
    for (const Matching& m : enumerate_matchings(n)) {
      for (int i = 0; i <= 1 + stat_M(m); ++i) {
        const auto added = add_arc(m, i);
        CHECK(is_stoimenow(added.result));
        const int expected =
            (i <= stat_m(m)) ? stat_M(m) : stat_M(m) + 1;
        CHECK(stat_M(added.result) == expected);
      }
    }
  }
}

TEST_CASE("a step is Rem2 exactly when the entry tops the prefix") {
  for (int n = 2; n <= 6; ++n) {
    for (const Matching& m : enumerate_matchings(n)) {
      const auto trace = trace_encode(m);
      const auto x = encode(m).values();
      for (std::size_t t = 0; t < trace.size(); ++t) {
        const TraceEntry& step = trace[t];
        // Step t extracts the entry at position n - t (1-based).
        const std::size_t pos = x.size() - t;
        REQUIRE(x[pos - 1] == step.value);
        const std::vector<int> prefix(x.begin(), x.begin() + pos - 1);
        const bool tops = step.value == 1 + asc(prefix);
        const bool exceeds_rest =
            step.value > labels(step.after).max_label();
        CHECK((step.rule == RuleTag::Rem2) == tops);
        CHECK((step.rule == RuleTag::Rem2) == exceeds_rest);
      }
    }
  }
}

TEST_CASE("encode then decode is the identity exhaustively") {
  for (int n = 1; n <= 6; ++n) {
    for (const Matching& m : enumerate_matchings(n)) {
      const AscentSequence x = encode(m);
      CHECK(is_valid_ascent_sequence(x.values()));
      CHECK(static_cast<int>(x.values().size()) == n);
      CHECK(decode(x) == m);
    }
  }
}
