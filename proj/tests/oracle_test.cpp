#include "support.hpp"

#include <gtest/gtest.h>

namespace braidkit {
namespace {

SimpleBraid S(const char* text, int n = 4) { return parse_simple(text, n); }

TEST(Oracle, MethodNames) {
  for (auto m : kAllMethods) EXPECT_EQ(parse_method(method_name(m)), m);
  EXPECT_FALSE(parse_method("nope"));
  EXPECT_EQ(verdict_name(Verdict::trivial), "trivial");
}

TEST(Oracle, RandomWordIsDeterministic) {
  EXPECT_EQ(random_word(5, 40, 7), random_word(5, 40, 7));
  EXPECT_NE(random_word(5, 40, 7), random_word(5, 40, 8));
  const auto w = random_word(3, 100, 1);
  EXPECT_EQ(w.size(), 100u);
  for (const auto& l : w) EXPECT_TRUE(l.index == 1 || l.index == 2);
}

TEST(Oracle, BruteHead) {
  EXPECT_EQ(brute_head(S("a"), S("b")), S("ab"));
  EXPECT_EQ(brute_head(S("b"), S("b")), S("b"));
  EXPECT_EQ(brute_head(S("ba"), S("ab")), S("ba"));
}

TEST(Oracle, AllSimples) {
  EXPECT_EQ(all_simples(3).size(), 6u);
  EXPECT_EQ(all_simples(4).size(), 24u);
  EXPECT_TRUE(all_simples(4).front().is_identity());
  EXPECT_TRUE(all_simples(4).back().is_delta());
}

TEST(Oracle, RunMethod) {
  const auto w0 = parse("aBabacABABAbbCB");
  for (auto m : kAllMethods) {
    const auto r = run_method(w0, m);
    EXPECT_EQ(r.verdict, Verdict::nontrivial) << method_name(m);
    EXPECT_GT(r.steps, 0u) << method_name(m);
    EXPECT_EQ(run_method(parse("abAB" "baBA"), m).verdict, Verdict::trivial);
  }
  SolverBudgets tight;
  tight.redress_steps = 2;
  tight.handle_steps = 2;
  EXPECT_EQ(decide_trivial(w0, Method::redress, tight), Verdict::budget_exhausted);
  EXPECT_EQ(decide_trivial(w0, Method::handle, tight), Verdict::budget_exhausted);
}

TEST(Oracle, CheckWord) {
  const auto r = check_word(parse("aBabacABABAbbCB"));
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.cases_run, 1u);
  EXPECT_TRUE(check_word(parse(""), true).passed());
  EXPECT_TRUE(check_word(parse("aA"), true).passed());
}

TEST(Oracle, CrossCheck) {
  FuzzParams p;
  p.count = 100;
  p.seed = 42;
  const auto r = cross_check(p);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.cases_run, 200u);
  EXPECT_TRUE(r.budget_exhausted.empty());
}

TEST(Oracle, MergeIsAssociative) {
  FuzzReport a, b, c;
  a.cases_run = 1;
  b.cases_run = 2;
  b.budget_exhausted.push_back(parse("ab"));
  c.cases_run = 3;
  c.disagreements.push_back({parse("a"), false, {}});
  auto left = a;
  left.merge(b);
  left.merge(c);
  auto bc = b;
  bc.merge(c);
  auto right = a;
  right.merge(bc);
  EXPECT_EQ(left.cases_run, 6u);
  EXPECT_EQ(right.cases_run, 6u);
  EXPECT_EQ(left.budget_exhausted, right.budget_exhausted);
  EXPECT_EQ(left.disagreements.size(), 1u);
  EXPECT_FALSE(left.passed());
}

}  // namespace
}  // namespace braidkit
