#include <gtest/gtest.h>

#include "sppr/aspect_opt.hpp"
#include "sppr/lemma_audit.hpp"

using namespace sppr;

TEST(AuditDirectedChain, ExactPasses) {
  auto r = audit_directed_chain(3, ChainMode::exact());
  EXPECT_TRUE(r.pass());
  auto* u = r.find("designated-unique-shortest");
  ASSERT_NE(u, nullptr);
  EXPECT_EQ(u->checked, 6u);
  ASSERT_TRUE(u->worst_margin);
  EXPECT_GT(*u->worst_margin, Rational(1));
  EXPECT_EQ(r.find("transition-edge-counting")->checked, 2u);
}

TEST(AuditDirectedChain, ApproxPasses) {
  auto r = audit_directed_chain(3, ChainMode::approx(Rational(2)));
  EXPECT_TRUE(r.pass());
  EXPECT_GT(*r.find("designated-unique-approximate-shortest")->worst_margin, Rational(1));
}

TEST(AuditDirectedChain, HugeDeltaFails) {
  auto r = audit_directed_chain(2, ChainMode::approx(Rational(2), Rational(1)));
  EXPECT_FALSE(r.pass());
  const auto* u = r.find("designated-unique-approximate-shortest");
  ASSERT_FALSE(u->failures.empty());
  const auto& f = u->failures.front();
  ASSERT_TRUE(f.alternative);
  EXPECT_LE(*f.alternative_weight, f.bound);
  // The structural entries do not depend on delta.
  EXPECT_TRUE(r.find("designated-cross-then-two-cycle-edges")->pass);
}

TEST(AuditDirectedChain, Deterministic) {
  auto a = audit_directed_chain(4, ChainMode::approx(Rational(3)));
  auto b = audit_directed_chain(4, ChainMode::approx(Rational(3)));
  ASSERT_EQ(a.lemmas.size(), b.lemmas.size());
  for (std::size_t i = 0; i < a.lemmas.size(); ++i) {
    EXPECT_EQ(a.lemmas[i].worst_margin, b.lemmas[i].worst_margin);
    EXPECT_EQ(a.lemmas[i].checked, b.lemmas[i].checked);
  }
}

TEST(AuditUndirectedChain, ExactAndApprox) {
  auto e = audit_undirected_chain(3, ChainMode::exact());
  EXPECT_TRUE(e.pass());
  EXPECT_EQ(e.find("designated-unique-shortest")->checked, 10u);
  EXPECT_EQ(e.find("two-edge-detour-through-lower-cycle")->checked, 10u);
  auto a = audit_undirected_chain(3, ChainMode::approx());
  EXPECT_TRUE(a.pass());
}

TEST(AuditUndirectedChain, AboveThresholdIsReported) {
  auto r = audit_undirected_chain(2, ChainMode::approx(), Rational(5, 4));
  EXPECT_FALSE(r.pass());
  EXPECT_GT(r.lemmas.front().failed, 0u);
}

TEST(AuditGrid, Passes) {
  for (std::size_t L : {2u, 3u}) {
    auto r = audit_grid(L, Rational(2));
    EXPECT_TRUE(r.pass()) << L;
  }
  auto r3 = audit_grid(3, Rational(2));
  EXPECT_EQ(r3.find("designated-unique-approximate-shortest")->checked, 8u);
}

TEST(AuditGrid, InflatedAlphaFailsWithMargins) {
  auto r = audit_grid(3, Rational(2), Rational(200));
  EXPECT_FALSE(r.pass());
  const auto& u = r.lemmas.front();
  EXPECT_GT(u.failed, 0u);
  ASSERT_TRUE(u.worst_margin);
  EXPECT_LT(*u.worst_margin, Rational(1));
  EXPECT_FALSE(u.note.empty());
}

TEST(CycleDoubling, NativeWeightsRatioThree) {
  auto c = gen_directed_chain(4, ChainMode::exact());
  auto r = audit_cycle_doubling(c, WeightMap::native(c.graph));
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(*r.lemmas.front().worst_margin, Rational(3));
  EXPECT_EQ(r.lemmas.front().note, "3/1 3/1 3/1");
}

TEST(CycleDoubling, OptimiserOutput) {
  auto c = gen_undirected_chain(3, ChainMode::exact());
  auto m = min_aspect_ratio(c.graph, c.paths, Rational(1, 1000000000));
  EXPECT_TRUE(audit_cycle_doubling(c, m.weights).pass());
}

TEST(CycleDoubling, ExactDoublingIsRejected) {
  // C_1 weighs exactly twice C_2: the detour ties the designated path.
  auto c = gen_directed_chain(2, ChainMode::exact());
  std::vector<Rational> w;
  for (const auto& e : c.graph.edges()) {
    auto tag = c.layout.tag(e);
    if (tag.kind == EdgeTag::Kind::cycle) w.push_back(tag.level == 1 ? Rational(2) : Rational(1));
    else w.push_back(Rational(1));
  }
  WeightMap h(w);
  auto sums = cycle_weights(c, h);
  EXPECT_EQ(sums[0], Rational(2) * sums[1]);
  EXPECT_FALSE(check_exact(c.graph, h).pass);
  EXPECT_THROW(audit_cycle_doubling(c, h), Error);
}
