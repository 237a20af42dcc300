#include <gtest/gtest.h>

#include <algorithm>

#include "doat/augment.hpp"
#include "doat/reference.hpp"
#include "test_support.hpp"

namespace doat {
namespace {

using testing::path_decomposition;
using testing::unit_path;

std::vector<CandidateShortcut> with_lengths(std::int32_t i, std::vector<Length> lengths) {
  std::vector<CandidateShortcut> out;
  for (std::size_t k = 0; k < lengths.size(); ++k) {
    const auto j = i + 1 + static_cast<std::int32_t>(k);
    out.push_back({i, j, lengths[k], i, j});
  }
  return out;
}

std::vector<std::int32_t> targets(const std::vector<CandidateShortcut>& cs) {
  std::vector<std::int32_t> js;
  for (const auto& c : cs) js.push_back(c.j);
  return js;
}

/// Random (tree, oracle, i) drawn from the shared panel.
struct Instance {
  WeightedGraph tree;
  ShortcutOracle oracle;
  PathDecomposition pd;
  std::int32_t i = 0;
};

Instance random_instance(SplitMix64& rng, Vertex max_n) {
  const auto panel = testing::oracle_panel();
  while (true) {
    auto t = testing::random_tree_for_test(rng, 2, max_n);
    auto pd = path_decomposition(t);
    if (pd.size() < 2) continue;
    const auto i = static_cast<std::int32_t>(rng.below(pd.size() - 1));
    return {std::move(t), panel[rng.below(panel.size())], std::move(pd), i};
  }
}

TEST(ShortcutCandidates, UnitPathConstant) {
  const auto pd = path_decomposition(unit_path(5));
  const auto cs = shortcut_candidates(pd, 0, ShortcutOracle::constant(1));
  ASSERT_EQ(cs.size(), 4u);
  for (std::size_t k = 0; k < cs.size(); ++k) {
    EXPECT_EQ(cs[k].j, static_cast<std::int32_t>(k) + 1);
    EXPECT_EQ(cs[k].length, 1);
    EXPECT_EQ(cs[k].x, 0);
    EXPECT_EQ(cs[k].y, cs[k].j);
  }
  EXPECT_THROW(shortcut_candidates(pd, 4, ShortcutOracle::constant(1)), std::out_of_range);
}

TEST(ShortcutCandidates, CaterpillarPrefersPathVertex) {
  const auto t = parse_graph("4 3\n0 1 1\n1 2 1\n1 3 1");
  const auto pd = decompose_along_path(t, std::vector<Vertex>{0, 1, 2});
  const auto cs = shortcut_candidates(pd, 0, ShortcutOracle::constant(10));
  EXPECT_EQ(cs[0].length, 10);
  EXPECT_EQ(cs[0].x, 0);
  EXPECT_EQ(cs[0].y, 1);
}

TEST(ShortcutCandidates, ScaledOneGivesPathDistance) {
  const auto pd = path_decomposition(unit_path(5));
  const auto cs = shortcut_candidates(pd, 1, ShortcutOracle::scaled(1, 1));
  for (const auto& c : cs) EXPECT_EQ(c.length, c.j - c.i);
}

TEST(ShortcutCandidates, MatchIndependentEnumeration) {
  SplitMix64 rng(404);
  for (int round = 0; round < 150; ++round) {
    const auto inst = random_instance(rng, 40);
    const auto d = reference::apsp(inst.tree);
    const auto& pd = inst.pd;
    for (const auto& c : shortcut_candidates(pd, inst.i, inst.oracle)) {
      Length best = reference::kUnreachable;
      for (Vertex x = 0; x < inst.tree.vertex_count(); ++x) {
        for (Vertex y = 0; y < inst.tree.vertex_count(); ++y) {
          if (pd.anchor[x] != inst.i || pd.anchor[y] != c.j) continue;
          best = std::min(best, d(x, pd.path[inst.i]) + inst.oracle.length(x, y, d(x, y)) +
                                    d(y, pd.path[c.j]));
        }
      }
      ASSERT_EQ(c.length, best);
    }
  }
}

TEST(ShortcutDominates, Examples) {
  const auto pd = path_decomposition(unit_path(5));
  const auto cs = with_lengths(0, {9, 9, 1, 3});
  EXPECT_TRUE(shortcut_dominates(cs[2], cs[3], pd));  // 1 + 1 <= 3
  EXPECT_FALSE(shortcut_dominates(cs[3], cs[2], pd));
  EXPECT_FALSE(shortcut_dominates(cs[0], cs[1], pd));  // equal lengths, adjacent
  EXPECT_FALSE(shortcut_dominates(cs[1], cs[0], pd));
  EXPECT_THROW(shortcut_dominates(cs[0], cs[0], pd), std::invalid_argument);
  const auto scaled = shortcut_candidates(pd, 0, ShortcutOracle::scaled(1, 1));
  for (std::size_t k = 1; k < scaled.size(); ++k) EXPECT_TRUE(shortcut_dominates(scaled[0], scaled[k], pd));
}

TEST(PruneShortcuts, Examples) {
  const auto pd = path_decomposition(unit_path(5));
  EXPECT_EQ(targets(prune_shortcuts(with_lengths(0, {5, 1, 3}), pd)), (std::vector<std::int32_t>{2}));
  EXPECT_EQ(targets(prune_shortcuts(shortcut_candidates(pd, 0, ShortcutOracle::constant(1)), pd)),
            (std::vector<std::int32_t>{1, 2, 3, 4}));
  EXPECT_EQ(targets(prune_shortcuts(shortcut_candidates(pd, 1, ShortcutOracle::scaled(1, 1)), pd)),
            (std::vector<std::int32_t>{2}));
}

TEST(EvaluateDelta, UnitPathExamples) {
  const auto pd = path_decomposition(unit_path(5));
  const auto far = evaluate_delta(pd, {0, 4, 1, 0, 4});
  EXPECT_EQ(far.value, 2);
  EXPECT_EQ(far.tag, DeltaTag::kBeta);
  EXPECT_EQ(far.a, 0);
  EXPECT_EQ(far.b, 2);

  const auto near = evaluate_delta(pd, {0, 1, 1, 0, 1});
  EXPECT_EQ(near.value, 4);
  EXPECT_EQ(near.tag, DeltaTag::kAlpha);

  const auto useless = evaluate_delta(pd, {1, 3, 7, 1, 3});
  EXPECT_EQ(useless.value, 4);
  EXPECT_EQ(useless.tag, DeltaTag::kAlpha);

  EXPECT_THROW(evaluate_delta(pd, {2, 2, 1, 2, 2}), std::invalid_argument);
}

TEST(ClassifyPair, Cases) {
  EXPECT_EQ(classify_pair(0, 9, 3, 6, 10), DeltaTag::kAlpha);
  EXPECT_EQ(classify_pair(0, 4, 3, 6, 10), DeltaTag::kBeta);
  EXPECT_EQ(classify_pair(0, 3, 3, 6, 10), DeltaTag::kLambda);
  EXPECT_EQ(classify_pair(4, 9, 3, 6, 10), DeltaTag::kGamma);
  EXPECT_EQ(classify_pair(7, 9, 3, 6, 10), DeltaTag::kGamma);
  EXPECT_EQ(classify_pair(4, 5, 3, 6, 10), DeltaTag::kDelta);
  EXPECT_THROW(classify_pair(2, 5, 3, 6, 10), std::logic_error);
}

TEST(EvaluateDelta, GadgetMatchesAugmentedTree) {
  SplitMix64 rng(808);
  for (int round = 0; round < 300; ++round) {
    const auto inst = random_instance(rng, 60);
    const auto cs = shortcut_candidates(inst.pd, inst.i, inst.oracle);
    const auto& c = cs[rng.below(cs.size())];
    const Length len = inst.oracle.length(c.x, c.y, cross_tree_distance(inst.pd, c.x, c.y));
    const auto g = with_shortcut(inst.tree, c.x, c.y, len);
    ASSERT_EQ(evaluate_delta(inst.pd, c).value, diameter(g).value);
  }
}

TEST(EvaluateDelta, FiveFunctionDecomposition) {
  SplitMix64 rng(909);
  for (int round = 0; round < 300; ++round) {
    const auto inst = random_instance(rng, 30);
    for (const auto& c : shortcut_candidates(inst.pd, inst.i, inst.oracle)) {
      const auto ev = evaluate_delta(inst.pd, c);
      const auto f = testing::five_functions(inst.pd, c.i, c.j, c.length);
      ASSERT_EQ(ev.value, f.envelope());
      ASSERT_EQ(ev.value, f.tagged(ev.tag)) << tag_name(ev.tag);
    }
  }
}

TEST(EvaluateDelta, DominationImpliesNoWorseValue) {
  SplitMix64 rng(111);
  for (int round = 0; round < 150; ++round) {
    const auto inst = random_instance(rng, 30);
    const auto cs = shortcut_candidates(inst.pd, inst.i, inst.oracle);
    for (const auto& a : cs) {
      for (const auto& b : cs) {
        if (a.j == b.j || !shortcut_dominates(a, b, inst.pd)) continue;
        ASSERT_LE(evaluate_delta(inst.pd, a).value, evaluate_delta(inst.pd, b).value);
      }
    }
  }
}

TEST(PruneShortcuts, SurvivorsKeepAnOptimum) {
  SplitMix64 rng(222);
  for (int round = 0; round < 150; ++round) {
    const auto inst = random_instance(rng, 40);
    const auto cs = shortcut_candidates(inst.pd, inst.i, inst.oracle);
    const auto surv = prune_shortcuts(cs, inst.pd);
    ASSERT_FALSE(surv.empty());
    for (std::size_t a = 0; a < surv.size(); ++a) {
      if (a > 0) {
        ASSERT_LT(surv[a - 1].j, surv[a].j);
      }
      for (std::size_t b = 0; b < surv.size(); ++b) {
        if (a != b) {
          ASSERT_FALSE(shortcut_dominates(surv[a], surv[b], inst.pd));
        }
      }
    }
    const auto profile = reference::brute_delta_profile(inst.tree, inst.pd, inst.i, inst.oracle);
    Length on_survivors = reference::kUnreachable;
    for (const auto& s : surv) on_survivors = std::min(on_survivors, profile[s.j - inst.i - 1]);
    ASSERT_EQ(on_survivors, *std::min_element(profile.begin(), profile.end()));
  }
}

TEST(FiveFunctions, MonotoneAcrossConsecutiveSurvivors) {
  SplitMix64 rng(333);
  for (int round = 0; round < 300; ++round) {
    const auto inst = random_instance(rng, 40);
    if (inst.pd.size() > 25) continue;
    const auto surv = prune_shortcuts(shortcut_candidates(inst.pd, inst.i, inst.oracle), inst.pd);
    for (std::size_t k = 1; k < surv.size(); ++k) {
      const auto f = testing::five_functions(inst.pd, inst.i, surv[k - 1].j, surv[k - 1].length);
      const auto g = testing::five_functions(inst.pd, inst.i, surv[k].j, surv[k].length);
      EXPECT_GT(f.alpha, g.alpha);
      EXPECT_LE(f.beta, g.beta);
      EXPECT_GE(f.gamma, g.gamma);
      EXPECT_LE(f.delta, g.delta);
      EXPECT_EQ(f.lambda, g.lambda);
    }
    if (HasFailure()) return;
  }
}

TEST(BestShortcutForVertex, Examples) {
  const auto p5 = path_decomposition(unit_path(5));
  const auto b5 = best_shortcut_for_vertex(p5, 0, ShortcutOracle::constant(1));
  EXPECT_EQ(b5.shortcut.j, 4);
  EXPECT_EQ(b5.eval.value, 2);
  EXPECT_EQ(b5.survivors, 4u);

  const auto p3 = path_decomposition(unit_path(3));
  const auto b3 = best_shortcut_for_vertex(p3, 0, ShortcutOracle::constant(1));
  EXPECT_EQ(b3.shortcut.j, 2);
  EXPECT_EQ(b3.eval.value, 1);

  const auto bs = best_shortcut_for_vertex(p5, 2, ShortcutOracle::scaled(1, 1));
  EXPECT_EQ(bs.survivors, 1u);
  EXPECT_EQ(bs.shortcut.j, 3);
  EXPECT_EQ(bs.eval.value, 4);
}

TEST(BestShortcutForVertex, BinarySearchMatchesExhaustiveMinimum) {
  SplitMix64 rng(444);
  for (int round = 0; round < 300; ++round) {
    const auto inst = random_instance(rng, 60);
    const auto surv = prune_shortcuts(shortcut_candidates(inst.pd, inst.i, inst.oracle), inst.pd);
    Length best = reference::kUnreachable;
    for (const auto& s : surv) best = std::min(best, evaluate_delta(inst.pd, s).value);
    const auto found = best_shortcut_for_vertex(inst.pd, inst.i, inst.oracle);
    ASSERT_EQ(found.eval.value, best);
    ASSERT_EQ(evaluate_delta(inst.pd, found.shortcut).value, best);
  }
}

TEST(SolveDoat, Examples) {
  const auto path = solve_doat(unit_path(5), ShortcutOracle::constant(1));
  EXPECT_EQ(path.value, 2);
  EXPECT_EQ((std::pair<Vertex, Vertex>(std::minmax(path.x, path.y))), (std::pair<Vertex, Vertex>{0, 4}));
  EXPECT_EQ(path.length, 1);

  for (Length len : {1, 4, 9}) {
    for (Length c : {2, 4, 20}) {
      const auto edge = solve_doat(parse_graph("2 1\n0 1 " + std::to_string(len)), ShortcutOracle::constant(c));
      EXPECT_EQ(edge.value, std::min(len, c));
      EXPECT_EQ((std::pair<Vertex, Vertex>(std::minmax(edge.x, edge.y))), (std::pair<Vertex, Vertex>{0, 1}));
    }
  }
  EXPECT_EQ(solve_doat(testing::unit_star(3), ShortcutOracle::constant(1)).value, 2);
}

TEST(SolveDoat, Errors) {
  EXPECT_THROW(solve_doat(WeightedGraph(1), ShortcutOracle::constant(1)), GraphError);
  EXPECT_THROW(solve_doat(testing::example_e1(), ShortcutOracle::constant(1)), GraphError);
}

TEST(SolveDoat, MatchesBruteForce) {
  SplitMix64 rng(555);
  const auto panel = testing::oracle_panel();
  for (int round = 0; round < 120; ++round) {
    const auto t = testing::random_tree_for_test(rng, 2, 30);
    const auto& oracle = panel[round % panel.size()];
    const auto sol = solve_doat(t, oracle);
    ASSERT_EQ(sol.value, reference::brute_doat(t, oracle).value) << to_string(t);
    ASSERT_LE(sol.value, tree_diametral_path(t).value);
    const auto realised = reference::brute_diameter(with_shortcut(t, sol.x, sol.y, sol.length));
    ASSERT_EQ(realised.value, sol.value);
  }
}

TEST(SolveDoat, ThreadCountDoesNotChangeResult) {
  SplitMix64 rng(666);
  const auto panel = testing::oracle_panel();
  for (int round = 0; round < 40; ++round) {
    const auto t = testing::random_tree_for_test(rng, 2, 150);
    const auto& oracle = panel[rng.below(panel.size())];
    const auto one = solve_doat(t, oracle, {1});
    EXPECT_EQ(solve_doat(t, oracle, {4}), one);
    EXPECT_EQ(solve_doat(t, oracle, {7}), one);
  }
}

}  // namespace
}  // namespace doat
