#include <doctest.h>

#include "corpus.hpp"
#include "tfpmis/augment.hpp"
#include "tfpmis/generators.hpp"

using namespace tfpmis;
using namespace tfpmis::augment;

TEST_CASE("degeneracy_orientation indegree bounds") {
    CHECK(degeneracy_orientation(underlying(gen::gen_cycle(5))).max_indegree() <= 2);
    AbstractGraph tree(7);
    for (auto [u, v] : std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}})
        tree.add_edge(u, v);
    CHECK(degeneracy_orientation(tree).max_indegree() <= 1);
    for (const auto& item : corpus::named_families(100))
        CHECK_MESSAGE(degeneracy_orientation(underlying(item.g)).max_indegree() <= 5, item.name);
}

TEST_CASE("augment_step: transitivity adds the forced arc") {
    Digraph d(3);
    d.add_arc(0, 1);
    d.add_arc(1, 2);
    Digraph d2 = augment_step(d);
    CHECK(d2.has_arc(0, 2));
    CHECK_FALSE(d2.has_arc(2, 0));
}

TEST_CASE("augment_step: fraternality adds exactly one arc") {
    Digraph d(3);
    d.add_arc(0, 2);
    d.add_arc(1, 2);
    Digraph d2 = augment_step(d);
    CHECK(d2.adjacent(0, 1));
    CHECK(d2.has_arc(0, 1) != d2.has_arc(1, 0));
}

TEST_CASE("augment_step: a single arc is a fixed point") {
    Digraph d(2);
    d.add_arc(0, 1);
    Digraph d2 = augment_step(d);
    CHECK(d2.arc_count() == 1);
    CHECK(d2.has_arc(0, 1));
}

TEST_CASE("augment_l: P3 with forced orientation gains the shortcut arc") {
    // degeneracy orientation of the path 0-1-2 orients 2->1->0
    auto [d, stats] = augment_l(AbstractGraph::from_edges(3, {{0, 1}, {1, 2}}), 1);
    CHECK(d.has_arc(2, 0));
    CHECK(stats.max_indegree_per_round.size() == 2);
}

TEST_CASE("augment_l: C5 round zero") {
    auto [d, stats] = augment_l(underlying(gen::gen_cycle(5)), 0);
    CHECK(stats.rounds == 0);
    CHECK(stats.max_indegree_per_round.size() == 1);
    CHECK(stats.m_d <= 2);
    CHECK(d.arc_count() == 5);
}

TEST_CASE("augmentation closure properties on the corpus") {
    auto items = corpus::named_families(40);
    for (auto& e : corpus::random_batch(10, 6, 20, 808)) items.push_back(std::move(e));
    for (const auto& item : items) {
        AbstractGraph g = underlying(item.g);
        Digraph prev = degeneracy_orientation(g);
        for (int round = 1; round <= 3; ++round) {
            Digraph next = augment_step(prev);
            // monotone
            for (int v = 0; v < g.vertex_count(); ++v)
                for (int u : prev.out_neighbors(v)) CHECK(next.has_arc(v, u));
            // underlying graph stays simple: add_arc would have thrown on digons
            // closure: 2-paths and common out-targets become adjacent
            for (int z = 0; z < g.vertex_count(); ++z) {
                for (int x : prev.in_neighbors(z))
                    for (int y : prev.out_neighbors(z))
                        if (x != y) CHECK_MESSAGE(next.adjacent(x, y), item.name);
                const auto& ins = prev.in_neighbors(z);
                for (size_t i = 0; i < ins.size(); ++i)
                    for (size_t j = i + 1; j < ins.size(); ++j)
                        CHECK_MESSAGE(next.adjacent(ins[i], ins[j]), item.name);
            }
            prev = std::move(next);
        }
    }
}

TEST_CASE("hex 3x3, five rounds: stats shape and reproducibility") {
    AbstractGraph g = underlying(gen::gen_hex(3, 3));
    auto [d1, s1] = augment_l(g, 5);
    auto [d2, s2] = augment_l(g, 5);
    CHECK(s1.max_indegree_per_round == s2.max_indegree_per_round);
    CHECK(s1.max_indegree_per_round.size() == 6);
    CHECK(s1.m_d == s1.max_indegree_per_round.back());
    CHECK(d1.arc_count() == d2.arc_count());
    // golden values, pinned from the first verified run: five rounds saturate
    // this fragment (it has diameter 7, and each round shortcuts 2-paths)
    CHECK(s1.max_indegree_per_round == std::vector<int>{2, 6, 17, 29, 29, 29});
    CHECK(s1.m_d == 29);
    CHECK(d1.arc_count() == 435);
}
