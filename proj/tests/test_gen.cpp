#include <doctest.h>

#include "muig/bubble.hpp"
#include "muig/error.hpp"
#include "muig/gen.hpp"
#include "muig/io.hpp"
#include "oracles.hpp"

using namespace muig;

TEST_SUITE("gen") {

TEST_CASE("same parameters give the same bytes") {
    for (std::size_t i = 0; i < 50; ++i) {
        const GenParams p = corpus_params(i);
        CHECK(write_muir(random_representation(p)) == write_muir(random_representation(p)));
        CHECK(random_model(p) == random_model(p));
    }
    GenParams a, b;
    a.n = b.n = 30;
    a.seed = 1;
    b.seed = 2;
    CHECK(write_muir(random_representation(a)) != write_muir(random_representation(b)));
}

TEST_CASE("random draws stay in range") {
    Random rng(5);
    for (int t = 0; t < 1000; ++t) {
        CHECK(rng.below(7) < 7);
        const double u = rng.unit();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        CHECK(rng.weighted({0, 0, 1, 0}) == 2);
    }
    CHECK(rng.below(1) == 0);
}

TEST_CASE("edge cases") {
    GenParams one;
    one.n = 1;
    CHECK(random_model(one).vertex_count() == 1);

    GenParams twins;
    twins.n = 4;
    twins.twin_rate = 1.0;
    const UBubbleModel m = random_model(twins);
    REQUIRE(m.column_count() == 1);
    REQUIRE(m.columns[0].size() == 1);
    CHECK(m.columns[0][0].size() == 4);
    CHECK(graph_of_model(m).m() == 6);

    GenParams bad;
    bad.n = 0;
    CHECK_THROWS_AS(random_representation(bad), ValidationError);
    bad.n = 3;
    bad.kind_weights = {0, 0, 0, 0};
    CHECK_THROWS_AS(random_representation(bad), ValidationError);
    bad.kind_weights = {1, -1, 0, 0};
    CHECK_THROWS_AS(random_representation(bad), ValidationError);
    bad.kind_weights = {1, 1, 1, 1};
    bad.grid = 0;
    CHECK_THROWS_AS(random_representation(bad), ValidationError);
}

TEST_CASE("window bounds the column count and models are valid") {
    for (std::size_t i = 0; i < 300; ++i) {
        GenParams p = oracle::varied_params(i, 60, 0x3A3);
        const UBubbleModel m = random_model(p);
        CHECK(m.column_count() <= static_cast<std::size_t>(p.window));
        CHECK(m.vertex_count() == p.n);
        CHECK(validate_model(m).empty());
        CHECK(graph_of_model(m) == graph_of_representation(random_representation(p)));
    }
}

TEST_CASE("frozen corpus matches regeneration") {
    const auto corpus = oracle::load_corpus(MUIG_FIXTURES "/corpus.jsonl");
    REQUIRE(corpus.size() == kCorpusSize);
    for (const auto& e : corpus) {
        CHECK(random_model(corpus_params(e.index)) == e.model);
        CHECK(oracle::maxcut(graph_of_model(e.model)) == e.maxcut);
    }
}

TEST_CASE("corpus covers the interesting shapes") {
    const auto corpus = oracle::load_corpus(MUIG_FIXTURES "/corpus.jsonl");
    std::array<bool, 4> quadrant{};
    bool level_edge = false, disconnected = false, staircase = false;
    for (const auto& e : corpus) {
        const UBubbleModel& m = e.model;
        for (const auto& [v, p] : placements(m)) quadrant[static_cast<int>(p.quadrant)] = true;
        const auto pl = placements(m);
        for (const auto& [u, pu] : pl)
            for (const auto& [v, pv] : pl)
                if (pu.row == pv.row && pv.column == pu.column + 1 && model_adjacent(pu, pv)) level_edge = true;
        for (std::size_t j = 0; j + 1 < m.column_count(); ++j) staircase |= m.top(j) < m.top(j + 1);
        const Graph g = graph_of_model(m);
        std::vector<std::size_t> comp(g.n(), g.n());
        std::size_t count = 0;
        for (std::size_t s = 0; s < g.n(); ++s) {
            if (comp[s] != g.n()) continue;
            std::vector<std::size_t> stack{s};
            comp[s] = count;
            while (!stack.empty()) {
                const std::size_t x = stack.back();
                stack.pop_back();
                for (std::size_t y : g.neighbors(x))
                    if (comp[y] == g.n()) comp[y] = count, stack.push_back(y);
            }
            ++count;
        }
        disconnected |= count > 1;
    }
    CHECK(quadrant == std::array<bool, 4>{true, true, true, true});
    CHECK(level_edge);
    CHECK(disconnected);
    CHECK(staircase);
}

}
