#include <doctest.h>

#include <algorithm>
#include <map>

#include "muig/bubble.hpp"
#include "muig/cliquewidth.hpp"
#include "muig/error.hpp"
#include "muig/gen.hpp"
#include "muig/io.hpp"
#include "muig/maxcut.hpp"
#include "oracles.hpp"

using namespace muig;

namespace {

Bubble closed(std::vector<VertexId> ids) {
    Bubble b;
    b[Quadrant::PP] = std::move(ids);
    return b;
}

std::vector<VertexId> column_ids(const UBubbleModel& m, std::size_t j) {
    std::vector<VertexId> out;
    for (const Bubble& b : m.columns[j])
        for (const auto& q : b.quadrants) out.insert(out.end(), q.begin(), q.end());
    std::sort(out.begin(), out.end());
    return out;
}

// Groups of column j read off the graph: vertices with the same neighbours in
// column j + 1.
std::vector<std::vector<VertexId>> graph_groups(const UBubbleModel& m, const Graph& g, std::size_t j) {
    std::map<std::vector<VertexId>, std::vector<VertexId>> by_nbhd;
    const auto next = j + 1 < m.column_count() ? column_ids(m, j + 1) : std::vector<VertexId>{};
    for (VertexId v : column_ids(m, j)) {
        std::vector<VertexId> nb;
        for (VertexId u : next)
            if (g.adjacent(u, v)) nb.push_back(u);
        by_nbhd[nb].push_back(v);
    }
    std::vector<std::vector<VertexId>> out;
    for (auto& [nb, members] : by_nbhd) out.push_back(members);
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t total_group_number(const GroupStructure& gs) {
    std::size_t sum = 0;
    for (const auto& [v, g] : gs.group_number) sum += g;
    return sum;
}

} // namespace

TEST_SUITE("cliquewidth") {

TEST_CASE("diamond expression") {
    const CwdExpression e = diamond_expression();
    const EvalResult r = eval_expression(e);
    CHECK(r.width == 2);
    CHECK(e.width() == 2);
    const Graph expected({1, 2, 3, 4}, {{1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4}});
    CHECK(r.graph == expected);
}

TEST_CASE("isolated vertices and repeated connects") {
    CwdExpression e;
    const auto a = e.vertex(1, 10);
    const auto b = e.vertex(2, 11);
    const auto c = e.vertex(3, 12);
    e.unite(e.unite(a, b), c);
    CHECK(eval_expression(e).graph.m() == 0);
    CHECK(eval_expression(e).graph.n() == 3);

    CwdExpression f;
    const auto u = f.unite(f.vertex(1, 1), f.vertex(2, 2));
    f.connect(1, 2, f.connect(1, 2, u));
    CHECK(eval_expression(f).graph.m() == 1);

    // Relabelling merges classes; a later connect reaches both.
    CwdExpression h;
    const auto x = h.unite(h.unite(h.vertex(1, 1), h.vertex(2, 2)), h.vertex(3, 3));
    h.connect(1, 3, h.relabel(2, 1, x));
    CHECK(eval_expression(h).graph == Graph({1, 2, 3}, {{1, 3}, {2, 3}}));
}

TEST_CASE("invalid expressions") {
    CwdExpression dup;
    dup.unite(dup.vertex(1, 5), dup.vertex(2, 5));
    CHECK_THROWS_AS(eval_expression(dup), ValidationError);

    CwdExpression self;
    self.connect(1, 1, self.vertex(1, 1));
    CHECK_THROWS_AS(eval_expression(self), ValidationError);

    CwdExpression shared;
    const auto v = shared.vertex(1, 1);
    shared.unite(v, v);
    CHECK_THROWS_AS(eval_expression(shared), ValidationError);

    CwdExpression loose;
    loose.vertex(1, 1);
    loose.vertex(1, 2);
    CHECK_THROWS_AS(eval_expression(loose), ValidationError);

    CHECK_THROWS(eval_expression(CwdExpression{}));
}

TEST_CASE("s-expression round trip and errors") {
    const CwdExpression d = diamond_expression();
    const std::string text = to_sexpr(d);
    const CwdExpression back = parse_sexpr(text);
    CHECK(to_sexpr(back) == text);
    CHECK(eval_expression(back).graph == eval_expression(d).graph);
    CHECK(eval_expression(parse_sexpr(read_file(MUIG_FIXTURES "/diamond.sexp"))).graph == eval_expression(d).graph);

    CHECK(eval_expression(parse_sexpr("  (connect 1 2\n (union (v 1 7) (v 2 8)))  ")).graph.m() == 1);

    for (const char* bad : {"", "(", "(v 1)", "(v 1 2 3)", "(union (v 1 1))", "(frob 1 2 (v 1 1))", "(v 1 2))",
                            "(v x 2)", "(relabel 1 (v 1 1))", "(v 1 2) (v 1 3)", "(v -1 2)"})
        CHECK_THROWS_AS(parse_sexpr(bad), ParseError);
}

TEST_CASE("deep expressions do not exhaust the stack") {
    CwdExpression e;
    auto cur = e.vertex(1, 0);
    for (VertexId v = 1; v < 20000; ++v) cur = e.connect(1, 2, e.unite(cur, e.vertex(2, v)));
    const EvalResult r = eval_expression(e);
    CHECK(r.graph.n() == 20000);
    CHECK(r.graph.m() == 19999);  // a star: only vertex 0 keeps label 1
    const CwdExpression back = parse_sexpr(to_sexpr(e));
    CHECK(back.size() == e.size());
}

TEST_CASE("column builder examples") {
    const UBubbleModel ce = counterexample_model();
    const CwdExpression e = build_expr_columns(ce);
    const EvalResult r = eval_expression(e);
    CHECK(r.graph == graph_of_model(ce));
    CHECK(r.width <= 5);

    const UBubbleModel single{{{closed({3})}}};
    CHECK(eval_expression(build_expr_columns(single)).graph == Graph({3}, {}));
    CHECK(build_expr_columns(UBubbleModel{}).empty());
}

TEST_CASE("column builder reproduces generated models within k + 3 labels") {
    for (std::size_t i = 0; i < 400; ++i) {
        const UBubbleModel m = random_model(oracle::varied_params(i, 40, 0xC01));
        const CwdExpression e = build_expr_columns(m);
        const EvalResult r = eval_expression(e);
        REQUIRE(r.graph == graph_of_model(m));
        CHECK(r.width <= m.column_count() + 3);
        CHECK(e.size() <= 9 * m.vertex_count());
    }
}

TEST_CASE("group structure examples") {
    std::vector<VertexId> ids = {1, 2, 3, 4, 5};
    const GroupStructure kn = group_structure(UBubbleModel{{{closed(ids)}}});
    REQUIRE(kn.groups.size() == 1);
    CHECK(kn.groups[0].size() == 1);
    CHECK(kn.phi == 1);

    const UBubbleModel ce = counterexample_model();
    const GroupStructure gs = group_structure(ce);
    CHECK(gs.phi <= 3);
    CHECK(gs.group_number.size() == 6);
}

TEST_CASE("groups agree with next-column neighbourhoods in the graph") {
    for (std::size_t i = 0; i < 400; ++i) {
        const UBubbleModel m = random_model(oracle::varied_params(i, 30, 0x6A0));
        const Graph g = graph_of_model(m);
        const GroupStructure gs = group_structure(m);
        REQUIRE(gs.groups.size() == m.column_count());
        for (std::size_t j = 0; j < m.column_count(); ++j) {
            auto got = gs.groups[j];
            std::sort(got.begin(), got.end());
            CHECK(got == graph_groups(m, g, j));
            // Neighbourhoods in the next column are nested, smallest first.
            if (j + 1 == m.column_count()) continue;
            std::size_t last = 0;
            std::vector<VertexId> prev;
            for (const auto& group : gs.groups[j]) {
                std::vector<VertexId> nb;
                for (VertexId u : column_ids(m, j + 1))
                    if (g.adjacent(u, group.front())) nb.push_back(u);
                CHECK(std::includes(nb.begin(), nb.end(), prev.begin(), prev.end()));
                CHECK((last == 0 || nb.size() > last));
                last = nb.size();
                prev = nb;
            }
        }
        CHECK(gs.group_number.size() == m.vertex_count());
    }
}

TEST_CASE("group builder reproduces generated models within phi + 2 labels") {
    for (std::size_t i = 0; i < 400; ++i) {
        const UBubbleModel m = random_model(oracle::varied_params(i, 40, 0x6B1));
        const GroupStructure gs = group_structure(m);
        const CwdExpression e = build_expr_groups(m);
        const EvalResult r = eval_expression(e);
        REQUIRE(r.graph == graph_of_model(m));
        CHECK(r.width <= gs.phi + 2);
        CHECK(e.size() <= 5 * m.vertex_count() + total_group_number(gs));
    }
    CHECK(eval_expression(build_expr_groups(counterexample_model())).graph == graph_of_model(counterexample_model()));
}

TEST_CASE("bounds on the counterexample") {
    const BoundsReport r = cwd_upper_bounds(counterexample_model());
    CHECK(r.k == 2);
    CHECK(r.r == 2);
    CHECK(r.columns_bound == 5);
    CHECK(r.rows_bound == 6);
    CHECK(r.omega == 4);
    CHECK(r.clique_bound == 5);
    CHECK(r.best <= 5);
}

TEST_CASE("group number can exceed twice the row count") {
    // One row: 1 | 2 3 (closed), 4 (closed-open) | 5 (closed-open). Vertex 2
    // meets {1}, {3} and {4}, three distinct groups.
    Bubble mid;
    mid[Quadrant::PP] = {2, 3};
    mid[Quadrant::PM] = {4};
    Bubble right;
    right[Quadrant::PM] = {5};
    const UBubbleModel m{{{closed({1})}, {mid}, {right}}};
    REQUIRE(validate_model(m).empty());
    const Graph g = graph_of_model(m);
    CHECK(graph_groups(m, g, 1) == std::vector<std::vector<VertexId>>{{2, 3}, {4}});
    CHECK(g.adjacent(1, 2));
    CHECK(g.adjacent(1, 4));
    const GroupStructure gs = group_structure(m);
    CHECK(gs.phi == 3);
    CHECK(m.row_count() == 1);
    const EvalResult r = eval_expression(build_expr_groups(m));
    CHECK(r.graph == g);
    CHECK(r.width <= gs.phi + 2);
}

TEST_CASE("bound relations on generated models") {
    for (std::size_t i = 0; i < 300; ++i) {
        const UBubbleModel m = random_model(oracle::varied_params(i, 24, 0xB0D));
        const BoundsReport r = cwd_upper_bounds(m);
        CHECK(r.phi + 1 <= r.omega);
        CHECK(r.phi <= 2 * r.r + 1);
        CHECK(std::min(r.alpha_bound, r.groups_bound) <= r.omega + 1);
        CHECK(r.best == std::min({r.columns_bound, r.rows_bound, r.alpha_bound, r.groups_bound, r.clique_bound}));
        if (m.vertex_count() <= 20) {
            const Graph g = graph_of_model(m);
            CHECK(r.omega == oracle::clique_number(g));
            CHECK(r.alpha == oracle::independence_number(g));
        }
    }
}

}
