#include <doctest.h>

#include <set>

#include "gemkit/complex.hpp"
#include "gemkit/constructions.hpp"
#include "gemkit/genus.hpp"

using namespace gemkit;

TEST_CASE("standard sphere") {
    for (int n = 1; n <= 8; ++n) {
        Gem s = standard_sphere(n);
        CHECK(s.vertex_count() == 2);
        CHECK(static_cast<int>(s.edges().size()) == n + 1);
        CHECK(s.is_contracted());
    }
    CHECK_THROWS_AS(standard_sphere(0), GemError);
}

TEST_CASE("necklace sphere") {
    CHECK(color_isomorphism(necklace_sphere(3, 1), standard_sphere(3)).has_value());
    for (int n = 1; n <= 6; ++n)
        for (int d = 1; d <= 6; ++d) {
            Gem g = necklace_sphere(n, d);
            CHECK(g.vertex_count() == 2 * d);
            CHECK(g.is_closed());
            CHECK(g.is_connected());
            CHECK(g.is_bipartite());
        }
    CHECK_THROWS_AS(necklace_sphere(3, 0), GemError);
}

TEST_CASE("cylinder gem: vertex count, boundary rows, degeneration at n=2") {
    for (int n = 2; n <= 8; ++n)
        for (int d = 1; d <= 6; ++d) {
            Gem c = cylinder_gem(n, d);
            CHECK(c.vertex_count() == 2 * d * (n + 1));
            CHECK_FALSE(c.is_closed());
            CHECK(c.is_connected());
            CHECK(c.is_bipartite());

            // boundary is exactly rows 1 and n+1
            std::set<VertexId> expected;
            for (int j = 1; j <= 2 * d; ++j) {
                expected.insert(*c.find_grid(j, 1));
                expected.insert(*c.find_grid(j, n + 1));
            }
            auto boundary = c.boundary_vertices();
            CHECK(std::set<VertexId>(boundary.begin(), boundary.end()) == expected);
        }
    CHECK_THROWS_AS(cylinder_gem(1, 1), GemError);
}

TEST_CASE("cylinder gem: row color sets match the fixed scheme for n=3") {
    Gem c = cylinder_gem(3, 2);
    auto joining = [&](int j1, int k1, int j2, int k2) {
        std::vector<Color> out;
        VertexId a = *c.find_grid(j1, k1), b = *c.find_grid(j2, k2);
        for (Color col = 0; col <= 3; ++col)
            if (c.neighbor(a, col) == std::optional<VertexId>(b)) out.push_back(col);
        return out;
    };
    // verticals: n-1 then k-2
    CHECK(joining(1, 1, 1, 2) == std::vector<Color>{2});
    CHECK(joining(1, 2, 1, 3) == std::vector<Color>{0});
    CHECK(joining(1, 3, 1, 4) == std::vector<Color>{1});
    // row sets: {0,1}, {1}, {2}, {0,2}
    CHECK(joining(1, 1, 2, 1) == std::vector<Color>{0, 1});
    CHECK(joining(1, 2, 2, 2) == std::vector<Color>{1});
    CHECK(joining(1, 3, 2, 3) == std::vector<Color>{2});
    CHECK(joining(1, 4, 2, 4) == std::vector<Color>{0, 2});
    // color-n seam and wrap on interior rows only
    CHECK(joining(2, 2, 3, 2) == std::vector<Color>{3});
    CHECK(joining(2, 3, 3, 3) == std::vector<Color>{3});
    CHECK(joining(1, 2, 4, 2) == std::vector<Color>{3});
    CHECK(joining(2, 1, 3, 1).empty());
    CHECK(joining(2, 4, 3, 4).empty());
}

TEST_CASE("cylinder gem: row color sets for n=4 and n=5") {
    for (int n : {4, 5}) {
        Gem c = cylinder_gem(n, 1);
        auto row_set = [&](int k) {
            std::set<Color> out;
            VertexId a = *c.find_grid(1, k), b = *c.find_grid(2, k);
            for (Color col = 0; col <= n; ++col)
                if (c.neighbor(a, col) == std::optional<VertexId>(b)) out.insert(col);
            return out;
        };
        // row 1: 0..n-2
        std::set<Color> row1;
        for (Color col = 0; col <= n - 2; ++col) row1.insert(col);
        CHECK(row_set(1) == row1);
        // row 2 picks up the wrap color n and drops n-1 and 0
        std::set<Color> row2;
        for (Color col = 1; col <= n - 2; ++col) row2.insert(col);
        row2.insert(n);
        CHECK(row_set(2) == row2);
        // row n+1: {n-1} + 0..n-3
        std::set<Color> last;
        last.insert(n - 1);
        for (Color col = 0; col <= n - 3; ++col) last.insert(col);
        CHECK(row_set(n + 1) == last);
    }
}

TEST_CASE("product gems close the cylinder") {
    for (int n = 2; n <= 6; ++n) {
        CHECK(product_standard(n).vertex_count() == 2 * (n + 1));
        CHECK(product_standard(n).is_contracted());
        CHECK(euler_characteristic(product_standard(n)) == 0);
        CHECK(product_gem(n, 1) == product_standard(n));
        for (int d = 1; d <= 5; ++d) {
            Gem p = product_gem(n, d);
            CHECK(p.vertex_count() == 2 * d * (n + 1));
            CHECK(p.is_closed());
            CHECK_NOTHROW(p.orientation(0));
        }
    }
    CHECK(product_gem(3, 4).vertex_count() == 32);
    CHECK(product_gem(4, 4).vertex_count() == 40);
}

TEST_CASE("product gem restricted below color n equals the cylinder") {
    for (int n : {3, 4})
        for (int d : {2, 3}) {
            Gem p = product_gem(n, d);
            Gem c = cylinder_gem(n, d);
            std::vector<ColoredEdge> p_low, c_low;
            for (const ColoredEdge& e : p.edges())
                if (e.color < n) p_low.push_back(e);
            for (const ColoredEdge& e : c.edges())
                if (e.color < n) c_low.push_back(e);
            CHECK(p_low == c_low);
        }
}

TEST_CASE("glued sphere is the boundary pattern of the product gem") {
    for (int n : {3, 4})
        for (int d : {1, 2, 3}) {
            Gem g = glued_sphere(n, d);
            CHECK(g.vertex_count() == 4 * d);
            CHECK(g.is_closed());
            CHECK(g.is_connected());
            CHECK(g.is_bipartite());

            // same color-n matching, by labels, as the product gem
            Gem p = product_gem(n, d);
            std::set<std::pair<std::string, std::string>> glued_edges, product_edges;
            for (const ColoredEdge& e : g.edges())
                if (e.color == n)
                    glued_edges.insert({g.label(e.u).name, g.label(e.v).name});
            for (const ColoredEdge& e : p.edges()) {
                if (e.color != n) continue;
                const VertexLabel& lu = p.label(e.u);
                const VertexLabel& lv = p.label(e.v);
                if (lu.level == 1 && lv.level == n + 1)
                    product_edges.insert({lu.name, lv.name});
                else if (lu.level == n + 1 && lv.level == 1)
                    product_edges.insert({lv.name, lu.name});
            }
            CHECK(glued_edges == product_edges);
        }
}

TEST_CASE("all constructions validate and are bipartite over the grid") {
    for (int n = 2; n <= 8; ++n)
        for (int d = 1; d <= 6; ++d) {
            CHECK(cylinder_gem(n, d).is_bipartite());
            CHECK(product_gem(n, d).is_bipartite());
            CHECK(glued_sphere(n, d).is_bipartite());
            CHECK(necklace_sphere(n, d).is_bipartite());
        }
}

TEST_CASE("construction parity of the bipartition") {
    for (int n : {3, 4})
        for (int d : {2, 4}) {
            Gem p = product_gem(n, d);
            Orientation o = p.orientation(*p.find_grid(1, 1));
            for (int j = 1; j <= 2 * d; ++j)
                for (int k = 1; k <= n + 1; ++k)
                    CHECK(o.sign(*p.find_grid(j, k)) == ((j + k) % 2 == 0 ? 1 : -1));
        }
}
