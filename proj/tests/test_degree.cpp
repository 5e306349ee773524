#include <doctest.h>

#include "gemkit/constructions.hpp"
#include "gemkit/degree.hpp"
#include "gemkit/moves.hpp"

using namespace gemkit;

TEST_CASE("validate_map accepts the built maps and reports breakage") {
    CHECK(validate_map(build_g_d_product(3, 4)).empty());
    CHECK(validate_map(identity_map(product_standard(3))).empty());

    // send the endpoints of a color-0 edge to non-adjacent vertices
    Gem src = standard_sphere(2);
    Gem tgt = necklace_sphere(2, 2);
    // target ids 0 and 2 are in different pairs, no direct edge of color 0
    ColoredVertexMap broken = make_map(src, tgt, {0, 2});
    auto violations = validate_map(broken);
    CHECK_FALSE(violations.empty());
    CHECK(violations.front().image_u == 0);
    CHECK(violations.front().image_v == 2);
}

TEST_CASE("algebraic numbers") {
    Gem p = product_gem(3, 4);
    Orientation o = canonical_orientation(p);

    // preimage of v_1^k under the column-collapsing map: the odd columns
    for (int k = 1; k <= 4; ++k) {
        std::vector<VertexId> preimage;
        for (int j = 1; j <= 8; j += 2) preimage.push_back(*p.find_grid(j, k));
        long long a = algebraic_number(o, preimage);
        CHECK(std::abs(a) == 4);
        // row parity decides the common sign; row 1 is positive
        if (k == 1) CHECK(a == 4);
    }

    CHECK(algebraic_number(o, {}) == 0);
    VertexId v0 = *p.find_grid(1, 1);
    VertexId v1 = *p.neighbor(v0, 0);
    CHECK(algebraic_number(o, {v0, v1}) == 0);
    CHECK_THROWS_AS(algebraic_number(o, {999}), GemError);
}

TEST_CASE("degree of the built map families") {
    CHECK(degree(build_g_d_product(3, 4)).degree == 4);
    CHECK(degree(build_g_d_product(4, 4)).degree == 4);
    CHECK(degree(identity_map(product_standard(3))).degree == 1);
    CHECK(degree(identity_map(glued_sphere(3, 2))).degree == 1);

    DegreeResult constant = degree(constant_map(product_standard(4), 0));
    CHECK(constant.degree == 0);
    CHECK_FALSE(constant.surjective);
}

TEST_CASE("degree is the common signed preimage count") {
    DegreeResult r = degree(build_g_d_product(3, 3));
    CHECK(r.surjective);
    for (long long value : r.per_target) CHECK(value == 3);
}

TEST_CASE("orientation reversal has degree -1 and is an involution") {
    for (int n : {2, 3, 4, 5}) {
        ColoredVertexMap rev = orientation_reversal(standard_sphere(n));
        CHECK(degree(rev).degree == -1);
        CHECK(degree(compose(rev, rev)).degree == 1);

        ColoredVertexMap prev = orientation_reversal(product_standard(n));
        CHECK(degree(prev).degree == -1);
        CHECK(degree(compose(prev, prev)).degree == 1);
    }
    CHECK_THROWS_AS(orientation_reversal(product_gem(3, 2)), GemError);
    CHECK_THROWS_AS(orientation_reversal(necklace_sphere(3, 3)), GemError);
}

TEST_CASE("composition is multiplicative on the built maps") {
    for (int n : {2, 3, 4})
        for (int d : {1, 2, 3}) {
            ColoredVertexMap g_d = build_g_d_product(n, d);
            ColoredVertexMap rev = orientation_reversal(product_standard(n));
            CHECK(degree(compose(rev, g_d)).degree == -d);
            CHECK(degree(compose(rev, g_d)).degree ==
                  degree(rev).degree * degree(g_d).degree);
        }

    ColoredVertexMap m = build_g_d_product(3, 2);
    CHECK(compose(identity_map(m.target), m).assignment == m.assignment);
    CHECK_THROWS_AS(compose(build_g_d_product(3, 2), build_g_d_product(3, 2)), GemError);
}

TEST_CASE("sphere maps: below, at, and above half the vertex count") {
    // case d < p on the necklace with p = 5
    Gem source = necklace_sphere(3, 5);
    for (int d = 0; d <= 4; ++d) {
        ColoredVertexMap m = build_sphere_map(source, d);
        CHECK(validate_map(m).empty());
        CHECK(degree(m).degree == d);
    }
    // case d == p: odd vertices to v^1, even to v^2
    ColoredVertexMap top = build_sphere_map(source, 5);
    CHECK(degree(top).degree == 5);
    for (VertexId v = 0; v < source.vertex_count(); ++v)
        CHECK(top.assignment[v] == (v % 2 == 0 ? 0 : 1));

    // d > p requires enlargement
    CHECK_THROWS_AS(build_sphere_map(source, 6), GemError);
    Gem enlarged = source;
    for (int extra = 0; extra < 3; ++extra) {
        enlarged = add_dipole(enlarged, 0, {1, 2, 3});
        int d = 5 + extra + 1;
        CHECK(degree(build_sphere_map(enlarged, d)).degree == d);
    }

    // degree 1 on the standard sphere is the identity
    ColoredVertexMap one = build_sphere_map(standard_sphere(4), 1);
    CHECK(one.assignment == std::vector<VertexId>{0, 1});
    CHECK(degree(one).degree == 1);

    CHECK_THROWS_AS(build_sphere_map(source, -1), GemError);
    CHECK_THROWS_AS(build_sphere_map(cylinder_gem(3, 2), 1), GemError);
}

TEST_CASE("orientation flips negate the degree") {
    ColoredVertexMap m = build_g_d_product(3, 2);
    Orientation src = canonical_orientation(m.source);
    Orientation tgt = canonical_orientation(m.target);
    long long d = degree(m, src, tgt).degree;

    CHECK(degree(m, src.flipped(), tgt).degree == -d);
    CHECK(degree(m, src, tgt.flipped()).degree == -d);
    CHECK(degree(m, src.flipped(), tgt.flipped()).degree == d);
}

TEST_CASE("degree preconditions") {
    // invalid map: broken contract
    Gem tgt = necklace_sphere(2, 2);
    ColoredVertexMap broken = make_map(standard_sphere(2), tgt, {0, 2});
    CHECK_THROWS_AS(degree(broken), GemError);

    // dimension mismatch
    CHECK_THROWS_AS(make_map(standard_sphere(2), standard_sphere(3), {0, 1}), GemError);
    // assignment out of range
    CHECK_THROWS_AS(make_map(standard_sphere(2), standard_sphere(2), {0, 7}), GemError);
    // wrong length
    CHECK_THROWS_AS(make_map(standard_sphere(2), standard_sphere(2), {0}), GemError);
}
