#include "gemkit/degree.hpp"

#include <algorithm>

#include "gemkit/constructions.hpp"
#include "gemkit/moves.hpp"

namespace gemkit {

ColoredVertexMap make_map(Gem source, Gem target, std::vector<VertexId> assignment) {
    if (source.dimension() != target.dimension())
        fail(Err::Mismatch, "source and target dimensions differ");
    if (static_cast<int>(assignment.size()) != source.vertex_count())
        fail(Err::Mismatch, "assignment length does not match the source vertex count");
    for (VertexId w : assignment)
        if (w < 0 || w >= target.vertex_count())
            fail(Err::UnknownVertex, "image vertex " + std::to_string(w) + " out of range");
    return {std::move(source), std::move(target), std::move(assignment)};
}

std::vector<MapViolation> validate_map(const ColoredVertexMap& m) {
    std::vector<MapViolation> out;
    for (const ColoredEdge& e : m.source.edges()) {
        VertexId a = m.assignment[e.u], b = m.assignment[e.v];
        if (a == b) continue;
        if (m.target.neighbor(a, e.color) != std::optional<VertexId>(b))
            out.push_back({e, a, b});
    }
    return out;
}

long long algebraic_number(const Orientation& o, const std::vector<VertexId>& vertices) {
    long long sum = 0;
    for (VertexId v : vertices) sum += o.sign(v);
    return sum;
}

Orientation canonical_orientation(const Gem& g) {
    return g.orientation(canonical_root(g));
}

namespace {

void check_orientation_matches(const Gem& g, const Orientation& o, const char* which) {
    if (static_cast<int>(o.signs.size()) != g.vertex_count())
        fail(Err::BadParam, std::string(which) + " orientation does not match the gem");
    for (const ColoredEdge& e : g.edges())
        if (o.signs[e.u] == o.signs[e.v])
            fail(Err::BadParam,
                 std::string(which) + " orientation does not alternate along the gem");
}

} // namespace

DegreeResult degree(const ColoredVertexMap& m, const Orientation& source_orientation,
                    const Orientation& target_orientation) {
    if (!m.source.is_closed() || !m.target.is_closed())
        fail(Err::NotClosed, "degree is defined for closed gems");
    check_orientation_matches(m.source, source_orientation, "source");
    check_orientation_matches(m.target, target_orientation, "target");
    if (auto violations = validate_map(m); !violations.empty())
        fail(Err::InvalidMap, "edge contract broken on " +
                                  std::to_string(violations.size()) + " source edge(s)");

    DegreeResult result;
    result.per_target.assign(m.target.vertex_count(), 0);
    std::vector<long long> preimage_sum(m.target.vertex_count(), 0);
    std::vector<int> preimage_size(m.target.vertex_count(), 0);
    for (VertexId u = 0; u < m.source.vertex_count(); ++u) {
        VertexId w = m.assignment[u];
        preimage_sum[w] += source_orientation.signs[u];
        preimage_size[w] += 1;
    }

    result.surjective = std::find(preimage_size.begin(), preimage_size.end(), 0) ==
                        preimage_size.end();
    for (VertexId w = 0; w < m.target.vertex_count(); ++w)
        result.per_target[w] = target_orientation.signs[w] * preimage_sum[w];

    if (!result.surjective) {
        result.degree = 0;
        return result;
    }
    for (long long value : result.per_target)
        if (value != result.per_target[0])
            fail(Err::InconsistentDegree,
                 "signed preimage counts disagree across target vertices");
    result.degree = result.per_target[0];
    return result;
}

DegreeResult degree(const ColoredVertexMap& m) {
    return degree(m, canonical_orientation(m.source), canonical_orientation(m.target));
}

ColoredVertexMap build_sphere_map(const Gem& source, int d) {
    if (d < 0) fail(Err::BadParam, "degree must be nonnegative; compose with the reversal for negative degrees");
    if (!source.is_closed()) fail(Err::NotClosed, "the source must be closed");
    Gem target = standard_sphere(source.dimension());
    Orientation o = canonical_orientation(source); // wants connected + bipartite
    const int p = source.vertex_count() / 2;

    std::vector<VertexId> assignment(source.vertex_count(), 0);
    if (d < p) {
        int remaining = d;
        for (VertexId v = 0; v < source.vertex_count() && remaining > 0; ++v)
            if (o.signs[v] < 0) {
                assignment[v] = 1;
                --remaining;
            }
    } else if (d == p) {
        for (VertexId v = 0; v < source.vertex_count(); ++v)
            assignment[v] = o.signs[v] > 0 ? 0 : 1;
    } else {
        fail(Err::BadParam, "degree " + std::to_string(d) + " exceeds half the vertex count " +
                                std::to_string(p) + "; enlarge the source with n-dipoles first");
    }
    return make_map(source, std::move(target), std::move(assignment));
}

ColoredVertexMap build_g_d_product(int n, int d) {
    if (n < 2 || d < 1) fail(Err::BadParam, "need n >= 2 and d >= 1");
    Gem source = product_gem(n, d);
    Gem target = product_standard(n);
    const int rows = n + 1;
    std::vector<VertexId> assignment(source.vertex_count(), 0);
    for (int j = 1; j <= 2 * d; ++j)
        for (int k = 1; k <= rows; ++k) {
            int column = (j % 2 == 1) ? 1 : 2;
            assignment[(j - 1) * rows + (k - 1)] = (column - 1) * rows + (k - 1);
        }
    return make_map(std::move(source), std::move(target), std::move(assignment));
}

ColoredVertexMap orientation_reversal(const Gem& target) {
    const int n = target.dimension();
    if (target.vertex_count() == 2 && target.is_closed()) {
        // Two-vertex sphere: swap the vertices.
        return make_map(target, target, {1, 0});
    }
    if (target.vertex_count() == 2 * (n + 1)) {
        std::vector<VertexId> assignment(target.vertex_count(), -1);
        for (int k = 1; k <= n + 1; ++k) {
            auto a = target.find_grid(1, k);
            auto b = target.find_grid(2, k);
            if (!a || !b)
                fail(Err::UnsupportedTarget, "target lacks the v_1^k / v_2^k labels");
            assignment[*a] = *b;
            assignment[*b] = *a;
        }
        ColoredVertexMap m = make_map(target, target, std::move(assignment));
        if (!validate_map(m).empty())
            fail(Err::UnsupportedTarget, "column swap is not edge-compatible on this target");
        return m;
    }
    fail(Err::UnsupportedTarget, "orientation reversal is built for the standard sphere "
                                 "and the standard product crystallization");
}

ColoredVertexMap compose(const ColoredVertexMap& outer, const ColoredVertexMap& inner) {
    if (!(inner.target == outer.source))
        fail(Err::Mismatch, "inner target and outer source differ");
    std::vector<VertexId> assignment(inner.source.vertex_count(), 0);
    for (VertexId u = 0; u < inner.source.vertex_count(); ++u)
        assignment[u] = outer.assignment[inner.assignment[u]];
    return make_map(inner.source, outer.target, std::move(assignment));
}

ColoredVertexMap identity_map(const Gem& g) {
    std::vector<VertexId> assignment(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) assignment[v] = v;
    return make_map(g, g, std::move(assignment));
}

ColoredVertexMap constant_map(const Gem& g, VertexId image) {
    if (image < 0 || image >= g.vertex_count())
        fail(Err::UnknownVertex, "image vertex out of range");
    return make_map(g, g, std::vector<VertexId>(g.vertex_count(), image));
}

} // namespace gemkit
