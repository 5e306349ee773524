#include "gemkit/constructions.hpp"

#include <algorithm>

namespace gemkit {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) fail(Err::BadParam, message);
}

// Column color between rows k and k+1 of the cylinder family.
Color column_color(int n, int k) {
    return k == 1 ? n - 1 : k - 2;
}

// Colors of the in-block row edges of the cylinder family (all below n).
std::vector<Color> row_colors(int n, int k) {
    std::vector<char> drop(n, 0);
    if (k > 1) drop[column_color(n, k - 1)] = 1;
    if (k <= n) drop[column_color(n, k)] = 1;
    std::vector<Color> out;
    for (Color c = 0; c < n; ++c)
        if (!drop[c]) out.push_back(c);
    return out;
}

// Color-n matching between two 2d-vertex rings given by id maps top(j),
// bottom(j) for j = 1..2d; the pattern depends on the parity of n.
template <typename Top, typename Bottom>
void glue_rings(std::vector<ColoredEdge>& edges, int n, int d, Top top, Bottom bottom) {
    if (n % 2 == 1) {
        edges.push_back({top(1), bottom(1), n});
        for (int j = 2; j <= 2 * d; ++j)
            edges.push_back({top(j), bottom(2 * d + 2 - j), n});
    } else {
        edges.push_back({top(2 * d), bottom(1), n});
        for (int j = 1; j <= 2 * d - 1; ++j)
            edges.push_back({top(j), bottom(j + 1), n});
    }
}

// Shared necklace builder: 2d vertices in a ring, pairs (2j-1, 2j) joined by
// `pair_colors`, consecutive pairs linked by single `link_color` edges.
void ring_edges(std::vector<ColoredEdge>& edges, int d, int base,
                const std::vector<Color>& pair_colors, Color link_color) {
    for (int j = 1; j <= d; ++j)
        for (Color c : pair_colors)
            edges.push_back({base + 2 * j - 2, base + 2 * j - 1, c});
    for (int j = 1; j <= d - 1; ++j)
        edges.push_back({base + 2 * j - 1, base + 2 * j, link_color});
    edges.push_back({base, base + 2 * d - 1, link_color});
}

Gem boundary_necklace(int n, int d, bool top) {
    require(n >= 2, "boundary necklaces need n >= 2");
    require(d >= 1, "degree must be >= 1, got " + std::to_string(d));
    std::vector<VertexLabel> labels;
    for (int j = 1; j <= 2 * d; ++j)
        labels.push_back(VertexLabel::grid(j, top ? 1 : n + 1));

    std::vector<Color> pair_colors;
    Color link_color;
    if (top) {
        for (Color c = 0; c <= n - 2; ++c) pair_colors.push_back(c);
        link_color = n - 1;
    } else {
        pair_colors.push_back(n - 1);
        for (Color c = 0; c <= n - 3; ++c) pair_colors.push_back(c);
        link_color = n - 2;
    }

    std::vector<ColoredEdge> edges;
    ring_edges(edges, d, 0, pair_colors, link_color);
    return Gem(n - 1, std::move(labels), std::move(edges));
}

} // namespace

Gem standard_sphere(int n) {
    require(n >= 1, "standard_sphere needs n >= 1");
    std::vector<VertexLabel> labels{VertexLabel::superscript(1), VertexLabel::superscript(2)};
    std::vector<ColoredEdge> edges;
    for (Color c = 0; c <= n; ++c) edges.push_back({0, 1, c});
    return Gem(n, std::move(labels), std::move(edges));
}

Gem necklace_sphere(int n, int d) {
    require(n >= 1, "necklace_sphere needs n >= 1");
    require(d >= 1, "degree must be >= 1, got " + std::to_string(d));
    std::vector<VertexLabel> labels;
    for (int j = 1; j <= 2 * d; ++j) labels.push_back(VertexLabel::indexed(j));
    std::vector<Color> pair_colors;
    for (Color c = 0; c < n; ++c) pair_colors.push_back(c);
    std::vector<ColoredEdge> edges;
    ring_edges(edges, d, 0, pair_colors, n);
    return Gem(n, std::move(labels), std::move(edges));
}

Gem cylinder_gem(int n, int d) {
    require(n >= 2, "cylinder_gem needs n >= 2");
    require(d >= 1, "degree must be >= 1, got " + std::to_string(d));
    const int rows = n + 1;
    auto id = [rows](int j, int k) { return (j - 1) * rows + (k - 1); };

    std::vector<VertexLabel> labels;
    for (int j = 1; j <= 2 * d; ++j)
        for (int k = 1; k <= rows; ++k) labels.push_back(VertexLabel::grid(j, k));

    std::vector<ColoredEdge> edges;
    for (int j = 1; j <= 2 * d; ++j)
        for (int k = 1; k <= n; ++k)
            edges.push_back({id(j, k), id(j, k + 1), column_color(n, k)});
    for (int b = 1; b <= d; ++b)
        for (int k = 1; k <= rows; ++k)
            for (Color c : row_colors(n, k))
                edges.push_back({id(2 * b - 1, k), id(2 * b, k), c});
    for (int k = 2; k <= n; ++k) {
        for (int b = 1; b <= d - 1; ++b)
            edges.push_back({id(2 * b, k), id(2 * b + 1, k), n});
        edges.push_back({id(1, k), id(2 * d, k), n});
    }
    return Gem(n, std::move(labels), std::move(edges));
}

Gem product_standard(int n) {
    require(n >= 2, "product_standard needs n >= 2");
    Gem base = cylinder_gem(n, 1);
    const int rows = n + 1;
    auto id = [rows](int j, int k) { return (j - 1) * rows + (k - 1); };
    std::vector<ColoredEdge> edges = base.edges();
    if (n % 2 == 1) {
        edges.push_back({id(1, 1), id(1, n + 1), n});
        edges.push_back({id(2, 1), id(2, n + 1), n});
    } else {
        edges.push_back({id(1, 1), id(2, n + 1), n});
        edges.push_back({id(2, 1), id(1, n + 1), n});
    }
    return Gem(n, base.labels(), std::move(edges));
}

Gem product_gem(int n, int d) {
    Gem base = cylinder_gem(n, d);
    const int rows = n + 1;
    auto id = [rows](int j, int k) { return (j - 1) * rows + (k - 1); };
    std::vector<ColoredEdge> edges = base.edges();
    glue_rings(
        edges, n, d, [&](int j) { return id(j, 1); },
        [&](int j) { return id(j, n + 1); });
    return Gem(n, base.labels(), std::move(edges));
}

Gem top_boundary_necklace(int n, int d) { return boundary_necklace(n, d, true); }

Gem bottom_boundary_necklace(int n, int d) { return boundary_necklace(n, d, false); }

Gem glued_sphere(int n, int d) {
    Gem top = top_boundary_necklace(n, d);
    Gem bottom = bottom_boundary_necklace(n, d);

    std::vector<VertexLabel> labels = top.labels();
    labels.insert(labels.end(), bottom.labels().begin(), bottom.labels().end());

    const int shift = top.vertex_count();
    std::vector<ColoredEdge> edges = top.edges();
    for (const ColoredEdge& e : bottom.edges())
        edges.push_back({e.u + shift, e.v + shift, e.color});
    glue_rings(
        edges, n, d, [&](int j) { return j - 1; },
        [&](int j) { return shift + j - 1; });
    return Gem(n, std::move(labels), std::move(edges));
}

} // namespace gemkit
