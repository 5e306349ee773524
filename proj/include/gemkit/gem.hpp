#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "gemkit/errors.hpp"

namespace gemkit {

using VertexId = int;
using Color = int;

// Vertex label: either a grid name v{j}^{k} (the series/level pair used by the
// construction families), a plain indexed name v{j}, or a free-form string.
// `name` is the unique key; series/level are 0 when not applicable.
struct VertexLabel {
    int series = 0;
    int level = 0;
    std::string name;

    static VertexLabel grid(int j, int k);
    static VertexLabel indexed(int j);
    static VertexLabel superscript(int j);
    // Free-form constructor; recovers series/level when the name matches one
    // of the generated patterns, so labels survive serialization round trips.
    static VertexLabel named(std::string name);

    bool operator==(const VertexLabel& o) const { return name == o.name; }
};

struct ColoredEdge {
    VertexId u = 0;
    VertexId v = 0;
    Color color = 0;

    auto operator<=>(const ColoredEdge&) const = default;
};

// Connected components of the subgraph spanned by a color subset.
struct ResidueReport {
    std::vector<Color> colors;
    int component_count = 0;
    // Each component lists its vertices ascending; components are ordered by
    // their smallest vertex.
    std::vector<std::vector<VertexId>> components;
};

// A proper 2-coloring by adjacency alternation: adjacent vertices always
// carry opposite signs. orientation() returns the unique one (per component
// root) with sign(root) = +1.
struct Orientation {
    std::vector<int> signs; // +1 / -1 per vertex id
    VertexId root = 0;

    int sign(VertexId v) const;
    Orientation flipped() const;
};

// An (n+1)-edge-colored loopless multigraph with proper edge coloring, in
// which every vertex carries exactly one edge of each color 0..n-1 and at
// most one edge of color n.  Vertices missing the color-n edge are boundary
// vertices; the gem is closed when there are none.  Immutable after
// construction; all operations are pure.
class Gem {
public:
    Gem(int dimension, std::vector<VertexLabel> labels,
        std::vector<ColoredEdge> edges);

    int dimension() const { return dim_; }
    int vertex_count() const { return static_cast<int>(labels_.size()); }
    const std::vector<VertexLabel>& labels() const { return labels_; }
    const VertexLabel& label(VertexId v) const;
    // Canonically ordered: u < v within an edge, edges sorted by (u, v, color).
    const std::vector<ColoredEdge>& edges() const { return edges_; }

    std::optional<VertexId> neighbor(VertexId v, Color c) const;
    std::vector<Color> colors_at(VertexId v) const;

    bool is_closed() const;
    std::vector<VertexId> boundary_vertices() const;
    bool is_connected() const;
    bool is_bipartite() const;

    ResidueReport residues(std::vector<Color> colors) const;

    // Signs propagated from a positive root; requires a connected bipartite
    // gem (errors Disconnected / NotBipartite otherwise).
    Orientation orientation(VertexId root) const;

    // True iff every n-color subgraph obtained by dropping one color is
    // connected.  Requires a closed gem.
    bool is_contracted() const;

    // The n-colored gem (dimension one lower) on the boundary vertices:
    // u1, u2 get a color-j edge iff they are joined by a path alternating
    // colors j and n.  Errors NoBoundary on closed input.
    Gem boundary_graph() const;

    std::optional<VertexId> find_name(const std::string& name) const;
    std::optional<VertexId> find_grid(int series, int level) const;

    // Structural equality: same dimension, label names, and canonical edges.
    bool operator==(const Gem& o) const;

private:
    int dim_;
    std::vector<VertexLabel> labels_;
    std::vector<ColoredEdge> edges_;
    std::vector<std::vector<VertexId>> nbr_; // [vertex][color] -> id or -1
};

// Color-preserving isomorphism (colors fixed pointwise): a bijection phi with
// (u,v,c) an edge of a iff (phi(u),phi(v),c) an edge of b.  Backtracking
// seeded by per-vertex color profiles; propagation along colored edges makes
// each root choice deterministic on a connected component.
std::optional<std::vector<VertexId>> color_isomorphism(const Gem& a,
                                                       const Gem& b);

// The connected components of a gem as standalone gems (vertex ids compacted
// in ascending order, labels kept).
std::vector<Gem> split_components(const Gem& g);

// Root used by the canonical orientation convention: the v_1^1-labeled vertex
// when present, vertex 0 otherwise.
VertexId canonical_root(const Gem& g);

} // namespace gemkit
