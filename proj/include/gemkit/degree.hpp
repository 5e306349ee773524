#pragma once

#include <vector>

#include "gemkit/gem.hpp"

namespace gemkit {

// A vertex map between gems of the same dimension.  The edge contract: the
// images of the endpoints of a color-i edge are either equal or joined by a
// color-i edge of the target.
struct ColoredVertexMap {
    Gem source;
    Gem target;
    std::vector<VertexId> assignment; // source id -> target id
};

// Checked constructor: equal dimensions (Mismatch), assignment length equals
// the source vertex count, every image in range (UnknownVertex).  The edge
// contract itself is reported by validate_map, not enforced here.
ColoredVertexMap make_map(Gem source, Gem target, std::vector<VertexId> assignment);

struct MapViolation {
    ColoredEdge source_edge;
    VertexId image_u = 0;
    VertexId image_v = 0;
};

// Every source edge breaking the contract; empty iff the map is valid.
std::vector<MapViolation> validate_map(const ColoredVertexMap& m);

// Sum of orientation signs over a vertex set.
long long algebraic_number(const Orientation& o, const std::vector<VertexId>& vertices);

struct DegreeResult {
    long long degree = 0;
    bool surjective = false;
    // sign(v) times the algebraic number of the preimage, per target vertex.
    std::vector<long long> per_target;
};

// Degree of the induced simplicial map: 0 when not surjective, otherwise the
// common value of the signed preimage counts.  Both gems must be closed, and
// the orientations must belong to them.  Errors: InvalidMap (edge contract
// broken), InconsistentDegree (signed counts disagree — the combinatorial
// formula does not apply).
DegreeResult degree(const ColoredVertexMap& m, const Orientation& source_orientation,
                    const Orientation& target_orientation);

// Same, with both gems oriented by the canonical convention (positive root at
// the v_1^1-labeled vertex, falling back to vertex 0).
DegreeResult degree(const ColoredVertexMap& m);

Orientation canonical_orientation(const Gem& g);

// Degree-d map onto the standard sphere of the same dimension.  With p = V/2:
// d < p sends the d least-id negative vertices to v^2 and the rest to v^1;
// d == p sends positives to v^1 and negatives to v^2.  For d > p the source
// must be enlarged with n-dipoles first (BadParam).
ColoredVertexMap build_sphere_map(const Gem& source, int d);

// The map product_gem(n,d) -> product_standard(n) collapsing column j to
// column 1 or 2 by parity, rowwise.  Degree d.
ColoredVertexMap build_g_d_product(int n, int d);

// The column-swapping self-map of the standard sphere or of
// product_standard; degree -1.  UnsupportedTarget otherwise.
ColoredVertexMap orientation_reversal(const Gem& target);

// Pointwise composition; inner's target must equal outer's source
// structurally (Mismatch).
ColoredVertexMap compose(const ColoredVertexMap& outer, const ColoredVertexMap& inner);

ColoredVertexMap identity_map(const Gem& g);
ColoredVertexMap constant_map(const Gem& g, VertexId image);

} // namespace gemkit
