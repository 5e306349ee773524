#pragma once

#include <vector>

#include "gemkit/gem.hpp"

namespace gemkit {

// An h-dipole: u and v are joined by exactly the edges colored by `colors`
// (|colors| = h) and lie in different components of the subgraph on the
// complementary colors.
struct DipoleSpec {
    VertexId u = 0;
    VertexId v = 0;
    std::vector<Color> colors; // sorted
};

// A polyhedral glue move: phi maps lambda1[i] to lambda2[i]; each pair is
// joined by an edge of glue_color, phi is a color-isomorphism of the induced
// subgraphs, and the two sides lie in different components of the gem minus
// glue_color.  Whether the induced subgraphs represent balls is the caller's
// responsibility; only the structural conditions are checked.
struct GlueMoveSpec {
    std::vector<VertexId> lambda1;
    std::vector<VertexId> lambda2;
    Color glue_color = 0;
};

// All h-dipoles of the gem, exhaustively over adjacent vertex pairs,
// ordered by (u, v).
std::vector<DipoleSpec> find_dipoles(const Gem& gem, int h);

// Removes the dipole pair and, for every non-dipole color, joins the two
// former outside neighbors.  A dangling color-n half-edge is dropped, which
// keeps the boundary convention intact.  V decreases by 2; surviving ids are
// compacted in order and labels kept.
Gem cancel_dipole(const Gem& gem, const DipoleSpec& spec);

// Inverse of cancel_dipole: inserts a fresh pair joined by `colors` next to
// vertex `at`, rerouting each of at's non-dipole edges through the pair.
// The insertion vertex must carry every color in `colors` (BadColors).
// cancel_dipole of the inserted pair restores the input exactly.
Gem add_dipole(const Gem& gem, VertexId at, const std::vector<Color>& colors);

// Removes lambda1 and lambda2 and joins the outside neighbors of matched
// vertices color by color.  With singleton lambdas this is exactly
// cancel_dipole of a 1-dipole.
Gem polyhedral_glue(const Gem& gem, const GlueMoveSpec& spec);

struct ReductionStep {
    enum class Kind { Glue, CancelDipole };
    Kind kind = Kind::Glue;
    Color color = 0;                  // glue color or the dipole color
    std::vector<std::string> removed; // labels of the removed vertices
};

struct ReductionResult {
    Gem gem;
    std::vector<ReductionStep> steps;
};

// The block-collapsing schedule for the cylinder/product families, driven by
// the v_j^k labels: glue block j to block j+1 along the interior rows (one
// move per block seam), then cancel the 1-dipoles the glue moves leave on the
// two boundary rows.  Gems without the label pattern are returned unchanged.
ReductionResult reduce(const Gem& gem);

} // namespace gemkit
