#pragma once

#include "gemkit/gem.hpp"

namespace gemkit {

// Builders for the gem families, parameterized by dimension n and degree d.
// All of them are bipartite, with sign(v_j^k) = (-1)^(j+k) once rooted at the
// first vertex; ids follow the labeling order stated per builder.

// Two vertices v^1, v^2 joined by one edge of each color 0..n.  The minimal
// crystallization of the n-sphere.
Gem standard_sphere(int n);

// 2d vertices v1..v{2d} in a cycle: pairs (v_{2j-1}, v_{2j}) joined by the n
// colors 0..n-1, consecutive pairs linked by single color-n edges (with a
// wrap edge v1--v{2d}).  A 2d-facet sphere; d = 1 degenerates to the
// standard sphere up to relabeling.
Gem necklace_sphere(int n, int d);

// The 2d(n+1)-vertex gem of the cylinder over the (n-1)-sphere.  Vertices
// v_j^k for j = 1..2d (columns), k = 1..n+1 (rows), id = (j-1)(n+1)+(k-1).
// Column edges join rows k, k+1 with color n-1 (k = 1) or k-2 (k >= 2);
// row edges within a block carry every remaining color below n; color-n
// edges join consecutive blocks on the interior rows 2..n, wrapping around.
// Rows 1 and n+1 are the boundary.
Gem cylinder_gem(int n, int d);

// cylinder_gem(n, 1) closed up with two color-n edges between the boundary
// rows: columnwise when n is odd, crosswise when n is even.  The standard
// 2(n+1)-facet crystallization of the product of the (n-1)-sphere with the
// circle.
Gem product_standard(int n);

// cylinder_gem(n, d) closed up with a color-n perfect matching between the
// boundary rows: for odd n, v_j^1 -- v_{2d+2-j}^{n+1} (and v_1^1 -- v_1^{n+1});
// for even n, v_j^1 -- v_{j+1}^{n+1} (and v_{2d}^1 -- v_1^{n+1}).
// A 2d(n+1)-facet gem of the same product manifold.
Gem product_gem(int n, int d);

// The two boundary necklaces of cylinder_gem(n, d), built standalone as
// closed gems of dimension n-1 on 2d vertices.
Gem top_boundary_necklace(int n, int d);    // pair colors 0..n-2, link color n-1
Gem bottom_boundary_necklace(int n, int d); // pair colors {n-1, 0..n-3}, link color n-2

// Disjoint union of the two boundary necklaces, re-read as n-dimensional
// gems, joined by color-n edges under the same parity rules as product_gem.
// A 4d-vertex gem of the n-sphere with regular genus 0.
Gem glued_sphere(int n, int d);

} // namespace gemkit
