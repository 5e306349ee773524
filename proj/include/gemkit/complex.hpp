#pragma once

#include <vector>

#include "gemkit/gem.hpp"

namespace gemkit {

// Per-dimension simplex counts of the cell complex encoded by a closed gem:
// counts[k] is the number of k-simplices.
struct FVector {
    std::vector<long long> counts;

    bool operator==(const FVector&) const = default;
};

// counts[k] = sum over color subsets C of size k+1 of the number of
// components of the subgraph on the complementary colors.  Requires a closed
// gem (NotClosed otherwise).
FVector f_vector(const Gem& gem);

// Alternating sum of the f-vector.
long long euler_characteristic(const Gem& gem);

// counts[0] of the f-vector, computed directly: the number of vertices of
// the encoded complex.  Equals dimension+1 exactly when the gem is contracted.
int num_vertices_of_k(const Gem& gem);

} // namespace gemkit
