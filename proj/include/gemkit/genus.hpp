#pragma once

#include <string>
#include <vector>

#include "gemkit/gem.hpp"

namespace gemkit {

// Exact value with denominator 1 or 2, stored as twice the value.  Genus
// computations never touch floating point.
struct HalfInt {
    long long twice = 0;

    static HalfInt whole(long long v) { return {2 * v}; }
    bool is_integer() const { return twice % 2 == 0; }
    std::string to_string() const;

    auto operator<=>(const HalfInt&) const = default;
};

// A cyclic arrangement of the color set 0..n.  The stored order is exactly
// what the caller supplied; canonical() rotates 0 to the front and reflects
// so that the second entry is smaller than the last, which identifies the
// rotation/reversal class.
class CyclicPermutation {
public:
    explicit CyclicPermutation(std::vector<Color> order);

    const std::vector<Color>& order() const { return order_; }
    int color_count() const { return static_cast<int>(order_.size()); }
    CyclicPermutation canonical() const;
    // Cyclically adjacent color pairs, each as (min, max).
    std::vector<std::pair<Color, Color>> adjacent_pairs() const;

    bool operator==(const CyclicPermutation& o) const;

private:
    std::vector<Color> order_;
};

// Every canonical cyclic permutation of 0..n (n!/2 of them for n >= 2),
// in lexicographic order.
std::vector<CyclicPermutation> all_cyclic_permutations(int n);

struct GenusEntry {
    CyclicPermutation eps;
    long long chi = 0;
    HalfInt rho;
};

struct GenusReport {
    std::vector<GenusEntry> per_permutation; // enumeration order
    HalfInt regular_genus;
    CyclicPermutation argmin; // lexicographically least minimizer
};

// Number of components of the two-colored subgraph; each one is a cycle on a
// closed gem.
long long bicolored_cycle_count(const Gem& gem, Color i, Color j);

// Euler characteristic of the surface carrying the regular embedding for the
// given cyclic color arrangement:
//   sum over cyclic pairs of the bicolored cycle counts + (1-n)*V/2.
// Requires a closed gem with an even vertex count.
long long chi(const Gem& gem, const CyclicPermutation& eps);

// 1 - chi/2, exact.
HalfInt rho(const Gem& gem, const CyclicPermutation& eps);

// Full scan over all canonical cyclic permutations.
GenusReport regular_genus(const Gem& gem);

struct SphereCertificate {
    bool is_sphere = false;  // regular genus 0
    bool hereditary = false; // every m-color residue component (3 <= m <= n+1)
                             // also has regular genus 0
};

SphereCertificate certify_sphere(const Gem& gem);

} // namespace gemkit
