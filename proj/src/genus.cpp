#include "gemkit/genus.hpp"

#include <algorithm>

namespace gemkit {

std::string HalfInt::to_string() const {
    if (is_integer()) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

CyclicPermutation::CyclicPermutation(std::vector<Color> order)
    : order_(std::move(order)) {
    const int m = static_cast<int>(order_.size());
    if (m < 2) fail(Err::BadParam, "a cyclic permutation needs at least 2 colors");
    std::vector<char> seen(m, 0);
    for (Color c : order_) {
        if (c < 0 || c >= m)
            fail(Err::BadColor, "permutation entry " + std::to_string(c) +
                                    " outside 0.." + std::to_string(m - 1));
        if (seen[c])
            fail(Err::BadParam, "color " + std::to_string(c) + " repeated in permutation");
        seen[c] = 1;
    }
}

CyclicPermutation CyclicPermutation::canonical() const {
    const int m = color_count();
    std::vector<Color> out(m);
    int zero = static_cast<int>(std::find(order_.begin(), order_.end(), 0) - order_.begin());
    for (int i = 0; i < m; ++i) out[i] = order_[(zero + i) % m];
    if (m > 2 && out[1] > out[m - 1])
        std::reverse(out.begin() + 1, out.end());
    return CyclicPermutation(std::move(out));
}

std::vector<std::pair<Color, Color>> CyclicPermutation::adjacent_pairs() const {
    const int m = color_count();
    std::vector<std::pair<Color, Color>> pairs;
    pairs.reserve(m);
    for (int i = 0; i < m; ++i) {
        Color a = order_[i], b = order_[(i + 1) % m];
        pairs.emplace_back(std::min(a, b), std::max(a, b));
    }
    return pairs;
}

bool CyclicPermutation::operator==(const CyclicPermutation& o) const {
    return color_count() == o.color_count() && canonical().order() == o.canonical().order();
}

std::vector<CyclicPermutation> all_cyclic_permutations(int n) {
    if (n < 1) fail(Err::BadParam, "need n >= 1");
    std::vector<Color> tail;
    for (Color c = 1; c <= n; ++c) tail.push_back(c);
    std::vector<CyclicPermutation> out;
    do {
        if (n >= 2 && tail.front() > tail.back()) continue;
        std::vector<Color> order;
        order.reserve(n + 1);
        order.push_back(0);
        order.insert(order.end(), tail.begin(), tail.end());
        out.emplace_back(std::move(order));
    } while (std::next_permutation(tail.begin(), tail.end()));
    return out;
}

long long bicolored_cycle_count(const Gem& gem, Color i, Color j) {
    if (!gem.is_closed())
        fail(Err::NotClosed, "cycle counts are defined for closed gems only");
    if (i == j) fail(Err::BadColor, "need two distinct colors");
    return gem.residues({i, j}).component_count;
}

namespace {

void check_genus_preconditions(const Gem& gem, const CyclicPermutation& eps) {
    if (!gem.is_closed())
        fail(Err::NotClosed, "genus is defined for closed gems only");
    if (gem.vertex_count() % 2 != 0)
        fail(Err::OddVertexCount, "genus needs an even vertex count");
    if (eps.color_count() != gem.dimension() + 1)
        fail(Err::BadParam, "permutation has " + std::to_string(eps.color_count()) +
                                " colors, gem has " + std::to_string(gem.dimension() + 1));
}

} // namespace

long long chi(const Gem& gem, const CyclicPermutation& eps) {
    check_genus_preconditions(gem, eps);
    const int n = gem.dimension();
    long long total = 0;
    for (auto [a, b] : eps.adjacent_pairs())
        total += bicolored_cycle_count(gem, a, b);
    return total + static_cast<long long>(1 - n) * gem.vertex_count() / 2;
}

HalfInt rho(const Gem& gem, const CyclicPermutation& eps) {
    return {2 - chi(gem, eps)};
}

GenusReport regular_genus(const Gem& gem) {
    const int n = gem.dimension();
    auto perms = all_cyclic_permutations(n);
    check_genus_preconditions(gem, perms.front());

    // One residue computation per color pair; each permutation is then a sum
    // of n+1 table lookups.
    std::vector<std::vector<long long>> pair_count(n + 1, std::vector<long long>(n + 1, 0));
    for (Color a = 0; a <= n; ++a)
        for (Color b = a + 1; b <= n; ++b)
            pair_count[a][b] = gem.residues({a, b}).component_count;

    const long long base = static_cast<long long>(1 - n) * gem.vertex_count() / 2;
    GenusReport report{.per_permutation = {}, .regular_genus = {}, .argmin = perms.front()};
    bool first = true;
    for (auto& eps : perms) {
        long long total = base;
        for (auto [a, b] : eps.adjacent_pairs()) total += pair_count[a][b];
        HalfInt r{2 - total};
        report.per_permutation.push_back({eps, total, r});
        if (first || r < report.regular_genus) {
            report.regular_genus = r;
            report.argmin = eps;
            first = false;
        }
    }
    return report;
}

namespace {

// Regular genus of one residue component, re-read as a standalone gem on its
// own color set (re-indexed to 0..m-1).
bool component_has_genus_zero(const Gem& gem, const std::vector<Color>& colors,
                              const std::vector<VertexId>& component) {
    const int m = static_cast<int>(colors.size());
    std::vector<int> color_index(gem.dimension() + 1, -1);
    for (int i = 0; i < m; ++i) color_index[colors[i]] = i;

    std::vector<int> vertex_index(gem.vertex_count(), -1);
    std::vector<VertexLabel> labels;
    for (size_t i = 0; i < component.size(); ++i) {
        vertex_index[component[i]] = static_cast<int>(i);
        labels.push_back(gem.label(component[i]));
    }

    std::vector<ColoredEdge> edges;
    for (const ColoredEdge& e : gem.edges()) {
        if (color_index[e.color] == -1) continue;
        if (vertex_index[e.u] == -1 || vertex_index[e.v] == -1) continue;
        edges.push_back({vertex_index[e.u], vertex_index[e.v], color_index[e.color]});
    }
    Gem sub(m - 1, std::move(labels), std::move(edges));
    return regular_genus(sub).regular_genus == HalfInt{0};
}

} // namespace

SphereCertificate certify_sphere(const Gem& gem) {
    if (!gem.is_closed())
        fail(Err::NotClosed, "sphere certification needs a closed gem");
    const int n = gem.dimension();

    SphereCertificate cert;
    cert.is_sphere = regular_genus(gem).regular_genus == HalfInt{0};
    cert.hereditary = cert.is_sphere;
    if (!cert.hereditary) return cert;

    // Proper color subsets of size 3..n, enumerated as bitmasks; size n+1 is
    // the whole gem, already checked.
    for (unsigned mask = 0; mask < (1u << (n + 1)); ++mask) {
        std::vector<Color> colors;
        for (Color c = 0; c <= n; ++c)
            if (mask & (1u << c)) colors.push_back(c);
        const int m = static_cast<int>(colors.size());
        if (m < 3 || m > n) continue;
        for (const auto& component : gem.residues(colors).components) {
            if (!component_has_genus_zero(gem, colors, component)) {
                cert.hereditary = false;
                return cert;
            }
        }
    }
    return cert;
}

} // namespace gemkit
