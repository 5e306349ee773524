#include "gemkit/moves.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace gemkit {

namespace {

// Reachability in the subgraph that keeps every color except `forbidden`.
bool connected_avoiding(const Gem& gem, VertexId from, VertexId to,
                        const std::vector<char>& forbidden) {
    std::vector<char> seen(gem.vertex_count(), 0);
    std::queue<VertexId> q;
    q.push(from);
    seen[from] = 1;
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        if (v == to) return true;
        for (Color c = 0; c <= gem.dimension(); ++c) {
            if (forbidden[c]) continue;
            if (auto w = gem.neighbor(v, c); w && !seen[*w]) {
                seen[*w] = 1;
                q.push(*w);
            }
        }
    }
    return false;
}

std::vector<Color> joining_colors(const Gem& gem, VertexId u, VertexId v) {
    std::vector<Color> out;
    for (Color c = 0; c <= gem.dimension(); ++c)
        if (gem.neighbor(u, c) == std::optional<VertexId>(v)) out.push_back(c);
    return out;
}

void validate_dipole(const Gem& gem, const DipoleSpec& spec) {
    const int n = gem.dimension();
    if (spec.u < 0 || spec.u >= gem.vertex_count() || spec.v < 0 ||
        spec.v >= gem.vertex_count() || spec.u == spec.v)
        fail(Err::InvalidDipole, "dipole vertices out of range or equal");
    const int h = static_cast<int>(spec.colors.size());
    if (h < 1 || h > n)
        fail(Err::InvalidDipole, "dipole needs 1..n colors, got " + std::to_string(h));
    std::vector<Color> expected = spec.colors;
    std::sort(expected.begin(), expected.end());
    if (joining_colors(gem, spec.u, spec.v) != expected)
        fail(Err::InvalidDipole, "vertices are not joined by exactly the dipole colors");
    std::vector<char> forbidden(n + 1, 0);
    for (Color c : expected) forbidden[c] = 1;
    if (connected_avoiding(gem, spec.u, spec.v, forbidden))
        fail(Err::InvalidDipole,
             "vertices share a component of the complementary-color subgraph");
}

// Remove `doomed` vertices and rebuild with compacted ids; `extra` edges are
// given in old ids and remapped alongside the kept ones.
Gem rebuild_without(const Gem& gem, const std::vector<char>& doomed,
                    const std::vector<ColoredEdge>& extra) {
    std::vector<int> remap(gem.vertex_count(), -1);
    std::vector<VertexLabel> labels;
    for (VertexId v = 0; v < gem.vertex_count(); ++v) {
        if (doomed[v]) continue;
        remap[v] = static_cast<int>(labels.size());
        labels.push_back(gem.label(v));
    }
    std::vector<ColoredEdge> edges;
    for (const ColoredEdge& e : gem.edges())
        if (!doomed[e.u] && !doomed[e.v])
            edges.push_back({remap[e.u], remap[e.v], e.color});
    for (const ColoredEdge& e : extra)
        edges.push_back({remap[e.u], remap[e.v], e.color});
    return Gem(gem.dimension(), std::move(labels), std::move(edges));
}

} // namespace

std::vector<DipoleSpec> find_dipoles(const Gem& gem, int h) {
    const int n = gem.dimension();
    if (h < 1 || h > n)
        fail(Err::BadParam, "dipole order must lie in 1.." + std::to_string(n));

    std::map<std::pair<VertexId, VertexId>, std::vector<Color>> pairs;
    for (const ColoredEdge& e : gem.edges()) pairs[{e.u, e.v}].push_back(e.color);

    std::vector<DipoleSpec> out;
    for (auto& [pair, colors] : pairs) {
        if (static_cast<int>(colors.size()) != h) continue;
        DipoleSpec spec{pair.first, pair.second, colors};
        std::vector<char> forbidden(n + 1, 0);
        for (Color c : colors) forbidden[c] = 1;
        if (!connected_avoiding(gem, pair.first, pair.second, forbidden))
            out.push_back(std::move(spec));
    }
    return out;
}

Gem cancel_dipole(const Gem& gem, const DipoleSpec& spec) {
    validate_dipole(gem, spec);
    std::vector<char> in_dipole(gem.dimension() + 1, 0);
    for (Color c : spec.colors) in_dipole[c] = 1;

    std::vector<ColoredEdge> joined;
    for (Color c = 0; c <= gem.dimension(); ++c) {
        if (in_dipole[c]) continue;
        auto pu = gem.neighbor(spec.u, c);
        auto pv = gem.neighbor(spec.v, c);
        // A half-edge on one side only can happen for color n at the
        // boundary; it is dropped.
        if (pu && pv) joined.push_back({*pu, *pv, c});
    }
    std::vector<char> doomed(gem.vertex_count(), 0);
    doomed[spec.u] = doomed[spec.v] = 1;
    return rebuild_without(gem, doomed, joined);
}

namespace {

std::string fresh_name(const Gem& gem, int& counter) {
    for (;; ++counter) {
        std::string name = "d" + std::to_string(counter);
        if (!gem.find_name(name)) {
            ++counter;
            return name;
        }
    }
}

} // namespace

Gem add_dipole(const Gem& gem, VertexId at, const std::vector<Color>& colors) {
    const int n = gem.dimension();
    if (at < 0 || at >= gem.vertex_count())
        fail(Err::UnknownVertex, "insertion vertex " + std::to_string(at) + " out of range");
    std::vector<Color> dip = colors;
    std::sort(dip.begin(), dip.end());
    if (std::adjacent_find(dip.begin(), dip.end()) != dip.end())
        fail(Err::BadColors, "dipole colors repeat");
    const int h = static_cast<int>(dip.size());
    if (h < 1 || h > n)
        fail(Err::BadColors, "dipole needs 1..n colors, got " + std::to_string(h));
    std::vector<char> in_dipole(n + 1, 0);
    for (Color c : dip) {
        if (c < 0 || c > n)
            fail(Err::BadColors, "color " + std::to_string(c) + " outside 0.." + std::to_string(n));
        if (!gem.neighbor(at, c))
            fail(Err::BadColors, "insertion vertex lacks an edge of color " + std::to_string(c));
        in_dipole[c] = 1;
    }

    const VertexId u = gem.vertex_count();
    const VertexId v = u + 1;
    std::vector<VertexLabel> labels = gem.labels();
    int counter = 0;
    labels.push_back(VertexLabel::named(fresh_name(gem, counter)));
    labels.push_back(VertexLabel::named(fresh_name(gem, counter)));

    // Reroute each non-dipole edge of `at` through the new pair.
    std::set<ColoredEdge> drop;
    std::vector<ColoredEdge> edges;
    for (Color c = 0; c <= n; ++c) {
        if (in_dipole[c]) continue;
        if (auto w = gem.neighbor(at, c)) {
            drop.insert({std::min(at, *w), std::max(at, *w), c});
            edges.push_back({at, u, c});
            edges.push_back({v, *w, c});
        }
    }
    for (const ColoredEdge& e : gem.edges())
        if (!drop.count(e)) edges.push_back(e);
    for (Color c : dip) edges.push_back({u, v, c});

    return Gem(n, std::move(labels), std::move(edges));
}

namespace {

void validate_glue(const Gem& gem, const GlueMoveSpec& spec) {
    const int n = gem.dimension();
    auto reject = [](const std::string& why) { fail(Err::InvalidGlueSpec, why); };

    if (spec.lambda1.empty() || spec.lambda1.size() != spec.lambda2.size())
        reject("lambda1 and lambda2 must be nonempty and of equal size");
    if (spec.glue_color < 0 || spec.glue_color > n)
        reject("glue color out of range");

    std::vector<int> side(gem.vertex_count(), 0); // 1 = lambda1, 2 = lambda2
    std::vector<int> pair_index(gem.vertex_count(), -1);
    for (size_t i = 0; i < spec.lambda1.size(); ++i) {
        for (VertexId x : {spec.lambda1[i], spec.lambda2[i]})
            if (x < 0 || x >= gem.vertex_count()) reject("vertex id out of range");
        VertexId a = spec.lambda1[i], b = spec.lambda2[i];
        if (side[a] || side[b]) reject("a vertex appears twice across the lambdas");
        side[a] = 1;
        side[b] = 2;
        pair_index[a] = pair_index[b] = static_cast<int>(i);
    }

    for (size_t i = 0; i < spec.lambda1.size(); ++i) {
        VertexId a = spec.lambda1[i], b = spec.lambda2[i];
        if (gem.neighbor(a, spec.glue_color) != std::optional<VertexId>(b))
            reject("matched vertices lack the glue-color edge");
        for (Color c = 0; c <= n; ++c) {
            if (c == spec.glue_color) continue;
            auto w1 = gem.neighbor(a, c);
            auto w2 = gem.neighbor(b, c);
            bool in1 = w1 && side[*w1] == 1;
            bool in2 = w2 && side[*w2] == 2;
            if (in1 != in2)
                reject("the matching is not an isomorphism of the induced subgraphs");
            if (in1 && pair_index[*w1] != pair_index[*w2])
                reject("the matching is not an isomorphism of the induced subgraphs");
        }
    }

    // The two sides must not meet once the glue color is removed.
    std::vector<char> forbidden(n + 1, 0);
    forbidden[spec.glue_color] = 1;
    for (VertexId a : spec.lambda1)
        for (VertexId b : spec.lambda2)
            if (connected_avoiding(gem, a, b, forbidden))
                reject("the lambdas share a component once the glue color is removed");
}

} // namespace

Gem polyhedral_glue(const Gem& gem, const GlueMoveSpec& spec) {
    validate_glue(gem, spec);
    const int n = gem.dimension();

    std::vector<char> doomed(gem.vertex_count(), 0);
    for (VertexId x : spec.lambda1) doomed[x] = 1;
    for (VertexId x : spec.lambda2) doomed[x] = 1;

    std::vector<ColoredEdge> joined;
    for (size_t i = 0; i < spec.lambda1.size(); ++i) {
        for (Color c = 0; c <= n; ++c) {
            if (c == spec.glue_color) continue;
            auto p = gem.neighbor(spec.lambda1[i], c);
            auto q = gem.neighbor(spec.lambda2[i], c);
            if (p && q && !doomed[*p] && !doomed[*q]) joined.push_back({*p, *q, c});
        }
    }
    return rebuild_without(gem, doomed, joined);
}

namespace {

// Collects the ids of v_{2j}^k .. and v_{2j+1}^k for k in [k_lo, k_hi];
// empty when any label is missing.
bool seam_columns(const Gem& gem, int j, int k_lo, int k_hi,
                  std::vector<VertexId>& left, std::vector<VertexId>& right) {
    left.clear();
    right.clear();
    for (int k = k_lo; k <= k_hi; ++k) {
        auto a = gem.find_grid(2 * j, k);
        auto b = gem.find_grid(2 * j + 1, k);
        if (!a || !b) return false;
        left.push_back(*a);
        right.push_back(*b);
    }
    return true;
}

std::vector<std::string> label_names(const Gem& gem, const std::vector<VertexId>& vs) {
    std::vector<std::string> out;
    for (VertexId v : vs) out.push_back(gem.label(v).name);
    return out;
}

} // namespace

ReductionResult reduce(const Gem& gem) {
    ReductionResult result{gem, {}};
    const int n = gem.dimension();
    if (n < 2) return result;

    // Phase 1: one glue move per block seam, over the interior rows.
    for (int j = 1;; ++j) {
        std::vector<VertexId> left, right;
        if (!seam_columns(result.gem, j, 2, n, left, right)) break;
        GlueMoveSpec spec{left, right, n};
        std::vector<std::string> removed = label_names(result.gem, left);
        for (const auto& name : label_names(result.gem, right)) removed.push_back(name);
        try {
            result.gem = polyhedral_glue(result.gem, spec);
        } catch (const GemError&) {
            break;
        }
        result.steps.push_back({ReductionStep::Kind::Glue, n, std::move(removed)});
    }

    // Phase 2: cancel the 1-dipoles the glue moves left on the boundary rows.
    for (int j = 1;; ++j) {
        bool progressed = false;
        const std::pair<int, Color> rows[] = {{1, n - 1}, {n + 1, n - 2}};
        for (auto [row, color] : rows) {
            auto u = result.gem.find_grid(2 * j, row);
            auto v = result.gem.find_grid(2 * j + 1, row);
            if (!u || !v) continue;
            DipoleSpec spec{*u, *v, {color}};
            std::vector<std::string> removed = {result.gem.label(*u).name,
                                                result.gem.label(*v).name};
            try {
                result.gem = cancel_dipole(result.gem, spec);
            } catch (const GemError&) {
                continue;
            }
            result.steps.push_back(
                {ReductionStep::Kind::CancelDipole, color, std::move(removed)});
            progressed = true;
        }
        if (!progressed) break;
    }
    return result;
}

} // namespace gemkit
