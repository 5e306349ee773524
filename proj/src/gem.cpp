#include "gemkit/gem.hpp"

#include <algorithm>
#include <charconv>
#include <queue>

namespace gemkit {

const char* err_name(Err e) {
    switch (e) {
        case Err::LoopEdge: return "LoopEdge";
        case Err::ColorClash: return "ColorClash";
        case Err::MissingColor: return "MissingColor";
        case Err::BadColor: return "BadColor";
        case Err::BadParam: return "BadParam";
        case Err::NotClosed: return "NotClosed";
        case Err::NotBipartite: return "NotBipartite";
        case Err::Disconnected: return "Disconnected";
        case Err::NoBoundary: return "NoBoundary";
        case Err::InvalidDipole: return "InvalidDipole";
        case Err::BadColors: return "BadColors";
        case Err::InvalidGlueSpec: return "InvalidGlueSpec";
        case Err::OddVertexCount: return "OddVertexCount";
        case Err::UnknownVertex: return "UnknownVertex";
        case Err::InvalidMap: return "InvalidMap";
        case Err::InconsistentDegree: return "InconsistentDegree";
        case Err::Mismatch: return "Mismatch";
        case Err::UnsupportedTarget: return "UnsupportedTarget";
        case Err::SyntaxError: return "SyntaxError";
    }
    return "Unknown";
}

VertexLabel VertexLabel::grid(int j, int k) {
    return {j, k, "v" + std::to_string(j) + "^" + std::to_string(k)};
}

VertexLabel VertexLabel::indexed(int j) {
    return {j, 0, "v" + std::to_string(j)};
}

VertexLabel VertexLabel::superscript(int j) {
    return {j, 0, "v^" + std::to_string(j)};
}

namespace {

bool parse_int(std::string_view s, int& out) {
    if (s.empty()) return false;
    auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

} // namespace

VertexLabel VertexLabel::named(std::string name) {
    VertexLabel lab{0, 0, std::move(name)};
    std::string_view s = lab.name;
    if (s.size() < 2 || s[0] != 'v') return lab;
    s.remove_prefix(1);
    auto caret = s.find('^');
    int j = 0, k = 0;
    if (caret == std::string_view::npos) {
        if (parse_int(s, j) && j >= 1) lab.series = j;
    } else if (caret == 0) {
        if (parse_int(s.substr(1), j) && j >= 1) lab.series = j;
    } else if (parse_int(s.substr(0, caret), j) &&
               parse_int(s.substr(caret + 1), k) && j >= 1 && k >= 1) {
        lab.series = j;
        lab.level = k;
    }
    return lab;
}

int Orientation::sign(VertexId v) const {
    if (v < 0 || v >= static_cast<int>(signs.size()))
        fail(Err::UnknownVertex, "vertex " + std::to_string(v) + " not in orientation domain");
    return signs[v];
}

Orientation Orientation::flipped() const {
    Orientation o = *this;
    for (int& s : o.signs) s = -s;
    return o;
}

Gem::Gem(int dimension, std::vector<VertexLabel> labels,
         std::vector<ColoredEdge> edges)
    : dim_(dimension), labels_(std::move(labels)), edges_(std::move(edges)) {
    if (dim_ < 1) fail(Err::BadParam, "dimension must be >= 1, got " + std::to_string(dim_));
    const int n_vertices = static_cast<int>(labels_.size());
    if (n_vertices == 0) fail(Err::BadParam, "a gem needs at least one vertex");

    {
        std::vector<std::string> names;
        names.reserve(labels_.size());
        for (const auto& l : labels_) names.push_back(l.name);
        std::sort(names.begin(), names.end());
        auto dup = std::adjacent_find(names.begin(), names.end());
        if (dup != names.end())
            fail(Err::BadParam, "duplicate vertex label '" + *dup + "'");
    }

    nbr_.assign(n_vertices, std::vector<VertexId>(dim_ + 1, -1));
    for (size_t i = 0; i < edges_.size(); ++i) {
        ColoredEdge& e = edges_[i];
        const std::string at = "edge " + std::to_string(i) + ": ";
        if (e.u < 0 || e.u >= n_vertices || e.v < 0 || e.v >= n_vertices)
            fail(Err::UnknownVertex, at + "vertex id out of range");
        if (e.u == e.v)
            fail(Err::LoopEdge, at + "loop at vertex " + std::to_string(e.u));
        if (e.color < 0 || e.color > dim_)
            fail(Err::BadColor, at + "color " + std::to_string(e.color) +
                                    " outside 0.." + std::to_string(dim_));
        if (e.u > e.v) std::swap(e.u, e.v);
        for (VertexId w : {e.u, e.v}) {
            if (nbr_[w][e.color] != -1)
                fail(Err::ColorClash, at + "vertex " + std::to_string(w) +
                                          " already has a color-" +
                                          std::to_string(e.color) + " edge");
        }
        nbr_[e.u][e.color] = e.v;
        nbr_[e.v][e.color] = e.u;
    }

    for (VertexId v = 0; v < n_vertices; ++v)
        for (Color c = 0; c < dim_; ++c)
            if (nbr_[v][c] == -1)
                fail(Err::MissingColor, "vertex " + std::to_string(v) +
                                            " has no edge of color " + std::to_string(c));

    std::sort(edges_.begin(), edges_.end());
}

const VertexLabel& Gem::label(VertexId v) const {
    if (v < 0 || v >= vertex_count())
        fail(Err::UnknownVertex, "vertex " + std::to_string(v) + " out of range");
    return labels_[v];
}

std::optional<VertexId> Gem::neighbor(VertexId v, Color c) const {
    if (v < 0 || v >= vertex_count())
        fail(Err::UnknownVertex, "vertex " + std::to_string(v) + " out of range");
    if (c < 0 || c > dim_)
        fail(Err::BadColor, "color " + std::to_string(c) + " outside 0.." + std::to_string(dim_));
    VertexId w = nbr_[v][c];
    if (w < 0) return std::nullopt;
    return w;
}

std::vector<Color> Gem::colors_at(VertexId v) const {
    std::vector<Color> out;
    for (Color c = 0; c <= dim_; ++c)
        if (nbr_[v][c] != -1) out.push_back(c);
    return out;
}

bool Gem::is_closed() const {
    for (VertexId v = 0; v < vertex_count(); ++v)
        if (nbr_[v][dim_] == -1) return false;
    return true;
}

std::vector<VertexId> Gem::boundary_vertices() const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < vertex_count(); ++v)
        if (nbr_[v][dim_] == -1) out.push_back(v);
    return out;
}

bool Gem::is_connected() const {
    std::vector<char> seen(vertex_count(), 0);
    std::queue<VertexId> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        for (Color c = 0; c <= dim_; ++c) {
            VertexId w = nbr_[v][c];
            if (w >= 0 && !seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
        }
    }
    return reached == vertex_count();
}

bool Gem::is_bipartite() const {
    std::vector<int> side(vertex_count(), 0);
    for (VertexId s = 0; s < vertex_count(); ++s) {
        if (side[s] != 0) continue;
        side[s] = 1;
        std::queue<VertexId> q;
        q.push(s);
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            for (Color c = 0; c <= dim_; ++c) {
                VertexId w = nbr_[v][c];
                if (w < 0) continue;
                if (side[w] == 0) {
                    side[w] = -side[v];
                    q.push(w);
                } else if (side[w] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

ResidueReport Gem::residues(std::vector<Color> colors) const {
    std::sort(colors.begin(), colors.end());
    colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
    for (Color c : colors)
        if (c < 0 || c > dim_)
            fail(Err::BadColor, "residue color " + std::to_string(c) +
                                    " outside 0.." + std::to_string(dim_));

    std::vector<char> allowed(dim_ + 1, 0);
    for (Color c : colors) allowed[c] = 1;

    ResidueReport report;
    report.colors = colors;
    std::vector<char> seen(vertex_count(), 0);
    for (VertexId s = 0; s < vertex_count(); ++s) {
        if (seen[s]) continue;
        std::vector<VertexId> comp;
        std::queue<VertexId> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            comp.push_back(v);
            for (Color c = 0; c <= dim_; ++c) {
                if (!allowed[c]) continue;
                VertexId w = nbr_[v][c];
                if (w >= 0 && !seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        report.components.push_back(std::move(comp));
    }
    report.component_count = static_cast<int>(report.components.size());
    return report;
}

Orientation Gem::orientation(VertexId root) const {
    if (root < 0 || root >= vertex_count())
        fail(Err::UnknownVertex, "root " + std::to_string(root) + " out of range");
    Orientation o;
    o.root = root;
    o.signs.assign(vertex_count(), 0);
    o.signs[root] = 1;
    std::queue<VertexId> q;
    q.push(root);
    int reached = 1;
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        for (Color c = 0; c <= dim_; ++c) {
            VertexId w = nbr_[v][c];
            if (w < 0) continue;
            if (o.signs[w] == 0) {
                o.signs[w] = -o.signs[v];
                ++reached;
                q.push(w);
            } else if (o.signs[w] == o.signs[v]) {
                fail(Err::NotBipartite, "odd closed walk through vertices " +
                                            std::to_string(v) + " and " + std::to_string(w));
            }
        }
    }
    if (reached != vertex_count())
        fail(Err::Disconnected, "gem is not connected");
    return o;
}

bool Gem::is_contracted() const {
    if (!is_closed())
        fail(Err::NotClosed, "contractedness is defined for closed gems");
    for (Color j = 0; j <= dim_; ++j) {
        std::vector<Color> rest;
        for (Color c = 0; c <= dim_; ++c)
            if (c != j) rest.push_back(c);
        if (residues(rest).component_count != 1) return false;
    }
    return true;
}

Gem Gem::boundary_graph() const {
    const std::vector<VertexId> boundary = boundary_vertices();
    if (boundary.empty())
        fail(Err::NoBoundary, "gem is closed; it has no boundary graph");

    std::vector<int> index(vertex_count(), -1);
    for (size_t i = 0; i < boundary.size(); ++i) index[boundary[i]] = static_cast<int>(i);

    std::vector<VertexLabel> labels;
    labels.reserve(boundary.size());
    for (VertexId v : boundary) labels.push_back(labels_[v]);

    std::vector<ColoredEdge> out;
    for (VertexId u : boundary) {
        for (Color j = 0; j < dim_; ++j) {
            // Walk the path alternating colors j and n until the far
            // boundary vertex.
            VertexId x = nbr_[u][j];
            while (nbr_[x][dim_] != -1) {
                x = nbr_[x][dim_];
                x = nbr_[x][j];
            }
            if (index[u] < index[x])
                out.push_back({index[u], index[x], j});
        }
    }
    return Gem(dim_ - 1, std::move(labels), std::move(out));
}

std::optional<VertexId> Gem::find_name(const std::string& name) const {
    for (VertexId v = 0; v < vertex_count(); ++v)
        if (labels_[v].name == name) return v;
    return std::nullopt;
}

std::optional<VertexId> Gem::find_grid(int series, int level) const {
    for (VertexId v = 0; v < vertex_count(); ++v)
        if (labels_[v].series == series && labels_[v].level == level) return v;
    return std::nullopt;
}

bool Gem::operator==(const Gem& o) const {
    return dim_ == o.dim_ && labels_ == o.labels_ && edges_ == o.edges_;
}

namespace {

// Extends phi from u0 -> w0 over the whole component of u0, following edges
// color by color.  Returns false on any mismatch; on success appends the
// newly assigned source vertices to `placed`.
bool propagate(const Gem& a, const Gem& b, VertexId u0, VertexId w0,
               std::vector<VertexId>& phi, std::vector<char>& used,
               std::vector<VertexId>& placed) {
    if (used[w0]) return false;
    phi[u0] = w0;
    used[w0] = 1;
    placed.push_back(u0);
    std::queue<VertexId> q;
    q.push(u0);
    while (!q.empty()) {
        VertexId u = q.front();
        q.pop();
        for (Color c = 0; c <= a.dimension(); ++c) {
            auto nu = a.neighbor(u, c);
            auto nw = b.neighbor(phi[u], c);
            if (nu.has_value() != nw.has_value()) return false;
            if (!nu) continue;
            if (phi[*nu] != -1) {
                if (phi[*nu] != *nw) return false;
            } else {
                if (used[*nw]) return false;
                phi[*nu] = *nw;
                used[*nw] = 1;
                placed.push_back(*nu);
                q.push(*nu);
            }
        }
    }
    return true;
}

bool match_components(const Gem& a, const Gem& b,
                      const std::vector<VertexId>& roots, size_t i,
                      std::vector<VertexId>& phi, std::vector<char>& used) {
    if (i == roots.size()) return true;
    VertexId u0 = roots[i];
    auto sig = a.colors_at(u0);
    for (VertexId w0 = 0; w0 < b.vertex_count(); ++w0) {
        if (used[w0] || b.colors_at(w0) != sig) continue;
        std::vector<VertexId> placed;
        if (propagate(a, b, u0, w0, phi, used, placed) &&
            match_components(a, b, roots, i + 1, phi, used))
            return true;
        for (VertexId u : placed) {
            used[phi[u]] = 0;
            phi[u] = -1;
        }
    }
    return false;
}

} // namespace

std::optional<std::vector<VertexId>> color_isomorphism(const Gem& a, const Gem& b) {
    if (a.dimension() != b.dimension() || a.vertex_count() != b.vertex_count() ||
        a.edges().size() != b.edges().size())
        return std::nullopt;

    // One root per component of a, in ascending order.
    std::vector<VertexId> roots;
    {
        std::vector<char> seen(a.vertex_count(), 0);
        for (VertexId s = 0; s < a.vertex_count(); ++s) {
            if (seen[s]) continue;
            roots.push_back(s);
            std::queue<VertexId> q;
            q.push(s);
            seen[s] = 1;
            while (!q.empty()) {
                VertexId v = q.front();
                q.pop();
                for (Color c = 0; c <= a.dimension(); ++c)
                    if (auto w = a.neighbor(v, c); w && !seen[*w]) {
                        seen[*w] = 1;
                        q.push(*w);
                    }
            }
        }
    }

    std::vector<VertexId> phi(a.vertex_count(), -1);
    std::vector<char> used(b.vertex_count(), 0);
    if (match_components(a, b, roots, 0, phi, used)) return phi;
    return std::nullopt;
}

std::vector<Gem> split_components(const Gem& g) {
    ResidueReport all = g.residues([&] {
        std::vector<Color> cs;
        for (Color c = 0; c <= g.dimension(); ++c) cs.push_back(c);
        return cs;
    }());

    std::vector<Gem> out;
    for (const auto& comp : all.components) {
        std::vector<int> index(g.vertex_count(), -1);
        std::vector<VertexLabel> labels;
        for (size_t i = 0; i < comp.size(); ++i) {
            index[comp[i]] = static_cast<int>(i);
            labels.push_back(g.label(comp[i]));
        }
        std::vector<ColoredEdge> edges;
        for (const ColoredEdge& e : g.edges())
            if (index[e.u] != -1 && index[e.v] != -1)
                edges.push_back({index[e.u], index[e.v], e.color});
        out.emplace_back(g.dimension(), std::move(labels), std::move(edges));
    }
    return out;
}

VertexId canonical_root(const Gem& g) {
    if (auto v = g.find_grid(1, 1)) return *v;
    return 0;
}

} // namespace gemkit
