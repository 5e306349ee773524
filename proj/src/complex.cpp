#include "gemkit/complex.hpp"

namespace gemkit {

namespace {

void require_closed(const Gem& gem, const char* what) {
    if (!gem.is_closed())
        fail(Err::NotClosed, std::string(what) + " is defined for closed gems only");
}

} // namespace

FVector f_vector(const Gem& gem) {
    require_closed(gem, "f_vector");
    const int n = gem.dimension();
    FVector f;
    f.counts.assign(n + 1, 0);
    // A subset S of surviving colors contributes to the count of
    // (n - |S|)-simplices; the full set corresponds to no simplex.
    const unsigned full = (1u << (n + 1)) - 1;
    for (unsigned mask = 0; mask < full; ++mask) {
        std::vector<Color> colors;
        int size = 0;
        for (Color c = 0; c <= n; ++c)
            if (mask & (1u << c)) {
                colors.push_back(c);
                ++size;
            }
        f.counts[n - size] += gem.residues(colors).component_count;
    }
    return f;
}

long long euler_characteristic(const Gem& gem) {
    FVector f = f_vector(gem);
    long long chi = 0;
    for (size_t k = 0; k < f.counts.size(); ++k)
        chi += (k % 2 == 0) ? f.counts[k] : -f.counts[k];
    return chi;
}

int num_vertices_of_k(const Gem& gem) {
    require_closed(gem, "num_vertices_of_k");
    const int n = gem.dimension();
    int total = 0;
    for (Color j = 0; j <= n; ++j) {
        std::vector<Color> rest;
        for (Color c = 0; c <= n; ++c)
            if (c != j) rest.push_back(c);
        total += gem.residues(rest).component_count;
    }
    return total;
}

} // namespace gemkit
