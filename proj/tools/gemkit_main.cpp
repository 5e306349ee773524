// Command-line front end: every subcommand is a thin wrapper over the
// library, reading and writing gem documents.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gemkit/complex.hpp"
#include "gemkit/constructions.hpp"
#include "gemkit/degree.hpp"
#include "gemkit/genus.hpp"
#include "gemkit/io.hpp"
#include "gemkit/moves.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace gemkit;

ParsedDocument load(const std::string& path) {
    if (path == "-") {
        std::stringstream buf;
        buf << std::cin.rdbuf();
        return parse_document(buf.str());
    }
    return parse_document_file(path);
}

Gem load_gem(const std::string& path) { return load(path).gem; }

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) fail(Err::SyntaxError, "cannot write " + out_path);
    out << text;
}

json rho_json(const HalfInt& r) {
    if (r.is_integer()) return json(r.twice / 2);
    return json(r.to_string());
}

Gem construct_family(const std::string& family, int n, int d, bool d_given) {
    auto no_d = [&](const char* name) {
        if (d_given) fail(Err::BadParam, std::string(name) + " does not take --d");
    };
    if (family == "sphere") {
        no_d("sphere");
        return standard_sphere(n);
    }
    if (family == "necklace-sphere") return necklace_sphere(n, d);
    if (family == "cylinder") return cylinder_gem(n, d);
    if (family == "product-standard") {
        no_d("product-standard");
        return product_standard(n);
    }
    if (family == "product") return product_gem(n, d);
    if (family == "glued-sphere") return glued_sphere(n, d);
    fail(Err::BadParam, "unknown family '" + family +
                            "'; expected sphere, necklace-sphere, cylinder, "
                            "product-standard, product or glued-sphere");
}

int run(int argc, char** argv) {
    CLI::App app{"gemkit: edge-colored graph encodings of manifolds"};
    app.require_subcommand(1);

    auto* construct = app.add_subcommand("construct", "build a gem family");
    std::string family, out_path;
    int n = 0, d = 1;
    construct
        ->add_option("family", family,
                     "sphere | necklace-sphere | cylinder | product-standard | "
                     "product | glued-sphere")
        ->required();
    construct->add_option("--n", n, "dimension")->required();
    auto* d_opt = construct->add_option("--d", d, "degree parameter (default 1)");
    construct->add_option("-o,--output", out_path, "output file (default stdout)");
    construct->callback([&] {
        emit(serialize(construct_family(family, n, d, d_opt->count() > 0)), out_path);
    });

    auto* cmap = app.add_subcommand("construct-map", "build a degree-d map document");
    std::string map_kind, map_out;
    int mn = 0, md = 1;
    bool negate = false;
    cmap->add_option("kind", map_kind, "sphere | product")->required();
    cmap->add_option("--n", mn, "dimension")->required();
    cmap->add_option("--d", md, "degree (default 1)");
    cmap->add_flag("--negate", negate, "compose with the orientation reversal");
    cmap->add_option("-o,--output", map_out, "output file (default stdout)");
    cmap->callback([&] {
        ColoredVertexMap m = [&] {
            if (map_kind == "product") return build_g_d_product(mn, md);
            if (map_kind == "sphere") return build_sphere_map(necklace_sphere(mn, md), md);
            fail(Err::BadParam, "unknown map kind '" + map_kind + "'");
        }();
        if (negate) m = compose(orientation_reversal(m.target), m);
        emit(serialize(m), map_out);
    });

    auto* verify = app.add_subcommand("verify", "validate a gem and report its structure");
    std::string verify_path;
    verify->add_option("gem", verify_path, "gem document (or - for stdin)")->required();
    verify->callback([&] {
        Gem g = load_gem(verify_path);
        json report;
        report["valid"] = true;
        report["dimension"] = g.dimension();
        report["vertices"] = g.vertex_count();
        report["edges"] = g.edges().size();
        report["closed"] = g.is_closed();
        report["connected"] = g.is_connected();
        report["bipartite"] = g.is_bipartite();
        report["boundary_vertices"] = g.boundary_vertices();
        report["contracted"] = g.is_closed() ? json(g.is_contracted()) : json(nullptr);
        emit(report.dump(2) + "\n", "");
    });

    auto* genus = app.add_subcommand("genus", "regular genus by full permutation scan");
    std::string genus_path;
    bool all_perms = false;
    genus->add_option("gem", genus_path)->required();
    genus->add_flag("--all-permutations", all_perms, "list every cyclic permutation");
    genus->callback([&] {
        GenusReport report = regular_genus(load_gem(genus_path));
        json out;
        out["regular_genus"] = rho_json(report.regular_genus);
        out["argmin"] = report.argmin.order();
        out["permutations_scanned"] = report.per_permutation.size();
        if (all_perms) {
            json list = json::array();
            for (const GenusEntry& e : report.per_permutation) {
                json item;
                item["order"] = e.eps.order();
                item["chi"] = e.chi;
                item["rho"] = rho_json(e.rho);
                list.push_back(std::move(item));
            }
            out["per_permutation"] = std::move(list);
        }
        emit(out.dump(2) + "\n", "");
    });

    auto* euler = app.add_subcommand("euler", "Euler characteristic");
    std::string euler_path;
    euler->add_option("gem", euler_path)->required();
    euler->callback([&] {
        json out;
        out["euler"] = euler_characteristic(load_gem(euler_path));
        emit(out.dump(2) + "\n", "");
    });

    auto* fvec = app.add_subcommand("fvector", "simplex counts of the encoded complex");
    std::string fvec_path;
    fvec->add_option("gem", fvec_path)->required();
    fvec->callback([&] {
        FVector f = f_vector(load_gem(fvec_path));
        long long chi_sum = 0;
        for (size_t k = 0; k < f.counts.size(); ++k)
            chi_sum += (k % 2 == 0) ? f.counts[k] : -f.counts[k];
        json out;
        out["f_vector"] = f.counts;
        out["euler"] = chi_sum;
        emit(out.dump(2) + "\n", "");
    });

    auto* deg = app.add_subcommand("degree", "degree of a map document");
    std::string deg_path;
    deg->add_option("map", deg_path)->required();
    deg->callback([&] {
        ParsedDocument doc = load(deg_path);
        if (!doc.map) fail(Err::SyntaxError, "document has no map section");
        DegreeResult r = degree(*doc.map);
        json out;
        out["degree"] = r.degree;
        out["surjective"] = r.surjective;
        out["per_target"] = r.per_target;
        emit(out.dump(2) + "\n", "");
    });

    auto* red = app.add_subcommand("reduce", "apply the block-collapsing move schedule");
    std::string red_path, red_out;
    red->add_option("gem", red_path)->required();
    red->add_option("-o,--output", red_out, "write the reduced gem here (default inline)");
    red->callback([&] {
        ReductionResult r = reduce(load_gem(red_path));
        json out;
        json moves = json::array();
        for (const ReductionStep& s : r.steps) {
            json step;
            step["move"] = s.kind == ReductionStep::Kind::Glue ? "glue" : "cancel-dipole";
            step["color"] = s.color;
            step["removed"] = s.removed;
            moves.push_back(std::move(step));
        }
        out["moves"] = std::move(moves);
        out["vertices"] = r.gem.vertex_count();
        if (red_out.empty()) {
            out["gem"] = json::parse(serialize(r.gem));
        } else {
            emit(serialize(r.gem), red_out);
        }
        emit(out.dump(2) + "\n", "");
    });

    auto* iso = app.add_subcommand("iso", "color-preserving isomorphism test");
    std::string iso_a, iso_b;
    iso->add_option("gemA", iso_a)->required();
    iso->add_option("gemB", iso_b)->required();
    iso->callback([&] {
        auto phi = color_isomorphism(load_gem(iso_a), load_gem(iso_b));
        json out;
        out["isomorphic"] = phi.has_value();
        out["bijection"] = phi ? json(*phi) : json("none");
        emit(out.dump(2) + "\n", "");
    });

    auto* dot = app.add_subcommand("export-dot", "GraphViz rendering of a gem");
    std::string dot_path, dot_out;
    dot->add_option("gem", dot_path)->required();
    dot->add_option("-o,--output", dot_out, "output file (default stdout)");
    dot->callback([&] { emit(export_dot(load_gem(dot_path)), dot_out); });

    CLI11_PARSE(app, argc, argv);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const GemError& e) {
        json record;
        record["error"]["code"] = err_name(e.code());
        record["error"]["message"] = e.what();
        std::cerr << record.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        json record;
        record["error"]["code"] = "Internal";
        record["error"]["message"] = e.what();
        std::cerr << record.dump() << "\n";
        return 3;
    }
}
