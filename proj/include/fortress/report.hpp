#pragma once

#include <set>
#include <string>

#include <json.hpp>

#include "fortress/classify.hpp"
#include "fortress/graph6.hpp"

namespace fortress {

using ordered_json = nlohmann::ordered_json;

namespace detail {

inline ordered_json json_of(const VertexSet& s) {
    ordered_json arr = ordered_json::array();
    s.for_each([&](int v) { arr.push_back(v); });
    return arr;
}

inline ordered_json json_of(const std::vector<VertexSet>& family) {
    ordered_json arr = ordered_json::array();
    for (const VertexSet& s : family) arr.push_back(json_of(s));
    return arr;
}

inline ordered_json json_of_shape(const TreeShape& shape) {
    ordered_json out;
    out["tag"] = shape_name(shape.tag);
    out["order"] = shape.order;
    ordered_json stars = ordered_json::array();
    for (const PendentGeneralizedStar& star : shape.stars) {
        ordered_json s;
        s["center"] = star.center;
        s["legs"] = star.legs;
        stars.push_back(std::move(s));
    }
    out["stars"] = std::move(stars);
    return out;
}

}  // namespace detail

/// Builds the canonical JSON report for one graph.  Trees larger than the
/// guard get null enumeration fields but full structural analysis; anything
/// else beyond the guard throws GuardExceeded.
inline ordered_json build_report(const Graph& g, int guard = kDefaultExactGuard) {
    bool tree = is_tree(g);
    bool within = g.order() <= detail::effective_guard(guard);
    Classification cls = is_well_failed(g, guard);  // throws when !tree && !within

    ordered_json out;
    out["graph"] = to_graph6(g);
    out["n"] = g.order();
    out["m"] = g.edge_count();

    if (within) {
        FortReport forts = minimal_forts(g, guard);
        out["z_number"] = zero_forcing_number(g, guard);
        out["f_number"] = failed_zero_forcing_number(g, guard);
        out["minimal_forts"] = detail::json_of(forts.minimal_forts);
        std::set<int> sizes;
        for (const VertexSet& w : forts.minimal_forts) sizes.insert(w.size());
        out["fort_sizes"] = sizes;
        out["well_failed"] = cls.well_failed;
        out["well_forced"] = cls.well_forced;
        out["irrelevant"] = {
            {"fort", detail::json_of(forts.fort_irrelevant)},
            {"zero_forcing", detail::json_of(forts.zf_irrelevant)},
            {"failed_zero_forcing", detail::json_of(forts.failed_zf_irrelevant)},
        };
    } else {
        // A tree beyond the guard: classification and irrelevance follow from
        // structure (star centers; endpoints of a path), enumeration does not.
        out["z_number"] = nullptr;
        out["f_number"] = nullptr;
        out["minimal_forts"] = nullptr;
        out["fort_sizes"] = nullptr;
        out["well_failed"] = cls.well_failed;
        out["well_forced"] = cls.well_forced;
        VertexSet centers = star_centers(g).all_centers;
        VertexSet endpoints(g.order());
        if (tree_shape(g).tag == ShapeTag::path)
            for (int v = 0; v < g.order(); ++v)
                if (g.degree(v) <= 1) endpoints.insert(v);
        out["irrelevant"] = {
            {"fort", detail::json_of(centers)},
            {"zero_forcing", detail::json_of(centers)},
            {"failed_zero_forcing", detail::json_of(endpoints)},
        };
    }

    {
        StarDecomposition dec = star_centers(g);
        ordered_json layers = ordered_json::array();
        for (const StarLayer& layer : dec.layers)
            layers.push_back({{"centers", detail::json_of(layer.centers)},
                              {"residual", detail::json_of(layer.residual)}});
        out["star_centers"] = {{"layers", std::move(layers)},
                               {"all_centers", detail::json_of(dec.all_centers)},
                               {"final_residual", detail::json_of(dec.final_residual)}};
    }

    out["tree_shape"] = tree ? detail::json_of_shape(tree_shape(g)) : ordered_json(nullptr);
    return out;
}

/// Renders the same facts as build_report in a human-readable block.
inline std::string render_text(const ordered_json& report) {
    std::string out;
    auto line = [&](const std::string& key, const ordered_json& value) {
        out += key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
    };
    line("graph", report.at("graph"));
    out += "n: " + report.at("n").dump() + "  m: " + report.at("m").dump() + "\n";
    line("z_number", report.at("z_number"));
    line("f_number", report.at("f_number"));
    line("well_failed", report.at("well_failed"));
    line("well_forced", report.at("well_forced"));
    line("fort_sizes", report.at("fort_sizes"));
    line("minimal_forts", report.at("minimal_forts"));
    line("irrelevant.fort", report.at("irrelevant").at("fort"));
    line("irrelevant.zero_forcing", report.at("irrelevant").at("zero_forcing"));
    line("irrelevant.failed_zero_forcing", report.at("irrelevant").at("failed_zero_forcing"));
    line("star_centers.all", report.at("star_centers").at("all_centers"));
    line("star_centers.residual", report.at("star_centers").at("final_residual"));
    if (report.at("tree_shape").is_null())
        out += "tree_shape: null\n";
    else
        out += "tree_shape: " + report.at("tree_shape").at("tag").get<std::string>() + "\n";
    return out;
}

}  // namespace fortress
