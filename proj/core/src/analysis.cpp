#include "matchpoly/analysis.hpp"

#include <stdexcept>

#include "matchpoly/errors.hpp"

namespace matchpoly {

Graph parse_graph_input(std::string_view input_text, std::string_view format) {
    if (format == "edgelist") return parse_edge_list(input_text);
    if (format == "graph6") return parse_graph6(input_text);
    throw std::domain_error("unknown graph format '" + std::string(format) + "'");
}

namespace {

nlohmann::ordered_json name_list(const Graph& g, VertexMask m) {
    auto arr = nlohmann::ordered_json::array();
    for (int v : mask_to_vertices(m)) arr.push_back(g.label(v));
    return arr;
}

nlohmann::ordered_json graph_block(const Graph& g, std::string_view text, std::string_view format) {
    nlohmann::ordered_json j;
    j["format"] = std::string(format);
    j["text"] = std::string(text);
    j["n"] = g.vertex_count();
    return j;
}

}  // namespace

nlohmann::ordered_json analyze_document(std::string_view input_text, std::string_view format,
                                        const ThetaSpec& theta, const AnalyzeOptions& options) {
    Graph g = parse_graph_input(input_text, format);
    const int n = g.vertex_count();
    const VertexMask full = g.full_mask();

    MatchingTable table(g);
    ThetaAnalyzer analyzer(table, theta);
    Decomposition dec = analyzer.decompose();

    nlohmann::ordered_json doc;
    doc["graph"] = graph_block(g, input_text, format);
    doc["theta"] = {{"minpoly", theta.minpoly().to_text()}, {"label", theta.label()}};
    doc["mu"] = table.mu().to_text();
    doc["mult"] = dec.mult;
    doc["critical"] = n >= 1 && analyzer.is_theta_critical(full);

    auto classes = nlohmann::ordered_json::array();
    for (int v = 0; v < n; ++v) {
        VertexClass c = analyzer.classify_vertex(full, v);
        classes.push_back({{"vertex", g.label(v)},
                           {"class", to_string(c.kind)},
                           {"special", c.special}});
    }
    doc["classes"] = std::move(classes);
    doc["decomposition"] = {{"D", name_list(g, dec.D)},
                            {"A", name_list(g, dec.A)},
                            {"N", name_list(g, dec.N)},
                            {"P", name_list(g, dec.P)}};

    if (!options.with_barriers) {
        doc["deficiency"] = nullptr;
        doc["barriers"] = nullptr;
        return doc;
    }

    BarrierLab lab(table, theta, options.force);
    DeficiencyResult def = lab.theta_deficiency();
    doc["deficiency"] = {{"value", def.value}, {"witness", name_list(g, def.witness)}};

    auto family = lab.enumerate_barrier_sets();
    auto all = nlohmann::ordered_json::array();
    auto maximal = nlohmann::ordered_json::array();
    for (const BarrierReport& r : family) {
        all.push_back(name_list(g, r.set));
        if (r.maximal_theta_barrier) maximal.push_back(name_list(g, r.set));
    }
    MaximalIntersection mi = lab.intersect_maximal_barriers();
    doc["barriers"] = {{"all", std::move(all)},
                       {"maximal", std::move(maximal)},
                       {"intersection_of_maximal", name_list(g, mi.intersection)},
                       {"equals_A_theta", mi.equals_a_theta},
                       {"N_theta_empty", mi.n_theta_empty}};
    return doc;
}

nlohmann::ordered_json roots_document(std::string_view input_text, std::string_view format) {
    Graph g = parse_graph_input(input_text, format);
    MatchingTable table(g);

    nlohmann::ordered_json doc;
    doc["graph"] = graph_block(g, input_text, format);
    doc["mu"] = table.mu().to_text();
    doc["mu_pretty"] = table.mu().pretty();

    auto arr = nlohmann::ordered_json::array();
    for (const ThetaSpec& cand : find_theta_candidates(table.mu(), 2)) {
        arr.push_back({{"minpoly", cand.minpoly().to_text()},
                       {"label", cand.label()},
                       {"pretty", cand.minpoly().pretty()},
                       {"multiplicity", root_multiplicity(table.mu(), cand)}});
    }
    doc["candidates"] = std::move(arr);
    return doc;
}

}  // namespace matchpoly
