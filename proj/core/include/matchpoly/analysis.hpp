#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "matchpoly/barrier.hpp"

namespace matchpoly {

struct AnalyzeOptions {
    bool with_barriers = true;  // deficiency scan and barrier families
    bool force = false;         // override the enumeration cap
};

/// Full single-graph analysis document. `format` is "edgelist" or
/// "graph6"; the original input text is embedded so the document
/// round-trips: re-analyzing graph.text with the same theta reproduces an
/// identical document. Throws ParseError / std::domain_error on bad input
/// and CapExceeded when barrier scans are requested above the cap without
/// force.
nlohmann::ordered_json analyze_document(std::string_view input_text, std::string_view format,
                                        const ThetaSpec& theta, const AnalyzeOptions& options = {});

/// mu plus every root with a minimal polynomial of degree <= 2, with
/// multiplicities.
nlohmann::ordered_json roots_document(std::string_view input_text, std::string_view format);

Graph parse_graph_input(std::string_view input_text, std::string_view format);

}  // namespace matchpoly
