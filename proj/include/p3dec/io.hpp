#pragma once

#include <algorithm>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "decomposition.hpp"
#include "digraph.hpp"
#include "line_graph.hpp"

namespace p3dec {

// ---- text format -------------------------------------------------------------
//
// digraph <n> <m>
// bipartition <k>        (optional; X = [0, k))
// <tail> <head>          (m lines)
//
// '#' starts a comment, blank lines are skipped.

struct parsed_digraph {
    digraph d;
    std::optional<int> bipartition_k;
};

inline parsed_digraph read_digraph_text(std::istream& in) {
    int line_no = 0;
    auto next_tokens = [&]() -> std::optional<std::pair<std::string, int>> {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            return std::make_pair(line, line_no);
        }
        return std::nullopt;
    };

    auto header = next_tokens();
    if (!header) throw parse_error(line_no, "missing digraph header");
    std::istringstream hs(header->first);
    std::string word;
    int n = 0, m = 0;
    if (!(hs >> word >> n >> m) || word != "digraph" || n < 0 || m < 0)
        throw parse_error(header->second, "expected 'digraph <n> <m>'");

    std::optional<int> bip;
    std::vector<arc> arcs;
    arcs.reserve(static_cast<std::size_t>(m));
    while (static_cast<int>(arcs.size()) < m) {
        auto row = next_tokens();
        if (!row) throw parse_error(line_no, "expected " + std::to_string(m) + " arcs, got " +
                                                 std::to_string(arcs.size()));
        std::istringstream rs(row->first);
        if (arcs.empty() && !bip) {
            std::string key;
            std::istringstream peek(row->first);
            if (peek >> key; key == "bipartition") {
                int k = 0;
                if (!(peek >> k) || k < 0 || k > n)
                    throw parse_error(row->second, "expected 'bipartition <k>' with 0 <= k <= n");
                bip = k;
                continue;
            }
        }
        int t = 0, h = 0;
        if (!(rs >> t >> h)) throw parse_error(row->second, "expected '<tail> <head>'");
        if (t < 0 || t >= n || h < 0 || h >= n)
            throw parse_error(row->second, "vertex out of range [0, " + std::to_string(n) + ")");
        arcs.push_back({t, h});
    }
    return parsed_digraph{digraph(n, std::move(arcs)), bip};
}

inline parsed_digraph load_digraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error(0, "cannot open file: " + path);
    return read_digraph_text(in);
}

inline void write_digraph_text(std::ostream& out, const digraph& d,
                               std::optional<int> bipartition_k = std::nullopt) {
    out << "digraph " << d.order() << ' ' << d.size() << '\n';
    if (bipartition_k) out << "bipartition " << *bipartition_k << '\n';
    for (const arc& a : d.arcs()) out << a.tail << ' ' << a.head << '\n';
}

// ---- DOT ---------------------------------------------------------------------

inline std::string to_dot(const line_graph& lg, const std::vector<int>* cycle = nullptr) {
    std::vector<std::pair<int, int>> highlight;
    if (cycle && cycle->size() >= 2)
        for (std::size_t i = 0; i < cycle->size(); ++i) {
            int u = (*cycle)[i], v = (*cycle)[(i + 1) % cycle->size()];
            highlight.emplace_back(std::min(u, v), std::max(u, v));
        }
    std::ostringstream out;
    out << "graph linegraph {\n";
    for (int v = 0; v < lg.vertex_count; ++v) out << "  " << v << ";\n";
    for (auto [u, v] : lg.edges) {
        out << "  " << u << " -- " << v;
        if (std::find(highlight.begin(), highlight.end(), std::make_pair(u, v)) !=
            highlight.end())
            out << " [color=red]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

// ---- JSON --------------------------------------------------------------------

inline nlohmann::json to_json(const vertex_set& s) { return nlohmann::json(s.to_vector()); }

inline nlohmann::json to_json(const partition3& p) {
    return nlohmann::json{{"X", to_json(p.x)}, {"Y", to_json(p.y)}, {"Z", to_json(p.z)}};
}

inline nlohmann::json to_json(const certificate& c) {
    struct emitter {
        nlohmann::json operator()(const odd_arc_count_cert& cert) const {
            return {{"kind", "odd_arc_count"}, {"arc_count", cert.arc_count}};
        }
        nlohmann::json operator()(const tournament_partition_cert& cert) const {
            return {{"kind", "tournament_partition"},
                    {"partition", to_json(cert.parts)},
                    {"slack", cert.slack}};
        }
        nlohmann::json operator()(const bipartite_imbalance_cert& cert) const {
            return {{"kind", "bipartite_imbalance"},
                    {"side_x", to_json(cert.side_x)},
                    {"d_plus_x", cert.d_plus_x},
                    {"d_minus_x", cert.d_minus_x}};
        }
        nlohmann::json operator()(const bipartite_hall_cert& cert) const {
            return {{"kind", "bipartite_hall"}, {"side_x", to_json(cert.side_x)},
                    {"x1", to_json(cert.x1)},  {"y1", to_json(cert.y1)},
                    {"lhs", cert.lhs},         {"rhs", cert.rhs}};
        }
        nlohmann::json operator()(const fractional_partition_cert& cert) const {
            return {{"kind", "fractional_partition"},
                    {"partition", to_json(cert.parts)},
                    {"slack", cert.slack}};
        }
        nlohmann::json operator()(const generic_tutte_cert& cert) const {
            return {{"kind", "generic_tutte"},
                    {"arc_set", cert.arc_set},
                    {"odd_components", cert.odd_components}};
        }
    };
    nlohmann::json j = std::visit(emitter{}, c.value);
    j["policy"] = to_string(c.policy);
    return j;
}

inline nlohmann::json to_json(const p3_decomposition& dec) {
    nlohmann::json arr = nlohmann::json::array();
    for (const p3_triple& t : dec) arr.push_back({t.u, t.v, t.w});
    return arr;
}

inline nlohmann::json to_json(const line_graph& lg) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : lg.edges) edges.push_back({u, v});
    return {{"vertices", lg.vertex_count}, {"edges", edges}, {"policy", to_string(lg.policy)}};
}

inline nlohmann::json check_result_json(p3_policy policy, const check_result& res) {
    nlohmann::json j;
    j["policy"] = to_string(policy);
    j["decomposable"] = res.decomposable;
    j["decomposition"] = res.decomposition ? to_json(*res.decomposition) : nlohmann::json();
    j["certificate"] = res.cert ? to_json(*res.cert) : nlohmann::json();
    return j;
}

inline nlohmann::json to_json(const component_report& rep) {
    nlohmann::json j{{"num_components", rep.num_components},
                     {"f_n", rep.f_n},
                     {"bound_holds", rep.bound_holds},
                     {"is_extremal", rep.is_extremal},
                     {"extremal_kind", to_string(rep.kind)},
                     {"edgeless", rep.edgeless}};
    j["lemma_condition"] = rep.lemma_condition ? nlohmann::json(*rep.lemma_condition)
                                               : nlohmann::json();
    return j;
}

}  // namespace p3dec
