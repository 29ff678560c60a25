#include "sandpiles/export.hpp"

#include <json.hpp>

namespace sandpiles {

namespace {

using Json = nlohmann::ordered_json;

std::string_view mode_name(ExploreMode m) {
    return m == ExploreMode::Positional ? "positional" : "forms";
}

std::string quoted(const std::string& field) { return '"' + field + '"'; }

std::string graph_dot(const SpaceGraph& g) {
    std::string out = "digraph sandpiles {\n";
    out += "    label=\"" + std::string(to_string(g.model)) + " n=" + std::to_string(g.n) + " " +
           std::string(mode_name(g.mode)) + "\";\n";
    out += "    node [shape=circle];\n";
    std::vector<bool> is_fixed(g.nodes.size(), false);
    for (std::uint32_t i : g.fixed) is_fixed[i] = true;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        out += "    " + std::to_string(i) + " [label=\"" + to_literal(g.nodes[i]) + "\"";
        if (is_fixed[i]) out += ", shape=doublecircle";
        out += "];\n";
    }
    for (std::size_t i = 0; i < g.succ.size(); ++i)
        for (std::uint32_t t : g.succ[i])
            out += "    " + std::to_string(i) + " -> " + std::to_string(t) + ";\n";
    out += "}\n";
    return out;
}

std::string graph_json(const SpaceGraph& g) {
    Json root;
    root["model"] = to_string(g.model);
    root["n"] = g.n;
    root["mode"] = mode_name(g.mode);
    root["node_count"] = g.nodes.size();
    root["edge_count"] = g.edge_count;
    std::vector<bool> is_fixed(g.nodes.size(), false);
    for (std::uint32_t i : g.fixed) is_fixed[i] = true;
    Json nodes = Json::array();
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        Json node;
        node["heights"] = g.nodes[i].heights;
        if (g.mode == ExploreMode::Positional) node["offset"] = g.nodes[i].origin;
        node["fixed"] = static_cast<bool>(is_fixed[i]);
        nodes.push_back(std::move(node));
    }
    root["nodes"] = std::move(nodes);
    Json edges = Json::array();
    for (std::size_t i = 0; i < g.succ.size(); ++i)
        for (std::uint32_t t : g.succ[i]) edges.push_back(Json::array({i, t}));
    root["edges"] = std::move(edges);
    return root.dump() + "\n";
}

std::string graph_csv(const SpaceGraph& g) {
    std::string out = "source,target\n";
    for (std::size_t i = 0; i < g.succ.size(); ++i)
        for (std::uint32_t t : g.succ[i])
            out += quoted(to_literal(g.nodes[i])) + "," + quoted(to_literal(g.nodes[t])) + "\n";
    return out;
}

std::string graph_text(const SpaceGraph& g) {
    std::string out = "# model=" + std::string(to_string(g.model)) + " n=" + std::to_string(g.n) +
                      " mode=" + std::string(mode_name(g.mode)) +
                      " nodes=" + std::to_string(g.nodes.size()) +
                      " edges=" + std::to_string(g.edge_count) + "\n";
    std::vector<bool> is_fixed(g.nodes.size(), false);
    for (std::uint32_t i : g.fixed) is_fixed[i] = true;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        out += to_literal(g.nodes[i]);
        if (is_fixed[i]) out += " [fixed]";
        out += "\n";
    }
    for (std::size_t i = 0; i < g.succ.size(); ++i)
        for (std::uint32_t t : g.succ[i])
            out += to_literal(g.nodes[i]) + " -> " + to_literal(g.nodes[t]) + "\n";
    return out;
}

Json trace_record(std::size_t index, std::string_view phase, std::string_view direction,
                  const Configuration& c) {
    Json rec;
    rec["index"] = index;
    rec["phase"] = phase;
    rec["direction"] = direction;
    rec["heights"] = c.heights;
    rec["offset"] = c.origin;
    return rec;
}

std::string trace_json(const ProcedureTrace& trace) {
    std::string out = trace_record(0, "initial", "none", trace.initial).dump() + "\n";
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const TraceStep& s = trace.steps[i];
        const std::string_view dir =
            s.center_direction ? to_string(*s.center_direction) : std::string_view("none");
        out += trace_record(i + 1, to_string(s.phase), dir, s.config).dump() + "\n";
    }
    return out;
}

std::string trace_csv(const ProcedureTrace& trace) {
    std::string out = "index,phase,direction,heights,offset\n";
    const auto row = [&out](std::size_t index, std::string_view phase, std::string_view direction,
                            const Configuration& c) {
        out += std::to_string(index) + "," + std::string(phase) + "," + std::string(direction) +
               "," + quoted(to_literal(c.heights)) + "," + std::to_string(c.origin) + "\n";
    };
    row(0, "initial", "none", trace.initial);
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const TraceStep& s = trace.steps[i];
        row(i + 1, to_string(s.phase),
            s.center_direction ? to_string(*s.center_direction) : std::string_view("none"),
            s.config);
    }
    return out;
}

std::string trace_text(const ProcedureTrace& trace) {
    std::string out = to_literal(trace.initial) + "\n";
    for (const TraceStep& s : trace.steps) out += to_literal(s.config) + "\n";
    return out;
}

}  // namespace

ExportFormat parse_export_format(std::string_view name) {
    if (name == "dot") return ExportFormat::Dot;
    if (name == "json") return ExportFormat::Json;
    if (name == "csv") return ExportFormat::Csv;
    if (name == "text") return ExportFormat::Text;
    throw UnknownFormat("unknown export format \"" + std::string(name) + "\"");
}

std::string export_graph(const SpaceGraph& g, ExportFormat format) {
    switch (format) {
        case ExportFormat::Dot: return graph_dot(g);
        case ExportFormat::Json: return graph_json(g);
        case ExportFormat::Csv: return graph_csv(g);
        case ExportFormat::Text: return graph_text(g);
    }
    throw UnknownFormat("unknown export format");
}

std::string export_trace(const ProcedureTrace& trace, ExportFormat format) {
    switch (format) {
        case ExportFormat::Json: return trace_json(trace);
        case ExportFormat::Csv: return trace_csv(trace);
        case ExportFormat::Text: return trace_text(trace);
        case ExportFormat::Dot: break;
    }
    throw UnknownFormat("trace export supports json, csv, and text");
}

}  // namespace sandpiles
