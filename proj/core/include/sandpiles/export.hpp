#pragma once

#include <string>
#include <string_view>

#include "sandpiles/explore.hpp"
#include "sandpiles/procedures.hpp"

namespace sandpiles {

enum class ExportFormat { Dot, Json, Csv, Text };

ExportFormat parse_export_format(std::string_view name);  // throws UnknownFormat

// All emitters are deterministic: equal inputs give byte-identical output.
std::string export_graph(const SpaceGraph& g, ExportFormat format);

// Traces support Json (one record per line: index, phase, direction, heights,
// offset; record 0 is the initial configuration), Csv, and Text (one literal
// per line). Dot is rejected with UnknownFormat.
std::string export_trace(const ProcedureTrace& trace, ExportFormat format);

}  // namespace sandpiles
