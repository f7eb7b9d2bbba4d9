#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "halinbox/embed.hpp"
#include "halinbox/instance.hpp"

namespace halinbox {

enum class OutputFormat { Structured, Svg, Dot };

/// "" / "json" / "structured", "svg", "dot". Throws std::invalid_argument.
OutputFormat parse_format(std::string_view name);

/// JSON object with "tree_edges" (list of pairs), "cycle" (list) and an
/// optional boolean "strict" (default false). Malformed documents raise
/// SyntaxError with line/column; structural problems raise the
/// validate_instance() errors.
HalinInstance parse_instance(std::string_view text);

/// Inverse of parse_instance(); always writes "strict".
std::string serialize_instance(const HalinInstance& inst);

/// Structured representation document. Endpoints are exact decimals.
std::string representation_to_json(const BoxRepresentation& rep);
BoxRepresentation parse_representation(std::string_view text);

/// One rectangle per vertex; y grows upward in box space and is flipped
/// to screen space by svg_y = top - y, with 5% padding around the
/// bounding box. One-dimensional representations draw each interval as a
/// bar of height 0.25, stacked 0.5 apart in vertex order.
std::string representation_to_svg(const BoxRepresentation& rep);

std::string graph_to_dot(const Graph& g);

/// Dispatches on `format`; the DOT form draws compose_graph(inst).
std::string emit_representation(const HalinInstance& inst, const BoxRepresentation& rep,
                                OutputFormat format);

}  // namespace halinbox
