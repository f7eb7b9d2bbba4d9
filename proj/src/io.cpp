#include "halinbox/io.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include "json.hpp"
#include <sstream>

namespace halinbox {

using nlohmann::json;

namespace {

// Shortest decimal after snapping to a micro-unit grid, so padding
// arithmetic does not leak binary noise into the SVG.
std::string num(double v) {
  double snapped = std::round(v * 1e6) / 1e6;
  if (snapped == 0) snapped = 0;  // no "-0"
  return fmt::format("{}", snapped);
}

HalinError syntax_error(const std::string& what) {
  return HalinError(ErrorCode::SyntaxError, what);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    std::size_t offset = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
    std::size_t line = 1 + static_cast<std::size_t>(
                               std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
    std::size_t line_start = text.rfind('\n', offset == 0 ? 0 : offset - 1);
    std::size_t column = line_start == std::string_view::npos || offset == 0
                             ? offset + 1
                             : offset - line_start;
    throw syntax_error(fmt::format("line {}, column {}: {}", line, column, e.what()));
  }
}

const json& require(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw syntax_error(fmt::format("missing key \"{}\"", key));
  return *it;
}

std::string quoted(const std::string& s) { return json(s).dump(); }

std::string id_list(const std::vector<VertexId>& ids) {
  std::string out = "[";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ", ";
    out += quoted(ids[i]);
  }
  return out + "]";
}

std::string interval_json(const Interval& iv) {
  return "[" + iv.lo.to_decimal() + ", " + iv.hi.to_decimal() + "]";
}

Half json_half(const json& value, const std::string& where) {
  if (value.is_number_integer()) return Half::whole(value.get<std::int64_t>());
  if (value.is_number_float()) {
    double twice = value.get<double>() * 2.0;
    if (std::isfinite(twice) && twice == std::nearbyint(twice) && std::fabs(twice) < 9.0e15) {
      return Half::from_halves(static_cast<std::int64_t>(twice));
    }
  }
  throw syntax_error(where + ": endpoint is not an exact half-integer");
}

Interval json_interval(const json& value, const std::string& where) {
  if (!value.is_array() || value.size() != 2) {
    throw syntax_error(where + ": expected [lo, hi]");
  }
  Interval iv{json_half(value[0], where), json_half(value[1], where)};
  if (iv.hi < iv.lo) throw syntax_error(where + ": lo > hi");
  return iv;
}

}  // namespace

OutputFormat parse_format(std::string_view name) {
  if (name.empty() || name == "json" || name == "structured") return OutputFormat::Structured;
  if (name == "svg") return OutputFormat::Svg;
  if (name == "dot") return OutputFormat::Dot;
  throw std::invalid_argument("unknown output format '" + std::string(name) + "'");
}

HalinInstance parse_instance(std::string_view text) {
  json doc = parse_json(text);
  if (!doc.is_object()) throw syntax_error("top level must be an object");

  const json& edges_json = require(doc, "tree_edges");
  const json& cycle_json = require(doc, "cycle");
  if (!edges_json.is_array()) throw syntax_error("\"tree_edges\" must be a list");
  if (!cycle_json.is_array()) throw syntax_error("\"cycle\" must be a list");

  std::vector<Edge> edges;
  edges.reserve(edges_json.size());
  for (std::size_t i = 0; i < edges_json.size(); ++i) {
    const json& e = edges_json[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
      throw syntax_error(fmt::format("tree_edges[{}] must be a pair of strings", i));
    }
    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  std::vector<VertexId> cycle;
  cycle.reserve(cycle_json.size());
  for (std::size_t i = 0; i < cycle_json.size(); ++i) {
    if (!cycle_json[i].is_string()) throw syntax_error(fmt::format("cycle[{}] must be a string", i));
    cycle.push_back(cycle_json[i].get<std::string>());
  }
  bool strict = false;
  if (auto it = doc.find("strict"); it != doc.end()) {
    if (!it->is_boolean()) throw syntax_error("\"strict\" must be a boolean");
    strict = it->get<bool>();
  }
  return validate_instance(std::move(edges), std::move(cycle), strict);
}

std::string serialize_instance(const HalinInstance& inst) {
  std::string out = "{\n  \"tree_edges\": [";
  const auto& edges = inst.tree_edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out += i ? ",\n    " : "\n    ";
    out += "[" + quoted(edges[i].first) + ", " + quoted(edges[i].second) + "]";
  }
  out += edges.empty() ? "],\n" : "\n  ],\n";
  out += "  \"cycle\": " + id_list(inst.cycle()) + ",\n";
  out += std::string("  \"strict\": ") + (inst.strict() ? "true" : "false") + "\n}\n";
  return out;
}

std::string representation_to_json(const BoxRepresentation& rep) {
  std::string out = "{\n";
  out += fmt::format("  \"construction_kind\": \"{}\",\n", to_string(rep.kind));
  out += fmt::format("  \"dimension\": {},\n", rep.dimension);
  if (rep.special_vertex) out += "  \"special_vertex\": " + quoted(*rep.special_vertex) + ",\n";
  if (rep.root) out += "  \"root\": " + quoted(*rep.root) + ",\n";
  out += "  \"leaf_order\": " + id_list(rep.leaf_order) + ",\n";
  out += "  \"boxes\": [";
  for (std::size_t i = 0; i < rep.vertices.size(); ++i) {
    out += i ? ",\n    " : "\n    ";
    out += "{\"id\": " + quoted(rep.vertices[i]) + ", \"x\": " + interval_json(rep.boxes[i].x);
    if (rep.dimension == 2) out += ", \"y\": " + interval_json(rep.boxes[i].y);
    out += "}";
  }
  out += rep.vertices.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

BoxRepresentation parse_representation(std::string_view text) {
  json doc = parse_json(text);
  if (!doc.is_object()) throw syntax_error("top level must be an object");
  BoxRepresentation rep;

  const json& kind = require(doc, "construction_kind");
  if (kind == "General") rep.kind = InstanceKind::General;
  else if (kind == "Wheel") rep.kind = InstanceKind::Wheel;
  else if (kind == "K4") rep.kind = InstanceKind::K4;
  else throw syntax_error("unknown construction_kind");

  const json& dim = require(doc, "dimension");
  if (dim != 1 && dim != 2) throw syntax_error("dimension must be 1 or 2");
  rep.dimension = dim.get<int>();

  if (auto it = doc.find("special_vertex"); it != doc.end() && it->is_string()) {
    rep.special_vertex = it->get<std::string>();
  }
  if (auto it = doc.find("root"); it != doc.end() && it->is_string()) {
    rep.root = it->get<std::string>();
  }
  if (auto it = doc.find("leaf_order"); it != doc.end()) {
    if (!it->is_array()) throw syntax_error("\"leaf_order\" must be a list");
    for (const auto& id : *it) {
      if (!id.is_string()) throw syntax_error("\"leaf_order\" entries must be strings");
      rep.leaf_order.push_back(id.get<std::string>());
    }
  }

  const json& boxes = require(doc, "boxes");
  if (!boxes.is_array()) throw syntax_error("\"boxes\" must be a list");
  std::vector<std::pair<VertexId, Box>> records;
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    const json& b = boxes[i];
    std::string where = fmt::format("boxes[{}]", i);
    if (!b.is_object()) throw syntax_error(where + " must be an object");
    const json& id = require(b, "id");
    if (!id.is_string()) throw syntax_error(where + ".id must be a string");
    Box box{json_interval(require(b, "x"), where + ".x"), interval(0, 0)};
    if (rep.dimension == 2) box.y = json_interval(require(b, "y"), where + ".y");
    records.emplace_back(id.get<std::string>(), box);
  }
  std::sort(records.begin(), records.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < records.size(); ++i) {
    if (records[i].first == records[i - 1].first) {
      throw syntax_error("duplicate box for '" + records[i].first + "'");
    }
  }
  for (auto& [id, box] : records) {
    rep.vertices.push_back(std::move(id));
    rep.boxes.push_back(box);
  }
  return rep;
}

std::string representation_to_svg(const BoxRepresentation& rep) {
  constexpr double kScale = 40.0;  // px per unit
  constexpr double kBar = 0.25;
  constexpr double kRowPitch = 0.5;
  static constexpr const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                             "#9467bd", "#8c564b", "#e377c2", "#17becf"};

  struct Rect {
    double x0, x1, y0, y1;
  };
  std::vector<Rect> rects;
  rects.reserve(rep.boxes.size());
  for (std::size_t i = 0; i < rep.boxes.size(); ++i) {
    const Box& b = rep.boxes[i];
    Rect r{b.x.lo.to_double(), b.x.hi.to_double(), b.y.lo.to_double(), b.y.hi.to_double()};
    if (rep.dimension == 1) {
      r.y0 = kRowPitch * static_cast<double>(i);
      r.y1 = r.y0 + kBar;
    }
    rects.push_back(r);
  }

  double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  if (!rects.empty()) {
    xmin = rects[0].x0, xmax = rects[0].x1, ymin = rects[0].y0, ymax = rects[0].y1;
    for (const auto& r : rects) {
      xmin = std::min(xmin, r.x0);
      xmax = std::max(xmax, r.x1);
      ymin = std::min(ymin, r.y0);
      ymax = std::max(ymax, r.y1);
    }
  }
  double padx = 0.05 * std::max(xmax - xmin, 1.0);
  double pady = 0.05 * std::max(ymax - ymin, 1.0);
  double left = xmin - padx;
  double top = ymax + pady;
  double width = (xmax - xmin) + 2 * padx;
  double height = (ymax - ymin) + 2 * pady;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" "
      "viewBox=\"{} {} {} {}\">\n",
      num(width * kScale), num(height * kScale), num(left), 0, num(width), num(height));
  out << fmt::format("  <!-- box space (x, y) maps to screen (x, {} - y) -->\n", num(top));
  for (std::size_t i = 0; i < rects.size(); ++i) {
    const Rect& r = rects[i];
    const char* color = kPalette[i % std::size(kPalette)];
    std::string label = json(rep.vertices[i]).dump();
    label = label.substr(1, label.size() - 2);
    std::string escaped;
    for (char c : label) {
      switch (c) {
        case '<': escaped += "&lt;"; break;
        case '>': escaped += "&gt;"; break;
        case '&': escaped += "&amp;"; break;
        default: escaped += c;
      }
    }
    out << fmt::format(
        "  <rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{}\" fill-opacity=\"0.15\" "
        "stroke=\"{}\" stroke-width=\"0.04\"/>\n",
        num(r.x0), num(top - r.y1), num(r.x1 - r.x0), num(r.y1 - r.y0), color, color);
    out << fmt::format(
        "  <text x=\"{}\" y=\"{}\" font-size=\"0.3\" font-family=\"sans-serif\" fill=\"{}\">{}</text>\n",
        num(r.x0 + 0.05), num(top - r.y1 + 0.3), color, escaped);
  }
  out << "</svg>\n";
  return out.str();
}

std::string graph_to_dot(const Graph& g) {
  std::string out = "graph G {\n";
  for (const auto& v : g.vertices()) out += "  " + quoted(v) + ";\n";
  for (const auto& [a, b] : g.edges()) out += "  " + quoted(a) + " -- " + quoted(b) + ";\n";
  return out + "}\n";
}

std::string emit_representation(const HalinInstance& inst, const BoxRepresentation& rep,
                                OutputFormat format) {
  switch (format) {
    case OutputFormat::Structured: return representation_to_json(rep);
    case OutputFormat::Svg: return representation_to_svg(rep);
    case OutputFormat::Dot: return graph_to_dot(compose_graph(inst));
  }
  return {};
}

}  // namespace halinbox
