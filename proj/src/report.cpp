#include "knotalt/report.hpp"

#include <sstream>

namespace knotalt {

using nlohmann::json;
using nlohmann::ordered_json;

Record make_record(const Analysis& a, CheckSet checks) {
  Record r;
  r.name = a.name;
  r.crossings = a.diagram.crossing_count();
  r.components = a.diagram.map.pd().components;
  r.circles = a.seifert.circle_count();
  r.spaces = a.seifert.space_count();
  r.outer_dart = a.diagram.outer_dart;
  r.outer_region = a.diagram.outer_region;
  for (const auto& c : a.seifert.circles) r.circle_heights.push_back(c.height);
  for (const auto& s : a.seifert.spaces) r.space_heights.push_back(s.height);
  const auto& v = a.verdict;
  if (checks != CheckSet::Alternative) {
    r.homogeneous = v.homogeneous;
    r.block_witness = v.block_witness;
  }
  if (checks != CheckSet::Homogeneous) {
    r.alternative = v.alternative;
    r.methods = v.methods;
    r.space_witness = v.space_witness;
    r.spatial_witness = v.spatial_witness;
    r.height_witness = v.height_witness;
  }
  return r;
}

Record error_record(std::string name, std::string source, ErrorKind kind, std::string message) {
  Record r;
  r.name = std::move(name);
  r.source = std::move(source);
  r.error = ReportError{kind, std::move(message)};
  return r;
}

Summary summarize(const std::vector<Record>& records) {
  Summary s;
  for (const auto& r : records) {
    ++s.diagrams;
    if (r.error) {
      ++s.errors;
      continue;
    }
    const bool alt = r.alternative.value_or(false);
    const bool hom = r.homogeneous.value_or(false);
    s.alternative += alt;
    s.homogeneous += hom;
    s.neither += r.alternative.has_value() && r.homogeneous.has_value() && !alt && !hom;
  }
  return s;
}

namespace {

std::string_view kind_name(ErrorKind k) { return k == ErrorKind::Input ? "input" : "consistency"; }

ordered_json witness_json(const ComponentWitness& w) {
  ordered_json j;
  j["height_index"] = w.height_index;
  j["vertices"] = w.vertices;
  j["first"] = w.first;
  j["conflicting"] = w.conflicting;
  return j;
}

ComponentWitness component_witness(const json& j) {
  return ComponentWitness{j.at("height_index").get<int>(), j.at("vertices").get<std::vector<int>>(),
                          j.at("first").get<int>(), j.at("conflicting").get<int>()};
}

template <typename T>
std::optional<T> optional_field(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

ordered_json to_json(const Record& r) {
  ordered_json j;
  j["name"] = r.name;
  j["source"] = r.source;
  if (r.error) {
    j["error"] = {{"kind", kind_name(r.error->kind)}, {"message", r.error->message}};
    return j;
  }
  j["crossings"] = r.crossings;
  j["components"] = r.components;
  j["circles"] = r.circles;
  j["spaces"] = r.spaces;
  j["outer_dart"] = r.outer_dart ? ordered_json(*r.outer_dart) : ordered_json(nullptr);
  j["outer_region"] = r.outer_region;
  j["circle_heights"] = r.circle_heights;
  j["space_heights"] = r.space_heights;
  if (r.homogeneous) j["homogeneous"] = *r.homogeneous;
  if (r.alternative) j["alternative"] = *r.alternative;
  if (r.methods)
    j["methods"] = {{"spaces", r.methods->spaces},
                    {"spatial", r.methods->spatial},
                    {"heights", r.methods->heights}};
  ordered_json w = ordered_json::object();
  if (r.block_witness)
    w["block"] = {{"block", r.block_witness->block},
                  {"first", r.block_witness->first},
                  {"conflicting", r.block_witness->conflicting}};
  if (r.space_witness)
    w["space"] = {{"space", r.space_witness->space},
                  {"first", r.space_witness->first},
                  {"conflicting", r.space_witness->conflicting}};
  if (r.spatial_witness) w["spatial"] = witness_json(*r.spatial_witness);
  if (r.height_witness) w["heights"] = witness_json(*r.height_witness);
  if (!w.empty()) j["witnesses"] = w;
  if (r.milliseconds) j["milliseconds"] = *r.milliseconds;
  if (r.dot) j["dot"] = *r.dot;
  return j;
}

Record record_from_json(const json& j) {
  Record r;
  r.name = j.at("name").get<std::string>();
  r.source = j.value("source", std::string{});
  if (j.contains("error")) {
    const auto& e = j.at("error");
    const auto kind = e.at("kind").get<std::string>();
    if (kind != "input" && kind != "consistency") throw InputError("unknown error kind '" + kind + "'");
    r.error = ReportError{kind == "input" ? ErrorKind::Input : ErrorKind::Consistency,
                          e.at("message").get<std::string>()};
    return r;
  }
  r.crossings = j.at("crossings").get<int>();
  r.components = j.at("components").get<int>();
  r.circles = j.at("circles").get<int>();
  r.spaces = j.at("spaces").get<int>();
  r.outer_dart = optional_field<int>(j, "outer_dart");
  r.outer_region = j.at("outer_region").get<int>();
  r.circle_heights = j.at("circle_heights").get<std::vector<int>>();
  r.space_heights = j.at("space_heights").get<std::vector<int>>();
  r.homogeneous = optional_field<bool>(j, "homogeneous");
  r.alternative = optional_field<bool>(j, "alternative");
  if (j.contains("methods")) {
    const auto& m = j.at("methods");
    r.methods = MethodResults{m.at("spaces").get<bool>(), m.at("spatial").get<bool>(),
                              m.at("heights").get<bool>()};
  }
  if (j.contains("witnesses")) {
    const auto& w = j.at("witnesses");
    if (w.contains("block"))
      r.block_witness = BlockWitness{w["block"].at("block").get<int>(), w["block"].at("first").get<int>(),
                                     w["block"].at("conflicting").get<int>()};
    if (w.contains("space"))
      r.space_witness = SpaceWitness{w["space"].at("space").get<int>(), w["space"].at("first").get<int>(),
                                     w["space"].at("conflicting").get<int>()};
    if (w.contains("spatial")) r.spatial_witness = component_witness(w.at("spatial"));
    if (w.contains("heights")) r.height_witness = component_witness(w.at("heights"));
  }
  r.milliseconds = optional_field<double>(j, "milliseconds");
  r.dot = optional_field<std::string>(j, "dot");
  return r;
}

ordered_json to_json(const std::vector<Record>& records) {
  ordered_json j = ordered_json::array();
  for (const auto& r : records) j.push_back(to_json(r));
  return j;
}

std::vector<Record> records_from_json(const json& j) {
  if (!j.is_array()) throw InputError("report must be a JSON array");
  std::vector<Record> out;
  for (const auto& item : j) out.push_back(record_from_json(item));
  return out;
}

std::string to_text(const Record& r) {
  std::ostringstream os;
  os << r.name;
  if (!r.source.empty() && r.source != r.name) os << " (" << r.source << ")";
  if (r.error) {
    os << ": " << kind_name(r.error->kind) << " error: " << r.error->message << "\n";
    return os.str();
  }
  os << ": " << r.crossings << " crossings, " << r.components
     << (r.components == 1 ? " component, " : " components, ") << r.circles
     << (r.circles == 1 ? " circle, " : " circles, ") << r.spaces << " spaces\n";
  os << "  outer region " << r.outer_region;
  if (r.outer_dart) os << " (corner of dart " << *r.outer_dart << ")";
  os << "\n  circle heights:";
  for (int h : r.circle_heights) os << ' ' << h;
  os << "\n";

  std::string verdict;
  if (r.alternative) verdict = "alternative: " + yes_no(*r.alternative);
  if (r.homogeneous) verdict += (verdict.empty() ? "" : ", ") + ("homogeneous: " + yes_no(*r.homogeneous));
  os << "  " << verdict << "\n";
  if (r.methods)
    os << "  by spaces: " << yes_no(r.methods->spaces) << ", by digraph: " << yes_no(r.methods->spatial)
       << ", by height subgraphs: " << yes_no(r.methods->heights) << "\n";
  if (r.block_witness)
    os << "  block " << r.block_witness->block << " mixes crossings " << r.block_witness->first
       << " and " << r.block_witness->conflicting << "\n";
  if (r.space_witness)
    os << "  space " << r.space_witness->space << " holds markers of crossings "
       << r.space_witness->first << " and " << r.space_witness->conflicting << "\n";
  if (r.spatial_witness)
    os << "  digraph component of r" << r.spatial_witness->vertices.front() << " mixes arcs "
       << r.spatial_witness->first << " and " << r.spatial_witness->conflicting << "\n";
  if (r.height_witness)
    os << "  G" << r.height_witness->height_index << " component of circle "
       << r.height_witness->vertices.front() << " mixes edges " << r.height_witness->first << " and "
       << r.height_witness->conflicting << "\n";
  if (r.milliseconds) os << "  time: " << *r.milliseconds << " ms\n";
  if (r.dot) os << *r.dot;
  return os.str();
}

std::string to_text(const Summary& s) {
  std::ostringstream os;
  os << "summary: " << s.diagrams << " diagrams, " << s.alternative << " alternative, "
     << s.homogeneous << " homogeneous, " << s.neither << " neither, " << s.errors << " errors\n";
  return os.str();
}

}  // namespace knotalt
