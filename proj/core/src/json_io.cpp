#include "eincausal/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace eincausal {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) {
    throw std::invalid_argument("malformed JSON");
  }
  return j;
}

const json& require(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) {
    throw std::invalid_argument(std::string("missing JSON key \"") + key + '"');
  }
  return *it;
}

json spec_to_json(const GridSpec& spec) {
  json j;
  switch (spec.kind) {
    case GridSpec::Kind::circle:
      j["kind"] = "circle";
      j["n"] = spec.n;
      break;
    case GridSpec::Kind::icosphere:
      j["kind"] = "icosphere";
      j["subdivisions"] = spec.subdivisions;
      break;
    case GridSpec::Kind::custom: {
      j["kind"] = "custom";
      j["nodes"] = spec.nodes;
      json edges = json::array();
      for (const auto& [a, b] : spec.edges) edges.push_back({a, b});
      j["edges"] = std::move(edges);
      break;
    }
  }
  return j;
}

GridSpec spec_from(const json& j) {
  const std::string kind = require(j, "kind").get<std::string>();
  if (kind == "circle") {
    return GridSpec::circle(require(j, "n").get<int>());
  }
  if (kind == "icosphere") {
    return GridSpec::icosphere(require(j, "subdivisions").get<int>());
  }
  if (kind == "custom") {
    std::vector<std::vector<double>> nodes =
        require(j, "nodes").get<std::vector<std::vector<double>>>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : require(j, "edges")) {
      if (!e.is_array() || e.size() != 2) {
        throw std::invalid_argument("custom grid edge must be [i,j]");
      }
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return GridSpec::custom(std::move(nodes), std::move(edges));
  }
  throw std::invalid_argument("unknown grid kind \"" + kind + '"');
}

json region_to_json(const Region& region) {
  return json{{"interior", region.interior()}, {"boundary", region.boundary()}};
}

Region region_from(const json& j, std::shared_ptr<const SphereGrid> grid) {
  std::vector<int> interior = require(j, "interior").get<std::vector<int>>();
  if (j.contains("boundary")) {
    return Region(std::move(grid), std::move(interior),
                  j["boundary"].get<std::vector<int>>());
  }
  return Region(std::move(grid), std::move(interior));
}

FieldInfinity infinity_from(const json& j) {
  const std::string s = j.get<std::string>();
  if (s == "+") return FieldInfinity::plus;
  if (s == "-" || s == "−") return FieldInfinity::minus;
  throw std::invalid_argument("field \"inf\" must be \"+\" or \"-\"");
}

json field_body_to_json(const ScalarField& field) {
  json j;
  if (!field.is_finite()) {
    j["inf"] = field.infinity() == FieldInfinity::plus ? "+" : "-";
    return j;
  }
  j["values"] = field.interior_values();
  j["trace"] = field.boundary_trace();
  return j;
}

ScalarField field_body_from(const json& j, Region region) {
  if (j.contains("inf")) {
    return ScalarField::infinite(std::move(region), infinity_from(j["inf"]));
  }
  std::vector<double> values = require(j, "values").get<std::vector<double>>();
  std::vector<double> trace;
  if (j.contains("trace")) trace = j["trace"].get<std::vector<double>>();
  return ScalarField::finite(std::move(region), std::move(values),
                             std::move(trace));
}

json base_field_to_json(const BaseField& f) {
  json j;
  if (!f.is_finite()) {
    j["inf"] = f.inf == FieldInfinity::plus ? "+" : "-";
    return j;
  }
  j["values"] = f.values;
  j["trace"] = f.trace;
  return j;
}

BaseField base_field_from(const json& j) {
  BaseField f;
  if (j.contains("inf")) {
    f.inf = infinity_from(j["inf"]);
    return f;
  }
  f.values = require(j, "values").get<std::vector<double>>();
  if (j.contains("trace")) f.trace = j["trace"].get<std::vector<double>>();
  return f;
}

}  // namespace

std::string to_json(const GridSpec& spec) { return spec_to_json(spec).dump(); }

GridSpec grid_spec_from_json(const std::string& text) {
  return spec_from(parse(text));
}

std::string to_json(const CoverPoint& p) {
  return json{{"x", p.x.coords()}, {"t", p.t}}.dump();
}

CoverPoint cover_point_from_json(const std::string& text) {
  const json j = parse(text);
  return CoverPoint(UnitPoint(require(j, "x").get<std::vector<double>>()),
                    require(j, "t").get<double>());
}

std::string to_json(const ScalarField& field) {
  json j = field_body_to_json(field);
  j["region"] = region_to_json(field.region());
  return j.dump();
}

ScalarField field_from_json(const std::string& text,
                            std::shared_ptr<const SphereGrid> grid) {
  const json j = parse(text);
  Region region = region_from(require(j, "region"), std::move(grid));
  return field_body_from(j, std::move(region));
}

std::string to_json(const CausalDomain& dom) {
  json j;
  j["grid"] = spec_to_json(dom.region().grid().spec());
  j["region"] = region_to_json(dom.region());
  j["f_minus"] = field_body_to_json(dom.f_minus());
  j["f_plus"] = field_body_to_json(dom.f_plus());
  return j.dump();
}

CausalDomain domain_from_json(const std::string& text) {
  const json j = parse(text);
  auto grid = std::make_shared<const SphereGrid>(
      SphereGrid::build(spec_from(require(j, "grid"))));
  Region region = region_from(require(j, "region"), grid);
  ScalarField f_minus = field_body_from(require(j, "f_minus"), region);
  ScalarField f_plus = field_body_from(require(j, "f_plus"), std::move(region));
  return CausalDomain(std::move(f_minus), std::move(f_plus));
}

std::string to_json(const SurfaceGraph& s) {
  json j;
  j["grid"] = spec_to_json(s.region().grid().spec());
  j["region"] = region_to_json(s.region());
  j["h"] = field_body_to_json(s.h());
  return j.dump();
}

SurfaceGraph surface_from_json(const std::string& text) {
  const json j = parse(text);
  auto grid = std::make_shared<const SphereGrid>(
      SphereGrid::build(spec_from(require(j, "grid"))));
  Region region = region_from(require(j, "region"), std::move(grid));
  return SurfaceGraph(field_body_from(require(j, "h"), std::move(region)));
}

std::string to_json(const AchronalSet& set) {
  json sites = json::array();
  for (const Site& s : set.sites()) sites.push_back({s.node, s.value});
  return json{{"grid", spec_to_json(set.grid().spec())},
              {"sites", std::move(sites)}}
      .dump();
}

AchronalSet achronal_set_from_json(const std::string& text) {
  const json j = parse(text);
  auto grid = std::make_shared<const SphereGrid>(
      SphereGrid::build(spec_from(require(j, "grid"))));
  std::vector<Site> sites;
  for (const auto& s : require(j, "sites")) {
    if (!s.is_array() || s.size() != 2) {
      throw std::invalid_argument("achronal site must be [node, value]");
    }
    sites.push_back({s[0].get<int>(), s[1].get<double>()});
  }
  return AchronalSet(std::move(grid), std::move(sites));
}

std::string to_json(const ImmersedBase& base) {
  json nodes = json::array();
  for (int v = 0; v < base.size(); ++v) {
    nodes.push_back(json{{"image", base.image(v).coords()}});
  }
  json edges = json::array();
  for (int v = 0; v < base.size(); ++v) {
    for (const GraphEdge& e : base.adjacency()[static_cast<size_t>(v)]) {
      if (e.to > v) edges.push_back({v, e.to});
    }
  }
  return json{{"nodes", std::move(nodes)},
              {"edges", std::move(edges)},
              {"r_inj", base.r_inj()},
              {"truncated_ends", base.truncated_ends()}}
      .dump();
}

std::shared_ptr<const ImmersedBase> base_from_json(const std::string& text) {
  const json j = parse(text);
  std::vector<UnitPoint> images;
  for (const auto& n : require(j, "nodes")) {
    images.emplace_back(require(n, "image").get<std::vector<double>>());
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : require(j, "edges")) {
    if (!e.is_array() || e.size() != 2) {
      throw std::invalid_argument("base edge must be [i,j]");
    }
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  const double r_inj = require(j, "r_inj").get<double>();
  const bool truncated =
      j.contains("truncated_ends") && j["truncated_ends"].get<bool>();
  return std::make_shared<const ImmersedBase>(std::move(images),
                                              std::move(edges), r_inj,
                                              truncated);
}

std::string to_json(const BaseDomain& dom) {
  json j;
  j["region"] = json{{"interior", dom.region.interior()}};
  j["f_minus"] = base_field_to_json(dom.f_minus);
  j["f_plus"] = base_field_to_json(dom.f_plus);
  return j.dump();
}

BaseDomain base_domain_from_json(const std::string& text,
                                 std::shared_ptr<const ImmersedBase> base) {
  const json j = parse(text);
  BaseRegion region(std::move(base),
                    require(require(j, "region"), "interior").get<std::vector<int>>());
  BaseField f_minus = base_field_from(require(j, "f_minus"));
  BaseField f_plus = base_field_from(require(j, "f_plus"));
  auto check = [&](const BaseField& f, const char* which) {
    if (!f.is_finite()) return;
    if (f.values.size() != region.interior().size() ||
        f.trace.size() != region.boundary().size()) {
      throw std::invalid_argument(std::string(which) +
                                  ": value/trace sizes do not match region");
    }
  };
  check(f_minus, "f_minus");
  check(f_plus, "f_plus");
  return BaseDomain{std::move(region), std::move(f_minus), std::move(f_plus)};
}

std::string to_json(const EPoint& p) {
  return json{{"node", p.base_node}, {"t", p.t}}.dump();
}

EPoint epoint_from_json(const std::string& text) {
  const json j = parse(text);
  return EPoint{require(j, "node").get<int>(), require(j, "t").get<double>()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::invalid_argument("cannot read file: " + path);
  }
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::invalid_argument("cannot write file: " + path);
  }
  out << contents;
}

}  // namespace eincausal
