// Copyright 2026 The Gridflow Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gridflow/instance_io.h"

#include <fstream>
#include <sstream>

#include "gridflow/error.h"

namespace gridflow {
namespace {

[[noreturn]] void ParseFailure(std::string_view text, size_t offset,
                               const std::string& message) {
  int line = 1;
  int column = 1;
  for (size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  throw Error(ErrorCode::kParseError, "line " + std::to_string(line) +
                                          ", column " + std::to_string(column) +
                                          ": " + message);
}

[[noreturn]] void SchemaFailure(const std::string& message) {
  throw Error(ErrorCode::kParseError, message);
}

Json ParseText(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // byte is 1-based and points just past the offending character.
    ParseFailure(text, e.byte == 0 ? 0 : e.byte - 1, e.what());
  }
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

const Json& Field(const Json& object, const char* key, const std::string& where) {
  if (!object.is_object() || !object.contains(key)) {
    SchemaFailure(where + ": missing \"" + key + "\"");
  }
  return object.at(key);
}

int64_t AsInt(const Json& value, const std::string& where) {
  if (!value.is_number_integer()) SchemaFailure(where + ": expected an integer");
  return value.get<int64_t>();
}

double AsNumber(const Json& value, const std::string& where) {
  if (!value.is_number()) SchemaFailure(where + ": expected a number");
  return value.get<double>();
}

Vertex AsVertex(const Json& value, const std::string& where) {
  if (!value.is_array() || value.size() != 2) {
    SchemaFailure(where + ": expected [row, col]");
  }
  return {static_cast<int>(AsInt(value[0], where)),
          static_cast<int>(AsInt(value[1], where))};
}

std::vector<double> AsNumbers(const Json& value, const std::string& where) {
  if (!value.is_array()) SchemaFailure(where + ": expected an array");
  std::vector<double> out;
  for (const Json& x : value) out.push_back(AsNumber(x, where));
  return out;
}

Json VertexJson(const Vertex& v) { return Json::array({v.row, v.col}); }

}  // namespace

Json CostToJson(const CostSpec& cost) {
  Json json;
  Json params = Json::object();
  switch (cost.kind()) {
    case CostSpec::Kind::kZero:
      json["kind"] = "zero";
      break;
    case CostSpec::Kind::kLinear:
      json["kind"] = "linear";
      params["slope"] = std::get<CostSpec::Linear>(cost.spec()).slope;
      break;
    case CostSpec::Kind::kFixedCharge: {
      const auto& c = std::get<CostSpec::FixedCharge>(cost.spec());
      json["kind"] = "fixed_charge";
      params["setup"] = c.setup;
      params["slope"] = c.slope;
      break;
    }
    case CostSpec::Kind::kPiecewiseConcave: {
      const auto& c = std::get<CostSpec::PiecewiseConcave>(cost.spec());
      json["kind"] = "piecewise_concave";
      params["breakpoints"] = c.breakpoints;
      params["slopes"] = c.slopes;
      break;
    }
    case CostSpec::Kind::kPower: {
      const auto& c = std::get<CostSpec::Power>(cost.spec());
      json["kind"] = "power";
      params["coeff"] = c.coeff;
      params["exponent"] = c.exponent;
      break;
    }
    case CostSpec::Kind::kOpaque:
      throw Error(ErrorCode::kInvalidArgument,
                  "opaque costs cannot be serialized");
  }
  json["params"] = std::move(params);
  return json;
}

CostSpec CostFromJson(const Json& json) {
  const std::string where = "cost";
  const Json& kind_json = Field(json, "kind", where);
  if (!kind_json.is_string()) SchemaFailure("cost.kind: expected a string");
  const std::string kind = kind_json.get<std::string>();
  const Json params = json.contains("params") ? json.at("params") : Json::object();
  auto number = [&](const char* key, double fallback) {
    return params.contains(key) ? AsNumber(params.at(key), "cost.params." +
                                                               std::string(key))
                                : fallback;
  };
  if (kind == "zero") return CostSpec::MakeZero();
  if (kind == "linear") return CostSpec::MakeLinear(number("slope", 0.0));
  if (kind == "fixed_charge") {
    return CostSpec::MakeFixedCharge(number("setup", 0.0), number("slope", 0.0));
  }
  if (kind == "piecewise_concave") {
    return CostSpec::MakePiecewiseConcave(
        AsNumbers(Field(params, "breakpoints", "cost.params"),
                  "cost.params.breakpoints"),
        AsNumbers(Field(params, "slopes", "cost.params"), "cost.params.slopes"));
  }
  if (kind == "power") {
    return CostSpec::MakePower(number("coeff", 1.0), number("exponent", 1.0));
  }
  SchemaFailure("cost.kind: unknown kind \"" + kind + "\"");
}

GridSpec ParseInstance(std::string_view text, double tolerance) {
  const Json json = ParseText(text);
  const int rows = static_cast<int>(AsInt(Field(json, "L", "instance"), "L"));
  const int cols = static_cast<int>(AsInt(Field(json, "T", "instance"), "T"));
  if (rows < 1 || cols < 1) {
    throw Error(ErrorCode::kInvalidArgument, "L and T must be at least 1");
  }
  GridBuilder builder(rows, cols);
  builder.SetConcavityTolerance(tolerance);
  const Json& supplies = Field(json, "supplies", "instance");
  if (!supplies.is_array() || static_cast<int>(supplies.size()) != rows) {
    SchemaFailure("supplies: expected " + std::to_string(rows) + " rows");
  }
  for (int l = 0; l < rows; ++l) {
    const Json& row = supplies[l];
    if (!row.is_array() || static_cast<int>(row.size()) != cols) {
      SchemaFailure("supplies[" + std::to_string(l) + "]: expected " +
                    std::to_string(cols) + " entries");
    }
    for (int t = 0; t < cols; ++t) {
      builder.SetSupply({l, t}, AsInt(row[t], "supplies"));
    }
  }
  if (json.contains("arcs")) {
    const Json& arcs = json.at("arcs");
    if (!arcs.is_array()) SchemaFailure("arcs: expected an array");
    for (size_t i = 0; i < arcs.size(); ++i) {
      const std::string where = "arcs[" + std::to_string(i) + "]";
      const Json& arc = arcs[i];
      const Vertex tail = AsVertex(Field(arc, "from", where), where + ".from");
      const Vertex head = AsVertex(Field(arc, "to", where), where + ".to");
      // Missing fields take the same defaults as omitted arcs.
      Capacity capacity = Capacity::Unbounded();
      if (arc.contains("capacity")) {
        const Json& cap = arc.at("capacity");
        if (!cap.is_string() || cap.get<std::string>() != "inf") {
          capacity = Capacity::Finite(AsInt(cap, where + ".capacity"));
        }
      }
      builder.SetCapacity(tail, head, capacity);
      builder.SetCost(tail, head,
                      arc.contains("cost") ? CostFromJson(arc.at("cost"))
                                           : CostSpec::MakeZero());
    }
  }
  return builder.Build();
}

GridSpec ReadInstanceFile(const std::string& path, double tolerance) {
  return ParseInstance(ReadFile(path), tolerance);
}

Json InstanceToJson(const GridSpec& grid) {
  Json json;
  json["L"] = grid.rows();
  json["T"] = grid.cols();
  Json supplies = Json::array();
  for (int l = 0; l < grid.rows(); ++l) {
    Json row = Json::array();
    for (int t = 0; t < grid.cols(); ++t) row.push_back(grid.supply(l, t));
    supplies.push_back(std::move(row));
  }
  json["supplies"] = std::move(supplies);
  Json arcs = Json::array();
  for (ArcId id = 0; id < grid.num_arcs(); ++id) {
    const Arc& a = grid.arc(id);
    Json arc;
    arc["from"] = VertexJson(a.tail);
    arc["to"] = VertexJson(a.head);
    const Capacity& cap = grid.capacity(id);
    if (cap.is_finite()) {
      arc["capacity"] = cap.value();
    } else {
      arc["capacity"] = "inf";
    }
    arc["cost"] = CostToJson(grid.cost(id));
    arcs.push_back(std::move(arc));
  }
  json["arcs"] = std::move(arcs);
  return json;
}

FlowAssignment ParseFlow(const GridSpec& grid, std::string_view text) {
  const Json json = ParseText(text);
  const Json& flows = Field(json, "flows", "flow file");
  if (!flows.is_array()) SchemaFailure("flows: expected an array");
  FlowAssignment flow = FlowAssignment::Zero(grid);
  for (size_t i = 0; i < flows.size(); ++i) {
    const std::string where = "flows[" + std::to_string(i) + "]";
    const Json& entry = flows[i];
    const Vertex tail = AsVertex(Field(entry, "from", where), where + ".from");
    const Vertex head = AsVertex(Field(entry, "to", where), where + ".to");
    const std::optional<ArcId> id = grid.FindArc(tail, head);
    if (!id) {
      throw Error(ErrorCode::kUnknownArc,
                  where + ": " + ToString(tail) + " -> " + ToString(head) +
                      " is not a grid arc");
    }
    flow[*id] = AsInt(Field(entry, "flow", where), where + ".flow");
  }
  return flow;
}

FlowAssignment ReadFlowFile(const GridSpec& grid, const std::string& path) {
  return ParseFlow(grid, ReadFile(path));
}

Json FlowToJson(const GridSpec& grid, const FlowAssignment& flow) {
  Json flows = Json::array();
  for (ArcId id = 0; id < grid.num_arcs(); ++id) {
    const Arc& a = grid.arc(id);
    Json entry;
    entry["from"] = VertexJson(a.tail);
    entry["to"] = VertexJson(a.head);
    entry["flow"] = flow[id];
    flows.push_back(std::move(entry));
  }
  Json json;
  json["flows"] = std::move(flows);
  return json;
}

std::string DumpJson(const Json& json) { return json.dump(2) + "\n"; }

}  // namespace gridflow
