// Copyright 2026 The QADL Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qadl/render/arch.hpp"

#include <charconv>
#include <unordered_map>

namespace qadl::render {

using nlohmann::json;

namespace {

json op_records(const ir::OpList& ops, const ir::CircuitIR& ir) {
  json out = json::array();
  for (const ir::IROp& op : ops) {
    json rec;
    if (const auto* g = std::get_if<ir::GateOp>(&op.op)) {
      rec["op"] = "gate";
      rec["gate"] = std::string(ir::canonical_name(g->kind.type));
      if (g->kind.type == ir::GateType::CRZ) {
        rec["params"] = json::array({g->kind.theta});
      } else if (g->kind.type == ir::GateType::GroverOracle) {
        rec["params"] = json::array({g->kind.marked});
      }
      json qubits = json::array();
      for (int q : g->qubits) qubits.push_back(ir.qubit_names[q]);
      rec["qubits"] = std::move(qubits);
    } else if (const auto* m = std::get_if<ir::MeasureOp>(&op.op)) {
      rec["op"] = "measure";
      rec["qubits"] = json::array({ir.qubit_names[m->qubit]});
      rec["cbit"] = ir.cbit_names[m->cbit];
    } else {
      const auto& c = std::get<ir::CondBlock>(op.op);
      rec["op"] = "if";
      rec["cbit"] = ir.cbit_names[c.cbit];
      rec["expected"] = c.expected;
      rec["body"] = op_records(c.body, ir);
    }
    out.push_back(std::move(rec));
  }
  return out;
}

[[noreturn]] void malformed(const std::string& path, const std::string& what) {
  throw ArchError(ArchError::Kind::MalformedDocument, path,
                  "malformed architecture description at " + path + ": " + what);
}

class Importer {
 public:
  explicit Importer(const json& doc) : doc_(doc) {}

  ir::CircuitIR run() {
    if (!doc_.is_object()) malformed("/", "document must be a JSON object");
    check_version();
    ir_.name = string_at(doc_, "circuit", "");
    names("qubits", ir_.qubit_names, qubits_);
    if (ir_.qubit_names.size() > static_cast<std::size_t>(ir::kMaxQubits)) {
      malformed("/qubits", "more than " + std::to_string(ir::kMaxQubits) + " qubits");
    }
    ir_.n_qubits = static_cast<int>(ir_.qubit_names.size());
    names("cbits", ir_.cbit_names, cbits_);
    for (const std::string& c : ir_.cbit_names) {
      if (qubits_.contains(c)) malformed("/cbits", "'" + c + "' is also a qubit name");
    }
    ir_.ops = ops(member(doc_, "ops", "", json::value_t::array), "/ops");
    if (doc_.contains("flow") && !doc_["flow"].is_null()) flow(doc_["flow"]);
    return std::move(ir_);
  }

 private:
  void check_version() {
    if (!doc_.contains("format_version") || !doc_["format_version"].is_string()) {
      malformed("/format_version", "missing format_version string");
    }
    const std::string v = doc_["format_version"];
    int major = -1;
    int minor = -1;
    int patch = -1;
    const char* p = v.data();
    const char* end = v.data() + v.size();
    auto part = [&](int& out, bool last) {
      auto r = std::from_chars(p, end, out);
      if (r.ec != std::errc()) return false;
      p = r.ptr;
      if (last) return p == end;
      if (p == end || *p != '.') return false;
      ++p;
      return true;
    };
    if (!part(major, false) || !part(minor, false) || !part(patch, true)) {
      malformed("/format_version", "'" + v + "' is not a semantic version");
    }
    const int supported = kArchFormatVersion[0] - '0';
    if (major != supported) {
      throw ArchError(ArchError::Kind::UnsupportedVersion, "/format_version",
                      "unsupported architecture description version " + v +
                          " (supported: " + std::string(kArchFormatVersion) + ")");
    }
  }

  static const json& member(const json& obj, const char* key, const std::string& path,
                            json::value_t type) {
    const std::string where = path + "/" + key;
    if (!obj.contains(key)) malformed(where, "missing field");
    const json& v = obj[key];
    if (v.type() != type &&
        !(type == json::value_t::number_float && v.is_number())) {
      malformed(where, std::string("expected ") + json(type).type_name() +
                           ", found " + v.type_name());
    }
    return v;
  }

  static std::string string_at(const json& obj, const char* key, const std::string& path) {
    return member(obj, key, path, json::value_t::string).get<std::string>();
  }

  void names(const char* key, std::vector<std::string>& out,
             std::unordered_map<std::string, int>& index) {
    const json& arr = member(doc_, key, "", json::value_t::array);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string path = std::string("/") + key + "/" + std::to_string(i);
      if (!arr[i].is_string()) malformed(path, "expected string");
      const std::string name = arr[i];
      if (!index.emplace(name, static_cast<int>(out.size())).second) {
        malformed(path, "duplicate name '" + name + "'");
      }
      out.push_back(name);
    }
  }

  int lookup(const std::unordered_map<std::string, int>& index, const json& v,
             const std::string& path) {
    if (!v.is_string()) malformed(path, "expected a name");
    auto it = index.find(v.get<std::string>());
    if (it == index.end()) malformed(path, "unknown name '" + v.get<std::string>() + "'");
    return it->second;
  }

  int bit_value(const json& obj, const std::string& path) {
    if (!obj.contains("expected")) malformed(path + "/expected", "missing field");
    const json& v = obj["expected"];
    if (!v.is_number_integer() || (v.get<long long>() != 0 && v.get<long long>() != 1)) {
      malformed(path + "/expected", "must be 0 or 1");
    }
    return v.get<int>();
  }

  ir::OpList ops(const json& arr, const std::string& path) {
    ir::OpList out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      out.push_back(op(arr[i], path + "/" + std::to_string(i)));
    }
    return out;
  }

  ir::IROp op(const json& rec, const std::string& path) {
    if (!rec.is_object()) malformed(path, "expected an operation record");
    const std::string kind = string_at(rec, "op", path);
    if (kind == "gate") return gate(rec, path);
    if (kind == "measure") {
      const json& qs = member(rec, "qubits", path, json::value_t::array);
      if (qs.size() != 1) malformed(path + "/qubits", "measure takes one qubit");
      ir::MeasureOp m;
      m.qubit = lookup(qubits_, qs[0], path + "/qubits/0");
      m.cbit = lookup(cbits_, member(rec, "cbit", path, json::value_t::string),
                      path + "/cbit");
      return ir::IROp{m, {}};
    }
    if (kind == "if") {
      ir::CondBlock c;
      c.cbit = lookup(cbits_, member(rec, "cbit", path, json::value_t::string),
                      path + "/cbit");
      c.expected = bit_value(rec, path);
      c.body = ops(member(rec, "body", path, json::value_t::array), path + "/body");
      return ir::IROp{std::move(c), {}};
    }
    malformed(path + "/op", "unknown operation '" + kind + "'");
  }

  ir::IROp gate(const json& rec, const std::string& path) {
    const std::string name = string_at(rec, "gate", path);
    auto type = ir::resolve_gate(name);
    if (!type) malformed(path + "/gate", "unknown gate '" + name + "'");
    ir::GateOp g;
    g.kind.type = *type;
    const json& qs = member(rec, "qubits", path, json::value_t::array);
    for (std::size_t i = 0; i < qs.size(); ++i) {
      g.qubits.push_back(lookup(qubits_, qs[i], path + "/qubits/" + std::to_string(i)));
    }
    const json empty = json::array();
    const json& params = rec.contains("params") ? rec["params"] : empty;
    if (!params.is_array()) malformed(path + "/params", "expected array");
    if (*type == ir::GateType::CRZ) {
      if (params.size() != 1 || !params[0].is_number()) {
        malformed(path + "/params", "CRZ takes one numeric angle");
      }
      g.kind.theta = params[0].get<double>();
    } else if (*type == ir::GateType::GroverOracle) {
      if (params.size() != 1 || !params[0].is_string()) {
        malformed(path + "/params", "GroverOracle takes one bitstring");
      }
      g.kind.marked = params[0].get<std::string>();
    } else if (!params.empty()) {
      malformed(path + "/params", "gate " + name + " takes no parameters");
    }
    if (auto problem = ir::check_gate(g.kind, g.qubits, ir_.n_qubits)) {
      malformed(path, *problem);
    }
    return ir::IROp{std::move(g), {}};
  }

  void flow(const json& f) {
    if (!f.is_object()) malformed("/flow", "expected object");
    ir::FlowGraph graph;
    graph.start = string_at(f, "start", "/flow");
    const json& nodes = member(f, "nodes", "/flow", json::value_t::array);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const std::string path = "/flow/nodes/" + std::to_string(i);
      if (!nodes[i].is_object()) malformed(path, "expected object");
      ir::FlowNode node;
      node.name = string_at(nodes[i], "name", path);
      if (graph.find(node.name)) malformed(path + "/name", "duplicate node");
      node.ops = ops(member(nodes[i], "ops", path, json::value_t::array), path + "/ops");
      graph.nodes.push_back(std::move(node));
    }
    const json& edges = member(f, "edges", "/flow", json::value_t::array);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const std::string path = "/flow/edges/" + std::to_string(i);
      if (!edges[i].is_object()) malformed(path, "expected object");
      ir::FlowEdge e;
      e.from = string_at(edges[i], "from", path);
      e.to = string_at(edges[i], "to", path);
      if (edges[i].contains("when") && !edges[i]["when"].is_null()) {
        const json& w = edges[i]["when"];
        if (!w.is_object()) malformed(path + "/when", "expected object");
        ir::EdgeGuard g;
        g.cbit = lookup(cbits_, member(w, "cbit", path + "/when", json::value_t::string),
                        path + "/when/cbit");
        g.expected = bit_value(w, path + "/when");
        e.guard = g;
      }
      graph.edges.push_back(std::move(e));
    }
    Diagnostics problems = ir::validate_flow(graph);
    if (!problems.empty()) malformed("/flow", problems.front().message);
    ir_.flow = std::move(graph);
  }

  const json& doc_;
  ir::CircuitIR ir_;
  std::unordered_map<std::string, int> qubits_;
  std::unordered_map<std::string, int> cbits_;
};

}  // namespace

json export_description(const ir::CircuitIR& ir) {
  json doc;
  doc["format_version"] = std::string(kArchFormatVersion);
  doc["circuit"] = ir.name;
  doc["qubits"] = ir.qubit_names;
  doc["cbits"] = ir.cbit_names;
  doc["ops"] = op_records(ir.ops, ir);
  if (ir.flow) {
    json flow;
    flow["start"] = ir.flow->start;
    flow["nodes"] = json::array();
    for (const ir::FlowNode& n : ir.flow->nodes) {
      flow["nodes"].push_back({{"name", n.name}, {"ops", op_records(n.ops, ir)}});
    }
    flow["edges"] = json::array();
    for (const ir::FlowEdge& e : ir.flow->edges) {
      json edge{{"from", e.from}, {"to", e.to}};
      if (e.guard) {
        edge["when"] = {{"cbit", ir.cbit_names[e.guard->cbit]},
                        {"expected", e.guard->expected}};
      }
      flow["edges"].push_back(std::move(edge));
    }
    doc["flow"] = std::move(flow);
    doc["extensions"] = json::array({"flow"});
  }
  return doc;
}

std::string export_description_text(const ir::CircuitIR& ir) {
  return export_description(ir).dump(2) + "\n";
}

ir::CircuitIR import_description(const json& document) {
  return Importer(document).run();
}

ir::CircuitIR import_description_text(std::string_view text) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) malformed("/", "not valid JSON");
  return import_description(doc);
}

}  // namespace qadl::render
