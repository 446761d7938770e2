#include "ncsynth/formats.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ncsynth/augment.hpp"
#include "ncsynth/errors.hpp"

namespace ncsynth {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) bad(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) bad(where.empty() ? key : where + "." + key, "missing");
  return *it;
}

std::string label_at(const json& v, const std::string& where) {
  if (!v.is_string()) bad(where, "expected a string label");
  auto s = v.get<std::string>();
  if (s.empty()) bad(where, "empty label");
  return s;
}

std::int64_t integer_at(const json& v, const std::string& where) {
  if (!v.is_number_integer()) bad(where, "expected an integer");
  return v.get<std::int64_t>();
}

std::uint32_t parse_hex(const json& v, const std::string& where) {
  if (!v.is_string()) bad(where, "expected a hex string");
  auto s = v.get<std::string>();
  if (s.size() < 3 || s.compare(0, 2, "0x") != 0) bad(where, "expected a 0x-prefixed hex string");
  std::size_t used = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(s.substr(2), &used, 16);
  } catch (const std::exception&) {
    bad(where, "malformed hex '" + s + "'");
  }
  if (used != s.size() - 2) bad(where, "malformed hex '" + s + "'");
  return static_cast<std::uint32_t>(value);
}

json path_json(const EdgePath& p) {
  json a = json::array();
  for (EdgeId e : p.edges) a.push_back(e.value);
  return a;
}

EdgePath path_from(const json& v, const std::string& where) {
  if (!v.is_array()) bad(where, "expected an array of edge ids");
  EdgePath p;
  for (std::size_t i = 0; i < v.size(); ++i) {
    auto id = integer_at(v[i], where + "[" + std::to_string(i) + "]");
    if (id < 0) bad(where, "negative edge id");
    p.edges.push_back(EdgeId{static_cast<std::uint32_t>(id)});
  }
  return p;
}

std::string input_name(const CodeInput& in) {
  return (in.kind == CodeInput::Kind::source_symbol ? "s" : "e") + std::to_string(in.index);
}

CodeInput input_from(const json& v, const std::string& where) {
  if (!v.is_string()) bad(where, "expected 's<k>' or 'e<id>'");
  auto s = v.get<std::string>();
  if (s.size() < 2 || (s[0] != 's' && s[0] != 'e') ||
      s.find_first_not_of("0123456789", 1) != std::string::npos) {
    bad(where, "expected 's<k>' or 'e<id>', got '" + s + "'");
  }
  auto index = static_cast<std::uint32_t>(std::stoul(s.substr(1)));
  return s[0] == 's' ? CodeInput::symbol(index) : CodeInput::from_edge(EdgeId{index});
}

}  // namespace

std::string hex(FieldElement x, unsigned bits) {
  const int digits = static_cast<int>((bits + 3) / 4);
  char buf[16];
  std::snprintf(buf, sizeof buf, "0x%0*x", digits, x.value);
  return buf;
}

json parse_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string() + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

Network network_from_json(const json& doc) {
  if (!doc.is_object()) bad("document", "expected a JSON object");
  const json& nodes = require(doc, "nodes", "");
  if (!nodes.is_array()) bad("nodes", "expected an array");
  if (nodes.empty()) bad("nodes", "network has no nodes");
  NetworkBuilder builder;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::string where = "nodes[" + std::to_string(i) + "]";
    auto label = label_at(nodes[i], where);
    if (label.starts_with(kReservedPrefix)) bad(where, "label '" + label + "' uses the reserved '__' prefix");
    try {
      builder.add_node(label);
    } catch (const Error& e) {
      bad(where, e.what());
    }
  }

  std::vector<WeightedEdge> weighted;
  if (auto it = doc.find("edges"); it != doc.end()) {
    if (!it->is_array()) bad("edges", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string where = "edges[" + std::to_string(i) + "]";
      const json& e = (*it)[i];
      WeightedEdge w;
      w.tail = label_at(require(e, "from", where), where + ".from");
      w.head = label_at(require(e, "to", where), where + ".to");
      if (auto cap = e.find("cap"); cap != e.end()) {
        w.capacity = integer_at(*cap, where + ".cap");
        if (w.capacity <= 0) bad(where + ".cap", "must be a positive integer");
      }
      for (const auto* end : {&w.tail, &w.head}) {
        try {
          builder.node(*end);
        } catch (const Error&) {
          bad(where, "unknown node '" + *end + "'");
        }
      }
      if (w.tail == w.head) bad(where, "self-loop on '" + w.tail + "'");
      weighted.push_back(std::move(w));
    }
  }
  for (const auto& e : expand_capacities(weighted)) builder.add_edge(e.tail, e.head);

  auto lookup = [&](const json& v, const std::string& where) {
    auto label = label_at(v, where);
    try {
      return builder.node(label);
    } catch (const Error&) {
      bad(where, "unknown node '" + label + "'");
    }
  };
  builder.set_source(lookup(require(doc, "source", ""), "source"));
  const json& terms = require(doc, "terminals", "");
  if (!terms.is_array() || terms.size() != 2) bad("terminals", "expected an array of two labels");
  builder.set_terminals(lookup(terms[0], "terminals[0]"), lookup(terms[1], "terminals[1]"));
  try {
    return builder.build();
  } catch (const Error& e) {
    bad("document", e.what());
  }
}

json network_to_json(const Network& net) {
  json doc;
  json nodes = json::array();
  for (std::uint32_t v = 0; v < net.node_count(); ++v) nodes.push_back(net.label(NodeId{v}));
  json edges = json::array();
  for (const Edge& e : net.edges()) edges.push_back({{"from", net.label(e.tail)}, {"to", net.label(e.head)}});
  doc["nodes"] = std::move(nodes);
  doc["edges"] = std::move(edges);
  doc["source"] = net.label(net.source());
  doc["terminals"] = {net.label(net.t1()), net.label(net.t2())};
  return doc;
}

Network load_network(const std::filesystem::path& path) {
  auto doc = parse_json_file(path);
  try {
    return network_from_json(doc);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

json plan_to_json(const TransferPlan& plan) {
  const MulticastCode& code = plan.multicast;
  const unsigned bits = code.field.bits();
  json doc;
  doc["format"] = "ncsynth-plan";
  doc["version"] = kPlanFormatVersion;
  doc["demand"] = {{"h0", plan.demand.h0}, {"h1", plan.demand.h1}, {"h2", plan.demand.h2}};
  doc["seed"] = plan.seed;
  doc["field"] = {{"name", code.field.name()},
                  {"bits", bits},
                  {"modulus", hex(FieldElement{code.field.modulus()}, bits + 1)}};
  doc["x1_routes"] = json::array();
  for (const auto& r : plan.x1_routes) doc["x1_routes"].push_back(path_json(r));
  doc["x2_routes"] = json::array();
  for (const auto& r : plan.x2_routes) doc["x2_routes"].push_back(path_json(r));

  doc["coding_order"] = json::array();
  for (EdgeId e : code.order) doc["coding_order"].push_back(e.value);
  json local = json::object();
  for (const auto& [e, terms] : code.local) {
    json a = json::array();
    for (const LocalTerm& t : terms) a.push_back({{"input", input_name(t.input)}, {"coeff", hex(t.coeff, bits)}});
    local[std::to_string(e.value)] = std::move(a);
  }
  doc["local_coefficients"] = std::move(local);
  json vectors = json::object();
  for (const auto& [e, v] : code.global) {
    json a = json::array();
    for (FieldElement x : v) a.push_back(hex(x, bits));
    vectors[std::to_string(e.value)] = std::move(a);
  }
  doc["coding_vectors"] = std::move(vectors);
  json decoders = json::object();
  const std::array<const char*, 2> names{"t1", "t2"};
  for (std::size_t t = 0; t < 2; ++t) {
    json inputs = json::array();
    for (EdgeId e : code.terminals[t].inputs) inputs.push_back(e.value);
    json matrix = json::array();
    for (const auto& row : code.terminals[t].decode) {
      json r = json::array();
      for (FieldElement x : row) r.push_back(hex(x, bits));
      matrix.push_back(std::move(r));
    }
    decoders[names[t]] = {{"inputs", std::move(inputs)}, {"matrix", std::move(matrix)}};
  }
  doc["decoders"] = std::move(decoders);
  return doc;
}

TransferPlan plan_from_json(const json& doc) {
  if (!doc.is_object()) bad("plan", "expected a JSON object");
  if (auto fmt = doc.find("format"); fmt == doc.end() || *fmt != "ncsynth-plan") bad("format", "not a plan file");
  auto version = integer_at(require(doc, "version", ""), "version");
  if (version != kPlanFormatVersion) bad("version", "unsupported plan version " + std::to_string(version));

  TransferPlan plan;
  const json& d = require(doc, "demand", "");
  plan.demand = {static_cast<int>(integer_at(require(d, "h0", "demand"), "demand.h0")),
                 static_cast<int>(integer_at(require(d, "h1", "demand"), "demand.h1")),
                 static_cast<int>(integer_at(require(d, "h2", "demand"), "demand.h2"))};
  try {
    plan.demand.validate();
  } catch (const Error& e) {
    bad("demand", e.what());
  }
  const json& seed = require(doc, "seed", "");
  if (!seed.is_number_unsigned() && !seed.is_number_integer()) bad("seed", "expected an integer");
  plan.seed = seed.get<std::uint64_t>();

  const json& field = require(doc, "field", "");
  auto bits = integer_at(require(field, "bits", "field"), "field.bits");
  auto modulus = parse_hex(require(field, "modulus", "field"), "field.modulus");
  if (bits < 1 || bits > static_cast<std::int64_t>(GaloisField::kMaxBits)) bad("field.bits", "unsupported size");
  MulticastCode& code = plan.multicast;
  try {
    code.field = GaloisField(static_cast<unsigned>(bits), modulus);
  } catch (const Error& e) {
    bad("field", e.what());
  }
  code.h0 = plan.demand.h0;

  for (const char* key : {"x1_routes", "x2_routes"}) {
    const json& routes = require(doc, key, "");
    if (!routes.is_array()) bad(key, "expected an array");
    auto& target = std::string(key) == "x1_routes" ? plan.x1_routes : plan.x2_routes;
    for (std::size_t i = 0; i < routes.size(); ++i) {
      target.push_back(path_from(routes[i], std::string(key) + "[" + std::to_string(i) + "]"));
    }
  }
  code.order = path_from(require(doc, "coding_order", ""), "coding_order").edges;

  auto element = [&](const json& v, const std::string& where) {
    FieldElement x{parse_hex(v, where)};
    if (!code.field.contains(x)) bad(where, "value outside " + code.field.name());
    return x;
  };
  auto edge_key = [](const std::string& k, const std::string& where) {
    if (k.empty() || k.find_first_not_of("0123456789") != std::string::npos) bad(where, "bad edge id key");
    return EdgeId{static_cast<std::uint32_t>(std::stoul(k))};
  };
  const json& local = require(doc, "local_coefficients", "");
  if (!local.is_object()) bad("local_coefficients", "expected an object");
  for (const auto& [k, terms] : local.items()) {
    const std::string where = "local_coefficients." + k;
    if (!terms.is_array()) bad(where, "expected an array");
    std::vector<LocalTerm> parsed;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const std::string w = where + "[" + std::to_string(i) + "]";
      parsed.push_back({input_from(require(terms[i], "input", w), w + ".input"),
                        element(require(terms[i], "coeff", w), w + ".coeff")});
    }
    code.local[edge_key(k, where)] = std::move(parsed);
  }
  const json& vectors = require(doc, "coding_vectors", "");
  if (!vectors.is_object()) bad("coding_vectors", "expected an object");
  for (const auto& [k, v] : vectors.items()) {
    const std::string where = "coding_vectors." + k;
    if (!v.is_array()) bad(where, "expected an array");
    CodingVector cv;
    for (std::size_t i = 0; i < v.size(); ++i) cv.push_back(element(v[i], where + "[" + std::to_string(i) + "]"));
    code.global[edge_key(k, where)] = std::move(cv);
  }
  const json& decoders = require(doc, "decoders", "");
  const std::array<const char*, 2> names{"t1", "t2"};
  for (std::size_t t = 0; t < 2; ++t) {
    const std::string where = std::string("decoders.") + names[t];
    const json& dec = require(decoders, names[t], "decoders");
    code.terminals[t].inputs = path_from(require(dec, "inputs", where), where + ".inputs").edges;
    const json& matrix = require(dec, "matrix", where);
    if (!matrix.is_array()) bad(where + ".matrix", "expected an array of rows");
    for (std::size_t i = 0; i < matrix.size(); ++i) {
      const std::string w = where + ".matrix[" + std::to_string(i) + "]";
      if (!matrix[i].is_array()) bad(w, "expected an array");
      std::vector<FieldElement> row;
      for (std::size_t j = 0; j < matrix[i].size(); ++j) row.push_back(element(matrix[i][j], w));
      code.terminals[t].decode.push_back(std::move(row));
    }
  }
  return plan;
}

TransferPlan load_plan(const std::filesystem::path& path) {
  auto doc = parse_json_file(path);
  try {
    return plan_from_json(doc);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::string dump_plan(const TransferPlan& plan) { return plan_to_json(plan).dump(2) + "\n"; }

std::string trace_to_jsonl(const Network& net, const std::string& pass, const ReroutingTrace& trace) {
  std::ostringstream os;
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    const RerouteStep& s = trace.steps[k];
    const Edge& shared = net.edge(s.shared_edge);
    json line = {{"pass", pass},
                 {"step", k},
                 {"green_path", s.green_path},
                 {"red_path", s.red_path},
                 {"shared_edge", s.shared_edge.value},
                 {"shared_edge_nodes", {net.label(shared.tail), net.label(shared.head)}},
                 {"prefix", path_json(s.prefix_swapped)}};
    os << line.dump() << '\n';
  }
  return os.str();
}

}  // namespace ncsynth
