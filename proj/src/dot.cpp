#include "ncsynth/dot.hpp"

#include <map>
#include <set>
#include <sstream>

#include "ncsynth/augment.hpp"
#include "ncsynth/formats.hpp"

namespace ncsynth {
namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const Network& net, const DotOptions& options) {
  std::ostringstream os;
  os << "digraph network {\n  rankdir=TB;\n  node [shape=circle];\n";
  for (std::uint32_t v = 0; v < net.node_count(); ++v) {
    NodeId id{v};
    os << "  " << quoted(net.label(id));
    if (id == net.source()) {
      os << " [shape=doublecircle, xlabel=\"S\"]";
    } else if (id == net.t1()) {
      os << " [shape=doublecircle, xlabel=\"T1\"]";
    } else if (id == net.t2()) {
      os << " [shape=doublecircle, xlabel=\"T2\"]";
    }
    os << ";\n";
  }

  std::map<EdgeId, std::string> route_of;
  if (const TransferPlan* plan = options.plan) {
    for (const auto& r : plan->x1_routes) {
      for (EdgeId e : r.edges) route_of[e] = "X1";
    }
    for (const auto& r : plan->x2_routes) {
      for (EdgeId e : r.edges) route_of[e] = "X2";
    }
  }
  for (const Edge& e : net.edges()) {
    os << "  " << quoted(net.label(e.tail)) << " -> " << quoted(net.label(e.head));
    std::string label = "e" + std::to_string(e.id.value);
    std::string style;
    if (auto it = route_of.find(e.id); it != route_of.end()) {
      label += " " + it->second;
      style = it->second == "X1" ? ", color=blue, penwidth=2" : ", color=darkorange, penwidth=2";
    } else if (options.plan) {
      const auto& global = options.plan->multicast.global;
      if (auto g = global.find(e.id); g != global.end()) {
        label += " [";
        for (std::size_t i = 0; i < g->second.size(); ++i) {
          if (i) label += ",";
          label += hex(g->second[i], options.plan->multicast.field.bits());
        }
        label += "]";
        style = ", color=purple";
      }
    }
    os << " [label=" << quoted(label) << style << "];\n";
  }

  if (options.augmented) {
    AugmentedNetwork aug = build_augmented(net, *options.augmented);
    for (NodeId v : {aug.t1p, aug.t2p, aug.y1, aug.y2}) {
      os << "  " << quoted(aug.net.label(v)) << " [shape=box, style=dashed];\n";
    }
    std::map<std::pair<NodeId, NodeId>, int> bundles;
    std::vector<std::pair<NodeId, NodeId>> order;
    for (EdgeId id : aug.virtual_edge_ids) {
      const Edge& e = aug.net.edge(id);
      auto key = std::make_pair(e.tail, e.head);
      if (bundles[key]++ == 0) order.push_back(key);
    }
    for (const auto& key : order) {
      os << "  " << quoted(aug.net.label(key.first)) << " -> " << quoted(aug.net.label(key.second))
         << " [style=dashed, label=\"cap " << bundles[key] << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace ncsynth
