#include "ncsynth/nccode.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "ncsynth/errors.hpp"

namespace ncsynth {

FieldElement random_element(const GaloisField& field, Rng& rng) {
  return {static_cast<std::uint32_t>(rng() & (field.size() - 1))};
}

CodeSupport select_support(const Network& g2, int h0) {
  CodeSupport support;
  if (h0 <= 0) return support;
  const NodeId s = g2.source();
  std::set<EdgeId> used;
  const std::array<NodeId, 2> terminals{g2.t1(), g2.t2()};
  for (std::size_t t = 0; t < 2; ++t) {
    auto flow = max_flow(g2, s, {terminals[t]});
    if (flow.value < h0) {
      throw InfeasibleResidualError("residual max-flow to '" + g2.label(terminals[t]) + "' is " +
                                    std::to_string(flow.value) + ", below h0 = " + std::to_string(h0));
    }
    auto paths = decompose_paths(g2, flow, s, terminals[t]);
    paths.resize(static_cast<std::size_t>(h0));
    for (const auto& p : paths) {
      used.insert(p.edges.begin(), p.edges.end());
      support.terminal_inputs[t].push_back(p.edges.back());
    }
  }

  // Kahn's algorithm over the support subgraph, smallest node id first.
  const std::size_t n = g2.node_count();
  std::vector<int> indegree(n, 0);
  std::vector<std::vector<EdgeId>> out(n);
  for (EdgeId e : used) {
    const Edge& edge = g2.edge(e);
    ++indegree[edge.head.value];
    out[edge.tail.value].push_back(e);
  }
  std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> ready;
  for (std::uint32_t v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push(v);
  }
  while (!ready.empty()) {
    std::uint32_t v = ready.top();
    ready.pop();
    for (EdgeId e : out[v]) {
      support.edges.push_back(e);
      if (--indegree[g2.edge(e).head.value] == 0) ready.push(g2.edge(e).head.value);
    }
  }
  if (support.edges.size() != used.size()) {
    throw CyclicResidualError("coded part of the residual network contains a directed cycle");
  }
  return support;
}

std::optional<MulticastCode> try_random_code(const Network& g2, const CodeSupport& support, int h0,
                                             const GaloisField& field, Rng& rng) {
  MulticastCode code;
  code.field = field;
  code.h0 = h0;
  code.order = support.edges;
  std::set<EdgeId> in_support(support.edges.begin(), support.edges.end());
  const auto width = static_cast<std::size_t>(h0);

  for (EdgeId e : support.edges) {
    const NodeId tail = g2.edge(e).tail;
    std::vector<LocalTerm> terms;
    if (tail == g2.source()) {
      for (std::uint32_t i = 0; i < width; ++i) terms.push_back({CodeInput::symbol(i), random_element(field, rng)});
    }
    for (EdgeId in : g2.in_edges(tail)) {
      if (in_support.contains(in)) terms.push_back({CodeInput::from_edge(in), random_element(field, rng)});
    }
    code.local.emplace(e, std::move(terms));
  }
  code.global = propagate_global(code);

  for (std::size_t t = 0; t < 2; ++t) {
    code.terminals[t].inputs = support.terminal_inputs[t];
    auto inv = inverse(field, transfer_matrix(code, t));
    if (!inv) return std::nullopt;
    code.terminals[t].decode = std::move(*inv);
  }
  return code;
}

MulticastCode build_multicast_code(const Network& g2, int h0, unsigned field_bits, Rng& rng) {
  if (h0 < 0) throw InputError("h0 must be nonnegative");
  CodeSupport support = select_support(g2, h0);
  int attempts = 0;
  unsigned bits = field_bits;
  while (true) {
    GaloisField field(bits);
    for (int k = 0; k < kAttemptsPerField; ++k) {
      ++attempts;
      if (auto code = try_random_code(g2, support, h0, field, rng)) {
        code->attempts = attempts;
        return std::move(*code);
      }
    }
    if (bits >= GaloisField::kMaxBits) {
      throw CodeConstructionError("no invertible transfer matrices after " + std::to_string(attempts) +
                                  " attempts; last field " + field.name());
    }
    bits = std::min(2 * bits, GaloisField::kMaxBits);
  }
}

std::map<EdgeId, CodingVector> propagate_global(const MulticastCode& code) {
  const auto width = static_cast<std::size_t>(code.h0);
  std::map<EdgeId, CodingVector> global;
  for (EdgeId e : code.order) {
    CodingVector v(width);
    for (const LocalTerm& term : code.local.at(e)) {
      if (term.input.kind == CodeInput::Kind::source_symbol) {
        if (term.input.index >= width) throw InvariantError("source symbol index out of range");
        v[term.input.index] = code.field.add(v[term.input.index], term.coeff);
      } else {
        auto it = global.find(EdgeId{term.input.index});
        if (it == global.end()) throw InvariantError("coded edge reads an edge not evaluated before it");
        for (std::size_t i = 0; i < width; ++i) v[i] = code.field.add(v[i], code.field.mul(term.coeff, it->second[i]));
      }
    }
    global.emplace(e, std::move(v));
  }
  return global;
}

Matrix transfer_matrix(const MulticastCode& code, std::size_t terminal) {
  Matrix m;
  for (EdgeId e : code.terminals.at(terminal).inputs) m.push_back(code.global.at(e));
  return m;
}

std::map<EdgeId, FieldElement> apply_code(const MulticastCode& code, const std::vector<FieldElement>& x0) {
  if (x0.size() != static_cast<std::size_t>(code.h0)) throw InputError("message length differs from h0");
  std::map<EdgeId, FieldElement> symbols;
  for (const auto& [e, v] : code.global) {
    FieldElement acc{0};
    for (std::size_t i = 0; i < x0.size(); ++i) acc = code.field.add(acc, code.field.mul(v[i], x0[i]));
    symbols.emplace(e, acc);
  }
  return symbols;
}

}  // namespace ncsynth
