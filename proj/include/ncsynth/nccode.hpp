#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "ncsynth/flow.hpp"
#include "ncsynth/galois.hpp"
#include "ncsynth/netgraph.hpp"

namespace ncsynth {

using Rng = std::mt19937_64;
using CodingVector = std::vector<FieldElement>;

/// What a coded edge combines: one of the source's message symbols (the
/// source behaves as if it had h0 input edges) or an upstream edge.
struct CodeInput {
  enum class Kind : std::uint8_t { source_symbol, edge };
  Kind kind = Kind::edge;
  std::uint32_t index = 0;  // symbol index or EdgeId::value

  static CodeInput symbol(std::uint32_t i) { return {Kind::source_symbol, i}; }
  static CodeInput from_edge(EdgeId e) { return {Kind::edge, e.value}; }
  friend auto operator<=>(const CodeInput&, const CodeInput&) = default;
};

struct LocalTerm {
  CodeInput input;
  FieldElement coeff;
  friend bool operator==(const LocalTerm&, const LocalTerm&) = default;
};

struct TerminalDecoder {
  /// The terminal's h0 coded in-edges, in transfer-matrix row order.
  std::vector<EdgeId> inputs;
  /// Inverse of the transfer matrix: x0 = decode * received.
  Matrix decode;
};

/// Edges carrying coded X0 traffic together with everything needed to
/// evaluate the code and decode at both terminals.
struct CodeSupport {
  std::vector<EdgeId> edges;  // topological evaluation order
  std::array<std::vector<EdgeId>, 2> terminal_inputs;
};

struct MulticastCode {
  GaloisField field{8};
  int h0 = 0;
  std::vector<EdgeId> order;
  std::map<EdgeId, std::vector<LocalTerm>> local;
  std::map<EdgeId, CodingVector> global;
  std::array<TerminalDecoder, 2> terminals;
  /// Construction attempts used, across all field sizes.
  int attempts = 0;
};

/// Chooses h0 edge-disjoint paths from the source to each terminal of `g2`
/// and returns the union as the code support. Rejects supports with
/// directed cycles.
CodeSupport select_support(const Network& g2, int h0);

/// One random draw of local coefficients over `field`; empty when a
/// terminal's transfer matrix is singular.
std::optional<MulticastCode> try_random_code(const Network& g2, const CodeSupport& support, int h0,
                                             const GaloisField& field, Rng& rng);

inline constexpr int kAttemptsPerField = 32;

/// Random linear multicast of h0 symbols from g2.source() to g2.t1() and
/// g2.t2(). Retries up to kAttemptsPerField times per field, then doubles
/// the field degree (capped at 16).
MulticastCode build_multicast_code(const Network& g2, int h0, unsigned field_bits, Rng& rng);

/// Recomputes every global coding vector from the local coefficients.
std::map<EdgeId, CodingVector> propagate_global(const MulticastCode& code);

Matrix transfer_matrix(const MulticastCode& code, std::size_t terminal);

/// Symbol carried by each support edge for message x0.
std::map<EdgeId, FieldElement> apply_code(const MulticastCode& code, const std::vector<FieldElement>& x0);

FieldElement random_element(const GaloisField& field, Rng& rng);

}  // namespace ncsynth
