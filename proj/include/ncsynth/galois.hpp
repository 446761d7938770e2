#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ncsynth {

struct FieldElement {
  std::uint32_t value = 0;
  friend auto operator<=>(FieldElement, FieldElement) = default;
};

/// GF(2^m), 1 <= m <= 16, with elements as polynomials over GF(2) packed
/// into integers and reduced by a fixed primitive modulus. Multiplication
/// goes through log/antilog tables.
class GaloisField {
 public:
  static constexpr unsigned kMaxBits = 16;

  explicit GaloisField(unsigned bits);
  GaloisField(unsigned bits, std::uint32_t modulus);

  /// Default primitive polynomial for GF(2^bits), leading term included.
  static std::uint32_t default_modulus(unsigned bits);

  unsigned bits() const { return bits_; }
  std::uint32_t modulus() const { return modulus_; }
  std::uint32_t size() const { return 1U << bits_; }
  std::string name() const { return "GF(2^" + std::to_string(bits_) + ")"; }

  bool contains(FieldElement a) const { return a.value < size(); }

  FieldElement add(FieldElement a, FieldElement b) const { return {a.value ^ b.value}; }
  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, b); }
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

 private:
  unsigned bits_;
  std::uint32_t modulus_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
};

/// Shift-and-add product reduced by `modulus`; no tables.
std::uint32_t carryless_mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t modulus, unsigned bits);

using Matrix = std::vector<std::vector<FieldElement>>;

Matrix identity_matrix(std::size_t n);
Matrix mat_mul(const GaloisField& f, const Matrix& a, const Matrix& b);
std::vector<FieldElement> mat_vec(const GaloisField& f, const Matrix& a, const std::vector<FieldElement>& x);
std::size_t rank(const GaloisField& f, Matrix m);
/// Gauss-Jordan inverse; empty when singular or non-square.
std::optional<Matrix> inverse(const GaloisField& f, const Matrix& m);

}  // namespace ncsynth
