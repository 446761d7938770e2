#include "ncsynth/galois.hpp"

#include <array>

#include "ncsynth/errors.hpp"

namespace ncsynth {
namespace {

// Primitive polynomials, indexed by degree.
constexpr std::array<std::uint32_t, 17> kPrimitive = {
    0,      0x3,    0x7,    0xB,    0x13,   0x25,   0x43,   0x89,    0x11D,
    0x211,  0x409,  0x805,  0x1053, 0x201B, 0x4443, 0x8003, 0x1100B,
};

}  // namespace

std::uint32_t carryless_mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t modulus, unsigned bits) {
  std::uint32_t p = 0;
  const std::uint32_t top = 1U << bits;
  while (b) {
    if (b & 1U) p ^= a;
    b >>= 1U;
    a <<= 1U;
    if (a & top) a ^= modulus;
  }
  return p;
}

std::uint32_t GaloisField::default_modulus(unsigned bits) {
  if (bits < 1 || bits > kMaxBits) throw FieldError("field size 2^" + std::to_string(bits) + " unsupported");
  return kPrimitive[bits];
}

GaloisField::GaloisField(unsigned bits) : GaloisField(bits, default_modulus(bits)) {}

GaloisField::GaloisField(unsigned bits, std::uint32_t modulus) : bits_(bits), modulus_(modulus) {
  if (bits < 1 || bits > kMaxBits) throw FieldError("field size 2^" + std::to_string(bits) + " unsupported");
  if ((modulus >> bits) != 1U) throw FieldError("modulus degree does not match field size");
  const std::uint32_t order = size() - 1;
  log_.assign(size(), 0);
  exp_.assign(2 * static_cast<std::size_t>(order), 0);
  std::uint32_t x = 1;
  // The generator is 2 (the polynomial x), so the modulus must be primitive.
  for (std::uint32_t i = 0; i < order; ++i) {
    if (i > 0 && x == 1) throw FieldError("modulus is not primitive");
    exp_[i] = x;
    exp_[i + order] = x;
    log_[x] = i;
    x = carryless_mul_mod(x, bits == 1 ? 1U : 2U, modulus, bits);
  }
  if (x != 1) throw FieldError("modulus is not primitive");
}

FieldElement GaloisField::mul(FieldElement a, FieldElement b) const {
  if (a.value == 0 || b.value == 0) return {0};
  return {exp_[log_[a.value] + log_[b.value]]};
}

FieldElement GaloisField::inv(FieldElement a) const {
  if (a.value == 0) throw FieldError("inverse of zero");
  const std::uint32_t order = size() - 1;
  return {exp_[(order - log_[a.value]) % order]};
}

Matrix identity_matrix(std::size_t n) {
  Matrix m(n, std::vector<FieldElement>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = {1};
  return m;
}

Matrix mat_mul(const GaloisField& f, const Matrix& a, const Matrix& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = inner == 0 ? 0 : b.front().size();
  Matrix out(a.size(), std::vector<FieldElement>(cols));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw InvariantError("mat_mul: dimension mismatch");
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].value == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] = f.add(out[i][j], f.mul(a[i][k], b[k][j]));
    }
  }
  return out;
}

std::vector<FieldElement> mat_vec(const GaloisField& f, const Matrix& a, const std::vector<FieldElement>& x) {
  std::vector<FieldElement> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != x.size()) throw InvariantError("mat_vec: dimension mismatch");
    for (std::size_t k = 0; k < x.size(); ++k) out[i] = f.add(out[i], f.mul(a[i][k], x[k]));
  }
  return out;
}

std::size_t rank(const GaloisField& f, Matrix m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.size() && m[pivot][c].value == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[r]);
    FieldElement scale = f.inv(m[r][c]);
    for (auto& x : m[r]) x = f.mul(x, scale);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].value == 0) continue;
      FieldElement factor = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = f.sub(m[i][j], f.mul(factor, m[r][j]));
    }
    ++r;
  }
  return r;
}

std::optional<Matrix> inverse(const GaloisField& f, const Matrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) return std::nullopt;
  }
  Matrix a = m;
  Matrix inv = identity_matrix(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c].value == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[c]);
    std::swap(inv[pivot], inv[c]);
    FieldElement scale = f.inv(a[c][c]);
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] = f.mul(a[c][j], scale);
      inv[c][j] = f.mul(inv[c][j], scale);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c].value == 0) continue;
      FieldElement factor = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] = f.sub(a[i][j], f.mul(factor, a[c][j]));
        inv[i][j] = f.sub(inv[i][j], f.mul(factor, inv[c][j]));
      }
    }
  }
  return inv;
}

}  // namespace ncsynth
