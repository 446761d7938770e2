#include <gtest/gtest.h>

#include "ncsynth/errors.hpp"
#include "ncsynth/galois.hpp"
#include "ncsynth/nccode.hpp"

namespace ncsynth {
namespace {

int degree(std::uint64_t p) {
  int d = -1;
  while (p) {
    ++d;
    p >>= 1U;
  }
  return d;
}

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t b) {
  const int db = degree(b);
  for (int da = degree(a); da >= db; da = degree(a)) a ^= b << (da - db);
  return a;
}

bool irreducible(std::uint64_t p) {
  const int d = degree(p);
  for (std::uint64_t q = 2; degree(q) <= d / 2; ++q) {
    if (poly_mod(p, q) == 0) return false;
  }
  return true;
}

TEST(GaloisField, DefaultModuliAreIrreducibleAndPrimitive) {
  for (unsigned m = 1; m <= GaloisField::kMaxBits; ++m) {
    const std::uint32_t p = GaloisField::default_modulus(m);
    EXPECT_EQ(degree(p), static_cast<int>(m));
    EXPECT_TRUE(irreducible(p)) << "m=" << m;
    EXPECT_NO_THROW(GaloisField{m}) << "m=" << m;
  }
  EXPECT_EQ(GaloisField::default_modulus(8), 0x11DU);
}

TEST(GaloisField, RejectsBadParameters) {
  EXPECT_THROW(GaloisField(0), FieldError);
  EXPECT_THROW(GaloisField(17), FieldError);
  EXPECT_THROW(GaloisField(8, 0x101), FieldError);  // (x+1)^8
  EXPECT_THROW(GaloisField(8, 0x11B), FieldError);  // irreducible but x is not a generator
  EXPECT_THROW(GaloisField(8, 0x3D), FieldError);   // wrong degree
}

TEST(GaloisField, ReductionExample) {
  GaloisField f(8);
  EXPECT_EQ(f.mul({0x02}, {0x80}), FieldElement{0x1D});
  EXPECT_EQ(0x100U ^ 0x11DU, 0x1DU);
}

TEST(GaloisField, CharacteristicTwoAndIdentity) {
  GaloisField f(8);
  for (std::uint32_t x = 0; x < 256; ++x) {
    EXPECT_EQ(f.add({x}, {x}), FieldElement{0});
    EXPECT_EQ(f.mul({1}, {x}), FieldElement{x});
  }
}

TEST(GaloisField, TablesMatchShiftAndAdd) {
  for (unsigned m : {1U, 2U, 4U, 8U}) {
    GaloisField f(m);
    for (std::uint32_t a = 0; a < f.size(); ++a) {
      for (std::uint32_t b = 0; b < f.size(); ++b) {
        ASSERT_EQ(f.mul({a}, {b}).value, carryless_mul_mod(a, b, f.modulus(), m)) << m << ":" << a << "*" << b;
      }
    }
  }
  GaloisField f16(16);
  Rng rng(3);
  for (int k = 0; k < 20000; ++k) {
    auto a = static_cast<std::uint32_t>(rng() & 0xFFFF);
    auto b = static_cast<std::uint32_t>(rng() & 0xFFFF);
    ASSERT_EQ(f16.mul({a}, {b}).value, carryless_mul_mod(a, b, f16.modulus(), 16));
  }
}

TEST(GaloisField, Inverses) {
  for (unsigned m : {1U, 4U, 8U, 16U}) {
    GaloisField f(m);
    for (std::uint32_t a = 1; a < f.size(); ++a) ASSERT_EQ(f.mul({a}, f.inv({a})), FieldElement{1});
    EXPECT_THROW(f.inv({0}), FieldError);
  }
}

TEST(GaloisField, DistributesOverAddition) {
  GaloisField f(4);
  for (std::uint32_t a = 0; a < 16; ++a) {
    for (std::uint32_t b = 0; b < 16; ++b) {
      for (std::uint32_t c = 0; c < 16; ++c) {
        ASSERT_EQ(f.mul({a}, f.add({b}, {c})), f.add(f.mul({a}, {b}), f.mul({a}, {c})));
        ASSERT_EQ(f.mul(f.mul({a}, {b}), {c}), f.mul({a}, f.mul({b}, {c})));
      }
    }
  }
}

TEST(Matrix, InverseAndRank) {
  GaloisField f(8);
  Rng rng(9);
  int invertible = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    Matrix a(n, std::vector<FieldElement>(n));
    for (auto& row : a) {
      for (auto& x : row) x = random_element(f, rng);
    }
    auto inv = inverse(f, a);
    EXPECT_EQ(inv.has_value(), rank(f, a) == n);
    if (!inv) continue;
    ++invertible;
    EXPECT_EQ(mat_mul(f, a, *inv), identity_matrix(n));
    EXPECT_EQ(mat_mul(f, *inv, a), identity_matrix(n));
  }
  EXPECT_GT(invertible, 150);
}

TEST(Matrix, SingularAndDegenerate) {
  GaloisField f(8);
  Matrix dup{{{3}, {5}}, {{3}, {5}}};
  EXPECT_FALSE(inverse(f, dup).has_value());
  EXPECT_EQ(rank(f, dup), 1u);
  EXPECT_EQ(inverse(f, Matrix{}), Matrix{});
  EXPECT_FALSE(inverse(f, Matrix{{{1}, {2}}}).has_value());
}

}  // namespace
}  // namespace ncsynth
