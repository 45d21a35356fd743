#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <functional>

#include "oddpres/eisenstein.hpp"

namespace {

using oddpres::eisenstein::EisensteinInteger;
using oddpres::eisenstein::EisensteinVector;
using oddpres::eisenstein::hermitian;
using oddpres::eisenstein::hexaflection;

std::complex<double> as_complex(EisensteinInteger x) {
  const std::complex<double> w(-0.5, std::sqrt(3.0) / 2);
  return static_cast<double>(x.a) + static_cast<double>(x.b) * w;
}

TEST(Eisenstein, RingOperationsAgreeWithComplexNumbers) {
  for (int a = -4; a <= 4; ++a) {
    for (int b = -4; b <= 4; ++b) {
      for (int c = -4; c <= 4; ++c) {
        for (int d = -4; d <= 4; ++d) {
          const EisensteinInteger x{a, b}, y{c, d};
          EXPECT_LT(std::abs(as_complex(x * y) - as_complex(x) * as_complex(y)), 1e-9);
          EXPECT_LT(std::abs(as_complex(x + y) - (as_complex(x) + as_complex(y))), 1e-9);
        }
      }
      const EisensteinInteger x{a, b};
      EXPECT_LT(std::abs(as_complex(x.conj()) - std::conj(as_complex(x))), 1e-9);
      EXPECT_EQ(static_cast<double>(x.norm()), std::round(std::norm(as_complex(x))));
      EXPECT_EQ(x * x.conj(), (EisensteinInteger{x.norm(), 0}));
    }
  }
}

TEST(Eisenstein, OmegaIsPrimitiveCubeRoot) {
  const auto w = EisensteinInteger::omega();
  const EisensteinInteger one{1, 0};
  EXPECT_EQ(w * w + w + one, (EisensteinInteger{0, 0}));
  EXPECT_EQ(w * w * w, one);
  EXPECT_EQ((w * w).to_string(), "-1-w");
}

// Every norm-one vector with coordinates in a small box, found by brute force.
std::vector<EisensteinVector> norm_one_vectors(int bound) {
  std::vector<EisensteinInteger> values;
  for (int a = -bound; a <= bound; ++a) {
    for (int b = -bound; b <= bound; ++b) values.push_back({a, b});
  }
  std::vector<EisensteinVector> out;
  for (const auto& x0 : values) {
    for (const auto& x1 : values) {
      for (const auto& x2 : values) {
        for (const auto& x3 : values) {
          if (-x0.norm() + x1.norm() + x2.norm() + x3.norm() == 1) out.push_back({x0, x1, x2, x3});
        }
      }
    }
  }
  return out;
}

int order_of(const std::function<EisensteinVector(const EisensteinVector&)>& f) {
  std::array<EisensteinVector, 4> basis{};
  for (int i = 0; i < 4; ++i) basis[i][i] = {1, 0};
  auto img = basis;
  for (int k = 1; k <= 24; ++k) {
    for (auto& v : img) v = f(v);
    if (img == basis) return k;
  }
  return 0;
}

TEST(Eisenstein, HexaflectionOrderOnEveryNormOneVectorInBox) {
  const auto mirrors = norm_one_vectors(1);
  ASSERT_GT(mirrors.size(), 100u);
  for (std::size_t i = 0; i < mirrors.size(); i += 7) {
    const auto& e = mirrors[i];
    EXPECT_EQ(order_of([&](const EisensteinVector& v) { return hexaflection(e, v); }), 6);
    EXPECT_EQ(order_of([&](const EisensteinVector& v) { return hexaflection(e, hexaflection(e, v)); }), 3);
  }
}

TEST(Eisenstein, HexaflectionPreservesForm) {
  const auto mirrors = norm_one_vectors(1);
  for (std::size_t i = 0; i < mirrors.size(); i += 31) {
    for (std::size_t j = 0; j < mirrors.size(); j += 17) {
      for (std::size_t k = 0; k < mirrors.size(); k += 23) {
        const auto& e = mirrors[i];
        EXPECT_EQ(hermitian(hexaflection(e, mirrors[j]), hexaflection(e, mirrors[k])), hermitian(mirrors[j], mirrors[k]));
      }
    }
  }
}

TEST(Eisenstein, HexaflectionScalesMirrorAndFixesComplement) {
  const EisensteinVector e{{{0, 0}, {1, 0}, {0, 0}, {0, 0}}};
  const EisensteinVector f{{{1, 0}, {0, 0}, {1, 0}, {0, 0}}};
  const auto w = EisensteinInteger::omega();
  EXPECT_EQ(hexaflection(e, e), (EisensteinInteger{0, 0} - w * w) * e);
  EXPECT_EQ(hermitian(f, e), (EisensteinInteger{0, 0}));
  EXPECT_EQ(hexaflection(e, f), f);
}

TEST(Eisenstein, HexaflectionRejectsNonUnitMirror) {
  const EisensteinVector e{{{1, 0}, {0, 0}, {0, 0}, {0, 0}}};
  EXPECT_THROW(hexaflection(e, e), std::invalid_argument);
}

}  // namespace
