#include <gtest/gtest.h>

#include <random>

#include "groupstar/representation.hpp"
#include "groupstar/star.hpp"
#include "oracles.hpp"

using namespace groupstar;

namespace {

struct Case {
  BuiltinGroup group;
  std::string label;
};

std::vector<Case> all_cases() {
  std::vector<Case> out;
  for (auto b : kBuiltinGroups)
    for (const auto& l : builtin_irrep_labels(b)) out.push_back({b, l});
  return out;
}

Irrep irrep(BuiltinGroup b, const std::string& label) { return builtin_irrep(make_group(builtin_group(b)), label); }

std::string name(const Case& c, Scheme s) { return to_string(c.group) + "/" + c.label + "/" + to_string(s); }

std::vector<cplx> oracle_symbol(const Irrep& r, Scheme s, const Matrix& A) {
  return s == Scheme::Primary ? oracle::symbol_primary(r.matrices, A) : oracle::symbol_dual(r.matrices, A);
}

double ratio(const Irrep& r) { return double(r.dim()) / double(r.matrices.size()); }

auto kernel_fn(const StarKernel& K) {
  return [&K](std::size_t x, std::size_t y, std::size_t z) { return K(x, y, z); };
}

}  // namespace

// --- quantizer pairs ---------------------------------------------------------

TEST(QuantizerPair, TwoElementTrivialPrimary) {
  const QuantizerPair p = quantizer_pair(irrep(BuiltinGroup::Z2, "triv"), Scheme::Primary);
  ASSERT_EQ(p.size(), 2u);
  for (std::size_t k = 0; k < 2; ++k) {
    EXPECT_EQ(p.U[k](0, 0), cplx(1.0));
    EXPECT_EQ(p.D[k](0, 0), cplx(0.5));
  }
}

TEST(QuantizerPair, TriangleDualUsesOneThirdInverse) {
  const Irrep r = irrep(BuiltinGroup::C3v, "2d");
  const QuantizerPair p = quantizer_pair(r, Scheme::Dual);
  for (std::size_t k = 0; k < 6; ++k) {
    EXPECT_LE(oracle::max_diff(p.U[k], Matrix(r.matrices[k].adjoint() / 3.0)), 1e-15);
    EXPECT_EQ(oracle::max_diff(p.D[k], r.matrices[k]), 0.0);
  }
}

TEST(QuantizerPair, PrimaryAndDualExchangeRoles) {
  for (const auto& c : all_cases()) {
    const Irrep r = irrep(c.group, c.label);
    const QuantizerPair p = quantizer_pair(r, Scheme::Primary);
    const QuantizerPair d = quantizer_pair(r, Scheme::Dual);
    for (std::size_t k = 0; k < p.size(); ++k) {
      EXPECT_EQ(oracle::max_diff(p.U[k], d.D[k]), 0.0);
      EXPECT_EQ(oracle::max_diff(p.D[k], d.U[k]), 0.0);
    }
  }
}

TEST(QuantizerPair, RejectsInvalidIrrep) {
  const GroupPtr g = make_group(builtin_group(BuiltinGroup::Z2));
  const Irrep bad{g, "bad", {Matrix::Constant(1, 1, 1.0), Matrix::Constant(1, 1, 2.0)}};
  EXPECT_THROW(quantizer_pair(bad, Scheme::Primary), InvalidIrrep);
}

TEST(QuantizerPair, BiorthogonalityIsCharacterValued) {
  for (const auto& c : all_cases()) {
    const Irrep r = irrep(c.group, c.label);
    const GroupTable& g = *r.group;
    const QuantizerPair p = quantizer_pair(r, Scheme::Primary);
    const GroupFunction chi = character(r);
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < p.size(); ++j)
        EXPECT_LE(std::abs((p.U[i] * p.D[j]).trace() - ratio(r) * chi[g.multiply(i, g.inverse(j))]), 1e-14);
  }
}

// --- custom pairs ------------------------------------------------------------

TEST(CustomPair, MatrixUnitsWithTransposedPairing) {
  MatrixFamily U, D;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      Matrix e = Matrix::Zero(2, 2);
      e(a, b) = 1.0;
      U.push_back(e);
      D.push_back(e.transpose());
    }
  const QuantizerPair p = custom_pair(U, D);
  EXPECT_EQ(p.scheme, Scheme::Custom);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 10; ++t) {
    const Matrix A = oracle::random_matrix(rng, 2);
    EXPECT_LE(oracle::max_diff(reconstruct(p, symbol(p, A)), A), 1e-15);
  }
}

TEST(CustomPair, RejectsRepeatedIdentity) {
  const MatrixFamily U = {Matrix::Identity(2, 2), Matrix::Identity(2, 2)};
  try {
    custom_pair(U, U);
    FAIL() << "expected OrthogonalityViolation";
  } catch (const OrthogonalityViolation& e) {
    EXPECT_EQ(e.i, 0u);
    // Diagonal fails first: Tr(U0 D0) = 2 instead of 1.
    EXPECT_EQ(e.j, 0u);
    EXPECT_DOUBLE_EQ(e.residual, 1.0);
  }
  // Diagonal entries made valid, off-diagonal pairing still broken.
  const MatrixFamily half = {Matrix::Identity(2, 2) / 2.0, Matrix::Identity(2, 2) / 2.0};
  try {
    custom_pair(U, half);
    FAIL() << "expected OrthogonalityViolation";
  } catch (const OrthogonalityViolation& e) {
    EXPECT_EQ(e.i, 0u);
    EXPECT_EQ(e.j, 1u);
    EXPECT_DOUBLE_EQ(e.residual, 1.0);
  }
}

TEST(CustomPair, PrimaryPairAcceptedWhenDimensionSquaredIsOrder) {
  // Trivial group: N = N_s^2 = 1.
  const GroupPtr g = make_group(build_group({{0}}));
  const Irrep r{g, "triv", {Matrix::Identity(1, 1)}};
  const QuantizerPair p = quantizer_pair(r, Scheme::Primary);
  EXPECT_NO_THROW(custom_pair(p.U, p.D, g));
}

TEST(CustomPair, ShapeErrors) {
  EXPECT_THROW(custom_pair({Matrix::Identity(2, 2)}, {}), ShapeMismatch);
  EXPECT_THROW(custom_pair({Matrix::Identity(2, 2)}, {Matrix::Identity(1, 1)}), ShapeMismatch);
}

// --- symbols and reconstruction --------------------------------------------

TEST(Symbol, IdentityGivesCharacter) {
  for (const auto& c : all_cases()) {
    const Irrep r = irrep(c.group, c.label);
    const QuantizerPair p = quantizer_pair(r, Scheme::Primary);
    EXPECT_LE(max_abs_diff(symbol(p, Matrix::Identity(r.dim(), r.dim())), character(r)), 1e-12);
  }
}

TEST(Symbol, TriangleDualOfIdentity) {
  const QuantizerPair p = quantizer_pair(irrep(BuiltinGroup::C3v, "2d"), Scheme::Dual);
  const GroupFunction f = symbol(p, Matrix::Identity(2, 2));
  const std::vector<cplx> want = {2.0 / 3, -1.0 / 3, -1.0 / 3, 0, 0, 0};
  EXPECT_LE(oracle::max_diff(f.values, want), 1e-15);
}

TEST(Symbol, ZeroAndShapeMismatch) {
  const QuantizerPair p = quantizer_pair(irrep(BuiltinGroup::Q8, "2d"), Scheme::Primary);
  for (const auto& v : symbol(p, Matrix::Zero(2, 2)).values) EXPECT_EQ(v, cplx(0.0));
  EXPECT_THROW(symbol(p, Matrix::Identity(3, 3)), ShapeMismatch);
}

TEST(Symbol, MatchesOracleOnRandomMatrices) {
  std::mt19937_64 rng(11);
  for (const auto& c : all_cases())
    for (Scheme s : {Scheme::Primary, Scheme::Dual}) {
      const Irrep r = irrep(c.group, c.label);
      const QuantizerPair p = quantizer_pair(r, s);
      const Matrix A = oracle::random_matrix(rng, r.dim());
      EXPECT_LE(oracle::max_diff(symbol(p, A).values, oracle_symbol(r, s, A)), 1e-14) << name(c, s);
    }
}

TEST(Reconstruct, TriangleTrivialConstant) {
  const QuantizerPair p = quantizer_pair(irrep(BuiltinGroup::C3v, "triv"), Scheme::Primary);
  const Matrix A = reconstruct(p, GroupFunction(6, cplx(2.5, -1.0)));
  ASSERT_EQ(A.rows(), 1);
  EXPECT_LE(std::abs(A(0, 0) - cplx(2.5, -1.0)), 1e-15);
}

TEST(Reconstruct, ZeroAndLengthMismatch) {
  const QuantizerPair p = quantizer_pair(irrep(BuiltinGroup::Q8, "2d"), Scheme::Dual);
  EXPECT_EQ(reconstruct(p, GroupFunction(8, 0.0)), Matrix(Matrix::Zero(2, 2)));
  EXPECT_THROW(reconstruct(p, GroupFunction(7, 0.0)), LengthMismatch);
}

TEST(Reconstruct, RoundTripEveryPairAndScheme) {
  std::mt19937_64 rng(0);
  for (const auto& c : all_cases())
    for (Scheme s : {Scheme::Primary, Scheme::Dual}) {
      const Irrep r = irrep(c.group, c.label);
      const QuantizerPair p = quantizer_pair(r, s);
      double worst = 0.0;
      for (int t = 0; t < 100; ++t) {
        const Matrix A = oracle::random_matrix(rng, r.dim());
        // Reconstruct from the oracle symbol so the test does not lean on symbol().
        worst = std::max(worst, oracle::max_diff(reconstruct(p, GroupFunction(oracle_symbol(r, s, A))), A));
      }
      EXPECT_LE(worst, 1e-12) << name(c, s);
    }
}

// --- kernels -----------------------------------------------------------------

TEST(StarKernel, TwoElementTrivialIsQuarter) {
  const StarKernel K = star_kernel(quantizer_pair(irrep(BuiltinGroup::Z2, "triv"), Scheme::Primary));
  EXPECT_DOUBLE_EQ(K.normalization, 0.25);
  for (const auto& v : K.tensor.data) EXPECT_EQ(v, cplx(0.25));
  // Unnormalized factor is identically one.
  for (const auto& v : K.tensor.data) EXPECT_EQ(v / K.normalization, cplx(1.0));
}

TEST(StarKernel, TwoElementSignPattern) {
  const StarKernel K = star_kernel(quantizer_pair(irrep(BuiltinGroup::Z2, "sign"), Scheme::Primary));
  // K(g1,g1,g1)=1, K(g1,g1,g2)=-1, K(g1,g2,g1)=-1, K(g1,g2,g2)=1 with the
  // output last; the sign rep is symmetric so order does not matter.
  EXPECT_EQ(K(0, 0, 0) / K.normalization, cplx(1.0));
  EXPECT_EQ(K(1, 0, 0) / K.normalization, cplx(-1.0));
  EXPECT_EQ(K(0, 0, 1) / K.normalization, cplx(-1.0));
  EXPECT_EQ(K(1, 0, 1) / K.normalization, cplx(1.0));
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t y = 0; y < 2; ++y)
      for (std::size_t z = 0; z < 2; ++z) {
        const double sign = ((x + y + z) % 2 == 0) ? 1.0 : -1.0;
        EXPECT_EQ(K(x, y, z), cplx(0.25 * sign));
      }
}

TEST(StarKernel, QuaternionIdentityEntry) {
  const StarKernel K = star_kernel(quantizer_pair(irrep(BuiltinGroup::Q8, "2d"), Scheme::Primary));
  EXPECT_LE(std::abs(K(0, 0, 0) - 0.125), 1e-15);
  EXPECT_DOUBLE_EQ(K.normalization, 1.0 / 16.0);
}

TEST(StarKernel, EqualsDirectTraceAndCharacterForms) {
  for (const auto& c : all_cases()) {
    const Irrep r = irrep(c.group, c.label);
    const GroupTable& g = *r.group;
    const GroupFunction chi = character(r);
    const std::size_t n = g.order();
    const double q = ratio(r);
    for (Scheme s : {Scheme::Primary, Scheme::Dual}) {
      const QuantizerPair p = quantizer_pair(r, s);
      const StarKernel K = star_kernel(p);
      double trace_res = 0.0, closed_res = 0.0;
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          for (std::size_t z = 0; z < n; ++z) {
            const cplx direct = (p.D[y] * p.D[z] * p.U[x]).trace();
            trace_res = std::max(trace_res, std::abs(K(x, y, z) - direct));
            const cplx closed =
                s == Scheme::Primary
                    ? q * q * chi[g.multiply(g.multiply(g.inverse(y), g.inverse(z)), x)]
                    : q * chi[g.multiply(g.multiply(y, z), g.inverse(x))];
            closed_res = std::max(closed_res, std::abs(K(x, y, z) - closed));
          }
      EXPECT_LE(trace_res, 1e-14) << name(c, s);
      EXPECT_LE(closed_res, 1e-12) << name(c, s);
    }
  }
}

TEST(StarKernel, TensorAssociativityEveryKernel) {
  for (const auto& c : all_cases())
    for (Scheme s : {Scheme::Primary, Scheme::Dual}) {
      const StarKernel K = star_kernel(quantizer_pair(irrep(c.group, c.label), s));
      const std::size_t n = K.order();
      double worst = 0.0;
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t w = 0; w < n; ++w)
          for (std::size_t v = 0; v < n; ++v)
            for (std::size_t t = 0; t < n; ++t) {
              cplx l = 0.0, r = 0.0;
              for (std::size_t y = 0; y < n; ++y) l += K(x, y, t) * K(y, w, v);
              for (std::size_t z = 0; z < n; ++z) r += K(x, w, z) * K(z, v, t);
              worst = std::max(worst, std::abs(l - r));
            }
      EXPECT_LE(worst, 1e-10) << name(c, s);
    }
}

// --- deformed kernels ---------------------------------------------------------

TEST(DeformedKernel, IdentityAndScaledIdentity) {
  for (Scheme s : {Scheme::Primary, Scheme::Dual}) {
    const QuantizerPair p = quantizer_pair(irrep(BuiltinGroup::C3v, "2d"), s);
    const StarKernel K = star_kernel(p);
    const StarKernel K1 = k_deformed_kernel(p, Matrix::Identity(2, 2));
    const StarKernel K2 = k_deformed_kernel(p, 2.0 * Matrix::Identity(2, 2));
    EXPECT_LE(max_abs_diff(K.tensor, K1.tensor), 1e-15);
    for (std::size_t i = 0; i < K.tensor.data.size(); ++i)
      EXPECT_LE(std::abs(K2.tensor.data[i] - 2.0 * K.tensor.data[i]), 1e-15);
    EXPECT_TRUE(K2.deformed);
  }
}

TEST(DeformedKernel, ShapeMismatch) {
  const QuantizerPair p = quantizer_pair(irrep(BuiltinGroup::C3v, "2d"), Scheme::Primary);
  EXPECT_THROW(k_deformed_kernel(p, Matrix::Identity(3, 3)), ShapeMismatch);
}

TEST(DeformedKernel, TriangleClosureWithReflection) {
  const Irrep r = irrep(BuiltinGroup::C3v, "2d");
  const Matrix k = r.matrices[3];
  std::mt19937_64 rng(3);
  for (Scheme s : {Scheme::Primary, Scheme::Dual}) {
    const StarKernel K = k_deformed_kernel(quantizer_pair(r, s), k);
    double worst = 0.0;
    for (int t = 0; t < 50; ++t) {
      const Matrix A = oracle::random_matrix(rng, 2);
      const Matrix B = oracle::random_matrix(rng, 2);
      const auto got = oracle::apply(kernel_fn(K), 6, oracle_symbol(r, s, A), oracle_symbol(r, s, B));
      worst = std::max(worst, oracle::max_diff(got, oracle_symbol(r, s, A * k * B)));
    }
    EXPECT_LE(worst, 1e-10) << to_string(s);
  }
}

TEST(DeformedKernel, CharacterFormForGroupElementInsert) {
  // With k = u(g_m): primary (N_s/N)^2 chi(y^-1 m z^-1 x), dual (N_s/N) chi(y m z x^-1).
  for (const auto& c : all_cases()) {
    const Irrep r = irrep(c.group, c.label);
    const GroupTable& g = *r.group;
    const GroupFunction chi = character(r);
    const double q = ratio(r);
    for (Element m = 0; m < g.order(); ++m) {
      const StarKernel P = k_deformed_kernel(quantizer_pair(r, Scheme::Primary), r.matrices[m]);
      const StarKernel D = k_deformed_kernel(quantizer_pair(r, Scheme::Dual), r.matrices[m]);
      double worst = 0.0;
      for (Element x = 0; x < g.order(); ++x)
        for (Element y = 0; y < g.order(); ++y)
          for (Element z = 0; z < g.order(); ++z) {
            const Element ep = g.multiply(g.multiply(g.multiply(g.inverse(y), m), g.inverse(z)), x);
            const Element ed = g.multiply(g.multiply(g.multiply(y, m), z), g.inverse(x));
            worst = std::max(worst, std::abs(P(x, y, z) - q * q * chi[ep]));
            worst = std::max(worst, std::abs(D(x, y, z) - q * chi[ed]));
          }
      EXPECT_LE(worst, 1e-12) << to_string(c.group) << "/" << c.label << " m=" << m;
    }
  }
}

// --- star_apply -------------------------------------------------------------

TEST(StarApply, TwoElementTrivialSumsAllProducts) {
  const StarKernel K = star_kernel(quantizer_pair(irrep(BuiltinGroup::Z2, "triv"), Scheme::Primary));
  const cplx x1(1.5, 0.5), x2(-2.0, 1.0), y1(0.25, -3.0), y2(4.0, 0.0);
  const GroupFunction out = star_apply(K, GroupFunction(std::vector<cplx>{x1, x2}), GroupFunction(std::vector<cplx>{y1, y2}));
  const cplx s = x1 * y1 + x1 * y2 + x2 * y1 + x2 * y2;
  EXPECT_LE(std::abs(out[0] - 0.25 * s), 1e-15);
  EXPECT_LE(std::abs(out[1] - 0.25 * s), 1e-15);
}

TEST(StarApply, TwoElementTrivialAnnihilatesAlternating) {
  const StarKernel K = star_kernel(quantizer_pair(irrep(BuiltinGroup::Z2, "triv"), Scheme::Primary));
  const GroupFunction out = star_apply(K, GroupFunction(std::vector<cplx>{3.0, -3.0}), GroupFunction(std::vector<cplx>{cplx(1, 2), cplx(-5, 1)}));
  EXPECT_EQ(out[0], cplx(0.0));
  EXPECT_EQ(out[1], cplx(0.0));
}

TEST(StarApply, LengthMismatch) {
  const StarKernel K = star_kernel(quantizer_pair(irrep(BuiltinGroup::Z2, "triv"), Scheme::Primary));
  EXPECT_THROW(star_apply(K, GroupFunction(3, 1.0), GroupFunction(2, 1.0)), LengthMismatch);
}

TEST(StarApply, MatchesOracleContraction) {
  std::mt19937_64 rng(5);
  const StarKernel K = star_kernel(quantizer_pair(irrep(BuiltinGroup::D4, "2d"), Scheme::Dual));
  const auto f = oracle::random_function(rng, 8);
  const auto h = oracle::random_function(rng, 8);
  EXPECT_LE(oracle::max_diff(star_apply(K, GroupFunction(f), GroupFunction(h)).values,
                             oracle::apply(kernel_fn(K), 8, f, h)),
            1e-15);
}

TEST(StarApply, ClosureEveryPairAndScheme) {
  std::mt19937_64 rng(1);
  for (const auto& c : all_cases())
    for (Scheme s : {Scheme::Primary, Scheme::Dual}) {
      const Irrep r = irrep(c.group, c.label);
      const StarKernel K = star_kernel(quantizer_pair(r, s));
      double worst = 0.0;
      for (int t = 0; t < 100; ++t) {
        const Matrix A = oracle::random_matrix(rng, r.dim());
        const Matrix B = oracle::random_matrix(rng, r.dim());
        const GroupFunction got =
            star_apply(K, GroupFunction(oracle_symbol(r, s, A)), GroupFunction(oracle_symbol(r, s, B)));
        worst = std::max(worst, oracle::max_diff(got.values, oracle_symbol(r, s, A * B)));
      }
      EXPECT_LE(worst, 1e-10) << name(c, s);
    }
}

// --- Lie and Jordan kernels -------------------------------------------------

TEST(LieKernel, VanishesForOneDimensionalIrreps) {
  for (const auto& c : all_cases()) {
    const Irrep r = irrep(c.group, c.label);
    if (r.dim() != 1) continue;
    for (Scheme s : {Scheme::Primary, Scheme::Dual}) {
      const StarKernel C = lie_kernel(star_kernel(quantizer_pair(r, s)));
      for (const auto& v : C.tensor.data) EXPECT_EQ(v, cplx(0.0)) << name(c, s);
    }
  }
}

TEST(LieKernel, QuaternionCommutatorTrace) {
  const Irrep r = irrep(BuiltinGroup::Q8, "2d");
  const StarKernel C = lie_kernel(star_kernel(quantizer_pair(r, Scheme::Primary)));
  EXPECT_EQ(C.kind, KernelKind::Lie);
  double worst = 0.0, biggest = 0.0;
  for (std::size_t x = 0; x < 8; ++x)
    for (std::size_t y = 0; y < 8; ++y)
      for (std::size_t z = 0; z < 8; ++z) {
        const Matrix a = r.matrices[y].adjoint(), b = r.matrices[z].adjoint();
        const cplx want = (1.0 / 16.0) * ((a * b - b * a) * r.matrices[x]).trace();
        worst = std::max(worst, std::abs(C(x, y, z) - want));
        biggest = std::max(biggest, std::abs(C(x, y, z)));
      }
  EXPECT_LE(worst, 1e-15);
  EXPECT_GT(biggest, 0.1);
}

TEST(LieKernel, AntisymmetricAndJacobi) {
  std::mt19937_64 rng(9);
  for (const auto& c : all_cases())
    for (Scheme s : {Scheme::Primary, Scheme::Dual}) {
      const StarKernel C = lie_kernel(star_kernel(quantizer_pair(irrep(c.group, c.label), s)));
      const std::size_t n = C.order();
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          for (std::size_t z = 0; z < n; ++z) EXPECT_EQ(C(x, y, z), -C(x, z, y));
      auto br = [&](const std::vector<cplx>& a, const std::vector<cplx>& b) {
        return oracle::apply(kernel_fn(C), n, a, b);
      };
      double worst = 0.0;
      for (int t = 0; t < 20; ++t) {
        const auto f = oracle::random_function(rng, n);
        const auto g = oracle::random_function(rng, n);
        const auto h = oracle::random_function(rng, n);
        const auto a = br(f, br(g, h)), b = br(g, br(h, f)), d = br(h, br(f, g));
        for (std::size_t k = 0; k < n; ++k) worst = std::max(worst, std::abs(a[k] + b[k] + d[k]));
      }
      EXPECT_LE(worst, 1e-9) << name(c, s);
    }
}

TEST(JordanKernel, DecompositionAndSymmetry) {
  for (const auto& c : all_cases()) {
    const StarKernel K = star_kernel(quantizer_pair(irrep(c.group, c.label), Scheme::Primary));
    const StarKernel J = jordan_kernel(K);
    const StarKernel C = lie_kernel(K);
    EXPECT_EQ(J.kind, KernelKind::Jordan);
    for (std::size_t i = 0; i < K.tensor.data.size(); ++i)
      EXPECT_LE(std::abs(J.tensor.data[i] + 0.5 * C.tensor.data[i] - K.tensor.data[i]), 1e-15);
    const std::size_t n = K.order();
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) EXPECT_EQ(J(x, y, z), J(x, z, y));
  }
  const StarKernel Z = star_kernel(quantizer_pair(irrep(BuiltinGroup::Z2, "triv"), Scheme::Primary));
  EXPECT_EQ(max_abs_diff(jordan_kernel(Z).tensor, Z.tensor), 0.0);
}

TEST(JordanKernel, QuaternionAnticommutator) {
  const Irrep r = irrep(BuiltinGroup::Q8, "2d");
  const StarKernel J = jordan_kernel(star_kernel(quantizer_pair(r, Scheme::Primary)));
  std::mt19937_64 rng(4);
  double worst = 0.0;
  for (int t = 0; t < 50; ++t) {
    const Matrix A = oracle::random_matrix(rng, 2), B = oracle::random_matrix(rng, 2);
    auto got = oracle::apply(kernel_fn(J), 8, oracle::symbol_primary(r.matrices, A),
                             oracle::symbol_primary(r.matrices, B));
    for (auto& v : got) v *= 2.0;
    worst = std::max(worst, oracle::max_diff(got, oracle::symbol_primary(r.matrices, A * B + B * A)));
  }
  EXPECT_LE(worst, 1e-10);
}

// --- structure constants ----------------------------------------------------

TEST(StructureConstants, CharacterFormAndCayleyTable) {
  for (const auto& c : all_cases()) {
    const Irrep r = irrep(c.group, c.label);
    const GroupTable& g = *r.group;
    const GroupFunction chi = character(r);
    const Tensor3 a = algebra_structure_constants(r);
    const Tensor3 ak = algebra_structure_constants(r, Matrix::Identity(r.dim(), r.dim()));
    EXPECT_EQ(max_abs_diff(a, ak), 0.0);
    for (Element i = 0; i < g.order(); ++i)
      for (Element s = 0; s < g.order(); ++s)
        for (Element k = 0; k < g.order(); ++k) {
          const cplx want = chi[g.multiply(g.multiply(i, s), g.inverse(k))] / double(r.dim());
          EXPECT_LE(std::abs(a(i, s, k) - want), 1e-14);
          if (g.multiply(i, s) == k) EXPECT_LE(std::abs(a(i, s, k) - 1.0), 1e-14);
        }
  }
  const Tensor3 z = algebra_structure_constants(irrep(BuiltinGroup::Z2, "sign"));
  EXPECT_EQ(z(1, 1, 0), cplx(1.0));
  EXPECT_THROW(algebra_structure_constants(irrep(BuiltinGroup::Q8, "2d"), Matrix::Identity(3, 3)), ShapeMismatch);
}

// --- reference kernels -----------------------------------------------------------

TEST(ReferenceKernels, TwoElementProducts) {
  const auto ref = reference_kernels(make_group(builtin_group(BuiltinGroup::Z2)));
  const cplx x1(1, 2), x2(3, -1), y1(-2, 0.5), y2(0.5, 4);
  const GroupFunction x(std::vector<cplx>{x1, x2}), y(std::vector<cplx>{y1, y2});
  const GroupFunction pw = star_apply(ref.pointwise, x, y);
  EXPECT_EQ(pw[0], x1 * y1);
  EXPECT_EQ(pw[1], x2 * y2);
  const GroupFunction cv = star_apply(ref.convolution, x, y);
  EXPECT_EQ(cv[0], x1 * y1 + x2 * y2);
  EXPECT_EQ(cv[1], x2 * y1 + x1 * y2);
}

TEST(ReferenceKernels, Associative) {
  for (auto b : kBuiltinGroups) {
    const auto ref = reference_kernels(make_group(builtin_group(b)));
    for (const StarKernel* K : {&ref.pointwise, &ref.convolution}) {
      const std::size_t n = K->order();
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t w = 0; w < n; ++w)
          for (std::size_t v = 0; v < n; ++v)
            for (std::size_t t = 0; t < n; ++t) {
              cplx l = 0.0, r = 0.0;
              for (std::size_t y = 0; y < n; ++y) l += (*K)(x, y, t) * (*K)(y, w, v);
              for (std::size_t z = 0; z < n; ++z) r += (*K)(x, w, z) * (*K)(z, v, t);
              EXPECT_EQ(l, r);
            }
    }
  }
}

// --- index conventions -------------------------------------------------------

TEST(IndexConventions, OutputLastRoundTrip) {
  const StarKernel K = star_kernel(quantizer_pair(irrep(BuiltinGroup::C3v, "2d"), Scheme::Primary));
  const Tensor3 T = output_last(K.tensor);
  for (std::size_t x = 0; x < 6; ++x)
    for (std::size_t y = 0; y < 6; ++y)
      for (std::size_t z = 0; z < 6; ++z) EXPECT_EQ(T(y, z, x), K(x, y, z));
  EXPECT_EQ(max_abs_diff(output_first(T), K.tensor), 0.0);
}

TEST(IndexConventions, OutputLastCharacterKernelIsRotatedDual) {
  for (const auto& c : all_cases()) {
    const Irrep r = irrep(c.group, c.label);
    const Tensor3 P = character_kernel_output_last(r, ratio(r));
    const StarKernel D = star_kernel(quantizer_pair(r, Scheme::Dual));
    EXPECT_LE(max_abs_diff(output_first(P), D.tensor), 1e-12);
  }
}

TEST(IndexConventions, QuaternionQuarterPrefactorValues) {
  // K_{mn}^s = (1/4) chi(g_m g_n g_s^-1), output s last; index 0 = g_1, 1 = g_{-1}.
  const Tensor3 P = character_kernel_output_last(irrep(BuiltinGroup::Q8, "2d"), 0.25);
  EXPECT_EQ(P(0, 0, 0), cplx(0.5));
  EXPECT_EQ(P(0, 0, 1), cplx(-0.5));
  EXPECT_EQ(P(1, 0, 1), cplx(0.5));
  EXPECT_EQ(P(0, 1, 0), cplx(-0.5));
}

TEST(IndexConventions, QuaternionNonzeroEntriesBeyondIdentityRows) {
  // K_{KL}^{M} = chi(K L M^-1) / 4 = 1/2 although no index is +-1.
  const Irrep r = irrep(BuiltinGroup::Q8, "2d");
  const GroupTable& g = *r.group;
  const Tensor3 P = character_kernel_output_last(r, 0.25);
  EXPECT_EQ(P(*g.find("K"), *g.find("L"), *g.find("M")), cplx(0.5));
  int off_axis = 0;
  for (Element a = 2; a < 8; ++a)
    for (Element b = 2; b < 8; ++b)
      for (Element k = 2; k < 8; ++k)
        if (std::abs(P(a, b, k)) > 0.25) ++off_axis;
  EXPECT_GT(off_axis, 0);
}

TEST(CombineKernels, LinearCombination) {
  const auto g = make_group(builtin_group(BuiltinGroup::Z2));
  const StarKernel A = star_kernel(quantizer_pair(builtin_irrep(g, "triv"), Scheme::Primary));
  const StarKernel B = star_kernel(quantizer_pair(builtin_irrep(g, "sign"), Scheme::Primary));
  const StarKernel C = combine_kernels(A, B, 2.0);
  EXPECT_EQ(C.scheme, KernelScheme::Combination);
  for (std::size_t i = 0; i < C.tensor.data.size(); ++i)
    EXPECT_EQ(C.tensor.data[i], A.tensor.data[i] + 2.0 * B.tensor.data[i]);
  const auto q = reference_kernels(make_group(builtin_group(BuiltinGroup::Q8)));
  EXPECT_THROW(combine_kernels(A, q.pointwise, 1.0), GroupMismatch);
}

TEST(Enums, RoundTripNames) {
  for (Scheme s : {Scheme::Primary, Scheme::Dual, Scheme::Custom}) EXPECT_EQ(parse_scheme(to_string(s)), s);
  for (KernelKind k : {KernelKind::Star, KernelKind::Lie, KernelKind::Jordan})
    EXPECT_EQ(parse_kernel_kind(to_string(k)), k);
  for (KernelScheme k : {KernelScheme::Primary, KernelScheme::Dual, KernelScheme::Custom, KernelScheme::Pointwise,
                         KernelScheme::Convolution, KernelScheme::Combination})
    EXPECT_EQ(parse_kernel_scheme(to_string(k)), k);
  EXPECT_FALSE(parse_scheme("weyl").has_value());
}
