#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "kerrcs/kerrcs.hpp"

using namespace kerrcs;

namespace {

double max_abs_diff(const FockState& a, const FockState& b) {
  double d = 0.0;
  const std::size_t n = std::max(a.dim(), b.dim());
  for (std::size_t k = 0; k < n; ++k) d = std::max(d, std::abs(a.amplitude(k) - b.amplitude(k)));
  return d;
}

// Photon-added state from the ladder, in exactly the closed form's space.
FockState oracle(const FockState& closed, const FockState& seed_in_smaller_space, std::size_t m,
                 const KerrParams& p) {
  return add_photons(seed_in_smaller_space, m, DeformedLadder(p, closed.dim()));
}

}  // namespace

TEST(Ladder, MatrixElements) {
  const KerrParams p(0.15);
  const DeformedLadder l(p, 10);
  EXPECT_EQ(l.lowering_element(0), 0.0);
  EXPECT_NEAR(l.lowering_element(3), std::sqrt(3.0) * std::sqrt(1.0 + 3.0 * 0.15 / 0.85), 1e-15);
  EXPECT_NEAR(l.raising_element(3), std::sqrt(4.0) * std::sqrt(1.0 + 4.0 * 0.15 / 0.85), 1e-15);
}

TEST(Ladder, CommutatorIsLinearInN) {
  for (double c : {0.05, 0.15, 0.5}) {
    const KerrParams p(c);
    const DeformedLadder l(p, 64);
    const double s = c / (1.0 - c);
    for (std::size_t n = 0; n + 1 < 64; ++n) {
      EXPECT_NEAR(l.commutator_diagonal(n), 1.0 + s + 2.0 * static_cast<double>(n) * s, 1e-12)
          << "c=" << c << " n=" << n;
    }
  }
}

TEST(Ladder, SizeChecked) {
  const DeformedLadder l(KerrParams(0.2), 5);
  std::vector<complex> v(4);
  EXPECT_THROW(l.create(v), DomainError);
  EXPECT_THROW(DeformedLadder(KerrParams(0.2), 0), DomainError);
}

TEST(Coherent, VacuumAndPoisson) {
  const FockState vac = coherent(0.0);
  EXPECT_EQ(vac[0], complex(1.0, 0.0));
  for (std::size_t n = 1; n < vac.dim(); ++n) EXPECT_EQ(vac[n], complex{});

  const FockState s = coherent(2.0);
  double mean = 0.0;
  for (std::size_t n = 0; n < s.dim(); ++n) {
    const double want = std::exp(-4.0 + n * std::log(4.0) - std::lgamma(n + 1.0));
    EXPECT_NEAR(std::norm(s[n]), want, 1e-14);
    mean += n * std::norm(s[n]);
  }
  EXPECT_NEAR(mean, 4.0, 1e-12);
  EXPECT_NEAR(mandel_q(coherent(3.0)), 1.0, 1e-10);
}

TEST(Coherent, TruncationIsCertified) {
  const FockState s = coherent(complex(3.0, -1.0));
  EXPECT_LT(s.tail_bound(), 1e-14);
  EXPECT_GT(s.dim(), 10u);
  // the min_dim argument only ever grows the space
  EXPECT_EQ(coherent(0.5, 80).dim(), 80u);
  TruncationPolicy tight;
  tight.max_dim = 20;
  EXPECT_THROW(coherent(5.0, 1, tight), TruncationError);
}

TEST(Pacs, LimitsAndNormalization) {
  EXPECT_LT(max_abs_diff(pacs(1.3, 0), coherent(1.3)), 1e-15);
  const FockState three = pacs(0.0, 3);
  EXPECT_NEAR(std::abs(three[3]), 1.0, 1e-15);
  EXPECT_NEAR(three.norm_squared(), 1.0, 1e-15);

  // sum |alpha|^{2n} (n+m)!/(n!)^2 = L_m(-|alpha|^2) m! e^{|alpha|^2}
  const double x = 1.5 * 1.5;
  double brute = 0.0;
  for (int n = 0; n < 200; ++n) {
    brute += std::exp(n * std::log(x) + std::lgamma(n + 3.0) - 2.0 * std::lgamma(n + 1.0));
  }
  const double closed = specfun::laguerre(2, -x) * 2.0 * std::exp(x);
  EXPECT_NEAR(brute, closed, 1e-10 * closed);

  const FockState s = pacs(1.5, 2);
  EXPECT_EQ(s[0], complex{});
  EXPECT_EQ(s[1], complex{});
  EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
}

TEST(Nlcs, EigenstateOfDeformedLowering) {
  for (complex a : {complex(1.0, 0.0), complex(0.6, -1.2)}) {
    const KerrParams p(0.15);
    const FockState s = nlcs_eigenstate(a, p);
    const DeformedLadder l(p, s.dim());
    const auto as = l.annihilate(s.coefficients());
    double res = 0.0;
    // the top component is compared against a level that was cut away
    for (std::size_t n = 0; n + 1 < s.dim(); ++n) res += std::norm(as[n] - a * s[n]);
    EXPECT_LT(std::sqrt(res), 1e-8) << a;
  }
}

TEST(Nlcs, MatchesGenericFFactorialExpansion) {
  const KerrParams p(0.15);
  const FockState s = nlcs_eigenstate(1.0, p);
  std::vector<complex> g(s.dim());
  double norm = 0.0;
  for (std::size_t n = 0; n < s.dim(); ++n) {
    g[n] = 1.0 / (std::sqrt(std::tgamma(n + 1.0)) * specfun::f_factorial(n, p));
    norm += std::norm(g[n]);
  }
  for (std::size_t n = 0; n < s.dim(); ++n) {
    EXPECT_NEAR(std::abs(s[n] - g[n] / std::sqrt(norm)), 0.0, 1e-12) << n;
  }
  const FockState vac = nlcs_eigenstate(0.0, p);
  EXPECT_EQ(vac[0], complex(1.0, 0.0));
}

TEST(Docs, ClosedFormAndNormalization) {
  const KerrParams p(0.15);
  const complex a(1.1, 0.4);
  const FockState s = docs(a, p);
  const complex z = docs_zeta(a, p);
  EXPECT_LT(std::abs(z), 1.0);
  const double b = p.b();
  ASSERT_GT(s.dim(), 20u);
  for (std::size_t n = 0; n < s.dim(); ++n) {
    const double mag = std::pow(1.0 - std::norm(z), b / 2.0) *
                       std::sqrt(std::exp(specfun::log_pochhammer(b, n) - std::lgamma(n + 1.0))) *
                       std::pow(std::abs(z), static_cast<double>(n));
    const complex want = std::polar(mag, n * std::arg(z));
    EXPECT_NEAR(std::abs(s[n] - want), 0.0, 1e-13) << n;
  }
  EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
  EXPECT_GT(mandel_q(docs(3.0, p)), 1.0);
  EXPECT_EQ(docs(0.0, p)[0], complex(1.0, 0.0));
}

TEST(Dpancs, ReduceToSeedsAtMZero) {
  const KerrParams p(0.15);
  for (complex a : {complex(0.4, 0.0), complex(1.1, 0.7), complex(3.0, 0.0)}) {
    EXPECT_LT(max_abs_diff(dpancs_a(a, 0, p), nlcs_eigenstate(a, p)), 1e-13);
    EXPECT_LT(max_abs_diff(dpancs_d(a, 0, p), docs(a, p)), 1e-13);
  }
}

TEST(Dpancs, AlphaZeroGivesNumberState) {
  const KerrParams p(0.15);
  for (std::size_t m : {1u, 2u, 4u}) {
    for (const FockState& s : {dpancs_a(0.0, m, p), dpancs_d(0.0, m, p)}) {
      EXPECT_NEAR(std::abs(s[m]), 1.0, 1e-15);
      EXPECT_NEAR(mandel_q(s), 0.0, 1e-15);
    }
  }
}

TEST(Dpancs, MatchLadderOracle) {
  const KerrParams p(0.15);
  for (std::size_t m : {1u, 3u}) {
    const FockState a = dpancs_a(1.1, m, p);
    const FockState ao = oracle(a, nlcs_eigenstate(1.1, p, a.dim() - m), m, p);
    EXPECT_LT(max_abs_diff(a, ao), 1e-10) << "A m=" << m;

    const FockState d = dpancs_d(1.1, m, p);
    const FockState dd = oracle(d, docs(1.1, p, d.dim() - m), m, p);
    EXPECT_LT(max_abs_diff(d, dd), 1e-10) << "D m=" << m;
  }
}

TEST(Dpancs, PhotonAddedHaveNoLowLevels) {
  const KerrParams p(0.5);
  for (std::size_t m : {1u, 4u}) {
    for (const FockState& s : {pacs(1.1, m), dpancs_a(1.1, m, p), dpancs_d(1.1, m, p)}) {
      for (std::size_t k = 0; k < m; ++k) EXPECT_EQ(s[k], complex{});
    }
  }
}

TEST(AddPhotons, TrivialCases) {
  const KerrParams p(0.3);
  const FockState s = coherent(0.8, 40);
  const FockState same = add_photons(s, 0, DeformedLadder(p, 40));
  EXPECT_LT(max_abs_diff(s, same), 1e-15);
  const FockState two = add_photons(FockState::number(0, 5), 2, DeformedLadder(p, 5));
  EXPECT_NEAR(std::abs(two[2]), 1.0, 1e-15);
  EXPECT_THROW(add_photons(s, 1, DeformedLadder(p, 10)), DomainError);
}

TEST(Limits, UndeformedKerrMediumReducesToGlauberFamilies) {
  const KerrParams p(1e-9);
  for (complex a : {complex(0.7, 0.0), complex(1.5, -0.5)}) {
    EXPECT_LT(max_abs_diff(nlcs_eigenstate(a, p), coherent(a)), 1e-6);
    EXPECT_LT(max_abs_diff(dpancs_a(a, 1, p), pacs(a, 1)), 1e-6);
    EXPECT_LT(max_abs_diff(dpancs_a(a, 3, p), pacs(a, 3)), 1e-6);
  }
}

TEST(MakeState, ValidatesCombination) {
  EXPECT_THROW(make_state(Family::kDpancsA, 1.0, 1, std::nullopt), DomainError);
  EXPECT_THROW(make_state(Family::kCoherent, 1.0, 0, KerrParams(0.2)), DomainError);
  EXPECT_THROW(make_state(Family::kDocs, 1.0, 2, KerrParams(0.2)), DomainError);
  EXPECT_THROW(make_state(Family::kCustom, 1.0, 0, std::nullopt), DomainError);
  EXPECT_EQ(make_state(Family::kPacs, 1.0, 2, std::nullopt).label().family, Family::kPacs);
}

TEST(FamilyNames, RoundTrip) {
  for (Family f : {Family::kCoherent, Family::kPacs, Family::kNlcs, Family::kDocs,
                   Family::kDpancsA, Family::kDpancsD, Family::kCustom}) {
    EXPECT_EQ(family_from_string(to_string(f)), f);
  }
  EXPECT_THROW(family_from_string("squeezed"), DomainError);
}

TEST(Normalization, HeavyTailedDStateNeedsThousandsOfLevels) {
  const FockState s = dpancs_d(3.0, 4, KerrParams(0.5));
  EXPECT_GT(s.dim(), 2048u);
  EXPECT_NEAR(s.norm_squared(), 1.0, 1e-10);
  EXPECT_LT(s.tail_bound(), 1e-14);
}
