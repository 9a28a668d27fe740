#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <vector>

#include <nlohmann/json.hpp>

#include "rmt/ensembles.hpp"
#include "rmt/error.hpp"

using namespace rmt;
using cd = std::complex<double>;

namespace {

EnsembleSpec make_spec(Beta beta, Index n, EntryLaw law) {
  EnsembleSpec s;
  s.beta = beta;
  s.dim = n;
  s.law = std::move(law);
  return s;
}

struct Moments {
  double mean = 0.0;
  double se = 0.0;
};

Moments moments_of(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m += x;
  m /= static_cast<double>(v.size());
  double ss = 0.0;
  for (double x : v) ss += (x - m) * (x - m);
  return {m, std::sqrt(ss / (v.size() - 1.0) / v.size())};
}

std::vector<double> offdiag_scaled(const HermitianMatrix& h) {
  std::vector<double> out;
  const double s = std::sqrt(static_cast<double>(h.dim()));
  for (Index i = 0; i < h.dim(); ++i)
    for (Index j = i + 1; j < h.dim(); ++j) out.push_back(s * h(i, j).real());
  return out;
}

}  // namespace

TEST(EntryLaw, RademacherTwoByTwo) {
  const HermitianMatrix h = sample_wigner(make_spec(Beta::Real, 2, EntryLaw::rademacher()), 42);
  EXPECT_DOUBLE_EQ(std::abs(h(0, 1).real()), 1.0 / std::sqrt(2.0));
  EXPECT_EQ(h(0, 1), h(1, 0));
}

TEST(EntryLaw, SampleMomentsMatchAnalytic) {
  const std::vector<EntryLaw> laws{EntryLaw::gaussian(), EntryLaw::rademacher(), EntryLaw::uniform(),
                                   EntryLaw::shifted_bernoulli(0.3),
                                   EntryLaw::custom({-2.0, -0.5, 0.0, 0.3, 1.0, 2.5})};
  const int n = 100000;
  for (const auto& law : laws) {
    const CounterStream stream(derive_seed(5, {static_cast<std::uint64_t>(law.name)}));
    std::vector<double> draws(n);
    for (int i = 0; i < n; ++i) draws[i] = law.draw(stream, static_cast<std::uint64_t>(i), 0);
    for (int k = 1; k <= 5; ++k) {
      std::vector<double> pw(n);
      for (int i = 0; i < n; ++i) pw[i] = std::pow(draws[i], k);
      const Moments m = moments_of(pw);
      EXPECT_NEAR(m.mean, law.offdiag_moments.at(k), 4.0 * m.se) << to_string(law.name) << " order " << k;
    }
  }
}

TEST(EntryLaw, CustomLawIsStandardised) {
  const EntryLaw law = EntryLaw::custom({0.0, 1.0, 5.0});
  EXPECT_NEAR(law.offdiag_moments.at(1), 0.0, 1e-12);
  EXPECT_NEAR(law.offdiag_moments.at(2), 1.0, 1e-12);
}

TEST(EntryLaw, JsonRoundTripAndErrors) {
  const EntryLaw law = entry_law_from_json(nlohmann::json{{"name", "shifted-bernoulli"}, {"params", {0.25}}});
  EXPECT_EQ(law.name, LawName::ShiftedBernoulli);
  const EntryLaw again = entry_law_from_json(to_json(law));
  EXPECT_EQ(again.offdiag_moments, law.offdiag_moments);
  EXPECT_THROW(entry_law_from_json(nlohmann::json{{"name", "cauchy"}}), ValidationError);
  EXPECT_THROW(entry_law_from_json(nlohmann::json{{"name", "rademacher"}, {"params", {1.0}}}), ValidationError);
  EXPECT_THROW(make_spec(Beta::Complex, 4, EntryLaw::custom({-1.0, 0.0, 1.0})).validate(), ValidationError);
  EXPECT_THROW(make_spec(Beta::Real, 1, EntryLaw::gaussian()).validate(), ValidationError);
}

TEST(SampleWigner, ExactSymmetryAndDeterminism) {
  for (Beta b : {Beta::Real, Beta::Complex}) {
    const auto spec = make_spec(b, 30, EntryLaw::uniform());
    const HermitianMatrix h = sample_wigner(spec, 3);
    EXPECT_EQ(h.hermiticity_defect(), 0.0);
    for (Index i = 0; i < 30; ++i) EXPECT_EQ(h(i, i).imag(), 0.0);
    EXPECT_TRUE(h == sample_wigner(spec, 3));
    EXPECT_FALSE(h == sample_wigner(spec, 4));
  }
}

TEST(SampleGaussian, GueOffDiagonalSecondMoments) {
  // About 10^5 off-diagonal entries of one N = 450 matrix.
  const HermitianMatrix h = sample_gaussian(Beta::Complex, 450, 8);
  std::vector<double> abs2, re2, im2;
  for (Index i = 0; i < 450; ++i)
    for (Index j = i + 1; j < 450; ++j) {
      const cd v = std::sqrt(450.0) * h(i, j);
      abs2.push_back(std::norm(v));
      re2.push_back((v * v).real());
      im2.push_back((v * v).imag());
    }
  const Moments a = moments_of(abs2), r = moments_of(re2), m = moments_of(im2);
  EXPECT_NEAR(a.mean, 1.0, 3.0 * a.se);
  EXPECT_NEAR(r.mean, 0.0, 3.0 * r.se);
  EXPECT_NEAR(m.mean, 0.0, 3.0 * m.se);
}

TEST(SampleGaussian, GoeDiagonalVariance) {
  std::vector<double> d2;
  for (int s = 0; s < 1000; ++s) {
    const HermitianMatrix h = sample_gaussian(Beta::Real, 100, derive_seed(9, {static_cast<std::uint64_t>(s)}));
    for (Index i = 0; i < 100; ++i) d2.push_back(100.0 * std::norm(h(i, i)));
  }
  const Moments m = moments_of(d2);
  EXPECT_NEAR(m.mean, 2.0, 3.0 * m.se);
}

TEST(SampleWigner, UniformFourthCumulant) {
  const auto draws = offdiag_scaled(sample_wigner(make_spec(Beta::Real, 500, EntryLaw::uniform()), 21));
  const CumulantTable t = sample_cumulants(draws, 4);
  EXPECT_EQ(t.source, CumulantSource::Sample);
  EXPECT_EQ(t.sample_count, draws.size());
  // Delta-method standard error of k4 for a standardised variable.
  std::vector<double> infl(draws.size());
  for (std::size_t i = 0; i < draws.size(); ++i) infl[i] = std::pow(draws[i], 4) - 6.0 * draws[i] * draws[i];
  const double se = moments_of(infl).se;
  EXPECT_NEAR(t.order_k(4), -6.0 / 5.0, 4.0 * se);
}

TEST(Cumulants, AnalyticValues) {
  const CumulantTable g = cumulants(EntryLaw::gaussian(), Beta::Real, 8);
  for (int k = 3; k <= 8; ++k) EXPECT_NEAR(g.order_k(k), 0.0, 1e-12);
  EXPECT_NEAR(cumulants(EntryLaw::rademacher(), Beta::Real, 4).order_k(4), -2.0, 1e-12);
  EXPECT_NEAR(cumulants(EntryLaw::uniform(), Beta::Real, 4).order_k(4), -1.2, 1e-12);
  const double p = 0.2;
  EXPECT_NEAR(cumulants(EntryLaw::shifted_bernoulli(p), Beta::Real, 3).order_k(3),
              (1.0 - 2.0 * p) / std::sqrt(p * (1.0 - p)), 1e-12);
  EXPECT_NEAR(g.order_k(1), 0.0, 1e-15);
  EXPECT_NEAR(g.order_k(2), 1.0, 1e-15);
}

TEST(Cumulants, ComplexTableByMultilinearity) {
  // h = (X + iY)/sqrt 2 with X, Y iid: only pure-X and pure-Y terms survive,
  // so c^(p,q) = 2^{-k/2} kappa_k (1 + i^p (-i)^q).
  for (const auto& law : {EntryLaw::gaussian(), EntryLaw::rademacher(), EntryLaw::uniform()}) {
    const CumulantTable real = cumulants(law, Beta::Real, 6);
    const CumulantTable c = cumulants(law, Beta::Complex, 6);
    for (int k = 1; k <= 6; ++k)
      for (int p = 0; p <= k; ++p) {
        const int q = k - p;
        const cd expect = std::pow(2.0, -k / 2.0) * real.order_k(k) * (1.0 + std::pow(cd(0, 1), p) * std::pow(cd(0, -1), q));
        EXPECT_NEAR(std::abs(c.pq(p, q) - expect), 0.0, 1e-12) << to_string(law.name) << " " << p << "," << q;
      }
    EXPECT_NEAR(c.pq(1, 1).real(), 1.0, 1e-12);
    EXPECT_NEAR(std::abs(c.pq(1, 0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(c.pq(2, 0)), 0.0, 1e-15);
  }
  EXPECT_NEAR(cumulants(EntryLaw::rademacher(), Beta::Complex, 4).pq(2, 2).real(), -1.0, 1e-12);
}

TEST(Cumulants, ComplexSampleCumulants) {
  const CounterStream s(77);
  const EntryLaw law = EntryLaw::rademacher();
  std::vector<cd> draws(200000);
  for (std::size_t i = 0; i < draws.size(); ++i)
    draws[i] = cd(law.draw(s, i, 0), law.draw(s, i, 1)) / std::sqrt(2.0);
  const CumulantTable t = sample_cumulants(draws, 4);
  EXPECT_NEAR(t.pq(1, 1).real(), 1.0, 0.01);
  EXPECT_NEAR(t.pq(2, 2).real(), -1.0, 0.03);
  EXPECT_NEAR(std::abs(t.pq(3, 1)), 0.0, 0.03);
}

TEST(Flow, CumulantScaling) {
  const CumulantTable c0 = cumulants(EntryLaw::shifted_bernoulli(0.3), Beta::Real, 6);
  const double t = 0.7;
  const CumulantTable ct = flow_cumulants(c0, t);
  EXPECT_DOUBLE_EQ(ct.order_k(2), c0.order_k(2));
  for (int k = 3; k <= 6; ++k) EXPECT_NEAR(ct.order_k(k), std::exp(-k * t / 2.0) * c0.order_k(k), 1e-12);
}

TEST(Flow, SampleFourthCumulantFollowsScaling) {
  const double t = 0.5;
  const auto spec = make_spec(Beta::Real, 400, EntryLaw::rademacher());
  const HermitianMatrix h0 = sample_wigner(spec, 31);
  const HermitianMatrix ht = interpolate_flow(h0, FlowPoint{t, 31, 32});
  const auto draws = offdiag_scaled(ht);
  std::vector<double> infl(draws.size());
  for (std::size_t i = 0; i < draws.size(); ++i) infl[i] = std::pow(draws[i], 4) - 6.0 * draws[i] * draws[i];
  const double se = moments_of(infl).se;
  EXPECT_NEAR(sample_cumulants(draws, 4).order_k(4), -2.0 * std::exp(-2.0 * t), 4.0 * se);
}

TEST(Flow, EndpointsAndCoupling) {
  const Index n = 50;
  const auto spec = make_spec(Beta::Complex, n, EntryLaw::rademacher());
  const HermitianMatrix h0 = sample_wigner(spec, 1);
  const HermitianMatrix g = flow_gaussian(Beta::Complex, n, 2);
  EXPECT_TRUE(interpolate_flow(h0, FlowPoint{0.0, 1, 2}) == h0);
  EXPECT_THROW(interpolate_flow(h0, FlowPoint{-0.1, 1, 2}), ValidationError);

  const double tt = 8.0 * std::log(static_cast<double>(n));
  const HermitianMatrix end = interpolate_flow(h0, g, tt);
  EXPECT_LE(max_abs_difference(end, linear_combination(0.0, h0, std::sqrt(-std::expm1(-tt)), g)),
            std::exp(-tt / 2.0) * h0.max_abs() * (1.0 + 1e-12) + 1e-15);
  EXPECT_LE(max_abs_difference(end, g), std::pow(static_cast<double>(n), -4.0) * h0.max_abs() + 1e-15 + std::exp(-tt) * g.max_abs());

  const double t1 = 0.3, t2 = 1.1;
  const HermitianMatrix a = interpolate_flow(h0, FlowPoint{t1, 1, 2});
  const HermitianMatrix b = interpolate_flow(h0, FlowPoint{t2, 1, 2});
  const double bound = (std::exp(-t1 / 2) - std::exp(-t2 / 2)) * h0.max_abs() +
                       std::abs(std::sqrt(1 - std::exp(-t2)) - std::sqrt(1 - std::exp(-t1))) * g.max_abs();
  EXPECT_LE(max_abs_difference(a, b), bound * (1.0 + 1e-12));
  EXPECT_TRUE(interpolate_flow(h0, FlowPoint{t1, 1, 2}) == a);
  EXPECT_EQ(b.hermiticity_defect(), 0.0);
}

TEST(Flow, EntryVarianceIsPreserved) {
  const Index n = 300;
  const auto spec = make_spec(Beta::Real, n, EntryLaw::shifted_bernoulli(0.2));
  const HermitianMatrix h0 = sample_wigner(spec, 5);
  const HermitianMatrix g = flow_gaussian(Beta::Real, n, 6);
  for (double t : {0.0, 0.5, 2.0, 6.0}) {
    const auto v = offdiag_scaled(interpolate_flow(h0, g, t));
    std::vector<double> sq(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) sq[i] = v[i] * v[i];
    const Moments m = moments_of(sq);
    EXPECT_NEAR(m.mean, 1.0, 4.0 * m.se) << "t=" << t;
  }
}
