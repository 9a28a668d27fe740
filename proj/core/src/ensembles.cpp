#include "rmt/ensembles.hpp"

#include <bit>
#include <cmath>
#include <functional>
#include <nlohmann/json.hpp>

#include "rmt/error.hpp"
#include "rmt/quadrature.hpp"

namespace rmt {

namespace {

constexpr std::uint64_t kFlowDomain = 0x464C4F57ull;  // "FLOW"

double double_factorial_odd(int k) {
  double r = 1.0;
  for (int j = k - 1; j > 1; j -= 2) r *= j;
  return r;
}

std::map<int, double> moments_from(const std::function<double(int)>& m) {
  std::map<int, double> out;
  for (int k = 1; k <= EntryLaw::kMaxMomentOrder; ++k) out[k] = m(k);
  return out;
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// kappa_n = m_n - sum_{k<n} C(n-1, k-1) kappa_k m_{n-k}
std::vector<double> cumulants_from_moments(const std::vector<double>& m, int max_order) {
  std::vector<double> kappa(max_order + 1, 0.0);
  for (int n = 1; n <= max_order; ++n) {
    double v = m[n];
    for (int k = 1; k < n; ++k) v -= binomial(n - 1, k - 1) * kappa[k] * m[n - k];
    kappa[n] = v;
  }
  return kappa;
}

std::complex<double> i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

std::string to_string(LawName name) {
  switch (name) {
    case LawName::Gaussian: return "gaussian";
    case LawName::Rademacher: return "rademacher";
    case LawName::Uniform: return "uniform";
    case LawName::ShiftedBernoulli: return "shifted-bernoulli";
    case LawName::Custom: return "custom";
  }
  return "unknown";
}

LawName law_name_from_string(const std::string& name) {
  if (name == "gaussian") return LawName::Gaussian;
  if (name == "rademacher") return LawName::Rademacher;
  if (name == "uniform") return LawName::Uniform;
  if (name == "shifted-bernoulli") return LawName::ShiftedBernoulli;
  if (name == "custom") return LawName::Custom;
  throw ValidationError("unknown entry law '" + name + "'");
}

EntryLaw EntryLaw::gaussian() {
  EntryLaw law;
  law.name = LawName::Gaussian;
  law.offdiag_moments = moments_from([](int k) { return k % 2 ? 0.0 : double_factorial_odd(k); });
  return law;
}

EntryLaw EntryLaw::rademacher() {
  EntryLaw law;
  law.name = LawName::Rademacher;
  law.offdiag_moments = moments_from([](int k) { return k % 2 ? 0.0 : 1.0; });
  return law;
}

EntryLaw EntryLaw::uniform() {
  EntryLaw law;
  law.name = LawName::Uniform;
  law.offdiag_moments =
      moments_from([](int k) { return k % 2 ? 0.0 : std::pow(3.0, 0.5 * k) / (k + 1); });
  return law;
}

EntryLaw EntryLaw::shifted_bernoulli(double p) {
  require(p > 0.0 && p < 1.0, "shifted-bernoulli: p must lie in (0, 1)");
  EntryLaw law;
  law.name = LawName::ShiftedBernoulli;
  law.parameters = {p};
  const double a = std::sqrt((1.0 - p) / p);
  const double b = -std::sqrt(p / (1.0 - p));
  law.offdiag_moments =
      moments_from([=](int k) { return p * std::pow(a, k) + (1.0 - p) * std::pow(b, k); });
  // Exact by construction; the pow() rounding would otherwise leak in.
  law.offdiag_moments[1] = 0.0;
  law.offdiag_moments[2] = 1.0;
  return law;
}

EntryLaw EntryLaw::custom(std::vector<double> quantiles, bool complex_capable) {
  require(quantiles.size() >= 2, "custom law: need at least two quantile values");
  for (std::size_t i = 0; i < quantiles.size(); ++i) {
    require(std::isfinite(quantiles[i]), "custom law: quantiles must be finite");
    if (i > 0) require(quantiles[i] >= quantiles[i - 1], "custom law: quantiles must be nondecreasing");
  }
  const QuadratureNodes gl = gauss_legendre(8, 0.0, 1.0);
  const std::size_t pieces = quantiles.size() - 1;
  // E[Q(U)^k] for the piecewise-linear Q; 8 points are exact to degree 15.
  auto raw_moment = [&](const std::vector<double>& q, int k) {
    double s = 0.0;
    for (std::size_t i = 0; i < pieces; ++i)
      for (std::size_t g = 0; g < gl.size(); ++g) {
        const double x = q[i] + (q[i + 1] - q[i]) * gl.nodes[g];
        s += gl.weights[g] * std::pow(x, k);
      }
    return s / static_cast<double>(pieces);
  };
  const double mean = raw_moment(quantiles, 1);
  const double var = raw_moment(quantiles, 2) - mean * mean;
  require(var > 1e-300, "custom law: degenerate (zero variance) table");
  const double sd = std::sqrt(var);
  for (double& q : quantiles) q = (q - mean) / sd;

  EntryLaw law;
  law.name = LawName::Custom;
  law.parameters = quantiles;
  law.complex_capable = complex_capable;
  law.offdiag_moments = moments_from([&](int k) { return raw_moment(quantiles, k); });
  law.offdiag_moments[1] = 0.0;
  law.offdiag_moments[2] = 1.0;
  law.table_ = std::move(quantiles);
  return law;
}

double EntryLaw::quantile(double u) const {
  switch (name) {
    case LawName::Gaussian:
      throw ValidationError("quantile: the gaussian law is sampled by Box-Muller");
    case LawName::Rademacher:
      return u < 0.5 ? -1.0 : 1.0;
    case LawName::Uniform:
      return std::sqrt(3.0) * (2.0 * u - 1.0);
    case LawName::ShiftedBernoulli: {
      const double p = parameters.at(0);
      return u < p ? std::sqrt((1.0 - p) / p) : -std::sqrt(p / (1.0 - p));
    }
    case LawName::Custom: {
      const double pos = u * static_cast<double>(table_.size() - 1);
      const auto i = std::min<std::size_t>(static_cast<std::size_t>(pos), table_.size() - 2);
      const double f = pos - static_cast<double>(i);
      return table_[i] + f * (table_[i + 1] - table_[i]);
    }
  }
  throw ValidationError("quantile: unknown law");
}

double EntryLaw::draw(const CounterStream& stream, std::uint64_t index, std::uint64_t lane) const {
  if (name == LawName::Gaussian) return stream.normals(index, lane).first;
  return quantile(stream.uniforms(index, lane).first);
}

double EntryLaw::diagonal_variance(Beta beta) const {
  return diag_variance.value_or(2.0 / as_int(beta));
}

EntryLaw entry_law_from_json(const nlohmann::json& j) {
  require(j.is_object(), "entry law: expected a JSON object");
  require(j.contains("name") && j["name"].is_string(), "entry law: missing string field 'name'");
  const LawName name = law_name_from_string(j["name"].get<std::string>());
  std::vector<double> params;
  if (j.contains("params")) {
    require(j["params"].is_array(), "entry law: 'params' must be an array");
    for (const auto& v : j["params"]) {
      require(v.is_number(), "entry law: 'params' must hold numbers");
      params.push_back(v.get<double>());
    }
  }
  EntryLaw law;
  switch (name) {
    case LawName::Gaussian: law = EntryLaw::gaussian(); break;
    case LawName::Rademacher: law = EntryLaw::rademacher(); break;
    case LawName::Uniform: law = EntryLaw::uniform(); break;
    case LawName::ShiftedBernoulli:
      require(params.size() == 1, "shifted-bernoulli: expects params [p]");
      law = EntryLaw::shifted_bernoulli(params[0]);
      break;
    case LawName::Custom: {
      bool complex = false;
      if (j.contains("complex")) {
        require(j["complex"].is_boolean(), "entry law: 'complex' must be a boolean");
        complex = j["complex"].get<bool>();
      }
      law = EntryLaw::custom(params, complex);
      break;
    }
  }
  if (name != LawName::Custom && name != LawName::ShiftedBernoulli)
    require(params.empty(), "entry law '" + to_string(name) + "' takes no params");
  if (j.contains("diag_variance")) {
    require(j["diag_variance"].is_number(), "entry law: 'diag_variance' must be a number");
    const double v = j["diag_variance"].get<double>();
    require(v > 0.0 && std::isfinite(v), "entry law: 'diag_variance' must be positive");
    law.diag_variance = v;
  }
  return law;
}

nlohmann::json to_json(const EntryLaw& law) {
  nlohmann::json j;
  j["name"] = to_string(law.name);
  j["params"] = law.parameters;
  if (law.diag_variance) j["diag_variance"] = *law.diag_variance;
  if (law.name == LawName::Custom) j["complex"] = law.complex_capable;
  return j;
}

void EnsembleSpec::validate() const {
  require(dim >= 2, "ensemble: dim must be at least 2");
  require(beta == Beta::Real || beta == Beta::Complex, "ensemble: beta must be 1 or 2");
  if (beta == Beta::Complex)
    require(law.complex_capable,
            "ensemble: beta=2 needs a complex-capable law ('" + to_string(law.name) + "' is real only)");
  for (int k = 1; k <= EntryLaw::kMaxMomentOrder; ++k) {
    auto it = law.offdiag_moments.find(k);
    require(it != law.offdiag_moments.end() && std::isfinite(it->second),
            "ensemble: law is missing moment of order " + std::to_string(k));
  }
  require(std::abs(law.offdiag_moments.at(1)) < 1e-12, "ensemble: law must be centred");
  require(std::abs(law.offdiag_moments.at(2) - 1.0) < 1e-12, "ensemble: law must have unit variance");
  require(law.diagonal_variance(beta) > 0.0, "ensemble: diagonal variance must be positive");
}

HermitianMatrix sample_wigner(const EnsembleSpec& spec, Seed seed) {
  spec.validate();
  const CounterStream stream(seed);
  const Index n = spec.dim;
  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
  const double diag_scale = std::sqrt(spec.law.diagonal_variance(spec.beta)) * inv_sqrt_n;
  const auto un = static_cast<std::uint64_t>(n);
  if (spec.beta == Beta::Real) {
    RealMatrix h(n, n);
    for (Index i = 0; i < n; ++i) {
      const std::uint64_t row = static_cast<std::uint64_t>(i) * un;
      h(i, i) = diag_scale * spec.law.draw(stream, row + i, 0);
      for (Index j = i + 1; j < n; ++j) {
        const double v = inv_sqrt_n * spec.law.draw(stream, row + j, 0);
        h(i, j) = v;
        h(j, i) = v;
      }
    }
    return HermitianMatrix(std::move(h));
  }
  const double off_scale = inv_sqrt_n / std::sqrt(2.0);
  ComplexMatrix h(n, n);
  for (Index i = 0; i < n; ++i) {
    const std::uint64_t row = static_cast<std::uint64_t>(i) * un;
    h(i, i) = {diag_scale * spec.law.draw(stream, row + i, 0), 0.0};
    for (Index j = i + 1; j < n; ++j) {
      const std::complex<double> v(off_scale * spec.law.draw(stream, row + j, 0),
                                   off_scale * spec.law.draw(stream, row + j, 1));
      h(i, j) = v;
      h(j, i) = std::conj(v);
    }
  }
  return HermitianMatrix(std::move(h));
}

HermitianMatrix sample_gaussian(Beta beta, Index dim, Seed seed) {
  EnsembleSpec spec;
  spec.beta = beta;
  spec.dim = dim;
  spec.law = EntryLaw::gaussian();
  return sample_wigner(spec, seed);
}

HermitianMatrix flow_gaussian(Beta beta, Index dim, Seed gaussian_seed) {
  return sample_gaussian(beta, dim, derive_seed(gaussian_seed, {kFlowDomain}));
}

HermitianMatrix interpolate_flow(const HermitianMatrix& h0, const FlowPoint& point) {
  require(point.t >= 0.0, "interpolate_flow: t must be nonnegative");
  if (point.t == 0.0) return h0;
  return interpolate_flow(h0, flow_gaussian(h0.beta(), h0.dim(), point.gaussian_seed), point.t);
}

HermitianMatrix interpolate_flow(const HermitianMatrix& h0, const HermitianMatrix& g, double t) {
  require(t >= 0.0 && std::isfinite(t), "interpolate_flow: t must be nonnegative");
  if (t == 0.0) return h0;
  return linear_combination(std::exp(-0.5 * t), h0, std::sqrt(-std::expm1(-t)), g);
}

double CumulantTable::order_k(int k) const {
  auto it = real.find(k);
  require(it != real.end(), "cumulant table: order " + std::to_string(k) + " not present");
  return it->second;
}

std::complex<double> CumulantTable::pq(int p, int q) const {
  auto it = complex.find({p, q});
  require(it != complex.end(),
          "cumulant table: (" + std::to_string(p) + "," + std::to_string(q) + ") not present");
  return it->second;
}

CumulantTable cumulants(const EntryLaw& law, Beta beta, int max_order) {
  require(max_order >= 1, "cumulants: max_order must be positive");
  require(max_order <= EntryLaw::kMaxMomentOrder,
          "cumulants: moments stored only up to order " + std::to_string(EntryLaw::kMaxMomentOrder));
  std::vector<double> m(max_order + 1, 1.0);
  for (int k = 1; k <= max_order; ++k) {
    auto it = law.offdiag_moments.find(k);
    require(it != law.offdiag_moments.end(), "cumulants: missing moment of order " + std::to_string(k));
    m[k] = it->second;
  }
  const std::vector<double> kappa = cumulants_from_moments(m, max_order);
  CumulantTable table;
  table.beta = beta;
  table.source = CumulantSource::Analytic;
  if (beta == Beta::Real) {
    for (int k = 1; k <= max_order; ++k) table.real[k] = kappa[k];
    return table;
  }
  require(law.complex_capable, "cumulants: law has no complex variant");
  // h = (X + iY)/sqrt 2: only the pure-X and pure-Y joint cumulants survive.
  for (int k = 1; k <= max_order; ++k)
    for (int q = 0; q <= k; ++q) {
      const int p = k - q;
      const double sign = q % 2 ? -1.0 : 1.0;
      table.complex[{p, q}] = std::pow(2.0, -0.5 * k) * kappa[k] * (1.0 + sign * i_power(k));
    }
  return table;
}

CumulantTable flow_cumulants(const CumulantTable& table, double t) {
  require(t >= 0.0, "flow_cumulants: t must be nonnegative");
  CumulantTable out = table;
  for (auto& [k, v] : out.real)
    if (k >= 3) v *= std::exp(-0.5 * k * t);
  for (auto& [pq, v] : out.complex) {
    const int k = pq.first + pq.second;
    if (k >= 3) v *= std::exp(-0.5 * k * t);
  }
  return out;
}

CumulantTable sample_cumulants(const std::vector<double>& draws, int max_order) {
  require(!draws.empty(), "sample_cumulants: no draws");
  require(max_order >= 1 && max_order <= 10, "sample_cumulants: order must lie in [1, 10]");
  std::vector<double> m(max_order + 1, 0.0);
  m[0] = 1.0;
  for (double x : draws) {
    double p = 1.0;
    for (int k = 1; k <= max_order; ++k) m[k] += (p *= x);
  }
  for (int k = 1; k <= max_order; ++k) m[k] /= static_cast<double>(draws.size());
  const std::vector<double> kappa = cumulants_from_moments(m, max_order);
  CumulantTable table;
  table.beta = Beta::Real;
  table.source = CumulantSource::Sample;
  table.sample_count = draws.size();
  for (int k = 1; k <= max_order; ++k) table.real[k] = kappa[k];
  return table;
}

CumulantTable sample_cumulants(const std::vector<std::complex<double>>& draws, int max_order) {
  require(!draws.empty(), "sample_cumulants: no draws");
  require(max_order >= 1 && max_order <= 8, "sample_cumulants: order must lie in [1, 8]");
  // mixed[a][b] = mean h^a conj(h)^b
  std::vector<std::vector<std::complex<double>>> mixed(
      max_order + 1, std::vector<std::complex<double>>(max_order + 1, 0.0));
  for (const auto& h : draws) {
    std::complex<double> pa = 1.0;
    for (int a = 0; a <= max_order; ++a) {
      std::complex<double> pb = pa;
      for (int b = 0; a + b <= max_order; ++b) {
        mixed[a][b] += pb;
        pb *= std::conj(h);
      }
      pa *= h;
    }
  }
  for (auto& row : mixed)
    for (auto& v : row) v /= static_cast<double>(draws.size());

  CumulantTable table;
  table.beta = Beta::Complex;
  table.source = CumulantSource::Sample;
  table.sample_count = draws.size();
  for (int k = 1; k <= max_order; ++k)
    for (int q = 0; q <= k; ++q) {
      const int p = k - q;
      const std::uint32_t first = (1u << p) - 1u;
      table.complex[{p, q}] = joint_cumulant<std::complex<double>>(k, [&](std::uint32_t mask) {
        const int a = std::popcount(mask & first);
        const int b = std::popcount(mask & ~first);
        return mixed[a][b];
      });
    }
  return table;
}

}  // namespace rmt
