#include "rmt/weingarten.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>

#include "rmt/error.hpp"
#include "rmt/parallel.hpp"

namespace rmt {

Permutation identity_permutation(int n) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  require(a.size() == b.size(), "compose: size mismatch");
  Permutation c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[static_cast<std::size_t>(b[i])];
  return c;
}

Permutation inverse(const Permutation& p) {
  Permutation q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return q;
}

std::vector<int> cycle_lengths(const Permutation& p) {
  std::vector<char> seen(p.size(), 0);
  std::vector<int> out;
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (std::size_t i = s; !seen[i]; i = static_cast<std::size_t>(p[i])) {
      seen[i] = 1;
      ++len;
    }
    out.push_back(len);
  }
  return out;
}

int cycle_count(const Permutation& p) { return static_cast<int>(cycle_lengths(p).size()); }

std::vector<Permutation> all_permutations(int n) {
  require(n >= 1 && n <= 8, "all_permutations: n must lie in [1, 8]");
  std::vector<Permutation> out;
  Permutation p = identity_permutation(n);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Permutation parse_cycles(const std::string& text, int n) {
  require(n >= 1, "parse_cycles: n must be positive");
  Permutation p = identity_permutation(n);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    require(text[pos] == '(', "parse_cycles: expected '(' in '" + text + "'");
    ++pos;
    std::vector<int> cycle;
    for (;;) {
      skip_space();
      require(pos < text.size(), "parse_cycles: unterminated cycle in '" + text + "'");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      require(std::isdigit(static_cast<unsigned char>(text[pos])), "parse_cycles: bad character in '" + text + "'");
      int v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) v = 10 * v + (text[pos++] - '0');
      require(v >= 1 && v <= n, "parse_cycles: element " + std::to_string(v) + " outside 1.." + std::to_string(n));
      require(!used[static_cast<std::size_t>(v - 1)], "parse_cycles: element repeated in '" + text + "'");
      used[static_cast<std::size_t>(v - 1)] = 1;
      cycle.push_back(v - 1);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      p[static_cast<std::size_t>(cycle[k])] = cycle[(k + 1) % cycle.size()];
    skip_space();
  }
  return p;
}

std::string format_cycles(const Permutation& p) {
  std::ostringstream os;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    os << '(';
    bool first = true;
    for (std::size_t i = s; !seen[i]; i = static_cast<std::size_t>(p[i])) {
      seen[i] = 1;
      os << (first ? "" : " ") << i + 1;
      first = false;
    }
    os << ')';
  }
  return os.str();
}

double catalan(int k) {
  require(k >= 0, "catalan: k must be nonnegative");
  double c = 1.0;
  for (int i = 0; i < k; ++i) c = c * 2.0 * (2.0 * i + 1.0) / (i + 2.0);
  return std::round(c);
}

WeingartenTable::WeingartenTable(int n, int dim) : n_(n), dim_(dim) {
  require(n >= 1 && n <= kMaxWeingartenOrder, "weingarten: n must lie in [1, 5]");
  require(dim >= n, "weingarten: need N >= n for an invertible Gram matrix");
  perms_ = all_permutations(n);
  const auto m = static_cast<Eigen::Index>(perms_.size());
  // Class functions only depend on a b^{-1}; extended precision keeps the
  // inverse accurate when N^n spans several decades.
  using MatL = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  MatL g(m, m);
  for (Eigen::Index a = 0; a < m; ++a)
    for (Eigen::Index b = 0; b < m; ++b)
      g(a, b) = std::pow(static_cast<long double>(dim),
                         cycle_count(compose(perms_[a], inverse(perms_[b]))));
  const MatL ginv = g.fullPivLu().inverse();
  // Wg(gamma) = (G^{-1})_{gamma, id}; the identity is perms_[0].
  wg_.resize(perms_.size());
  for (Eigen::Index a = 0; a < m; ++a) wg_[static_cast<std::size_t>(a)] = static_cast<double>(ginv(a, 0));
}

std::size_t WeingartenTable::index_of(const Permutation& p) const {
  require(static_cast<int>(p.size()) == n_, "weingarten: permutation has the wrong size");
  auto it = std::lower_bound(perms_.begin(), perms_.end(), p);
  require(it != perms_.end() && *it == p, "weingarten: not a permutation");
  return static_cast<std::size_t>(it - perms_.begin());
}

double WeingartenTable::operator()(const Permutation& gamma) const { return wg_[index_of(gamma)]; }

double WeingartenTable::orthogonality_defect() const {
  double worst = 0.0;
  for (std::size_t a = 0; a < perms_.size(); ++a) {
    long double s = 0.0L;
    for (std::size_t b = 0; b < perms_.size(); ++b)
      s += std::pow(static_cast<long double>(dim_), cycle_count(compose(perms_[a], inverse(perms_[b])))) *
           static_cast<long double>(wg_[b]);
    const double target = a == 0 ? 1.0 : 0.0;
    worst = std::max(worst, std::abs(static_cast<double>(s) - target));
  }
  return worst;
}

double weingarten(const WeingartenQuery& q) {
  const WeingartenTable t(q.n, q.dim);
  return t(q.gamma);
}

double weingarten_asymptotic(const Permutation& gamma, int dim) {
  require(dim >= 1, "weingarten_asymptotic: N must be positive");
  const int n = static_cast<int>(gamma.size());
  double value = std::pow(static_cast<double>(dim), cycle_count(gamma) - 2 * n);
  for (int len : cycle_lengths(gamma)) value *= ((len - 1) % 2 ? -1.0 : 1.0) * catalan(len - 1);
  return value;
}

Eigen::MatrixXcd haar_unitary(int dim, Seed seed) {
  require(dim >= 1, "haar_unitary: N must be positive");
  const CounterStream stream(seed);
  Eigen::MatrixXcd z(dim, dim);
  const double s = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const auto [a, b] = stream.normals(static_cast<std::uint64_t>(i) * dim + j, 0);
      z(i, j) = {s * a, s * b};
    }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(dim, dim);
  const auto& r = qr.matrixQR();
  for (int k = 0; k < dim; ++k) {
    const std::complex<double> d = r(k, k);
    const double mag = std::abs(d);
    q.col(k) *= mag > 0.0 ? d / mag : std::complex<double>(1.0);
  }
  return q;
}

void HaarPattern::validate(int dim) const {
  const std::size_t n = i.size();
  require(n >= 1 && j.size() == n && ip.size() == n && jp.size() == n, "haar pattern: index lists must share length");
  for (const auto* v : {&i, &j, &ip, &jp})
    for (int x : *v) require(x >= 0 && x < dim, "haar pattern: index outside 0..N-1");
}

std::complex<double> haar_moment_exact(const HaarPattern& pattern, int dim) {
  pattern.validate(dim);
  const int n = pattern.order();
  const WeingartenTable table(n, dim);
  const auto& perms = table.permutations();
  double total = 0.0;
  for (const auto& alpha : perms) {
    bool rows = true;
    for (int k = 0; k < n && rows; ++k) rows = pattern.i[k] == pattern.ip[alpha[k]];
    if (!rows) continue;
    for (const auto& beta : perms) {
      bool cols = true;
      for (int k = 0; k < n && cols; ++k) cols = pattern.j[k] == pattern.jp[beta[k]];
      if (cols) total += table(compose(inverse(alpha), beta));
    }
  }
  return total;
}

HaarEstimate haar_moment_mc(const HaarPattern& pattern, int dim, std::size_t samples, Seed seed, unsigned threads) {
  pattern.validate(dim);
  require(samples >= 2, "haar_moment_mc: need at least two samples");
  std::vector<std::complex<double>> values(samples);
  parallel_for(samples, threads, [&](std::size_t s) {
    const Eigen::MatrixXcd u = haar_unitary(dim, derive_seed(seed, {static_cast<std::uint64_t>(dim), s}));
    std::complex<double> v = 1.0;
    for (int k = 0; k < pattern.order(); ++k)
      v *= u(pattern.i[k], pattern.j[k]) * std::conj(u(pattern.ip[k], pattern.jp[k]));
    values[s] = v;
  });
  HaarEstimate e;
  e.samples = samples;
  for (const auto& v : values) e.mean += v;
  e.mean /= static_cast<double>(samples);
  double vr = 0.0, vi = 0.0;
  for (const auto& v : values) {
    vr += (v.real() - e.mean.real()) * (v.real() - e.mean.real());
    vi += (v.imag() - e.mean.imag()) * (v.imag() - e.mean.imag());
  }
  const double denom = static_cast<double>(samples) * static_cast<double>(samples - 1);
  e.se_re = std::sqrt(vr / denom);
  e.se_im = std::sqrt(vi / denom);
  return e;
}

}  // namespace rmt
