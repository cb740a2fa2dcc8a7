#include "dotoep/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstring>
#include <future>
#include <mutex>
#include <shared_mutex>
#include <thread>
#include <unordered_map>

#include <unsupported/Eigen/FFT>

#include "dotoep/quadrature.hpp"

namespace dotoep {

std::string engine_name(Engine e) {
  switch (e) {
    case Engine::kQuadrature: return "quadrature";
    case Engine::kFftSampling: return "fft-sampling";
    case Engine::kClosedForm: return "closed-form";
  }
  return "unknown";
}

Engine engine_from_name(const std::string& name) {
  if (name == "quadrature") return Engine::kQuadrature;
  if (name == "fft-sampling" || name == "fft") return Engine::kFftSampling;
  if (name == "closed-form") return Engine::kClosedForm;
  throw ConfigError("unknown engine: " + name);
}

PowerSymbol::PowerSymbol(double a) : alpha(a) {
  if (!(a >= 0.0 && a <= 1.0)) {
    throw std::invalid_argument("PowerSymbol: alpha must lie in [0,1]");
  }
}

double PowerSymbol::operator()(double theta) const {
  const double t = std::abs(theta);
  if (t == 0.0) return 0.0;
  return std::pow(t, 2.0 - alpha);
}

CutoffSymbol::CutoffSymbol(int order, double a) : n(order), alpha(a) {
  if (order < 1) throw std::invalid_argument("CutoffSymbol: n must be >= 1");
  if (!(a >= 0.0 && a <= 1.0)) {
    throw std::invalid_argument("CutoffSymbol: alpha must lie in [0,1]");
  }
}

double CutoffSymbol::operator()(double theta) const {
  const double t = std::abs(theta);
  const double hh = h();
  if (t > hh || alpha == 0.0) return 0.0;
  if (t == 0.0) return 0.0;
  return std::pow(t, 2.0 - alpha) * std::pow(hh, alpha) - t * t;
}

AggregateSymbol::AggregateSymbol(std::vector<double> weights, std::vector<double> alphas)
    : weights_(std::move(weights)), alphas_(std::move(alphas)) {
  if (weights_.empty() || weights_.size() != alphas_.size()) {
    throw std::invalid_argument("AggregateSymbol: weights/exponents must be non-empty and equal length");
  }
  for (double w : weights_) {
    if (!(w > 0.0)) throw std::invalid_argument("AggregateSymbol: weights must be strictly positive");
  }
  for (double a : alphas_) {
    if (!(a >= 0.0 && a <= 1.0)) {
      throw std::invalid_argument("AggregateSymbol: exponent deficits must lie in [0,1]");
    }
  }
}

AggregateSymbol AggregateSymbol::canonical(int n) {
  if (n < 1) throw std::invalid_argument("AggregateSymbol: n must be >= 1");
  const double h = 1.0 / n;
  std::vector<double> w(n), a(n);
  for (int j = 0; j < n; ++j) {
    a[j] = j * h;
    w[j] = std::pow(h, j * h);
  }
  return AggregateSymbol(std::move(w), std::move(a));
}

AggregateSymbol AggregateSymbol::weighted(int n, const std::vector<double>& c) {
  if (static_cast<int>(c.size()) != n) {
    throw std::invalid_argument("AggregateSymbol: need exactly n weights c_j");
  }
  AggregateSymbol base = canonical(n);
  for (int j = 0; j < n; ++j) base.weights_[j] *= c[j];
  return base;
}

AggregateSymbol AggregateSymbol::weighted(int n, const std::vector<double>& c,
                                          const std::vector<double>& d) {
  if (static_cast<int>(d.size()) != n) {
    throw std::invalid_argument("AggregateSymbol: need exactly n weights d_j");
  }
  AggregateSymbol base = weighted(n, c);
  for (int j = 0; j < n; ++j) base.weights_[j] *= d[j];
  return base;
}

double AggregateSymbol::operator()(double theta) const {
  if (std::abs(theta) > M_PI * (1.0 + 1e-12)) {
    throw std::invalid_argument("AggregateSymbol: |theta| must be <= pi");
  }
  const double t = std::abs(theta);
  if (t == 0.0) return 0.0;
  double sum = 0.0;
  for (size_t j = 0; j < weights_.size(); ++j) {
    sum += weights_[j] * std::pow(t, 2.0 - alphas_[j]);
  }
  return sum;
}

double eval_aggregate(const AggregateSymbol& sym, double theta) { return sym(theta); }

double fourier_coeff_eta(int k) {
  if (k < 0) throw std::invalid_argument("fourier_coeff_eta: k must be >= 0");
  if (k == 0) return M_PI * M_PI / 3.0;
  const double s = (k % 2 == 0) ? 1.0 : -1.0;  // cos(pi k); sin(pi k) = 0
  return 2.0 * s / (static_cast<double>(k) * k);
}

double power_coeff_zero(double alpha) {
  return std::pow(M_PI, 2.0 - alpha) / (3.0 - alpha);
}

double fourier_coeff_power(double alpha, int k, double tol) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("fourier_coeff_power: alpha must lie in [0,1]");
  }
  if (k < 0) throw std::invalid_argument("fourier_coeff_power: k must be >= 0");
  if (!(tol > 0.0)) throw std::invalid_argument("fourier_coeff_power: tol must be > 0");
  const double s = 2.0 - alpha;
  const double value =
      quad::integrate_cos([s](double t) { return std::pow(t, s); }, k, tol * M_PI);
  return value / M_PI;
}

namespace {

struct CoeffKey {
  std::uint64_t alpha_bits;
  std::int64_t k;
  std::uint64_t tol_bits;
  bool operator==(const CoeffKey& o) const {
    return alpha_bits == o.alpha_bits && k == o.k && tol_bits == o.tol_bits;
  }
};

struct CoeffKeyHash {
  size_t operator()(const CoeffKey& key) const {
    std::uint64_t x = key.alpha_bits * 0x9e3779b97f4a7c15ULL;
    x ^= static_cast<std::uint64_t>(key.k) + 0x9e3779b97f4a7c15ULL + (x << 6) + (x >> 2);
    x ^= key.tol_bits + 0x9e3779b97f4a7c15ULL + (x << 6) + (x >> 2);
    return static_cast<size_t>(x);
  }
};

std::uint64_t double_bits(double v) {
  std::uint64_t out;
  std::memcpy(&out, &v, sizeof(out));
  return out;
}

std::shared_mutex g_cache_mutex;
std::unordered_map<CoeffKey, double, CoeffKeyHash> g_coeff_cache;

}  // namespace

double fourier_coeff_power_cached(double alpha, int k, double tol) {
  const CoeffKey key{double_bits(alpha), k, double_bits(tol)};
  {
    std::shared_lock lock(g_cache_mutex);
    auto it = g_coeff_cache.find(key);
    if (it != g_coeff_cache.end()) return it->second;
  }
  const double value = fourier_coeff_power(alpha, k, tol);
  {
    std::unique_lock lock(g_cache_mutex);
    g_coeff_cache.emplace(key, value);
  }
  return value;
}

void clear_coeff_cache() {
  std::unique_lock lock(g_cache_mutex);
  g_coeff_cache.clear();
}

std::vector<std::vector<double>> power_coeff_table(const std::vector<double>& alphas,
                                                   int num_k, double tol, bool parallel) {
  const int rows = static_cast<int>(alphas.size());
  std::vector<std::vector<double>> table(static_cast<size_t>(rows));
  auto fill_range = [&](int begin, int end) {
    for (int j = begin; j < end; ++j) {
      auto& row = table[static_cast<size_t>(j)];
      row.resize(static_cast<size_t>(num_k));
      for (int k = 0; k < num_k; ++k) {
        row[static_cast<size_t>(k)] = fourier_coeff_power_cached(alphas[static_cast<size_t>(j)], k, tol);
      }
    }
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const int workers = parallel ? static_cast<int>(std::min<unsigned>(hw, rows)) : 1;
  if (workers <= 1) {
    fill_range(0, rows);
  } else {
    std::vector<std::future<void>> futs;
    const int chunk = (rows + workers - 1) / workers;
    for (int b = 0; b < rows; b += chunk) {
      futs.push_back(std::async(std::launch::async, fill_range, b, std::min(rows, b + chunk)));
    }
    for (auto& f : futs) f.get();
  }
  return table;
}

namespace {

int next_pow2(int v) {
  int p = 1;
  while (p < v) p <<= 1;
  return p;
}

// Riemann zeta at negative arguments via the functional equation; used by
// the Navot endpoint correction.  std::riemann_zeta covers this, but the
// reflection form keeps us independent of libm quirks for s in (-3,0).
double zeta_neg(double s) { return std::riemann_zeta(s); }

// Trapezoid/FFT coefficients of the aggregate symbol with two corrections:
//  - the theta^2 part matching the derivative at pi is removed before
//    sampling and added back through the exact eta coefficients, so the
//    periodization has no corner at the domain ends;
//  - Navot endpoint terms cancel the leading grid error of the remaining
//    |theta|^(2-alpha_j) cusps at 0 (k-independent to first order).
std::vector<double> sampled_coeffs(const AggregateSymbol& sym, int m_samples, int num) {
  const auto& w = sym.weights();
  const auto& al = sym.alphas();
  const int terms = sym.order();

  double corner = 0.0;  // F'(pi-) / (2 pi)
  for (int j = 0; j < terms; ++j) {
    corner += w[j] * (2.0 - al[j]) * std::pow(M_PI, -al[j]) / 2.0;
  }

  const int M = m_samples;
  std::vector<std::complex<double>> samples(M);
  for (int m = 0; m < M; ++m) {
    const double theta = -M_PI + 2.0 * M_PI * m / M;
    samples[m] = sym(theta) - corner * theta * theta;
  }

  Eigen::FFT<double> fft;
  std::vector<std::complex<double>> freq(M);
  fft.fwd(freq, samples);

  const double delta = 2.0 * M_PI / M;
  double navot = 0.0;
  for (int j = 0; j < terms; ++j) {
    const double s = 2.0 - al[j];
    navot += w[j] * zeta_neg(-s) * std::pow(delta, s + 1.0) / M_PI;
  }

  // even real symbol: the transform must be real up to roundoff
  double max_imag = 0.0, max_real = 0.0;
  for (int k = 0; k < num; ++k) {
    max_imag = std::max(max_imag, std::abs(freq[k].imag()));
    max_real = std::max(max_real, std::abs(freq[k].real()));
  }
  if (max_imag > 1e-12 * std::max(1.0, max_real)) {
    throw std::runtime_error("sampled_coeffs: symmetry violated (complex residue)");
  }

  std::vector<double> out(num);
  for (int k = 0; k < num; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;  // grid starts at -pi
    out[k] = sign * freq[k].real() / M - navot + corner * fourier_coeff_eta(k);
  }
  return out;
}

}  // namespace

CoeffVector fourier_coeffs_aggregate(const AggregateSymbol& sym, Engine engine,
                                     double tol, const AggregateOptions& opt) {
  if (!(tol > 0.0)) throw std::invalid_argument("fourier_coeffs_aggregate: tol must be > 0");
  const int n = sym.order();
  const int num = opt.num_coeffs > 0 ? opt.num_coeffs : n;

  if (engine == Engine::kQuadrature) {
    double weight_sum = 0.0;
    for (double w : sym.weights()) weight_sum += w;
    const double term_tol = tol / weight_sum;

    const std::vector<std::vector<double>> table =
        power_coeff_table(sym.alphas(), num, term_tol, opt.parallel);
    std::vector<double> coeffs(static_cast<size_t>(num), 0.0);
    for (int j = 0; j < n; ++j) {
      const double w = sym.weights()[static_cast<size_t>(j)];
      for (int k = 0; k < num; ++k) {
        coeffs[static_cast<size_t>(k)] += w * table[static_cast<size_t>(j)][static_cast<size_t>(k)];
      }
    }
    return CoeffVector{std::move(coeffs), Engine::kQuadrature, tol};
  }

  if (engine == Engine::kFftSampling) {
    if (opt.oversample < 2) {
      throw std::invalid_argument("fourier_coeffs_aggregate: oversample must be >= 2");
    }
    const int M = next_pow2(std::max({opt.oversample * n, 2 * num, 64}));
    std::vector<double> fine = sampled_coeffs(sym, M, num);
    std::vector<double> coarse = sampled_coeffs(sym, M / 2, num);
    double alias = 0.0;
    for (int k = 0; k < num; ++k) alias = std::max(alias, std::abs(fine[k] - coarse[k]));
    return CoeffVector{std::move(fine), Engine::kFftSampling, alias};
  }

  throw std::invalid_argument("fourier_coeffs_aggregate: unsupported engine");
}

double psi_coeff(int n, double alpha, int k, double tol) {
  if (n < 1) throw std::invalid_argument("psi_coeff: n must be >= 1");
  if (k < 0) throw std::invalid_argument("psi_coeff: k must be >= 0");
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("psi_coeff: alpha must lie in [0,1]");
  }
  if (alpha == 0.0) return 0.0;  // psi vanishes identically
  const double h = 1.0 / n;
  const double ha = std::pow(h, alpha);
  auto f = [=](double t) {
    if (t <= 0.0) return 0.0;
    return (ha * std::pow(t, 2.0 - alpha) - t * t) * std::cos(k * t);
  };
  // k*h < 1 in all library uses; subdivide the support anyway when k*h > 1
  // so the oscillation stays resolved.
  const int pieces = std::max(1, static_cast<int>(std::ceil(k * h)));
  double total = 0.0;
  for (int m = 0; m < pieces; ++m) {
    const double a = h * m / pieces;
    const double b = h * (m + 1) / pieces;
    total += quad::integrate(f, a, b, tol * M_PI / pieces);
  }
  return total / M_PI;
}

}  // namespace dotoep
