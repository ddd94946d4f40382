#include "pathabs/random_digraph.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <string>
#include <thread>

#include "pathabs/core.hpp"
#include "pathabs/errors.hpp"
#include "pathabs/pabstract.hpp"
#include "pathabs/rng.hpp"

namespace pathabs {

namespace {

void require_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw ValidationError("probability " + std::to_string(p) + " outside [0,1]");
}

constexpr double kBisectionTolerance = 1e-12;

}  // namespace

GnpModel::GnpModel(std::size_t n_, double p_) : n(n_), p(p_) {
  if (n < 1) throw ValidationError("D(n,p) needs n >= 1");
  require_probability(p);
}

double f_map(double p) {
  require_probability(p);
  return p * p + (1.0 - p * p) * p;
}

double f_iterate(double p, std::size_t N) {
  require_probability(p);
  for (std::size_t i = 0; i < N; ++i) p = p * p + (1.0 - p * p) * p;
  return p;
}

double potential_F(double p) {
  if (!(p > 0.0 && p < 1.0)) throw ValidationError("F is defined on the open interval (0,1)");
  return std::log(p / (1.0 - p)) - 1.0 / p;
}

double potential_F_inverse(double y) {
  if (!std::isfinite(y)) throw ValidationError("F^{-1} needs a finite argument");
  double lo = 0.5, hi = 0.5;
  while (potential_F(lo) > y) lo /= 2.0;
  while (potential_F(hi) < y) hi = 1.0 - (1.0 - hi) / 2.0;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = potential_F(mid);
    if (std::fabs(fm - y) <= kBisectionTolerance) return mid;
    (fm < y ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double approx_iterate(double p, double N) {
  if (!(p > 0.0 && p < 1.0)) throw ValidationError("approx_iterate needs 0 < p < 1");
  if (N == 0.0) return p;
  return potential_F_inverse(N + potential_F(p));
}

double max_approx_error(std::size_t max_N) {
  double worst = 0.0;
  for (int k = 1; k <= 99; ++k) {
    const double p = k / 100.0;
    for (std::size_t N = 0; N <= max_N; ++N)
      worst = std::max(worst, std::fabs(approx_iterate(p, static_cast<double>(N)) - f_iterate(p, N)));
  }
  return worst;
}

std::size_t iterate_count(std::size_t n, std::size_t support_size, IterateConvention c) {
  if (support_size > n) throw ValidationError("support larger than the vertex count");
  const std::size_t dropped = n - support_size;
  if (c == IterateConvention::kReported) return dropped == 0 ? 0 : dropped - 1;
  return dropped;
}

double abstraction_arc_prob(double p, std::size_t n, std::size_t bj, std::size_t bk,
                            std::size_t support_size, IterateConvention c) {
  require_probability(p);
  if (bj < 1 || bk < 1) throw ValidationError("block sizes must be positive");
  if (bj + bk > support_size || support_size > n)
    throw ValidationError("block sizes inconsistent with support and n");
  const double q = f_iterate(p, iterate_count(n, support_size, c));
  return 1.0 - std::pow(1.0 - q, static_cast<double>(bj * bk));
}

double expected_arcs(double p, std::size_t n, const std::vector<std::size_t>& block_sizes,
                     IterateConvention c) {
  require_probability(p);
  std::size_t support = 0;
  for (std::size_t b : block_sizes) {
    if (b < 1) throw ValidationError("block sizes must be positive");
    support += b;
  }
  if (support > n) throw ValidationError("blocks cover more than n vertices");
  const double q = f_iterate(p, iterate_count(n, support, c));
  double total = 0.0;
  for (std::size_t j = 0; j < block_sizes.size(); ++j)
    for (std::size_t k = 0; k < block_sizes.size(); ++k)
      if (j != k) total += 1.0 - std::pow(1.0 - q, static_cast<double>(block_sizes[j] * block_sizes[k]));
  return total;
}

Digraph sample_gnp(const GnpModel& m, std::uint64_t seed) {
  Rng rng(seed);
  Digraph d(m.n);
  for (Vertex x = 1; x <= m.n; ++x)
    for (Vertex y = 1; y <= m.n; ++y)
      if (x != y && rng.bernoulli(m.p)) d.add_arc(x, y);
  return d;
}

PartialPartition random_bypass_partition(std::size_t n, std::size_t dropped, std::uint64_t seed) {
  if (dropped > n) throw ValidationError("cannot drop more vertices than exist");
  std::vector<Vertex> ids(n);
  std::iota(ids.begin(), ids.end(), Vertex{1});
  Rng rng(seed);
  // Partial Fisher-Yates: the first `dropped` entries are the bypassed vertices.
  for (std::size_t i = 0; i < dropped; ++i) {
    const auto j = static_cast<std::size_t>(rng.uniform_int(static_cast<std::int64_t>(i),
                                                            static_cast<std::int64_t>(n - 1)));
    std::swap(ids[i], ids[j]);
  }
  std::vector<std::vector<Vertex>> blocks;
  for (std::size_t i = dropped; i < n; ++i) blocks.push_back({ids[i]});
  return PartialPartition(n, std::move(blocks));
}

namespace {

struct TrialResult {
  double frequency = 0.0;
  std::vector<Arc> block_arcs;  // (j,k) block indices with an arc
};

TrialResult run_trial(const GnpModel& m, const PartialPartition& partition, std::uint64_t seed) {
  const Digraph d = sample_gnp(m, seed);
  const Digraph abstraction = path_abstract(d, partition);
  TrialResult r;
  const double k = static_cast<double>(partition.block_count());
  r.frequency = k > 1 ? static_cast<double>(abstraction.arc_count()) / (k * (k - 1)) : 0.0;
  std::map<Vertex, Vertex> block_index;
  for (std::size_t i = 0; i < partition.blocks().size(); ++i)
    block_index[partition.blocks()[i].front()] = static_cast<Vertex>(i);
  for (const auto& a : abstraction.arcs())
    r.block_arcs.emplace_back(block_index.at(a.from), block_index.at(a.to));
  return r;
}

}  // namespace

MonteCarloSummary monte_carlo_abstraction(const GnpModel& m, const PartialPartition& partition,
                                          std::size_t trials, std::uint64_t seed,
                                          std::size_t threads) {
  if (trials < 1) throw ValidationError("Monte Carlo needs at least one trial");
  if (partition.ground_size() != m.n) throw ValidationError("partition ground set must be [n]");
  std::vector<TrialResult> results(trials);
  threads = std::max<std::size_t>(1, std::min(threads, trials));
  if (threads == 1) {
    for (std::size_t t = 0; t < trials; ++t) results[t] = run_trial(m, partition, derive_seed(seed, t));
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < threads; ++w) {
      pool.emplace_back([&] {
        for (std::size_t t = next++; t < trials; t = next++)
          results[t] = run_trial(m, partition, derive_seed(seed, t));
      });
    }
    for (auto& th : pool) th.join();
  }

  MonteCarloSummary s;
  s.trials = trials;
  const std::size_t k = partition.block_count();
  s.pair_frequency.assign(k, std::vector<double>(k, 0.0));
  for (const auto& r : results) {
    s.frequencies.push_back(r.frequency);
    for (const auto& [j, kk] : r.block_arcs) s.pair_frequency[j][kk] += 1.0;
  }
  for (auto& row : s.pair_frequency)
    for (double& x : row) x /= static_cast<double>(trials);
  s.mean = std::accumulate(s.frequencies.begin(), s.frequencies.end(), 0.0) / trials;
  double ss = 0.0;
  for (double x : s.frequencies) ss += (x - s.mean) * (x - s.mean);
  s.stddev = trials > 1 ? std::sqrt(ss / static_cast<double>(trials - 1)) : 0.0;
  s.standard_error = s.stddev / std::sqrt(static_cast<double>(trials));
  return s;
}

double giant_scc_dual_root(double c) {
  if (!(c > 1.0) || !std::isfinite(c)) throw ValidationError("giant component needs c > 1");
  const double target = c * std::exp(-c);
  // x e^{-x} is increasing on (0,1).
  double lo = 0.0, hi = 1.0;
  while (hi - lo > kBisectionTolerance) {
    const double mid = 0.5 * (lo + hi);
    (mid * std::exp(-mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double giant_scc_fraction(double c) {
  const double x = giant_scc_dual_root(c);
  const double s = 1.0 - x / c;
  return s * s;
}

double strong_conn_prob(std::size_t n, double p) {
  if (n < 1) throw ValidationError("n must be positive");
  const double excess = p * static_cast<double>(n) - std::log(static_cast<double>(n));
  return std::exp(-2.0 * std::exp(-excess));
}

double largest_scc_fraction(const GnpModel& m, std::uint64_t seed) {
  std::size_t largest = 0;
  for (const auto& comp : strongly_connected_components(sample_gnp(m, seed)))
    largest = std::max(largest, comp.size());
  return static_cast<double>(largest) / static_cast<double>(m.n);
}

RenormGrid renorm_grid(std::size_t n, double c, bool add_log_n, std::size_t N_max) {
  if (n < 2) throw ValidationError("renormalization grid needs n >= 2");
  if (N_max >= n) throw ValidationError("N_max must be below n");
  RenormGrid g;
  g.n = n;
  g.c = c;
  g.add_log_n = add_log_n;
  g.p0 = (c + (add_log_n ? std::log(static_cast<double>(n)) : 0.0)) / static_cast<double>(n);
  require_probability(g.p0);
  double q = g.p0;
  for (std::size_t N = 0; N <= N_max; ++N) {
    g.values.push_back(std::log(static_cast<double>(n - N) * q));
    q = f_map(q);
  }
  return g;
}

}  // namespace pathabs
