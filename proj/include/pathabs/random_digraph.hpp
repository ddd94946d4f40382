#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pathabs/digraph.hpp"
#include "pathabs/partitions.hpp"

namespace pathabs {

// D(n,p): each ordered pair x != y carries an arc independently with probability p.
struct GnpModel {
  std::size_t n = 1;
  double p = 0.0;

  GnpModel(std::size_t n_, double p_);
};

// Probability that an arc survives one bypass: p^2 + (1 - p^2) p.
double f_map(double p);
// N-fold composition of f_map.
double f_iterate(double p, std::size_t N);

// log(p / (1-p)) - 1/p, strictly increasing on (0,1).
double potential_F(double p);
// Bisection to |F(x) - y| <= 1e-12 (or until the bracket is below machine resolution).
double potential_F_inverse(double y);
// Continuum approximation F^{-1}(N + F(p)) of f_iterate.
double approx_iterate(double p, double N);

// Largest |approx_iterate - f_iterate| over p in {0.01, ..., 0.99} and N in [0, max_N].
double max_approx_error(std::size_t max_N);

// Which iterate count turns "vertices bypassed" into the exponent of f.
//  kTheorem:  f applied (n - |supp|) times, as the closed form states.
//  kReported: f applied (n - |supp| - 1) times; the only convention that
//             reproduces the published financial-district numbers (25.9635, 27.4466).
enum class IterateConvention { kTheorem, kReported };

std::size_t iterate_count(std::size_t n, std::size_t support_size, IterateConvention c);

// Probability of an arc between two blocks of sizes bj, bk in the path
// abstraction of D(n,p) by a partial partition with the given support size.
double abstraction_arc_prob(double p, std::size_t n, std::size_t bj, std::size_t bk,
                            std::size_t support_size,
                            IterateConvention c = IterateConvention::kTheorem);

// Expected arc count: the arc probability summed over ordered block pairs j != k.
// The support size is the sum of the block sizes.
double expected_arcs(double p, std::size_t n, const std::vector<std::size_t>& block_sizes,
                     IterateConvention c = IterateConvention::kTheorem);

Digraph sample_gnp(const GnpModel& m, std::uint64_t seed);

struct MonteCarloSummary {
  std::size_t trials = 0;
  std::vector<double> frequencies;  // per trial, in trial order
  double mean = 0.0;
  double stddev = 0.0;              // sample standard deviation across trials
  double standard_error = 0.0;
  // Per ordered block pair (j,k), j != k, the fraction of trials with an arc.
  std::vector<std::vector<double>> pair_frequency;
};

// Samples D(n,p) per trial, takes its path abstraction by `partition`, and
// records the arc frequency |A| / (k (k-1)) with k the number of blocks.
// Trial t uses seed derive_seed(seed, t); `threads` > 1 evaluates trials
// concurrently with the same per-trial results.
MonteCarloSummary monte_carlo_abstraction(const GnpModel& m, const PartialPartition& partition,
                                          std::size_t trials, std::uint64_t seed,
                                          std::size_t threads = 1);

// Bypass-only partition: singletons on every vertex except `dropped` of them
// chosen uniformly at random (seeded).
PartialPartition random_bypass_partition(std::size_t n, std::size_t dropped, std::uint64_t seed);

// Asymptotic fraction of vertices in the giant strong component of D(n, c/n):
// (1 - x/c)^2 where x < 1 solves x e^{-x} = c e^{-c}. Requires c > 1.
double giant_scc_fraction(double c);
double giant_scc_dual_root(double c);

// exp(-2 exp(-(p n - log n))).
double strong_conn_prob(std::size_t n, double p);

// Largest SCC size of a sampled D(n,p), divided by n.
double largest_scc_fraction(const GnpModel& m, std::uint64_t seed);

struct RenormGrid {
  std::size_t n = 0;
  double c = 0.0;
  bool add_log_n = false;
  double p0 = 0.0;
  std::vector<double> values;  // values[N] = log[(n - N) f^N(p0)], N = 0..N_max
};

RenormGrid renorm_grid(std::size_t n, double c, bool add_log_n, std::size_t N_max);

}  // namespace pathabs
