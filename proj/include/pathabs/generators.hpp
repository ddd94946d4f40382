#pragma once

#include <cstddef>
#include <vector>

#include "pathabs/core.hpp"
#include "pathabs/digraph.hpp"
#include "pathabs/partitions.hpp"
#include "pathabs/rng.hpp"
#include "pathabs/temporal.hpp"

// Small random instances for property checks. Arc values are drawn with
// Semiring::sample, so they are exactly representable.
namespace pathabs::gen {

Digraph digraph(std::size_t n, double p, Rng& rng, Semiring s = Semiring());

// Acyclic: arcs only go forward along a random vertex order.
Digraph dag(std::size_t n, double p, Rng& rng, Semiring s = Semiring());

// Each vertex independently in the set with probability q.
VertexSet subset(const std::vector<Vertex>& vertices, double q, Rng& rng);

Coloring coloring(std::size_t n, std::size_t colors, Rng& rng);

// Up to max_contacts contacts with integer times in 1..max_time (ties are
// intentional); `constant_time` stamps every contact with time 1.
DTCN dtcn(std::size_t n, std::size_t max_contacts, int max_time, Rng& rng, bool constant_time = false);

// Disjoint blocks over a random subset of `vertices`; singletons possible.
std::vector<VertexBlock> blocks(const std::vector<Vertex>& vertices, Rng& rng);

}  // namespace pathabs::gen
