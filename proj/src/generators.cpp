#include "pathabs/generators.hpp"

#include <algorithm>
#include <numeric>

namespace pathabs::gen {

Digraph digraph(std::size_t n, double p, Rng& rng, Semiring s) {
  Digraph d(n, s);
  for (Vertex x = 1; x <= n; ++x)
    for (Vertex y = 1; y <= n; ++y)
      if (x != y && rng.bernoulli(p)) d.add_arc(x, y, s.sample(rng));
  return d;
}

Digraph dag(std::size_t n, double p, Rng& rng, Semiring s) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{1});
  std::shuffle(order.begin(), order.end(), rng.engine());
  Digraph d(n, s);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.bernoulli(p)) d.add_arc(order[i], order[j], s.sample(rng));
  return d;
}

VertexSet subset(const std::vector<Vertex>& vertices, double q, Rng& rng) {
  VertexSet out;
  for (Vertex v : vertices)
    if (rng.bernoulli(q)) out.insert(v);
  return out;
}

Coloring coloring(std::size_t n, std::size_t colors, Rng& rng) {
  Coloring c;
  for (std::size_t i = 0; i < n; ++i) c.labels.push_back(rng.uniform_int(1, static_cast<std::int64_t>(colors)));
  return c;
}

DTCN dtcn(std::size_t n, std::size_t max_contacts, int max_time, Rng& rng, bool constant_time) {
  DTCN d(n);
  const auto target = rng.uniform_int(1, static_cast<std::int64_t>(max_contacts));
  for (std::int64_t k = 0; k < target; ++k) {
    const auto s = static_cast<Vertex>(rng.uniform_int(1, static_cast<std::int64_t>(n)));
    auto t = static_cast<Vertex>(rng.uniform_int(1, static_cast<std::int64_t>(n) - 1));
    if (t >= s) ++t;
    const double time = constant_time ? 1.0 : static_cast<double>(rng.uniform_int(1, max_time));
    d.insert({s, t, time});
  }
  return d;
}

std::vector<VertexBlock> blocks(const std::vector<Vertex>& vertices, Rng& rng) {
  std::vector<Vertex> pool = vertices;
  std::shuffle(pool.begin(), pool.end(), rng.engine());
  std::vector<VertexBlock> out;
  std::size_t i = 0;
  while (i < pool.size()) {
    if (rng.bernoulli(0.3)) {
      ++i;
      continue;
    }
    const auto size = static_cast<std::size_t>(rng.uniform_int(1, 3));
    VertexBlock b(pool.begin() + static_cast<std::ptrdiff_t>(i),
                  pool.begin() + static_cast<std::ptrdiff_t>(std::min(pool.size(), i + size)));
    i += b.size();
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace pathabs::gen
