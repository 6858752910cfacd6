#include "ddg/metrics.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include "ddg/error.hpp"

namespace ddg {

Rational Rational::make(std::uint64_t num, std::uint64_t den) {
  if (den == 0)
    throw ArgumentError("zero denominator");
  const std::uint64_t g = std::gcd(num, den);
  return g ? Rational{num / g, den / g} : Rational{0, 1};
}

std::string Rational::to_decimal(int places) const {
  unsigned __int128 scale = 1;
  for (int i = 0; i < places; ++i)
    scale *= 10;
  const unsigned __int128 scaled = static_cast<unsigned __int128>(num) * scale;
  unsigned __int128 q = scaled / den;
  const unsigned __int128 r = scaled % den;
  const unsigned __int128 twice = 2 * r;
  if (twice > den || (twice == den && (q & 1)))
    ++q;
  const auto whole = static_cast<std::uint64_t>(q / scale);
  auto frac = static_cast<std::uint64_t>(q % scale);
  std::string out = std::to_string(whole);
  if (places > 0) {
    std::string digits = std::to_string(frac);
    out += '.';
    out.append(static_cast<std::size_t>(places) - digits.size(), '0');
    out += digits;
  }
  return out;
}

std::string Rational::to_string() const {
  return den == 1 ? std::to_string(num)
                  : std::to_string(num) + "/" + std::to_string(den);
}

namespace {

// Level-synchronous BFS reusing caller-owned buffers.
Distance bfs_into(const CompactGraph &g, Vertex source,
                  std::vector<Distance> &dist, std::vector<Vertex> &queue,
                  std::size_t &reached, std::uint64_t &dist_sum) {
  std::fill(dist.begin(), dist.end(), kUnreached);
  queue.clear();
  dist[source] = 0;
  queue.push_back(source);
  dist_sum = 0;
  Distance ecc = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    const Distance du = dist[u];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreached) {
        dist[w] = du + 1;
        ecc = du + 1;
        dist_sum += du + 1;
        queue.push_back(w);
      }
    }
  }
  reached = queue.size();
  return ecc;
}

unsigned resolve_jobs(unsigned jobs, std::size_t work) {
  if (jobs == 0)
    jobs = std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(work, 1)));
}

// Runs `body(worker, begin, end)` over sources split into interleaved chunks.
template <class Body>
void for_sources(std::size_t n, unsigned jobs, Body &&body) {
  jobs = resolve_jobs(jobs, n / 64 + 1);
  if (jobs == 1) {
    body(0u, std::size_t{0}, n);
    return;
  }
  std::atomic<std::size_t> next{0};
  constexpr std::size_t chunk = 64;
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < jobs; ++t)
    pool.emplace_back([&, t] {
      for (;;) {
        const std::size_t begin = next.fetch_add(chunk);
        if (begin >= n)
          break;
        body(t, begin, std::min(n, begin + chunk));
      }
    });
}

struct SweepResult {
  Distance diameter = 0;
  std::uint64_t dist_sum = 0;
  std::optional<Vertex> unreached;
};

SweepResult all_source_sweep(const CompactGraph &g, unsigned jobs) {
  const std::size_t n = g.order();
  const unsigned workers = resolve_jobs(jobs, n / 64 + 1);
  std::vector<SweepResult> partial(workers);
  for_sources(n, workers, [&](unsigned t, std::size_t begin, std::size_t end) {
    std::vector<Distance> dist(n);
    std::vector<Vertex> queue;
    queue.reserve(n);
    auto &acc = partial[t];
    for (std::size_t s = begin; s < end; ++s) {
      std::size_t reached = 0;
      std::uint64_t sum = 0;
      const Distance ecc =
          bfs_into(g, static_cast<Vertex>(s), dist, queue, reached, sum);
      if (reached != n) {
        const auto it = std::find(dist.begin(), dist.end(), kUnreached);
        const auto w = static_cast<Vertex>(it - dist.begin());
        if (!acc.unreached || w < *acc.unreached)
          acc.unreached = w;
        continue;
      }
      acc.diameter = std::max(acc.diameter, ecc);
      acc.dist_sum += sum;
    }
  });
  SweepResult total;
  for (const auto &p : partial) {
    total.diameter = std::max(total.diameter, p.diameter);
    total.dist_sum += p.dist_sum;
    if (p.unreached)
      total.unreached = p.unreached;
  }
  // report the first vertex missed from vertex 0
  if (total.unreached) {
    const auto r = bfs_eccentricity(g, 0);
    const auto it = std::find(r.distances.begin(), r.distances.end(), kUnreached);
    total.unreached = static_cast<Vertex>(it - r.distances.begin());
  }
  return total;
}

// Shortest cycle through BFS from `source`, truncated at `bound`.
Distance girth_from(const CompactGraph &g, Vertex source, Distance bound,
                    std::vector<Distance> &dist, std::vector<Vertex> &parent,
                    std::vector<Vertex> &queue) {
  queue.clear();
  dist[source] = 0;
  parent[source] = source;
  queue.push_back(source);
  Distance best = bound;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    const Distance du = dist[u];
    if (2 * du + 1 >= best)
      break;
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreached) {
        dist[w] = du + 1;
        parent[w] = u;
        queue.push_back(w);
      } else if (w != parent[u]) {
        best = std::min(best, du + dist[w] + 1);
      }
    }
  }
  for (Vertex v : queue)
    dist[v] = kUnreached;
  return best;
}

} // namespace

BfsResult bfs_eccentricity(const CompactGraph &g, Vertex source) {
  if (source >= g.order())
    throw ArgumentError("source " + std::to_string(source) +
                        " out of range for order " +
                        std::to_string(g.order()));
  BfsResult r;
  r.distances.resize(g.order());
  std::vector<Vertex> queue;
  queue.reserve(g.order());
  std::uint64_t sum = 0;
  r.eccentricity = bfs_into(g, source, r.distances, queue, r.reached, sum);
  return r;
}

Distance diameter(const CompactGraph &g, bool assume_vertex_transitive,
                  MetricOptions opts) {
  if (g.order() == 0)
    throw ArgumentError("diameter of the empty graph");
  if (assume_vertex_transitive) {
    auto r = bfs_eccentricity(g, 0);
    if (r.reached != g.order()) {
      const auto it = std::find(r.distances.begin(), r.distances.end(), kUnreached);
      throw DisconnectedError(static_cast<Vertex>(it - r.distances.begin()));
    }
    return r.eccentricity;
  }
  const auto sweep = all_source_sweep(g, opts.jobs);
  if (sweep.unreached)
    throw DisconnectedError(*sweep.unreached);
  return sweep.diameter;
}

std::optional<Distance> girth(const CompactGraph &g, MetricOptions opts) {
  const std::size_t n = g.order();
  const unsigned workers = resolve_jobs(opts.jobs, n / 64 + 1);
  std::atomic<Distance> best_shared{kUnreached};
  for_sources(n, workers, [&](unsigned, std::size_t begin, std::size_t end) {
    std::vector<Distance> dist(n, kUnreached);
    std::vector<Vertex> parent(n), queue;
    queue.reserve(n);
    for (std::size_t s = begin; s < end; ++s) {
      Distance bound = best_shared.load(std::memory_order_relaxed);
      if (bound == 3)
        return;
      const Distance found =
          girth_from(g, static_cast<Vertex>(s), bound, dist, parent, queue);
      Distance cur = best_shared.load();
      while (found < cur && !best_shared.compare_exchange_weak(cur, found)) {
      }
    }
  });
  const Distance best = best_shared.load();
  if (best == kUnreached)
    return std::nullopt;
  return best;
}

Rational average_distance(const CompactGraph &g, MetricOptions opts) {
  const std::size_t n = g.order();
  if (n < 2)
    throw ArgumentError("average distance needs at least two vertices");
  const auto sweep = all_source_sweep(g, opts.jobs);
  if (sweep.unreached)
    throw DisconnectedError(*sweep.unreached);
  return Rational::make(sweep.dist_sum, static_cast<std::uint64_t>(n) * (n - 1));
}

bool is_bipartite(const CompactGraph &g) {
  const std::size_t n = g.order();
  std::vector<int> side(n, -1);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (side[s] >= 0)
      continue;
    side[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      for (Vertex w : g.neighbors(u)) {
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

GraphStats stats(const CompactGraph &g, MetricOptions opts) {
  GraphStats s;
  s.order = g.order();
  s.size = g.size();
  s.min_degree = g.min_degree();
  s.max_degree = g.max_degree();
  s.is_regular = s.min_degree == s.max_degree;
  s.bipartite = is_bipartite(g);
  s.girth = girth(g, opts);
  if (s.order == 0)
    return s;
  const auto sweep = all_source_sweep(g, opts.jobs);
  s.connected = !sweep.unreached;
  s.unreached_witness = sweep.unreached;
  if (s.connected) {
    s.diameter = sweep.diameter;
    if (s.order >= 2)
      s.average_distance = Rational::make(
          sweep.dist_sum, static_cast<std::uint64_t>(s.order) * (s.order - 1));
  }
  return s;
}

} // namespace ddg
