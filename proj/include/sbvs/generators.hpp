#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "sbvs/error.hpp"
#include "sbvs/graph.hpp"

namespace sbvs {

// Named families used throughout the tests and examples.

inline Graph complete_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  return build_graph(n, edges);
}

inline Graph path_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex a = 0; a + 1 < n; ++a) edges.emplace_back(a, a + 1);
  return build_graph(n, edges);
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw precondition_error("a cycle needs at least 3 vertices");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex a = 0; a < n; ++a) edges.emplace_back(a, static_cast<Vertex>((a + 1) % n));
  return build_graph(n, edges);
}

/// Sides {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex x = 0; x < a; ++x)
    for (Vertex y = 0; y < b; ++y) edges.emplace_back(x, static_cast<Vertex>(a + y));
  return build_graph(a + b, edges);
}

/// Centre 0, leaves 1..leaves.
inline Graph star_graph(std::size_t leaves) { return complete_bipartite(1, leaves); }

/// Vertex ids are the bit strings; edges join ids differing in one bit.
inline Graph hypercube(unsigned dimension) {
  const std::size_t n = std::size_t{1} << dimension;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v < n; ++v)
    for (unsigned b = 0; b < dimension; ++b) {
      const Vertex w = v ^ (Vertex{1} << b);
      if (v < w) edges.emplace_back(v, w);
    }
  return build_graph(n, edges);
}

/// Two k-cycles {0..k-1}, {k..2k-1} joined by the matching i -- k+i.
inline Graph prism_graph(std::size_t k) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i < k; ++i) {
    const auto next = static_cast<Vertex>((i + 1) % k);
    edges.emplace_back(i, next);
    edges.emplace_back(static_cast<Vertex>(k + i), static_cast<Vertex>(k + next));
    edges.emplace_back(i, static_cast<Vertex>(k + i));
  }
  return build_graph(2 * k, edges);
}

inline Graph petersen_graph() {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return build_graph(10, edges);
}

/// Uniform integer in [0, bound) drawn from a 64-bit Mersenne twister by
/// rejection, so streams are identical across standard libraries.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
  std::uint64_t x = 0;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

template <typename T>
void portable_shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[uniform_below(rng, i)]);
  }
}

/// Connected d-regular graph from the pairing (configuration) model, rejecting
/// loops, multi-edges and disconnected outcomes. Deterministic in (n, d, seed).
inline Graph random_regular(std::size_t n, std::size_t d, std::uint64_t seed, std::size_t max_attempts = 100000) {
  if ((n * d) % 2 != 0) throw precondition_error("n*d must be even (handshake parity)");
  if (n <= d) throw precondition_error("a simple d-regular graph needs n > d");
  std::mt19937_64 rng(seed);
  std::vector<Vertex> points(n * d);
  for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<Vertex>(i / d);
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    portable_shuffle(points, rng);
    std::set<std::pair<Vertex, Vertex>> seen;
    bool simple = true;
    for (std::size_t i = 0; i < points.size() && simple; i += 2) {
      const auto a = std::min(points[i], points[i + 1]);
      const auto b = std::max(points[i], points[i + 1]);
      simple = a != b && seen.emplace(a, b).second;
    }
    if (!simple) continue;
    auto g = build_graph(n, std::vector<std::pair<Vertex, Vertex>>(seen.begin(), seen.end()));
    if (is_connected(g)) return g;
  }
  throw capacity_error("random_regular: no simple connected pairing within attempt budget");
}

/// Connected cubic graph on n vertices; n must be even and at least 4.
inline Graph random_cubic(std::size_t n, std::uint64_t seed) {
  if (n % 2 != 0) throw precondition_error("random_cubic: n=" + std::to_string(n) + " is odd; 3n must be even");
  if (n < 4) throw precondition_error("random_cubic: n must be at least 4");
  return random_regular(n, 3, seed);
}

/// Uniform G(n, m): m distinct edges drawn from all vertex pairs.
inline Graph random_graph(std::size_t n, std::size_t m, std::uint64_t seed) {
  const std::size_t pairs = n * (n - 1) / 2;
  if (n == 0 ? m > 0 : m > pairs) throw precondition_error("random_graph: m exceeds the number of vertex pairs");
  std::mt19937_64 rng(seed);
  std::set<std::pair<Vertex, Vertex>> chosen;
  while (chosen.size() < m) {
    auto a = static_cast<Vertex>(uniform_below(rng, n));
    auto b = static_cast<Vertex>(uniform_below(rng, n));
    if (a == b) continue;
    chosen.emplace(std::min(a, b), std::max(a, b));
  }
  return build_graph(n, std::vector<std::pair<Vertex, Vertex>>(chosen.begin(), chosen.end()));
}

struct CubicEnumerationOptions {
  std::size_t cap = 10;
  /// Only emit graphs in which vertex 0 is adjacent to exactly {1, 2, 3}.
  /// Every isomorphism class still appears; the labeled stream is no longer complete.
  bool fix_root_neighbors = false;
};

namespace detail {

class CubicBacktracker {
 public:
  CubicBacktracker(std::size_t n, bool fix_root, const std::function<bool(const Graph&)>& visit)
      : n_(n), need_(n, 3), visit_(visit) {
    if (fix_root) {
      for (Vertex w = 1; w <= 3; ++w) add(0, w);
    }
  }

  void run() { extend(0); }

 private:
  // Vertices below `from` are saturated. The smallest unsaturated vertex picks
  // its remaining neighbours among larger unsaturated vertices, in
  // lexicographic combination order, so each labeled graph is produced once.
  bool extend(Vertex from) {
    Vertex v = from;
    while (v < n_ && need_[v] == 0) ++v;
    if (v == n_) return emit();
    std::vector<Vertex> candidates;
    for (Vertex w = v + 1; w < n_; ++w) {
      if (need_[w] > 0) candidates.push_back(w);
    }
    const std::size_t k = need_[v];
    if (candidates.size() < k) return true;
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      for (auto i : pick) add(v, candidates[i]);
      const bool keep_going = extend(v + 1);
      for (auto i : pick) remove(v, candidates[i]);
      if (!keep_going) return false;
      // next combination
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == candidates.size() - k + (i - 1)) --i;
      if (i == 0) return true;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }

  bool emit() {
    auto g = build_graph(n_, edges_);
    if (!is_connected(g)) return true;
    return visit_(g);
  }

  void add(Vertex a, Vertex b) {
    edges_.emplace_back(a, b);
    --need_[a];
    --need_[b];
  }
  void remove(Vertex a, Vertex b) {
    edges_.pop_back();
    ++need_[a];
    ++need_[b];
  }

  Vertex n_;
  std::vector<std::size_t> need_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  const std::function<bool(const Graph&)>& visit_;
};

}  // namespace detail

/// Streams every connected labeled cubic graph on n vertices to `visit`
/// (stop early by returning false). Refuses n above the cap.
inline void enumerate_cubic(std::size_t n, const std::function<bool(const Graph&)>& visit,
                            const CubicEnumerationOptions& options = {}) {
  if (n > options.cap) {
    throw capacity_error("enumerate_cubic: n=" + std::to_string(n) + " exceeds enumeration cap " +
                         std::to_string(options.cap));
  }
  if (n % 2 != 0 || n < 4) throw precondition_error("enumerate_cubic: n must be even and at least 4");
  detail::CubicBacktracker(n, options.fix_root_neighbors, visit).run();
}

}  // namespace sbvs
