#pragma once

// Brute-force reference computations used only by the tests. They work from
// raw PD label tuples and plain adjacency matrices, not the library types.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Pd = std::vector<std::array<int, 4>>;

// Dart index of the other end of each edge.
inline std::vector<int> mates(const Pd& pd) {
  const int n = static_cast<int>(pd.size()) * 4;
  std::vector<int> m(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && pd[a / 4][a % 4] == pd[b / 4][b % 4]) m[a] = b;
  return m;
}

// Face orbits of d -> rotate(mate(d)), each listed from its smallest dart.
inline std::vector<std::vector<int>> face_orbits(const Pd& pd) {
  const auto m = mates(pd);
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<int>> faces;
  std::vector<bool> used(n, false);
  for (int s = 0; s < n; ++s) {
    if (used[s]) continue;
    std::vector<int> orbit;
    int d = s;
    while (!used[d]) {
      used[d] = true;
      orbit.push_back(d);
      const int e = m[d];
      d = (e / 4) * 4 + (e % 4 + 1) % 4;
    }
    faces.push_back(orbit);
  }
  return faces;
}

inline std::map<int, int> gon_counts(const Pd& pd) {
  std::map<int, int> out;
  for (const auto& f : face_orbits(pd)) ++out[static_cast<int>(f.size())];
  return out;
}

inline int face_of(const std::vector<std::vector<int>>& faces, int dart) {
  for (std::size_t i = 0; i < faces.size(); ++i)
    if (std::find(faces[i].begin(), faces[i].end(), dart) != faces[i].end()) return static_cast<int>(i);
  return -1;
}

// Crossings whose four corners lie in exactly three distinct faces.
inline std::vector<int> reducible(const Pd& pd) {
  const auto faces = face_orbits(pd);
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(pd.size()); ++v) {
    std::set<int> around;
    for (int s = 0; s < 4; ++s) around.insert(face_of(faces, 4 * v + s));
    if (around.size() == 3) out.push_back(v);
  }
  return out;
}

using Matrix = std::vector<std::vector<bool>>;

// Faces sharing a crossing are adjacent.
inline Matrix region_adjacency(const Pd& pd) {
  const auto faces = face_orbits(pd);
  const int n = static_cast<int>(faces.size());
  Matrix adj(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      for (int da : faces[a])
        for (int db : faces[b])
          if (da / 4 == db / 4) adj[a][b] = true;
    }
  return adj;
}

inline bool independent(const Matrix& adj, std::uint32_t subset) {
  const int n = static_cast<int>(adj.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (((subset >> a) & 1U) && ((subset >> b) & 1U) && adj[a][b]) return false;
  return true;
}

// Counts independent sets of every size by subset enumeration (n <= 20).
inline std::vector<std::int64_t> independence_counts(const Matrix& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<std::int64_t> counts(n + 1, 0);
  for (std::uint32_t s = 0; s < (1U << n); ++s)
    if (independent(adj, s)) ++counts[std::popcount(s)];
  while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
  return counts;
}

inline int independence_number(const Matrix& adj, std::uint32_t allowed) {
  int best = 0;
  const int n = static_cast<int>(adj.size());
  for (std::uint32_t s = 0; s < (1U << n); ++s)
    if ((s & ~allowed) == 0 && independent(adj, s)) best = std::max(best, std::popcount(s));
  return best;
}

// Max over crossings of the largest independent set avoiding faces at that crossing.
inline int independent_region_number(const Pd& pd) {
  const auto faces = face_orbits(pd);
  const auto adj = region_adjacency(pd);
  const int n = static_cast<int>(faces.size());
  int best = 0;
  for (int v = 0; v < static_cast<int>(pd.size()); ++v) {
    std::uint32_t allowed = (1U << n) - 1;
    for (int s = 0; s < 4; ++s) allowed &= ~(1U << face_of(faces, 4 * v + s));
    best = std::max(best, independence_number(adj, allowed));
  }
  return best;
}

inline Matrix random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution edge(p);
  Matrix adj(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (edge(rng)) adj[a][b] = adj[b][a] = true;
  return adj;
}

// Ways to mark k of m balls in a row with no two marked balls adjacent.
inline std::int64_t nonadjacent_brute(int m, int k) {
  std::int64_t count = 0;
  for (std::uint32_t s = 0; s < (1U << m); ++s)
    if (std::popcount(s) == k && (s & (s >> 1)) == 0) ++count;
  return count;
}

// Passage sequence along the strand: (crossing, over?) for each crossing met,
// starting by leaving crossing `start / 4` through dart `start`.
// over_slot_parity[v] is the parity of the slots carrying the over strand.
inline std::vector<std::pair<int, bool>> passages(const Pd& pd, const std::vector<int>& over_slot_parity, int start) {
  const auto m = mates(pd);
  std::vector<std::pair<int, bool>> seq;
  int d = start;
  do {
    const int entry = m[d];
    const int v = entry / 4;
    seq.emplace_back(v, entry % 2 == over_slot_parity[v]);
    d = v * 4 + (entry % 4 + 2) % 4;
  } while (d != start);
  return seq;
}

// d(D_b) for the base point on each step of the walk.
inline std::vector<int> warping_labels(const std::vector<std::pair<int, bool>>& seq) {
  const int len = static_cast<int>(seq.size());
  std::vector<int> labels(len);
  for (int b = 0; b < len; ++b) {
    std::set<int> met;
    int count = 0;
    for (int j = 0; j < len; ++j) {
      auto [v, over] = seq[(b + j) % len];
      if (met.insert(v).second && !over) ++count;
    }
    labels[b] = count;
  }
  return labels;
}

// All perfect matchings of 4c darts (each dart paired with a different one).
template <class Visit>
void all_matchings(std::vector<int>& m, Visit&& visit) {
  auto it = std::find(m.begin(), m.end(), -1);
  if (it == m.end()) {
    visit(m);
    return;
  }
  const int d = static_cast<int>(it - m.begin());
  for (int e = d + 1; e < static_cast<int>(m.size()); ++e) {
    if (m[e] != -1) continue;
    m[d] = e;
    m[e] = d;
    all_matchings(m, visit);
    m[d] = m[e] = -1;
  }
}

}  // namespace oracle
