#ifndef WEDKIT_QUIVER_HPP
#define WEDKIT_QUIVER_HPP

#include <wedkit/algebra.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace wedkit {

/// Finite directed multigraph; arrows are (source, target) pairs of 0-based
/// vertex indices.
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::size_t vertices, std::vector<std::pair<std::size_t, std::size_t>> arrows)
      : vertices_(vertices), arrows_(std::move(arrows)) {
    for (const auto& [s, t] : arrows_)
      if (s >= vertices_ || t >= vertices_) throw InputError("arrow endpoint out of range");
  }

  /// 0 -> 1 -> ... -> n-1.
  static Quiver linear(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> arrows;
    for (std::size_t i = 0; i + 1 < n; ++i) arrows.emplace_back(i, i + 1);
    return Quiver(n, std::move(arrows));
  }

  std::size_t vertices() const { return vertices_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& arrows() const { return arrows_; }

  bool is_acyclic() const {
    std::vector<std::size_t> indeg(vertices_, 0);
    for (const auto& a : arrows_) ++indeg[a.second];
    std::vector<std::size_t> ready;
    for (std::size_t v = 0; v < vertices_; ++v)
      if (indeg[v] == 0) ready.push_back(v);
    std::size_t seen = 0;
    while (!ready.empty()) {
      std::size_t v = ready.back();
      ready.pop_back();
      ++seen;
      for (const auto& a : arrows_)
        if (a.first == v && --indeg[a.second] == 0) ready.push_back(a.second);
    }
    return seen == vertices_;
  }

  /// Same underlying graph with arrow `i` reversed.
  Quiver reversed(std::size_t i) const {
    auto arrows = arrows_;
    std::swap(arrows.at(i).first, arrows.at(i).second);
    return Quiver(vertices_, std::move(arrows));
  }

 private:
  std::size_t vertices_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> arrows_;
};

/// A path: a vertex idempotent when `arrows` is empty, otherwise a sequence
/// of composable arrow indices listed in traversal order.
struct Path {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> arrows;

  std::size_t length() const { return arrows.size(); }
};

struct PathAlgebra {
  Algebra algebra;
  std::vector<Path> basis;
};

/// Path algebra over Q. Basis: vertex idempotents e_0..e_{n-1}, then paths of
/// length >= 1 by length and arrow sequence. Multiplication is composition:
/// p * q is "q then p", nonzero only when target(q) = source(p); thus
/// e_target * a = a = a * e_source for every arrow a.
inline PathAlgebra path_algebra(const Quiver& q) {
  if (!q.is_acyclic()) throw InputError("infinite dimensional: the quiver has an oriented cycle");
  std::vector<Path> paths;
  for (std::size_t v = 0; v < q.vertices(); ++v) paths.push_back({v, v, {}});
  std::vector<Path> frontier;
  for (std::size_t i = 0; i < q.arrows().size(); ++i)
    frontier.push_back({q.arrows()[i].first, q.arrows()[i].second, {i}});
  while (!frontier.empty()) {
    std::sort(frontier.begin(), frontier.end(), [](const Path& a, const Path& b) { return a.arrows < b.arrows; });
    std::vector<Path> next;
    for (const auto& p : frontier) {
      paths.push_back(p);
      for (std::size_t i = 0; i < q.arrows().size(); ++i)
        if (q.arrows()[i].first == p.target) {
          Path ext = p;
          ext.arrows.push_back(i);
          ext.target = q.arrows()[i].second;
          next.push_back(std::move(ext));
        }
    }
    frontier = std::move(next);
  }

  std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> index;
  for (std::size_t i = 0; i < paths.size(); ++i) index[{paths[i].source, paths[i].arrows}] = i;
  const std::size_t d = paths.size();
  std::vector<std::vector<Vector>> table(d, std::vector<Vector>(d, Vector(d)));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Path& p = paths[i];
      const Path& r = paths[j];  // product p * r: first r, then p
      if (r.target != p.source) continue;
      std::vector<std::size_t> seq = r.arrows;
      seq.insert(seq.end(), p.arrows.begin(), p.arrows.end());
      table[i][j][index.at({r.source, seq})] = 1;
    }
  Vector unit(d);
  for (std::size_t v = 0; v < q.vertices(); ++v) unit[v] = 1;
  return {Algebra(std::move(unit), std::move(table)), std::move(paths)};
}

/// Span of all paths of length >= 1.
inline Subspace arrow_ideal(const PathAlgebra& pa) {
  std::vector<Vector> v;
  for (std::size_t i = 0; i < pa.basis.size(); ++i)
    if (pa.basis[i].length() > 0) v.push_back(unit_vector(pa.basis.size(), i));
  return Subspace::span(pa.basis.size(), v);
}

/// Cross-check: the trace-form radical of the path algebra equals the arrow
/// ideal.
inline bool radical_is_arrow_ideal(const Quiver& q) {
  const PathAlgebra pa = path_algebra(q);
  return radical(pa.algebra) == arrow_ideal(pa);
}

// ---------------------------------------------------------------------------
// Dynkin diagrams and roots

enum class DynkinFamily { A, D, E };

struct DynkinType {
  DynkinFamily family = DynkinFamily::A;
  std::size_t rank = 0;

  std::string name() const {
    const char c = family == DynkinFamily::A ? 'A' : family == DynkinFamily::D ? 'D' : 'E';
    return std::string(1, c) + std::to_string(rank);
  }
  friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

/// Parses names such as "A4", "D5", "E6".
inline DynkinType parse_dynkin_type(const std::string& s) {
  if (s.size() < 2) throw InputError("invalid Dynkin type '" + s + "'");
  DynkinType t;
  switch (s[0]) {
    case 'A': case 'a': t.family = DynkinFamily::A; break;
    case 'D': case 'd': t.family = DynkinFamily::D; break;
    case 'E': case 'e': t.family = DynkinFamily::E; break;
    default: throw InputError("invalid Dynkin type '" + s + "'");
  }
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') throw InputError("invalid Dynkin type '" + s + "'");
  t.rank = std::stoul(s.substr(1));
  const bool ok = (t.family == DynkinFamily::A && t.rank >= 1) || (t.family == DynkinFamily::D && t.rank >= 4) ||
                  (t.family == DynkinFamily::E && t.rank >= 6 && t.rank <= 8);
  if (!ok) throw InputError("invalid Dynkin type '" + s + "'");
  return t;
}

using IntMatrix = std::vector<std::vector<int>>;
using Root = std::vector<int>;

/// Underlying undirected adjacency counts (loops counted on the diagonal).
inline IntMatrix underlying_graph(const Quiver& q) {
  IntMatrix adj(q.vertices(), std::vector<int>(q.vertices(), 0));
  for (const auto& [s, t] : q.arrows()) {
    ++adj[s][t];
    if (s != t) ++adj[t][s];
  }
  return adj;
}

/// Classification of the underlying graph as a connected simply-laced
/// Dynkin diagram; nullopt for anything else (cycles, multiple edges,
/// loops, disconnected graphs, non-ADE trees).
inline std::optional<DynkinType> dynkin_classify(const Quiver& q) {
  const std::size_t n = q.vertices();
  if (n == 0) return std::nullopt;
  const IntMatrix adj = underlying_graph(q);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if ((i == j && adj[i][j] != 0) || adj[i][j] > 1) return std::nullopt;
  if (q.arrows().size() != n - 1) return std::nullopt;
  // connected + n-1 edges => tree
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < n; ++w)
      if (adj[v][w] && !seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  if (count != n) return std::nullopt;

  std::vector<std::size_t> deg(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) deg[i] += static_cast<std::size_t>(adj[i][j]);
  std::vector<std::size_t> branch;
  for (std::size_t i = 0; i < n; ++i) {
    if (deg[i] > 3) return std::nullopt;
    if (deg[i] == 3) branch.push_back(i);
  }
  if (branch.empty()) return DynkinType{DynkinFamily::A, n};
  if (branch.size() > 1) return std::nullopt;

  // Leg lengths (in edges) from the branch vertex.
  const std::size_t c = branch[0];
  std::vector<std::size_t> legs;
  for (std::size_t w = 0; w < n; ++w) {
    if (!adj[c][w]) continue;
    std::size_t len = 1, prev = c, cur = w;
    for (;;) {
      std::size_t nxt = n;
      for (std::size_t x = 0; x < n; ++x)
        if (adj[cur][x] && x != prev) nxt = x;
      if (nxt == n) break;
      prev = cur;
      cur = nxt;
      ++len;
    }
    legs.push_back(len);
  }
  std::sort(legs.begin(), legs.end());
  if (legs[0] == 1 && legs[1] == 1) return DynkinType{DynkinFamily::D, n};
  if (legs[0] == 1 && legs[1] == 2 && legs[2] >= 2 && legs[2] <= 4) return DynkinType{DynkinFamily::E, n};
  return std::nullopt;
}

/// Cartan matrix 2I - adjacency of a simply-laced diagram in Bourbaki
/// numbering (0-based): A_n a chain; D_n a chain 0..n-2 with n-1 attached to
/// n-3; E_n the chain 0-2-3-...-(n-1) with 1 attached to 3.
inline IntMatrix cartan_matrix(const DynkinType& t) {
  const std::size_t n = t.rank;
  IntMatrix c(n, std::vector<int>(n, 0));
  auto edge = [&](std::size_t i, std::size_t j) { c[i][j] = c[j][i] = -1; };
  for (std::size_t i = 0; i < n; ++i) c[i][i] = 2;
  switch (t.family) {
    case DynkinFamily::A:
      for (std::size_t i = 0; i + 1 < n; ++i) edge(i, i + 1);
      break;
    case DynkinFamily::D:
      for (std::size_t i = 0; i + 2 < n; ++i) edge(i, i + 1);
      edge(n - 3, n - 1);
      break;
    case DynkinFamily::E:
      edge(0, 2);
      edge(1, 3);
      for (std::size_t i = 2; i + 1 < n; ++i) edge(i, i + 1);
      break;
  }
  return c;
}

inline int root_height(const Root& r) { return std::accumulate(r.begin(), r.end(), 0); }

/// Positive roots of the simply-laced root system with Cartan matrix
/// `cartan`, generated by alpha-string closure: beta + alpha_i is a root iff
/// q > 0 where q = p - (beta, alpha_i) and p is the largest k with
/// beta - k alpha_i a root. Roots are produced height by height, so every
/// root needed for p is already known. Output sorted lexicographically.
inline std::vector<Root> positive_roots_from_cartan(const IntMatrix& cartan) {
  const std::size_t n = cartan.size();
  std::set<Root> known;
  std::vector<Root> layer;
  for (std::size_t i = 0; i < n; ++i) {
    Root r(n, 0);
    r[i] = 1;
    layer.push_back(r);
    known.insert(r);
  }
  while (!layer.empty()) {
    std::set<Root> next;
    for (const auto& beta : layer)
      for (std::size_t i = 0; i < n; ++i) {
        int pairing = 0;
        for (std::size_t j = 0; j < n; ++j) pairing += beta[j] * cartan[j][i];
        int p = 0;
        for (Root down = beta; down[i] > 0;) {
          --down[i];
          if (!known.count(down)) break;
          ++p;
        }
        if (p - pairing > 0) {
          Root up = beta;
          ++up[i];
          next.insert(up);
        }
      }
    layer.assign(next.begin(), next.end());
    known.insert(next.begin(), next.end());
    if (known.size() > 100000) throw InputError("root closure does not terminate: not a finite type diagram");
  }
  return {known.begin(), known.end()};
}

struct RootSystem {
  DynkinType type;
  std::size_t simple_count = 0;
  std::vector<Root> positive_roots;

  Root highest_root() const {
    return *std::max_element(positive_roots.begin(), positive_roots.end(),
                             [](const Root& a, const Root& b) { return root_height(a) < root_height(b); });
  }
};

inline RootSystem positive_roots(const DynkinType& t) {
  return {t, t.rank, positive_roots_from_cartan(cartan_matrix(t))};
}

/// A_s = prod_k M_k(Q)^{mult_k}: one block of size height(alpha) per positive
/// root alpha of the underlying diagram.
struct EnvelopeReport {
  DynkinType type;
  std::vector<std::pair<std::size_t, std::size_t>> blocks;  // (size, multiplicity), sizes ascending

  std::size_t block_count() const {
    std::size_t c = 0;
    for (const auto& b : blocks) c += b.second;
    return c;
  }
};

inline std::vector<std::pair<std::size_t, std::size_t>> height_multiset(const std::vector<Root>& roots) {
  std::map<std::size_t, std::size_t> counts;
  for (const auto& r : roots) ++counts[static_cast<std::size_t>(root_height(r))];
  return {counts.begin(), counts.end()};
}

/// Pro-semisimple envelope of a representation-finite path algebra. Roots
/// are computed on the quiver's own underlying graph, so the result does not
/// depend on vertex numbering or arrow orientation.
inline EnvelopeReport envelope(const Quiver& q) {
  const auto type = dynkin_classify(q);
  if (!type) throw InputError("not representation-finite: underlying graph is not a connected ADE diagram");
  IntMatrix cartan = underlying_graph(q);
  for (std::size_t i = 0; i < cartan.size(); ++i)
    for (std::size_t j = 0; j < cartan.size(); ++j) cartan[i][j] = i == j ? 2 : -cartan[i][j];
  return {*type, height_multiset(positive_roots_from_cartan(cartan))};
}

}  // namespace wedkit

#endif  // WEDKIT_QUIVER_HPP
