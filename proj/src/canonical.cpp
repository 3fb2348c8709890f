#include "lpa/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "lpa/errors.hpp"

namespace lpa {

namespace {

// Cell encoding of the adjacency matrix: 0 = no bundle, finite m = m,
// infinity = max. Bundles never have multiplicity 0, so 0 is free.
std::uint64_t cell(const Graph& g, int s, int t) {
  Multiplicity m = g.bundle_mult(s, t);
  if (m.is_infinite()) return ~std::uint64_t{0};
  return m.value();
}

struct Search {
  const Graph& g;
  int n;
  std::vector<std::vector<std::uint64_t>> m;  // dense adjacency cells
  std::vector<int> class_of_pos;              // which class owns each position
  std::vector<std::vector<int>> class_members;
  std::vector<int> twin_rep;  // canonical representative of each vertex's twin class

  std::vector<int> cur;   // chosen original indices, by position
  std::vector<char> used;
  std::vector<int> best;  // best permutation found so far (empty = none yet)

  // Extension cells contributed by placing a vertex at position k:
  // row over the prefix, then the new column.
  std::uint64_t ext_cell(const std::vector<int>& perm, int k, int j) const {
    // j in [0, 2k]: first k+1 cells are row perm[k] x perm[0..k],
    // remaining k cells are column perm[0..k-1] x perm[k].
    if (j <= k) return m[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])]
                        [static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])];
    return m[static_cast<std::size_t>(perm[static_cast<std::size_t>(j - k - 1)])]
            [static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])];
  }

  // Returns true if best was replaced somewhere in this subtree.
  bool rec(int k, bool tight) {
    if (k == n) {
      if (!tight || best.empty()) {
        best = cur;
        return true;
      }
      return false;
    }
    bool updated = false;
    const std::vector<int>& cands = class_members[static_cast<std::size_t>(class_of_pos[static_cast<std::size_t>(k)])];
    std::vector<char> twin_seen(static_cast<std::size_t>(n), 0);
    for (int v : cands) {
      if (used[static_cast<std::size_t>(v)]) continue;
      int rep = twin_rep[static_cast<std::size_t>(v)];
      if (twin_seen[static_cast<std::size_t>(rep)]) continue;  // interchangeable with a tried sibling
      twin_seen[static_cast<std::size_t>(rep)] = 1;

      cur[static_cast<std::size_t>(k)] = v;
      bool child_tight = tight && !best.empty();
      if (child_tight) {
        int cmp = 0;
        for (int j = 0; j <= 2 * k && cmp == 0; ++j) {
          std::uint64_t a = ext_cell(cur, k, j);
          std::uint64_t b = ext_cell(best, k, j);
          cmp = a < b ? -1 : a > b ? 1 : 0;
        }
        if (cmp > 0) continue;   // worse than best on this segment
        if (cmp < 0) child_tight = false;
      }
      used[static_cast<std::size_t>(v)] = 1;
      bool u = rec(k + 1, child_tight && !best.empty());
      used[static_cast<std::size_t>(v)] = 0;
      if (u) {
        updated = true;
        tight = true;  // best now runs through our prefix
      }
    }
    return updated;
  }
};

}  // namespace

std::string canonical_form(const Graph& g, int limit) {
  const int n = g.vertex_count();
  if (n > limit)
    throw scope_error("canonical form limited to " + std::to_string(limit) + " vertices, got " +
                      std::to_string(n));

  Search s{g, n, {}, {}, {}, {}, {}, {}, {}};
  s.m.assign(static_cast<std::size_t>(n), std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = cell(g, i, j);

  // Invariant keys refined Weisfeiler-Leman style over bundle labels;
  // isomorphisms preserve the keys, so restricting the search to
  // class-respecting orders keeps the minimum canonical.
  std::vector<std::vector<std::uint64_t>> key(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    std::vector<std::uint64_t> out, in;
    for (int t = 0; t < n; ++t) {
      if (s.m[static_cast<std::size_t>(v)][static_cast<std::size_t>(t)])
        out.push_back(s.m[static_cast<std::size_t>(v)][static_cast<std::size_t>(t)]);
      if (s.m[static_cast<std::size_t>(t)][static_cast<std::size_t>(v)])
        in.push_back(s.m[static_cast<std::size_t>(t)][static_cast<std::size_t>(v)]);
    }
    std::sort(out.begin(), out.end());
    std::sort(in.begin(), in.end());
    key[static_cast<std::size_t>(v)].push_back(s.m[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)]);
    key[static_cast<std::size_t>(v)].push_back(out.size());
    key[static_cast<std::size_t>(v)].insert(key[static_cast<std::size_t>(v)].end(), out.begin(), out.end());
    key[static_cast<std::size_t>(v)].push_back(in.size());
    key[static_cast<std::size_t>(v)].insert(key[static_cast<std::size_t>(v)].end(), in.begin(), in.end());
  }
  std::vector<int> color(static_cast<std::size_t>(n));
  {
    std::map<std::vector<std::uint64_t>, int> ranks;
    for (const auto& k : key) ranks.emplace(k, 0);
    int r = 0;
    for (auto& [k, v] : ranks) v = r++;
    for (int v = 0; v < n; ++v) color[static_cast<std::size_t>(v)] = ranks[key[static_cast<std::size_t>(v)]];
  }
  for (int round = 0; round < n; ++round) {
    std::vector<std::vector<std::uint64_t>> rk(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      std::vector<std::uint64_t> out, in;
      for (int t = 0; t < n; ++t) {
        std::uint64_t a = s.m[static_cast<std::size_t>(v)][static_cast<std::size_t>(t)];
        std::uint64_t b = s.m[static_cast<std::size_t>(t)][static_cast<std::size_t>(v)];
        if (a) out.push_back(a * 131 + static_cast<std::uint64_t>(color[static_cast<std::size_t>(t)]));
        if (b) in.push_back(b * 131 + static_cast<std::uint64_t>(color[static_cast<std::size_t>(t)]));
      }
      std::sort(out.begin(), out.end());
      std::sort(in.begin(), in.end());
      rk[static_cast<std::size_t>(v)].push_back(static_cast<std::uint64_t>(color[static_cast<std::size_t>(v)]));
      rk[static_cast<std::size_t>(v)].insert(rk[static_cast<std::size_t>(v)].end(), out.begin(), out.end());
      rk[static_cast<std::size_t>(v)].push_back(~std::uint64_t{0});
      rk[static_cast<std::size_t>(v)].insert(rk[static_cast<std::size_t>(v)].end(), in.begin(), in.end());
    }
    std::map<std::vector<std::uint64_t>, int> ranks;
    for (const auto& k : rk) ranks.emplace(k, 0);
    int r = 0;
    for (auto& [k, v] : ranks) v = r++;
    std::vector<int> next(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) next[static_cast<std::size_t>(v)] = ranks[rk[static_cast<std::size_t>(v)]];
    if (next == color) break;
    color = std::move(next);
    // Iterate with the refined key as the class key.
    for (int v = 0; v < n; ++v) key[static_cast<std::size_t>(v)] = rk[static_cast<std::size_t>(v)];
  }

  // Classes in key order; positions are filled class by class.
  {
    std::map<std::vector<std::uint64_t>, std::vector<int>> classes;
    for (int v = 0; v < n; ++v) classes[key[static_cast<std::size_t>(v)]].push_back(v);
    for (auto& [k, members] : classes) {
      int c = static_cast<int>(s.class_members.size());
      for (std::size_t i = 0; i < members.size(); ++i) s.class_of_pos.push_back(c);
      s.class_members.push_back(members);
    }
  }

  // True twins: swapping the pair is an automorphism, so only one member
  // per twin class needs to be tried at any position.
  s.twin_rep.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) s.twin_rep[static_cast<std::size_t>(v)] = v;
  for (int v = 0; v < n; ++v)
    for (int w = v + 1; w < n; ++w) {
      if (s.twin_rep[static_cast<std::size_t>(w)] != w) continue;
      bool twin = s.m[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] == s.m[static_cast<std::size_t>(w)][static_cast<std::size_t>(w)] &&
                  s.m[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] == s.m[static_cast<std::size_t>(w)][static_cast<std::size_t>(v)];
      for (int t = 0; twin && t < n; ++t) {
        if (t == v || t == w) continue;
        twin = s.m[static_cast<std::size_t>(v)][static_cast<std::size_t>(t)] == s.m[static_cast<std::size_t>(w)][static_cast<std::size_t>(t)] &&
               s.m[static_cast<std::size_t>(t)][static_cast<std::size_t>(v)] == s.m[static_cast<std::size_t>(t)][static_cast<std::size_t>(w)];
      }
      if (twin) s.twin_rep[static_cast<std::size_t>(w)] = s.twin_rep[static_cast<std::size_t>(v)];
    }

  s.cur.assign(static_cast<std::size_t>(n), -1);
  s.used.assign(static_cast<std::size_t>(n), 0);
  s.rec(0, false);

  std::string out = "v" + std::to_string(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::uint64_t c = s.m[static_cast<std::size_t>(s.best[static_cast<std::size_t>(i)])]
                           [static_cast<std::size_t>(s.best[static_cast<std::size_t>(j)])];
      if (!c) continue;
      out += ";" + std::to_string(i) + ">" + std::to_string(j) + ":";
      out += c == ~std::uint64_t{0} ? "inf" : std::to_string(c);
    }
  return out;
}

}  // namespace lpa
