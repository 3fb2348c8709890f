#include "lpa/hsat.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "lpa/errors.hpp"

namespace lpa {

namespace detail {

void require_masks(const Graph& g) {
  if (!g.masks_available())
    throw scope_error("operation supports at most 32 vertices, got " +
                      std::to_string(g.vertex_count()));
}

Mask full_mask(const Graph& g) {
  int n = g.vertex_count();
  return n == 32 ? ~Mask{0} : static_cast<Mask>((Mask{1} << n) - 1);
}

Mask to_mask(const Graph& g, const VertexSet& s) {
  Mask m = 0;
  for (const std::string& name : s) m |= Mask{1} << g.index_of(name);
  return m;
}

VertexSet to_set(const Graph& g, Mask m) {
  VertexSet s;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (m & (Mask{1} << v)) s.insert(g.name_of(v));
  return s;
}

bool hereditary_mask(const Graph& g, Mask h) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if ((h >> v) & 1)
      if (g.out_target_mask(v) & ~h) return false;
  return true;
}

bool saturated_mask(const Graph& g, Mask h) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    if ((h >> v) & 1) continue;
    if (g.kind(v) == VertexKind::Regular && (g.out_target_mask(v) & ~h) == 0) return false;
  }
  return true;
}

Mask closure_mask(const Graph& g, Mask a) {
  const int n = g.vertex_count();
  Mask cur = a;
  for (;;) {
    Mask next = cur;
    for (int v = 0; v < n; ++v)
      if ((next >> v) & 1) next |= g.out_target_mask(v);  // hereditary step
    for (int v = 0; v < n; ++v)                            // saturation step
      if (!((next >> v) & 1) && g.kind(v) == VertexKind::Regular &&
          (g.out_target_mask(v) & ~next) == 0)
        next |= Mask{1} << v;
    if (next == cur) return cur;
    cur = next;
  }
}

Mask breaking_mask(const Graph& g, Mask h) {
  Mask b = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if ((h >> v) & 1) continue;
    if (g.kind(v) != VertexKind::InfiniteEmitter) continue;
    Mask outside = g.out_target_mask(v) & ~h;
    if (outside == 0) continue;                      // everything lands in H
    if (g.omega_target_mask(v) & ~h) continue;       // infinitely many stay outside
    b |= Mask{1} << v;
  }
  return b;
}

std::vector<int> name_rank_of(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return g.name_of(x) < g.name_of(y); });
  std::vector<int> rank_of(static_cast<std::size_t>(n), 0);
  for (int r = 0; r < n; ++r) rank_of[static_cast<std::size_t>(order[static_cast<std::size_t>(r)])] = r;
  return rank_of;
}

bool mask_set_less(const Graph& g, const std::vector<int>& rank_of, Mask a, Mask b) {
  int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  if (a == b) return false;
  // Lexicographic comparison of the sorted name sequences. Remapping the
  // masks into name-rank bit positions makes that a scan over set bits in
  // rank order.
  Mask ra = 0, rb = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if ((a >> v) & 1) ra |= Mask{1} << rank_of[static_cast<std::size_t>(v)];
    if ((b >> v) & 1) rb |= Mask{1} << rank_of[static_cast<std::size_t>(v)];
  }
  while (ra && rb) {
    int la = std::countr_zero(ra), lb = std::countr_zero(rb);
    if (la != lb) return la < lb;
    ra &= ra - 1;
    rb &= rb - 1;
  }
  return ra == 0 && rb != 0;
}

bool mask_set_less(const Graph& g, Mask a, Mask b) {
  return mask_set_less(g, name_rank_of(g), a, b);
}

std::vector<Mask> enumerate_hsat_masks(const Graph& g, int limit) {
  const int n = g.vertex_count();
  if (n > limit)
    throw scope_error("hereditary saturated enumeration limited to " + std::to_string(limit) +
                      " vertices, got " + std::to_string(n));
  require_masks(g);
  std::vector<Mask> out;
  const Mask full = full_mask(g);
  for (Mask m = 0;; ++m) {
    if (hereditary_mask(g, m) && saturated_mask(g, m)) out.push_back(m);
    if (m == full) break;
  }
  const std::vector<int> rank = name_rank_of(g);
  std::sort(out.begin(), out.end(),
            [&](Mask a, Mask b) { return mask_set_less(g, rank, a, b); });
  return out;
}

MaskPair meet_mask(const Graph& g, MaskPair a, MaskPair b) {
  Mask h = a.h & b.h;
  Mask s = (a.s | a.h) & (b.s | b.h) & breaking_mask(g, h);
  return {h, s};
}

MaskPair join_mask(const Graph& g, MaskPair a, MaskPair b) {
  const int n = g.vertex_count();
  Mask h = a.h | b.h;
  const Mask chosen = a.s | b.s;
  for (;;) {
    Mask next = h;
    for (int v = 0; v < n; ++v) {
      if ((next >> v) & 1) continue;
      bool regular = g.kind(v) == VertexKind::Regular;
      bool selected = (chosen >> v) & 1;
      if ((regular || selected) && (g.out_target_mask(v) & ~next) == 0) next |= Mask{1} << v;
    }
    if (next == h) break;
    h = next;
  }
  return {h, chosen & breaking_mask(g, h)};
}

}  // namespace detail

namespace {

detail::Mask checked_mask(const Graph& g, const VertexSet& s) {
  detail::require_masks(g);
  return detail::to_mask(g, s);
}

detail::Mask hsat_mask_checked(const Graph& g, const VertexSet& h, const char* what) {
  detail::Mask m = checked_mask(g, h);
  if (!detail::hereditary_mask(g, m))
    throw std::invalid_argument(std::string(what) + ": set is not hereditary");
  if (!detail::saturated_mask(g, m))
    throw std::invalid_argument(std::string(what) + ": set is not saturated");
  return m;
}

}  // namespace

bool is_hereditary(const Graph& g, const VertexSet& h) {
  return detail::hereditary_mask(g, checked_mask(g, h));
}

bool is_saturated(const Graph& g, const VertexSet& h) {
  return detail::saturated_mask(g, checked_mask(g, h));
}

VertexSet hsat_closure(const Graph& g, const VertexSet& a) {
  return detail::to_set(g, detail::closure_mask(g, checked_mask(g, a)));
}

std::vector<VertexSet> enumerate_hsat(const Graph& g, int limit) {
  std::vector<VertexSet> out;
  for (detail::Mask m : detail::enumerate_hsat_masks(g, limit)) out.push_back(detail::to_set(g, m));
  return out;
}

VertexSet breaking_vertices(const Graph& g, const VertexSet& h) {
  return detail::to_set(g, detail::breaking_mask(g, hsat_mask_checked(g, h, "breaking_vertices")));
}

AdmissiblePair make_admissible_pair(const Graph& g, const VertexSet& h, const VertexSet& s) {
  detail::Mask hm = hsat_mask_checked(g, h, "admissible pair");
  detail::Mask sm = checked_mask(g, s);
  if (sm & ~detail::breaking_mask(g, hm))
    throw std::invalid_argument("admissible pair: S is not a subset of the breaking vertices of H");
  return {h, s};
}

AdmissiblePair meet(const Graph& g, const AdmissiblePair& p1, const AdmissiblePair& p2) {
  detail::MaskPair a{hsat_mask_checked(g, p1.h, "meet"), checked_mask(g, p1.s)};
  detail::MaskPair b{hsat_mask_checked(g, p2.h, "meet"), checked_mask(g, p2.s)};
  if (a.s & ~detail::breaking_mask(g, a.h)) throw std::invalid_argument("meet: first pair not admissible");
  if (b.s & ~detail::breaking_mask(g, b.h)) throw std::invalid_argument("meet: second pair not admissible");
  detail::MaskPair r = detail::meet_mask(g, a, b);
  return {detail::to_set(g, r.h), detail::to_set(g, r.s)};
}

AdmissiblePair join(const Graph& g, const AdmissiblePair& p1, const AdmissiblePair& p2) {
  detail::MaskPair a{hsat_mask_checked(g, p1.h, "join"), checked_mask(g, p1.s)};
  detail::MaskPair b{hsat_mask_checked(g, p2.h, "join"), checked_mask(g, p2.s)};
  if (a.s & ~detail::breaking_mask(g, a.h)) throw std::invalid_argument("join: first pair not admissible");
  if (b.s & ~detail::breaking_mask(g, b.h)) throw std::invalid_argument("join: second pair not admissible");
  detail::MaskPair r = detail::join_mask(g, a, b);
  return {detail::to_set(g, r.h), detail::to_set(g, r.s)};
}

bool is_top(const Graph& g, const AdmissiblePair& p) {
  return static_cast<int>(p.h.size()) == g.vertex_count() && p.s.empty();
}

bool is_bottom(const AdmissiblePair& p) { return p.h.empty() && p.s.empty(); }

}  // namespace lpa
