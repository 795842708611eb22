#include "sumset/multiset.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "internal.hpp"
#include "sumset/sumset.hpp"

namespace sumset {

MultisetFamily::MultisetFamily(std::shared_ptr<const PointSet> ground, unsigned arity, std::vector<KMultiset> members)
    : ground_(std::move(ground)), arity_(arity), members_(std::move(members)) {
  if (!ground_) throw std::invalid_argument("multiset family needs a ground set");
  if (arity_ == 0) throw std::invalid_argument("multiset arity must be at least 1");
  for (auto& m : members_) {
    if (m.arity() != arity_) throw std::invalid_argument("multiset arity mismatch");
    for (auto e : m.entries) {
      if (e >= ground_->size()) throw std::out_of_range("multiset entry outside the ground set");
    }
    std::sort(m.entries.begin(), m.entries.end());
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool MultisetFamily::contains(const KMultiset& m) const {
  return std::binary_search(members_.begin(), members_.end(), m);
}

bool MultisetFamily::same_as(const MultisetFamily& other) const {
  return arity_ == other.arity_ && *ground_ == *other.ground_ && members_ == other.members_;
}

MultisetFamily lexmin_embedding(const PointSet& a, unsigned h) {
  return lexmin_embedding(std::make_shared<const PointSet>(a), h);
}

MultisetFamily lexmin_embedding(std::shared_ptr<const PointSet> ground, unsigned h) {
  const PointSet& a = *ground;
  if (a.empty()) throw std::invalid_argument("lex-minimal embedding of an empty set");
  if (h == 0) throw std::invalid_argument("embedding arity must be at least 1");
  const GroupSpec& g = a.group();
  const std::size_t d = a.dim();
  const auto n = static_cast<std::uint32_t>(a.size());

  // Level 1: singletons, with their sums.
  std::vector<std::uint32_t> members(n);  // flat, `level` entries each
  std::vector<std::int64_t> sums = a.flat();
  for (std::uint32_t i = 0; i < n; ++i) members[i] = i;

  // Every sub-multiset of a lex-minimal representative is lex-minimal, so
  // the level-j minimum extends a level-(j-1) minimum by an entry >= its
  // last. Candidates come out in lex order; the first hit per sum wins.
  std::vector<std::int64_t> s(d);
  for (unsigned level = 2; level <= h; ++level) {
    const std::size_t prev = members.size() / (level - 1);
    ElementTable seen = detail::table_for_multiple(a, level, prev * 2);
    std::vector<std::uint32_t> next_members;
    std::vector<std::int64_t> next_sums;
    for (std::size_t p = 0; p < prev; ++p) {
      const std::uint32_t* m = members.data() + p * (level - 1);
      std::span<const std::int64_t> ps(sums.data() + p * d, d);
      for (std::uint32_t x = m[level - 2]; x < n; ++x) {
        detail::add_into(g, ps, a.at(x), s);
        if (!seen.insert(s)) continue;
        next_members.insert(next_members.end(), m, m + (level - 1));
        next_members.push_back(x);
        next_sums.insert(next_sums.end(), s.begin(), s.end());
      }
    }
    members = std::move(next_members);
    sums = std::move(next_sums);
  }

  std::vector<KMultiset> out(members.size() / h);
  for (std::size_t p = 0; p < out.size(); ++p) {
    out[p].entries.assign(members.begin() + static_cast<std::ptrdiff_t>(p * h),
                          members.begin() + static_cast<std::ptrdiff_t>((p + 1) * h));
  }
  return MultisetFamily(std::move(ground), h, std::move(out));
}

MultisetFamily shadow(const MultisetFamily& family) {
  const unsigned k = family.arity();
  if (k < 2) throw std::invalid_argument("shadow needs arity at least 2");
  std::vector<KMultiset> out;
  out.reserve(family.size() * k);
  for (const auto& m : family.members()) {
    for (unsigned i = 0; i < k; ++i) {
      if (i > 0 && m.entries[i] == m.entries[i - 1]) continue;
      KMultiset r;
      r.entries.reserve(k - 1);
      for (unsigned j = 0; j < k; ++j) {
        if (j != i) r.entries.push_back(m.entries[j]);
      }
      out.push_back(std::move(r));
    }
  }
  return MultisetFamily(family.ground_ptr(), k - 1, std::move(out));
}

ShadowIdentityReport verify_shadow_identity(const PointSet& a, unsigned h) {
  if (h < 2) throw std::invalid_argument("shadow identity needs h >= 2");
  auto ground = std::make_shared<const PointSet>(a);
  MultisetFamily s = lexmin_embedding(ground, h);
  MultisetFamily c = lexmin_embedding(ground, h - 1);
  MultisetFamily ds = shadow(s);
  ShadowIdentityReport r;
  r.h = h;
  r.s_size = s.size();
  r.c_size = c.size();
  r.shadow_size = ds.size();
  r.passed = ds.same_as(c);
  return r;
}

TupleEmbedding tuple_embedding(const PointSet& a) {
  if (a.empty()) throw std::invalid_argument("tuple embedding of an empty set");
  const GroupSpec& g = a.group();
  const std::size_t d = a.dim();
  const auto n = static_cast<std::uint32_t>(a.size());
  TupleEmbedding out;
  std::vector<std::int64_t> s(d);

  std::vector<std::int64_t> c_sums;
  {
    ElementTable seen = detail::table_for_multiple(a, 2, a.size() * 4);
    for (std::uint32_t x = 0; x < n; ++x) {
      for (std::uint32_t y = 0; y < n; ++y) {
        detail::add_into(g, a.at(x), a.at(y), s);
        if (!seen.insert(s)) continue;
        out.c.push_back({x, y});
        c_sums.insert(c_sums.end(), s.begin(), s.end());
      }
    }
  }
  // pi12 of a lex-minimal triple is lex-minimal, so extend members of C.
  ElementTable seen = detail::table_for_multiple(a, 3, out.c.size() * 4);
  std::vector<std::int64_t> t(d);
  for (std::size_t p = 0; p < out.c.size(); ++p) {
    std::span<const std::int64_t> ps(c_sums.data() + p * d, d);
    for (std::uint32_t z = 0; z < n; ++z) {
      detail::add_into(g, ps, a.at(z), t);
      if (!seen.insert(t)) continue;
      out.s.push_back({out.c[p][0], out.c[p][1], z});
    }
  }
  return out;
}

namespace {

bool all_in(const std::vector<IndexPair>& xs, const std::vector<IndexPair>& sorted_c) {
  return std::all_of(xs.begin(), xs.end(),
                     [&](const IndexPair& p) { return std::binary_search(sorted_c.begin(), sorted_c.end(), p); });
}

std::vector<IndexPair> project(const std::vector<IndexTriple>& s, int i, int j) {
  std::vector<IndexPair> out;
  out.reserve(s.size());
  for (const auto& t : s) out.push_back({t[i], t[j]});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

ProjectionReport tuple_embedding_projections(const PointSet& a) {
  ProjectionReport r;
  r.embedding = tuple_embedding(a);
  std::vector<IndexPair> c = r.embedding.c;
  std::sort(c.begin(), c.end());
  const auto& s = r.embedding.s;
  r.pi12 = project(s, 0, 1);
  r.pi13 = project(s, 0, 2);
  r.pi23 = project(s, 1, 2);
  r.pi12_in_c = all_in(r.pi12, c);
  r.pi13_in_c = all_in(r.pi13, c);
  r.pi23_in_c = all_in(r.pi23, c);
  r.size_matches = s.size() == iterated_sumset(a, 3).size();
  r.lw_lhs = static_cast<Wide>(s.size()) * static_cast<Wide>(s.size());
  r.lw_rhs = static_cast<Wide>(r.pi12.size()) * static_cast<Wide>(r.pi23.size()) * static_cast<Wide>(r.pi13.size());
  r.lw_holds = r.lw_lhs <= r.lw_rhs;
  return r;
}

TriangleGraph triangle_graph(const PointSet& a) { return triangle_graph(a, tuple_embedding(a)); }

TriangleGraph triangle_graph(const PointSet& a, const TupleEmbedding& embedding) {
  TriangleGraph g;
  g.adjacency.assign(a.size(), {});
  for (const auto& [x, y] : embedding.c) {
    if (x == y) continue;
    g.adjacency[x].push_back(y);
    g.adjacency[y].push_back(x);
  }
  for (auto& adj : g.adjacency) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    g.edge_count += adj.size();
  }
  g.edge_count /= 2;
  // For each edge u < v intersect the sorted neighbourhoods above v.
  for (std::uint32_t u = 0; u < g.adjacency.size(); ++u) {
    const auto& nu = g.adjacency[u];
    for (auto v : nu) {
      if (v <= u) continue;
      const auto& nv = g.adjacency[v];
      auto iu = std::upper_bound(nu.begin(), nu.end(), v);
      auto iv = std::upper_bound(nv.begin(), nv.end(), v);
      while (iu != nu.end() && iv != nv.end()) {
        if (*iu < *iv) {
          ++iu;
        } else if (*iv < *iu) {
          ++iv;
        } else {
          g.triangles.push_back({u, v, *iu});
          ++iu;
          ++iv;
        }
      }
    }
  }
  return g;
}

bool kruskal_katona_sumset_bound_holds(Wide s, Wide c) {
  auto twice_c = checked_mul(2, c);
  if (twice_c && s <= *twice_c) return true;
  if (twice_c) {
    Wide t = s - *twice_c;
    auto t2 = checked_mul(t, t);
    auto c3 = checked_pow(c, 3);
    auto lhs = t2 ? checked_mul(9, *t2) : std::nullopt;
    auto rhs = c3 ? checked_mul(2, *c3) : std::nullopt;
    if (lhs && rhs) return *lhs <= *rhs;
  }
  const long double cl = static_cast<long double>(c);
  const long double bound = std::sqrt(2.0L) / 3.0L * std::pow(cl, 1.5L) + 2.0L * cl;
  return static_cast<long double>(s) <= bound * (1.0L + 1e-9L);
}

TriangleStats triangle_stats(const PointSet& a) {
  TupleEmbedding emb = tuple_embedding(a);
  TriangleGraph graph = triangle_graph(a, emb);
  TriangleStats st;
  st.vertex_count = a.size();
  st.edge_count = graph.edge_count;
  st.triangle_count = graph.triangles.size();
  st.s_size = emb.s.size();
  st.c_size = emb.c.size();
  for (const auto& [x, y] : emb.c) {
    if (x != y) ++st.distinct_pair_count;
  }
  for (const auto& t : emb.s) {
    if (t[0] != t[1] && t[1] != t[2]) ++st.distinct_triple_count;
  }
  auto max_triangles = binomial(static_cast<std::int64_t>(st.vertex_count), 3);
  st.triangle_count_bounded = !max_triangles || static_cast<Wide>(st.triangle_count) <= *max_triangles;
  st.triples_in_triangles = st.distinct_triple_count <= st.triangle_count;
  st.repeated_part_bounded = st.s_size - st.distinct_triple_count <= 2 * st.c_size;
  const double c = static_cast<double>(st.c_size);
  st.eq22_bound = std::sqrt(2.0) / 3.0 * std::pow(c, 1.5) + 2.0 * c;
  st.eq22_holds = kruskal_katona_sumset_bound_holds(static_cast<Wide>(st.s_size), static_cast<Wide>(st.c_size));
  return st;
}

}  // namespace sumset
