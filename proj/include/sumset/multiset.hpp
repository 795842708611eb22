#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "sumset/arith.hpp"
#include "sumset/point_set.hpp"

namespace sumset {

/// A k-multiset over a ground PointSet, as non-decreasing indices into it.
/// Because the ground set is sorted, the defaulted comparison (lexicographic
/// on the sorted entries) is the multiset lexicographic order.
struct KMultiset {
  std::vector<std::uint32_t> entries;

  std::size_t arity() const { return entries.size(); }
  auto operator<=>(const KMultiset&) const = default;
};

class MultisetFamily {
 public:
  /// Sorts each member, then sorts and deduplicates the family. Throws if a
  /// member has the wrong arity or an index outside the ground set.
  MultisetFamily(std::shared_ptr<const PointSet> ground, unsigned arity, std::vector<KMultiset> members);

  unsigned arity() const { return arity_; }
  const PointSet& ground() const { return *ground_; }
  std::shared_ptr<const PointSet> ground_ptr() const { return ground_; }
  const std::vector<KMultiset>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(const KMultiset& m) const;

  /// Same ground set contents, arity and members.
  bool same_as(const MultisetFamily& other) const;

 private:
  std::shared_ptr<const PointSet> ground_;
  unsigned arity_;
  std::vector<KMultiset> members_;
};

/// For each s in hA the lexicographically smallest h-multiset of A summing
/// to s. h = 1 gives the singletons.
MultisetFamily lexmin_embedding(const PointSet& a, unsigned h);
MultisetFamily lexmin_embedding(std::shared_ptr<const PointSet> a, unsigned h);

/// Lower shadow: every (k-1)-multiset obtained by deleting one entry.
MultisetFamily shadow(const MultisetFamily& family);

struct ShadowIdentityReport {
  unsigned h = 0;
  bool passed = false;
  std::size_t s_size = 0;       // |S| = |hA|
  std::size_t shadow_size = 0;  // |dS|
  std::size_t c_size = 0;       // |C| = |(h-1)A|
};

/// Checks dS == C for S, C the lex-minimal embeddings of hA and (h-1)A.
ShadowIdentityReport verify_shadow_identity(const PointSet& a, unsigned h);

using IndexPair = std::array<std::uint32_t, 2>;
using IndexTriple = std::array<std::uint32_t, 3>;

/// Lex-minimal ordered representatives: C in A x A for A + A and S in
/// A x A x A for 3A, in the product order induced by the ground order.
struct TupleEmbedding {
  std::vector<IndexPair> c;
  std::vector<IndexTriple> s;
};

TupleEmbedding tuple_embedding(const PointSet& a);

struct ProjectionReport {
  TupleEmbedding embedding;
  std::vector<IndexPair> pi12;
  std::vector<IndexPair> pi13;
  std::vector<IndexPair> pi23;
  bool pi12_in_c = false;
  bool pi13_in_c = false;
  bool pi23_in_c = false;
  bool size_matches = false;  // |S| == |3A|
  Wide lw_lhs = 0;            // |S|^2
  Wide lw_rhs = 0;            // |pi12| |pi23| |pi13|
  bool lw_holds = false;

  bool all_hold() const { return pi12_in_c && pi13_in_c && pi23_in_c && size_matches && lw_holds; }
};

ProjectionReport tuple_embedding_projections(const PointSet& a);

/// Graph on the indices of A with {x, y} an edge iff (x, y) or (y, x) is an
/// off-diagonal member of C.
struct TriangleGraph {
  std::vector<std::vector<std::uint32_t>> adjacency;  // sorted
  std::vector<IndexTriple> triangles;                 // x < y < z, sorted
  std::size_t edge_count = 0;
};

TriangleGraph triangle_graph(const PointSet& a);
TriangleGraph triangle_graph(const PointSet& a, const TupleEmbedding& embedding);

struct TriangleStats {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::size_t triangle_count = 0;
  std::size_t distinct_triple_count = 0;  // |S'|
  std::size_t distinct_pair_count = 0;    // |C'|
  std::size_t s_size = 0;                 // |S| = |3A|
  std::size_t c_size = 0;                 // |C| = |2A|
  bool triangle_count_bounded = false;    // triangles <= C(v, 3)
  bool triples_in_triangles = false;      // |S'| <= triangles
  bool repeated_part_bounded = false;     // |S| - |S'| <= 2|C|
  double eq22_bound = 0.0;                // (sqrt 2 / 3)|C|^{3/2} + 2|C|
  bool eq22_holds = false;                // |S| <= eq22_bound

  bool all_hold() const {
    return triangle_count_bounded && triples_in_triangles && repeated_part_bounded && eq22_holds;
  }
};

TriangleStats triangle_stats(const PointSet& a);

/// |S| <= (sqrt 2 / 3) c^{3/2} + 2c, decided exactly.
bool kruskal_katona_sumset_bound_holds(Wide s, Wide c);

}  // namespace sumset
