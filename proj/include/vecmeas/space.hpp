#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vecmeas/rational.hpp"

namespace vecmeas {

// Finite measurable space given by an ordered list of atoms. When dyadic
// metadata is present the space has 2^level atoms and atom i stands for the
// half-open interval [i/2^level, (i+1)/2^level) of [0,1); the endpoint 1
// belongs to no atom.
struct FiniteAlgebra {
  std::vector<std::string> atoms;
  std::optional<int> dyadic_level;

  int size() const { return static_cast<int>(atoms.size()); }
  bool operator==(const FiniteAlgebra& o) const {
    return atoms == o.atoms && dyadic_level == o.dyadic_level;
  }
};

using AlgebraPtr = std::shared_ptr<const FiniteAlgebra>;

// Atom caps. Set algebra allows up to 2^24 atoms; the norm kernels impose
// far smaller enumeration caps of their own.
inline constexpr int kMaxDyadicLevel = 24;

AlgebraPtr make_algebra(std::vector<std::string> atom_names);
AlgebraPtr make_dyadic_algebra(int level);

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);
void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b,
                          const char* where);

// Subset of the atoms of one algebra. Indices are kept sorted and unique,
// so equality is extensional.
struct MeasurableSet {
  AlgebraPtr alg;
  std::vector<int> atoms;

  int size() const { return static_cast<int>(atoms.size()); }
  bool contains(int atom) const;
  bool operator==(const MeasurableSet& o) const {
    return same_algebra(alg, o.alg) && atoms == o.atoms;
  }
};

MeasurableSet make_set(AlgebraPtr alg, std::vector<int> atom_indices);
MeasurableSet empty_set(AlgebraPtr alg);
MeasurableSet full_set(AlgebraPtr alg);
MeasurableSet set_union(const MeasurableSet& a, const MeasurableSet& b);
MeasurableSet set_intersect(const MeasurableSet& a, const MeasurableSet& b);
MeasurableSet set_difference(const MeasurableSet& a, const MeasurableSet& b);
MeasurableSet set_complement(const MeasurableSet& a);
MeasurableSet symmetric_difference(const MeasurableSet& a,
                                   const MeasurableSet& b);

// Disjoint cover of the atom set. Blocks are normalized: each block's atoms
// sorted, blocks ordered by smallest contained atom, so partition equality
// is canonical.
struct Partition {
  AlgebraPtr alg;
  std::vector<MeasurableSet> blocks;

  int block_count() const { return static_cast<int>(blocks.size()); }
  // block index of each atom, size M
  std::vector<int> block_of_atom() const;
  bool operator==(const Partition& o) const;
};

Partition make_partition(AlgebraPtr alg, std::vector<std::vector<int>> blocks);
Partition finest_partition(AlgebraPtr alg);
Partition coarsest_partition(AlgebraPtr alg);

// Level-k dyadic partition of a level-n dyadic algebra: 2^k blocks of
// 2^(n-k) consecutive atoms each. Requires 0 <= k <= n.
Partition dyadic_partition(const AlgebraPtr& alg, int k);

// True iff every block of `fine` lies inside exactly one block of `coarse`.
// This is the partial order that directs every convergence net here.
bool is_refinement(const Partition& fine, const Partition& coarse);

// Coarsest partition refining both arguments: all nonempty intersections of
// a p1-block with a p2-block.
Partition common_refinement(const Partition& p1, const Partition& p2);

}  // namespace vecmeas
