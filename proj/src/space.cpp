#include "vecmeas/space.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace vecmeas {

AlgebraPtr make_algebra(std::vector<std::string> atom_names) {
  if (atom_names.empty())
    throw std::domain_error("algebra needs at least one atom");
  std::set<std::string> seen(atom_names.begin(), atom_names.end());
  if (seen.size() != atom_names.size())
    throw std::domain_error("atom identifiers must be distinct");
  auto a = std::make_shared<FiniteAlgebra>();
  a->atoms = std::move(atom_names);
  return a;
}

AlgebraPtr make_dyadic_algebra(int level) {
  if (level < 0) throw std::domain_error("dyadic level must be >= 0");
  if (level > kMaxDyadicLevel)
    throw std::length_error("dyadic level above cap " +
                            std::to_string(kMaxDyadicLevel));
  auto a = std::make_shared<FiniteAlgebra>();
  const long long m = 1ll << level;
  a->atoms.reserve(m);
  const std::string den = std::to_string(m);
  for (long long i = 0; i < m; ++i) {
    // atom i covers [i/2^n, (i+1)/2^n)
    a->atoms.push_back("[" + std::to_string(i) + "/" + den + "," +
                       std::to_string(i + 1) + "/" + den + ")");
  }
  a->dyadic_level = level;
  return a;
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b,
                          const char* where) {
  if (!same_algebra(a, b))
    throw std::domain_error(std::string(where) + ": algebra mismatch");
}

bool MeasurableSet::contains(int atom) const {
  return std::binary_search(atoms.begin(), atoms.end(), atom);
}

MeasurableSet make_set(AlgebraPtr alg, std::vector<int> atom_indices) {
  if (!alg) throw std::domain_error("make_set: null algebra");
  std::sort(atom_indices.begin(), atom_indices.end());
  atom_indices.erase(std::unique(atom_indices.begin(), atom_indices.end()),
                     atom_indices.end());
  for (int i : atom_indices)
    if (i < 0 || i >= alg->size())
      throw std::domain_error("atom index " + std::to_string(i) +
                              " outside algebra of size " +
                              std::to_string(alg->size()));
  return MeasurableSet{std::move(alg), std::move(atom_indices)};
}

MeasurableSet empty_set(AlgebraPtr alg) { return make_set(std::move(alg), {}); }

MeasurableSet full_set(AlgebraPtr alg) {
  std::vector<int> all(alg->size());
  for (int i = 0; i < (int)all.size(); ++i) all[i] = i;
  return MeasurableSet{std::move(alg), std::move(all)};
}

namespace {
template <class Op>
MeasurableSet set_binop(const MeasurableSet& a, const MeasurableSet& b, Op op,
                        const char* where) {
  require_same_algebra(a.alg, b.alg, where);
  std::vector<int> out;
  op(a.atoms, b.atoms, std::back_inserter(out));
  return MeasurableSet{a.alg, std::move(out)};
}
}  // namespace

MeasurableSet set_union(const MeasurableSet& a, const MeasurableSet& b) {
  return set_binop(a, b, [](auto& x, auto& y, auto o) {
    std::set_union(x.begin(), x.end(), y.begin(), y.end(), o);
  }, "set_union");
}

MeasurableSet set_intersect(const MeasurableSet& a, const MeasurableSet& b) {
  return set_binop(a, b, [](auto& x, auto& y, auto o) {
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), o);
  }, "set_intersect");
}

MeasurableSet set_difference(const MeasurableSet& a, const MeasurableSet& b) {
  return set_binop(a, b, [](auto& x, auto& y, auto o) {
    std::set_difference(x.begin(), x.end(), y.begin(), y.end(), o);
  }, "set_difference");
}

MeasurableSet set_complement(const MeasurableSet& a) {
  return set_difference(full_set(a.alg), a);
}

MeasurableSet symmetric_difference(const MeasurableSet& a,
                                   const MeasurableSet& b) {
  return set_binop(a, b, [](auto& x, auto& y, auto o) {
    std::set_symmetric_difference(x.begin(), x.end(), y.begin(), y.end(), o);
  }, "symmetric_difference");
}

std::vector<int> Partition::block_of_atom() const {
  std::vector<int> owner(alg->size(), -1);
  for (int j = 0; j < block_count(); ++j)
    for (int b : blocks[j].atoms) owner[b] = j;
  return owner;
}

bool Partition::operator==(const Partition& o) const {
  if (!same_algebra(alg, o.alg) || blocks.size() != o.blocks.size())
    return false;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (blocks[i].atoms != o.blocks[i].atoms) return false;
  return true;
}

Partition make_partition(AlgebraPtr alg,
                         std::vector<std::vector<int>> block_indices) {
  if (!alg) throw std::domain_error("make_partition: null algebra");
  std::vector<MeasurableSet> blocks;
  std::vector<char> covered(alg->size(), 0);
  for (auto& idx : block_indices) {
    MeasurableSet s = make_set(alg, std::move(idx));
    if (s.atoms.empty())
      throw std::domain_error("make_partition: empty block");
    for (int b : s.atoms) {
      if (covered[b])
        throw std::domain_error("make_partition: atom " + std::to_string(b) +
                                " in two blocks");
      covered[b] = 1;
    }
    blocks.push_back(std::move(s));
  }
  for (int b = 0; b < alg->size(); ++b)
    if (!covered[b])
      throw std::domain_error("make_partition: atom " + std::to_string(b) +
                              " uncovered");
  std::sort(blocks.begin(), blocks.end(),
            [](const MeasurableSet& x, const MeasurableSet& y) {
              return x.atoms.front() < y.atoms.front();
            });
  return Partition{std::move(alg), std::move(blocks)};
}

Partition finest_partition(AlgebraPtr alg) {
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < alg->size(); ++i) blocks.push_back({i});
  return make_partition(std::move(alg), std::move(blocks));
}

Partition coarsest_partition(AlgebraPtr alg) {
  std::vector<int> all(alg->size());
  for (int i = 0; i < (int)all.size(); ++i) all[i] = i;
  return make_partition(std::move(alg), {all});
}

Partition dyadic_partition(const AlgebraPtr& alg, int k) {
  if (!alg || !alg->dyadic_level)
    throw std::domain_error("dyadic_partition: algebra has no dyadic metadata");
  const int n = *alg->dyadic_level;
  if (k < 0 || k > n)
    throw std::domain_error("dyadic_partition: level " + std::to_string(k) +
                            " not in [0," + std::to_string(n) + "]");
  const int width = 1 << (n - k);
  std::vector<std::vector<int>> blocks(1ll << k);
  for (int j = 0; j < (int)blocks.size(); ++j) {
    blocks[j].reserve(width);
    for (int b = j * width; b < (j + 1) * width; ++b) blocks[j].push_back(b);
  }
  return make_partition(alg, std::move(blocks));
}

bool is_refinement(const Partition& fine, const Partition& coarse) {
  require_same_algebra(fine.alg, coarse.alg, "is_refinement");
  const std::vector<int> owner = coarse.block_of_atom();
  for (const MeasurableSet& blk : fine.blocks) {
    const int o = owner[blk.atoms.front()];
    for (int b : blk.atoms)
      if (owner[b] != o) return false;
  }
  return true;
}

Partition common_refinement(const Partition& p1, const Partition& p2) {
  require_same_algebra(p1.alg, p2.alg, "common_refinement");
  const std::vector<int> o1 = p1.block_of_atom();
  const std::vector<int> o2 = p2.block_of_atom();
  std::map<std::pair<int, int>, std::vector<int>> cells;
  for (int b = 0; b < p1.alg->size(); ++b)
    cells[{o1[b], o2[b]}].push_back(b);
  std::vector<std::vector<int>> blocks;
  blocks.reserve(cells.size());
  for (auto& [key, atoms] : cells) blocks.push_back(std::move(atoms));
  return make_partition(p1.alg, std::move(blocks));
}

}  // namespace vecmeas
