#pragma once

#include <utility>
#include <vector>

#include "entrec/vectors.hpp"

namespace entrec {

enum class BlockTag { Equal, Strict };

// One block of a normal decomposition: matching segments of x and y with
// either x_block = y_block (Equal) or x_block strictly majorized (Strict).
struct Block {
  SchmidtVector x;
  SchmidtVector y;
  BlockTag tag;
};

// The unique blockwise split of a majorized pair.  Block indices are 1-based;
// I lists Equal blocks, D lists Strict blocks, and no two Equal blocks are
// adjacent.  I_grouped holds the singletons of I, D_grouped the maximal runs
// of consecutive indices in D, both in natural (ascending) order.
struct NormalDecomposition {
  std::vector<Block> blocks;
  std::vector<int> I;
  std::vector<int> D;
  std::vector<std::vector<int>> I_grouped;
  std::vector<std::vector<int>> D_grouped;

  int block_count() const { return static_cast<int>(blocks.size()); }
};

// Requires x majorized by y.  Cuts both vectors at every prefix-equality
// index, tags the resulting segments, and merges adjacent Equal singletons.
NormalDecomposition normal_decompose(const SchmidtVector& x, const SchmidtVector& y);

// Groups raw index sets: singletons of I and maximal consecutive runs of D.
std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>> group_indices(
    const std::vector<int>& I, const std::vector<int>& D);

// Elements of I_grouped and D_grouped interleaved in ascending order of
// their smallest member.  This is the block order the grouped sufficient
// condition and its auxiliary-state constructions work with.
struct GroupedElement {
  bool equal_group;          // true: singleton from I; false: run from D
  std::vector<int> members;  // 1-based block indices
};

std::vector<GroupedElement> natural_order(const NormalDecomposition& nd);

}  // namespace entrec
