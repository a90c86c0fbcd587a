#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fibfub/bigint.hpp"

namespace fibfub::enumeration {

using exact::BigInt;

// Partition of {1..n} into nonempty disjoint blocks, each block ascending,
// blocks ordered by their minimum element.
struct SetPartition {
  std::vector<std::vector<int>> blocks;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
};

// Permutation sigma of {1..k} with |sigma_i - i| <= 1 (1-indexed values).
struct FibPermutation {
  std::vector<int> sigma;

  friend bool operator==(const FibPermutation&, const FibPermutation&) = default;
};

// Composition of a length-k strip into single boxes (1) and two-box
// containers (2).
struct Tiling {
  std::vector<int> pieces;  // values 1 or 2, summing to k

  int length() const;
  friend bool operator==(const Tiling&, const Tiling&) = default;
};

// A set partition together with a Fibonacci permutation of its blocks:
// displayed as B_{sigma_1} | B_{sigma_2} | ... | B_{sigma_k}.
struct OrderedPartition {
  SetPartition base;
  FibPermutation sigma;

  friend bool operator==(const OrderedPartition&, const OrderedPartition&) = default;
};

/// Visits every partition of {1..n} into exactly k blocks, in lexicographic
/// order of the restricted-growth string.
void for_each_partition(int n, int k, const std::function<void(const SetPartition&)>& visit);

std::vector<SetPartition> enumerate_partitions(int n, int k);

/// Number of partitions visited, by plain enumeration.
BigInt count_partitions(int n, int k);

/// All permutations of {1..k} with |sigma_i - i| <= 1; k = 0 yields the
/// empty permutation. Count is F_{k+1}.
std::vector<FibPermutation> enumerate_fib_permutations(int k);

/// All single/container compositions of a length-k strip; count is F_{k+1}.
std::vector<Tiling> enumerate_tilings(int k);

/// Bijection: singles stay fixed, a container at (i, i+1) becomes the
/// adjacent transposition (the box slides to the back of the container).
FibPermutation tiling_to_permutation(const Tiling& t);

/// Inverse of tiling_to_permutation.
Tiling permutation_to_tiling(const FibPermutation& p);

/// Visits every (partition, Fibonacci block permutation) pair for k = 0..n.
void for_each_fib_ordered_partition(
    int n, const std::function<void(const SetPartition&, const FibPermutation&)>& visit);

std::vector<OrderedPartition> enumerate_fib_ordered_partitions(int n);

/// Number of Fibonacci-ordered partitions of {1..n}, counted by enumerating
/// every partition and every block permutation.
BigInt count_fib_ordered_partitions(int n);

/// Bar notation: blocks in sigma order joined by '|'; elements within a
/// block are adjacent digits, or comma-separated once elements reach 10.
std::string render_bar_notation(const OrderedPartition& p);

/// Inverse of render_bar_notation; throws std::invalid_argument on
/// malformed input.
OrderedPartition parse_bar_notation(const std::string& text);

/// "[]" per single box, "[==]" per container.
std::string render_tiling(const Tiling& t);

struct ShapeCount {
  int k = 0;
  Tiling shape;
  BigInt count;
};

/// For each block count k and each tiling shape of length k, the number of
/// ordered partitions of {1..n} whose block permutation maps to that shape.
/// Ordered by k ascending, then tiling enumeration order. Requires n >= 1.
std::vector<ShapeCount> count_by_shape(int n);

}  // namespace fibfub::enumeration
