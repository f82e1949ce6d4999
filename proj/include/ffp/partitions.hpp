#ifndef FFP_PARTITIONS_HPP
#define FFP_PARTITIONS_HPP

#include <vector>

#include "ffp/rational.hpp"

namespace ffp {

/// Lattice sums over P(n) grow like Bell(n)^2 in the worst case; above this
/// cap they fail loudly instead of hanging. Callers may override per call.
inline constexpr int kPartitionCap = 10;

/// A partition of {1..n} in canonical form: blocks ordered by minimum
/// element, elements ascending within each block.
struct SetPartition {
  int n = 0;
  std::vector<std::vector<int>> blocks;

  int block_count() const { return static_cast<int>(blocks.size()); }
  std::vector<int> block_sizes() const;
  /// element (1-based) -> index of its block
  std::vector<int> element_block() const;

  static SetPartition singletons(int n);  // minimum 0_n
  static SetPartition one_block(int n);   // maximum 1_n
  /// Validates cover/disjointness and canonicalizes.
  static SetPartition from_blocks(int n, std::vector<std::vector<int>> blocks);

  bool operator==(const SetPartition& other) const {
    return n == other.n && blocks == other.blocks;
  }
};

/// All partitions of {1..n}, in restricted-growth-string lexicographic order.
/// Count equals Bell(n). Throws CapError when n exceeds the cap.
std::vector<SetPartition> enumerate_partitions(int n, int cap = kPartitionCap);

/// Cached variant of enumerate_partitions for the lattice sums. Only values
/// n <= kPartitionCap are cached; thread-safe.
const std::vector<SetPartition>& partitions_of(int n, int cap = kPartitionCap);

/// Reverse-refinement order: true iff every block of a lies inside a block
/// of b. Throws ArgumentError when ground sets differ.
bool leq(const SetPartition& a, const SetPartition& b);

/// Mobius function mu(0_n, p) = (-1)^(n-|p|) * prod over blocks (|V|-1)!.
long long mobius_from_bottom(const SetPartition& p);

/// Mobius function mu(s, r) for s <= r: product over blocks W of r of
/// (-1)^(b-1) (b-1)! where b counts the blocks of s inside W.
long long mobius_general(const SetPartition& s, const SetPartition& r);

/// Mobius function mu(p, 1_n) = (-1)^(|p|-1) (|p|-1)!.
long long mobius_to_top(const SetPartition& p);

/// Multiplicative extension f_pi = prod over blocks f_{|V|}, with f given as
/// a 1-indexed sequence (f[0] is f_1). Throws ArgumentError when a block is
/// larger than the sequence.
Rational multiplicative_extension(const std::vector<Rational>& f,
                                  const SetPartition& pi);

/// (d)_pi, the multiplicative extension of the falling factorial.
Rational pochhammer_extension(long d, const SetPartition& pi);

/// N!_pi, the multiplicative extension of the factorial sequence.
Rational factorial_extension(const SetPartition& pi);

}  // namespace ffp

#endif
