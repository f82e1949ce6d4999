#include "ffp/partitions.hpp"

#include <algorithm>
#include <mutex>
#include <string>

namespace ffp {

std::vector<int> SetPartition::block_sizes() const {
  std::vector<int> sizes;
  sizes.reserve(blocks.size());
  for (const auto& b : blocks) sizes.push_back(static_cast<int>(b.size()));
  return sizes;
}

std::vector<int> SetPartition::element_block() const {
  std::vector<int> owner(static_cast<size_t>(n) + 1, -1);
  for (int b = 0; b < block_count(); ++b)
    for (int e : blocks[b]) owner[static_cast<size_t>(e)] = b;
  return owner;
}

SetPartition SetPartition::singletons(int n) {
  SetPartition p;
  p.n = n;
  p.blocks.reserve(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) p.blocks.push_back({i});
  return p;
}

SetPartition SetPartition::one_block(int n) {
  SetPartition p;
  p.n = n;
  p.blocks.emplace_back();
  for (int i = 1; i <= n; ++i) p.blocks[0].push_back(i);
  return p;
}

SetPartition SetPartition::from_blocks(int n, std::vector<std::vector<int>> blocks) {
  if (n < 1) throw ArgumentError("SetPartition: n must be positive");
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  size_t covered = 0;
  for (auto& b : blocks) {
    if (b.empty()) throw ArgumentError("SetPartition: empty block");
    std::sort(b.begin(), b.end());
    for (int e : b) {
      if (e < 1 || e > n) throw ArgumentError("SetPartition: element out of range");
      if (seen[static_cast<size_t>(e)])
        throw ArgumentError("SetPartition: element repeated across blocks");
      seen[static_cast<size_t>(e)] = true;
      ++covered;
    }
  }
  if (covered != static_cast<size_t>(n))
    throw ArgumentError("SetPartition: blocks do not cover {1..n}");
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  SetPartition p;
  p.n = n;
  p.blocks = std::move(blocks);
  return p;
}

std::vector<SetPartition> enumerate_partitions(int n, int cap) {
  if (n < 1) throw ArgumentError("enumerate_partitions: n must be positive");
  if (n > cap)
    throw CapError("partition cap exceeded: n=" + std::to_string(n) +
                   " > cap=" + std::to_string(cap));
  std::vector<SetPartition> out;
  // Restricted growth strings s with s[0]=0 and s[i] <= 1+max(s[0..i-1]),
  // iterated in lexicographic order.
  std::vector<int> s(static_cast<size_t>(n), 0);
  std::vector<int> prefix_max(static_cast<size_t>(n), 0);
  for (;;) {
    SetPartition p;
    p.n = n;
    p.blocks.assign(static_cast<size_t>(prefix_max[static_cast<size_t>(n) - 1]) + 1, {});
    for (int i = 0; i < n; ++i) p.blocks[static_cast<size_t>(s[static_cast<size_t>(i)])].push_back(i + 1);
    out.push_back(std::move(p));

    int i = n - 1;
    while (i > 0 && s[static_cast<size_t>(i)] == prefix_max[static_cast<size_t>(i) - 1] + 1) --i;
    if (i == 0) break;
    ++s[static_cast<size_t>(i)];
    prefix_max[static_cast<size_t>(i)] =
        std::max(prefix_max[static_cast<size_t>(i) - 1], s[static_cast<size_t>(i)]);
    for (int j = i + 1; j < n; ++j) {
      s[static_cast<size_t>(j)] = 0;
      prefix_max[static_cast<size_t>(j)] = prefix_max[static_cast<size_t>(i)];
    }
  }
  return out;
}

const std::vector<SetPartition>& partitions_of(int n, int cap) {
  if (n < 1) throw ArgumentError("partitions_of: n must be positive");
  if (n > cap)
    throw CapError("partition cap exceeded: n=" + std::to_string(n) +
                   " > cap=" + std::to_string(cap));
  static std::mutex mu;
  static std::vector<std::vector<SetPartition>> cache(kPartitionCap + 1);
  if (n > kPartitionCap) {
    // Above the built-in cache size (caller raised the cap): not cached.
    static thread_local std::vector<SetPartition> scratch;
    scratch = enumerate_partitions(n, cap);
    return scratch;
  }
  std::lock_guard<std::mutex> lock(mu);
  if (cache[static_cast<size_t>(n)].empty())
    cache[static_cast<size_t>(n)] = enumerate_partitions(n, cap);
  return cache[static_cast<size_t>(n)];
}

bool leq(const SetPartition& a, const SetPartition& b) {
  if (a.n != b.n) throw ArgumentError("leq: partitions of different ground sets");
  const std::vector<int> owner = b.element_block();
  for (const auto& block : a.blocks) {
    const int target = owner[static_cast<size_t>(block.front())];
    for (int e : block)
      if (owner[static_cast<size_t>(e)] != target) return false;
  }
  return true;
}

namespace {

long long factorial_ll(int k) {
  long long f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

long long mobius_from_bottom(const SetPartition& p) {
  long long value = 1;
  for (const auto& block : p.blocks) {
    const int b = static_cast<int>(block.size());
    value *= (b % 2 == 0 ? -1 : 1) * factorial_ll(b - 1);
  }
  return value;
}

long long mobius_general(const SetPartition& s, const SetPartition& r) {
  if (!leq(s, r)) throw ArgumentError("mobius_general: arguments not comparable");
  const std::vector<int> owner = r.element_block();
  std::vector<int> inner_count(r.blocks.size(), 0);
  for (const auto& block : s.blocks)
    ++inner_count[static_cast<size_t>(owner[static_cast<size_t>(block.front())])];
  long long value = 1;
  for (int b : inner_count) value *= (b % 2 == 0 ? -1 : 1) * factorial_ll(b - 1);
  return value;
}

long long mobius_to_top(const SetPartition& p) {
  const int r = p.block_count();
  return (r % 2 == 0 ? -1 : 1) * factorial_ll(r - 1);
}

Rational multiplicative_extension(const std::vector<Rational>& f,
                                  const SetPartition& pi) {
  Rational prod = 1;
  for (const auto& block : pi.blocks) {
    const size_t size = block.size();
    if (size > f.size())
      throw ArgumentError("multiplicative_extension: sequence shorter than block size " +
                          std::to_string(size));
    prod *= f[size - 1];
  }
  return prod;
}

Rational pochhammer_extension(long d, const SetPartition& pi) {
  Rational prod = 1;
  for (const auto& block : pi.blocks)
    prod *= Rational(falling_factorial(d, block.size()));
  return prod;
}

Rational factorial_extension(const SetPartition& pi) {
  Rational prod = 1;
  for (const auto& block : pi.blocks) prod *= Rational(factorial(block.size()));
  return prod;
}

}  // namespace ffp
