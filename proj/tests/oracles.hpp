#pragma once

// Reference enumerators used as independent oracles.  Each builds its family
// from first principles (recursion over raw point sets), not through the
// library's generator closure or its direct constructions.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <vector>

#include "brauer/diagram.hpp"

namespace oracle {

using brauer::Diagram;

namespace detail {

inline void matchings_rec(std::uint64_t avail, int n, bool allow_singletons,
                          std::vector<std::uint64_t>& blocks,
                          std::set<Diagram>& out) {
  if (!avail) {
    out.emplace(n, blocks);
    return;
  }
  int p = std::countr_zero(avail);
  std::uint64_t rest = avail & ~(1ull << p);
  if (allow_singletons) {
    blocks.push_back(1ull << p);
    matchings_rec(rest, n, allow_singletons, blocks, out);
    blocks.pop_back();
  }
  for (std::uint64_t qs = rest; qs; qs &= qs - 1) {
    std::uint64_t q = qs & -qs;
    blocks.push_back((1ull << p) | q);
    matchings_rec(rest & ~q, n, allow_singletons, blocks, out);
    blocks.pop_back();
  }
}

inline void partitions_rec(std::uint64_t avail,
                           std::vector<std::uint64_t>& cur,
                           std::vector<std::vector<std::uint64_t>>& out) {
  if (!avail) {
    out.push_back(cur);
    return;
  }
  int p = std::countr_zero(avail);
  std::uint64_t rest = avail & ~(1ull << p);
  // every subset of rest can join p's block
  std::uint64_t sub = 0;
  while (true) {
    cur.push_back((1ull << p) | sub);
    partitions_rec(rest & ~sub, cur, out);
    cur.pop_back();
    if (sub == rest) break;
    sub = (sub - rest) & rest;  // next subset of rest
  }
}

}  // namespace detail

// All pairings of the 2n points: exactly the Brauer diagrams.
inline std::set<Diagram> perfect_matchings(int n) {
  std::set<Diagram> out;
  std::vector<std::uint64_t> blocks;
  std::uint64_t all = (2 * n == 64) ? ~0ull : (1ull << (2 * n)) - 1;
  detail::matchings_rec(all, n, false, blocks, out);
  return out;
}

// Blocks of size one or two: the partial Brauer diagrams.
inline std::set<Diagram> partial_matchings(int n) {
  std::set<Diagram> out;
  std::vector<std::uint64_t> blocks;
  std::uint64_t all = (2 * n == 64) ? ~0ull : (1ull << (2 * n)) - 1;
  detail::matchings_rec(all, n, true, blocks, out);
  return out;
}

// Partial injective maps {1..n} -> {1..n} as line-and-point diagrams.
inline std::set<Diagram> partial_injections(int n) {
  std::set<Diagram> out;
  std::vector<int> image(n, 0);  // 0 = undefined
  auto rec = [&](auto&& self, int i, std::uint64_t used) -> void {
    if (i == n) {
      std::vector<std::uint64_t> blocks;
      std::uint64_t hit = 0;
      for (int a = 0; a < n; ++a) {
        if (image[a] == 0) blocks.push_back(1ull << a);
        else {
          blocks.push_back((1ull << a) | (1ull << (n + image[a] - 1)));
          hit |= 1ull << (image[a] - 1);
        }
      }
      for (int b = 0; b < n; ++b)
        if (!(hit >> b & 1)) blocks.push_back(1ull << (n + b));
      out.emplace(n, blocks);
      return;
    }
    image[i] = 0;
    self(self, i + 1, used);
    for (int j = 1; j <= n; ++j) {
      if (used >> j & 1) continue;
      image[i] = j;
      self(self, i + 1, used | (1ull << j));
    }
    image[i] = 0;
  };
  rec(rec, 0, 0);
  return out;
}

inline std::set<Diagram> permutations(int n) {
  std::vector<int> image(n);
  for (int i = 0; i < n; ++i) image[i] = i + 1;
  std::set<Diagram> out;
  do out.insert(brauer::perm_diagram(image));
  while (std::next_permutation(image.begin(), image.end()));
  return out;
}

// Pairs of partitions of the two sides joined block-to-block by a
// bijection; equal_sizes restricts to size-preserving matchings.
inline std::set<Diagram> block_bijections(int n, bool equal_sizes) {
  std::vector<std::vector<std::uint64_t>> parts;
  std::vector<std::uint64_t> cur;
  detail::partitions_rec((1ull << n) - 1, cur, parts);
  std::set<Diagram> out;
  for (const auto& lhs : parts) {
    for (const auto& rhs : parts) {
      if (lhs.size() != rhs.size()) continue;
      std::vector<int> perm(lhs.size());
      for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
      std::sort(perm.begin(), perm.end());
      do {
        bool ok = true;
        std::vector<std::uint64_t> blocks(lhs.size());
        for (std::size_t i = 0; i < lhs.size() && ok; ++i) {
          if (equal_sizes &&
              std::popcount(lhs[i]) != std::popcount(rhs[perm[i]]))
            ok = false;
          else
            blocks[i] = lhs[i] | (rhs[perm[i]] << n);
        }
        if (ok) out.emplace(n, blocks);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  return out;
}

}  // namespace oracle
