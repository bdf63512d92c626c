#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "brauer/errors.hpp"

namespace brauer {

// A diagram of degree n is a set partition of the 2n points
// {1,...,n} u {1',...,n'}.  Point i is encoded as bit i-1, point i' as bit
// n+i-1, so a block is one 64-bit mask and n is capped at 32.
//
// Blocks are kept normalized: each mask lists its points implicitly in the
// order 1 < 2 < ... < n < 1' < ... < n', and the block list is sorted by
// least point.  Two diagrams are equal iff their encodings are identical.
class Diagram {
 public:
  static constexpr int max_degree = 32;

  // Validates that `blocks` partitions the 2n points and normalizes.
  Diagram(int n, std::vector<std::uint64_t> blocks);

  // Convenience constructor from explicit point lists; points are 1..n for
  // the left side and n+1..2n for i' (use pt()/pt_r() to build them).
  static Diagram from_blocks(int n, const std::vector<std::vector<int>>& blocks);

  int degree() const { return n_; }
  const std::vector<std::uint64_t>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }

  // Index (0-based) of the block containing 1-based point p in 1..2n.
  int block_of(int p) const;

  std::uint64_t left_mask() const { return (n_ == 32) ? ~0ull >> 32 : (1ull << n_) - 1; }
  std::uint64_t full_mask() const {
    return (n_ == 32) ? ~0ull : (1ull << (2 * n_)) - 1;
  }

  friend bool operator==(const Diagram&, const Diagram&) = default;
  friend auto operator<=>(const Diagram&, const Diagram&) = default;

 private:
  int n_;
  std::vector<std::uint64_t> blocks_;
};

struct DiagramHash {
  std::size_t operator()(const Diagram& d) const {
    std::uint64_t h = 1469598103934665603ull ^ static_cast<unsigned>(d.degree());
    for (std::uint64_t b : d.blocks()) {
      h ^= b;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// 1-based encoded point helpers: pt(i) = i on the left, pt_r(i, n) = i'.
constexpr int pt(int i) { return i; }
constexpr int pt_r(int i, int n) { return n + i; }

enum class BlockKind { Line, GeneralizedLine, Bracket, GeneralizedBracket, Point };

enum class MonoidFamily { C, S, IS, B, PB, IP, IT };

const char* family_name(MonoidFamily f);
MonoidFamily family_from_name(const std::string& name);  // throws ParseError

struct MulResult {
  Diagram product;
  int circles;  // dead circles swallowed by the middle layer
};

// (P1)-(P3) composition via union-find over the 3n-node layered graph.
MulResult multiply(const Diagram& a, const Diagram& b);

// The deformed star product: blocks of a and b are matched when their
// traces on the glued interface coincide (and are non-empty); everything
// unmatched becomes a singleton point.
Diagram star_multiply(const Diagram& a, const Diagram& b);

// Most specific kind of block `index`; every cross block of size 2 is both a
// line and (inclusively) a generalized line, so the enum reports Line and
// is_generalized_line() reports the inclusive notion.
BlockKind classify_block(const Diagram& d, int index);
bool is_generalized_line(const Diagram& d, int index);

bool is_member(const Diagram& d, MonoidFamily f);

// Number of blocks meeting both sides.
int rank(const Diagram& d);

// Type statistics. ITType m with m[i-1] = number of blocks whose trace on
// the left side has size i.  PBType is the 4-tuple built from bracket and
// point counts.  Both require membership in the respective family.
using ITType = std::vector<int>;
using PBType = std::array<int, 4>;
ITType it_type(const Diagram& d);
PBType pb_type(const Diagram& d);

// Generator constructors (all degree-n diagrams, 1 <= i <= n-1 unless noted):
Diagram identity(int n);
Diagram transposition(int i, int n);    // swaps i and i+1
Diagram hook(int i, int n);             // brackets {i,i+1} and {i',(i+1)'}
Diagram block_join(int i, int n);       // one block {i,i+1,i',(i+1)'}
Diagram puncture(int i, int n);         // isolates i and i'; 1 <= i <= n

// Permutations as diagrams.  `image` is one-line notation: image[i-1] = g(i).
Diagram perm_diagram(const std::vector<int>& image);
std::vector<int> to_perm(const Diagram& d);  // throws NotAPermutation
bool is_permutation(const Diagram& d);
Diagram perm_inverse(const Diagram& d);

// Swaps primed and unprimed points; an anti-automorphism of every family.
Diagram flip(const Diagram& d);

// Canonical text form `{B1|B2|...}` with tokens `k` / `k'`, no whitespace.
std::string to_text(const Diagram& d);

// Parses the text form, inferring n from the largest index; rejects
// non-partitions with a diagnostic naming the offending point.
Diagram parse_diagram(const std::string& text);

// Deterministic fixed-width drawing: pins 1..n down the left, 1'..n' down
// the right, vertical hooks for same-side blocks, one letter per block.
// Injective on normalized diagrams of a fixed degree.
std::string render_ascii(const Diagram& d);

}  // namespace brauer

template <>
struct std::hash<brauer::Diagram> {
  std::size_t operator()(const brauer::Diagram& d) const {
    return brauer::DiagramHash{}(d);
  }
};
