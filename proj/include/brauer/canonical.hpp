#pragma once

#include <variant>
#include <vector>

#include "brauer/diagram.hpp"

namespace brauer {

// Parameters of the distinguished orbit representatives.
struct BrauerSpec {
  int k;  // 0 <= k <= n/2 hooks
  friend bool operator==(const BrauerSpec&, const BrauerSpec&) = default;
  friend auto operator<=>(const BrauerSpec&, const BrauerSpec&) = default;
};

struct BlockSpec {
  std::vector<int> lambda;  // partition of n, weakly decreasing
  friend bool operator==(const BlockSpec&, const BlockSpec&) = default;
  friend auto operator<=>(const BlockSpec&, const BlockSpec&) = default;
};

struct RookSpec {
  // Counts of two-sided brackets, left-only brackets, right-only brackets
  // and point pairs; canonical requires l = 0 or m = 0.
  int k, l, m, t;
  friend bool operator==(const RookSpec&, const RookSpec&) = default;
  friend auto operator<=>(const RookSpec&, const RookSpec&) = default;
};

using CanonicalSpec = std::variant<BrauerSpec, BlockSpec, RookSpec>;

MonoidFamily spec_family(const CanonicalSpec& spec);
std::string format_spec(const CanonicalSpec& spec);

// The canonical diagram for the spec at degree n.  Throws on invalid
// parameters, including RookSpecs with both l > 0 and m > 0 (constructible
// via rook_element() but not canonical).
Diagram canonical(const CanonicalSpec& spec, int n);

// delta(k,l,m,t) without the canonicity restriction.
Diagram rook_element(int k, int l, int m, int t, int n);

// Every canonical spec of the family at degree n (families B, IT, PB), in a
// fixed deterministic order.
std::vector<CanonicalSpec> all_canonical_specs(MonoidFamily f, int n);

// Canonical diagrams per family at degree n.  Covers B, IT and PB via
// all_canonical_specs, and IS via the partial identities (one per rank).
std::vector<Diagram> canonical_elements(MonoidFamily f, int n);

// Conjugates of the basic generators by any w with w({1,2}) = {i,j}:
// epsilon is the two-sided bracket pair (family B/PB) or the block join
// (family IT); mu and nu are its one-sided partial variants in PB.
Diagram epsilon(int i, int j, int n, MonoidFamily f);
Diagram mu(int i, int j, int n);
Diagram nu(int i, int j, int n);

// Product of epsilon_{i,j} over the pairs of a binary relation on {1..n};
// equal to the epsilon of the relation's equivalence closure.
Diagram epsilon_rho(const std::vector<std::pair<int, int>>& relation, int n);

struct Factorization {
  Diagram u;  // permutation
  CanonicalSpec core;
  Diagram v;  // permutation
};

// Writes x = u * canonical(core) * v directly from the block structure of
// x.  Among all valid (u, v) the result is the pair minimizing u's one-line
// notation lexicographically, then v's.
Factorization factorize(const Diagram& x, MonoidFamily f);

}  // namespace brauer
