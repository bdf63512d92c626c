#pragma once

#include <functional>
#include <map>
#include <vector>

#include "brauer/diagram.hpp"
#include "brauer/exact.hpp"

namespace brauer {

struct EnumLimits {
  std::uint64_t max_elements = 10'000'000;
  double max_seconds = 0.0;  // 0 = unlimited
  int threads = 1;           // upper bound on worker threads; result is
                             // identical for any value
};

// The exact element set of the family at degree n, sorted by normalized
// encoding.  S/IS/B/PB/IT are produced by generator closure, IP and C by
// direct construction.  Throws CapExceeded when limits are hit.
std::vector<Diagram> enumerate(MonoidFamily f, int n, const EnumLimits& lim = {});

// Calls fn(blocks) for every set partition of {1..points} (points <= 64),
// blocks as bitmasks in canonical order.  fn returns false to stop early.
void for_each_set_partition(int points,
                            const std::function<bool(const std::vector<std::uint64_t>&)>& fn);

// Closed counting formulas.
Int is_rank_count(int n, int k);                     // |{x in IS_n : rank k}|
Int brauer_rank_count(int n, int k);                 // |{x in B_n  : rank k}|
Int it_type_count(int n, const ITType& m);           // per IT type
Int pb_type_count(int n, int k, int m, int t);       // types (k,m,0,t) and (k,0,m,t)
Int family_order(MonoidFamily f, int n);             // closed-form |family_n|

struct Census {
  MonoidFamily family;
  int n;
  Int total;
  std::map<int, Int> by_rank;
  std::map<ITType, Int> by_it_type;  // populated for IT
  std::map<PBType, Int> by_pb_type;  // populated for PB
};

// Enumerates and tallies, then cross-checks every bucket against the closed
// formula; any disagreement is a hard FormulaMismatch.  Supports IS, B, IT
// and PB.
Census census(MonoidFamily f, int n, const EnumLimits& lim = {});

std::string format_it_type(const ITType& t);
std::string format_pb_type(const PBType& t);

// The two-sided action (g,h)(x) = g^-1 x h; g and h must be permutations.
Diagram act(const Diagram& g, const Diagram& x, const Diagram& h);

struct OrbitReport {
  Diagram representative;  // the canonical element of the orbit
  Int orbit_size;
  Int stabilizer_size;
  Int group_order;  // (n!)^2
};

// Partitions the family into S_n x S_n-orbits and matches each orbit with
// its canonical element; aborts with CanonicalMissing/CanonicalDuplicated
// if an orbit holds none or several (either would falsify the counting
// arguments at this degree).
std::vector<OrbitReport> orbits(MonoidFamily f, int n, const EnumLimits& lim = {});

}  // namespace brauer
