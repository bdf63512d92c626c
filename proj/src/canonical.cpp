#include "brauer/canonical.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "brauer/exact.hpp"

namespace brauer {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw Error(msg);
}

std::uint64_t bit(int p) { return 1ull << (p - 1); }

}  // namespace

MonoidFamily spec_family(const CanonicalSpec& spec) {
  switch (spec.index()) {
    case 0: return MonoidFamily::B;
    case 1: return MonoidFamily::IT;
    default: return MonoidFamily::PB;
  }
}

std::string format_spec(const CanonicalSpec& spec) {
  if (const auto* b = std::get_if<BrauerSpec>(&spec))
    return "B(k=" + std::to_string(b->k) + ")";
  if (const auto* it = std::get_if<BlockSpec>(&spec)) {
    std::string s = "IT(";
    for (std::size_t i = 0; i < it->lambda.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(it->lambda[i]);
    }
    return s + ")";
  }
  const auto& r = std::get<RookSpec>(spec);
  return "PB(" + std::to_string(r.k) + "," + std::to_string(r.l) + "," +
         std::to_string(r.m) + "," + std::to_string(r.t) + ")";
}

Diagram rook_element(int k, int l, int m, int t, int n) {
  require(k >= 0 && l >= 0 && m >= 0 && t >= 0 &&
              2 * (k + l + m) + t <= n,
          "rook element parameters out of range");
  std::vector<std::uint64_t> blocks;
  int q = 0;  // next unused position
  for (int s = 0; s < k; ++s, q += 2) {
    blocks.push_back(bit(q + 1) | bit(q + 2));
    blocks.push_back(bit(n + q + 1) | bit(n + q + 2));
  }
  for (int s = 0; s < l; ++s, q += 2) {
    blocks.push_back(bit(q + 1) | bit(q + 2));
    blocks.push_back(bit(n + q + 1));
    blocks.push_back(bit(n + q + 2));
  }
  for (int s = 0; s < m; ++s, q += 2) {
    blocks.push_back(bit(q + 1));
    blocks.push_back(bit(q + 2));
    blocks.push_back(bit(n + q + 1) | bit(n + q + 2));
  }
  for (int s = 0; s < t; ++s, ++q) {
    blocks.push_back(bit(q + 1));
    blocks.push_back(bit(n + q + 1));
  }
  for (; q < n; ++q) blocks.push_back(bit(q + 1) | bit(n + q + 1));
  return Diagram(n, std::move(blocks));
}

Diagram canonical(const CanonicalSpec& spec, int n) {
  if (const auto* b = std::get_if<BrauerSpec>(&spec)) {
    require(b->k >= 0 && 2 * b->k <= n, "hook count out of range");
    return rook_element(b->k, 0, 0, 0, n);
  }
  if (const auto* it = std::get_if<BlockSpec>(&spec)) {
    const auto& lambda = it->lambda;
    int sum = 0;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
      require(lambda[i] >= 1, "partition parts must be positive");
      require(i == 0 || lambda[i - 1] >= lambda[i],
              "partition must be weakly decreasing");
      sum += lambda[i];
    }
    require(sum == n, "partition must sum to the degree");
    std::vector<std::uint64_t> blocks;
    int next = 1;
    for (int part : lambda) {
      std::uint64_t blk = 0;
      for (int j = 0; j < part; ++j, ++next)
        blk |= bit(next) | bit(n + next);
      blocks.push_back(blk);
    }
    return Diagram(n, std::move(blocks));
  }
  const auto& r = std::get<RookSpec>(spec);
  require(r.l == 0 || r.m == 0,
          "canonical rook elements need l = 0 or m = 0; use rook_element() "
          "for the general form");
  return rook_element(r.k, r.l, r.m, r.t, n);
}

std::vector<CanonicalSpec> all_canonical_specs(MonoidFamily f, int n) {
  std::vector<CanonicalSpec> out;
  switch (f) {
    case MonoidFamily::B:
      for (int k = 0; 2 * k <= n; ++k) out.push_back(BrauerSpec{k});
      break;
    case MonoidFamily::IT:
      for (auto& lambda : partitions_of(n)) out.push_back(BlockSpec{lambda});
      break;
    case MonoidFamily::PB:
      for (int k = 0; 2 * k <= n; ++k)
        for (int t = 0; 2 * k + t <= n; ++t) {
          out.push_back(RookSpec{k, 0, 0, t});
          for (int l = 1; 2 * (k + l) + t <= n; ++l) {
            out.push_back(RookSpec{k, l, 0, t});
            out.push_back(RookSpec{k, 0, l, t});
          }
        }
      break;
    default:
      throw Error("no canonical elements defined for this family");
  }
  return out;
}

std::vector<Diagram> canonical_elements(MonoidFamily f, int n) {
  std::vector<Diagram> out;
  if (f == MonoidFamily::IS) {
    // Partial identities, one per rank.
    for (int k = 0; k <= n; ++k) {
      std::vector<std::uint64_t> blocks;
      for (int j = 1; j <= k; ++j) blocks.push_back(bit(j) | bit(n + j));
      for (int j = k + 1; j <= n; ++j) {
        blocks.push_back(bit(j));
        blocks.push_back(bit(n + j));
      }
      out.emplace_back(n, std::move(blocks));
    }
    return out;
  }
  for (const auto& spec : all_canonical_specs(f, n))
    out.push_back(canonical(spec, n));
  return out;
}

Diagram epsilon(int i, int j, int n, MonoidFamily f) {
  require(1 <= i && i < j && j <= n, "need 1 <= i < j <= n");
  std::vector<std::uint64_t> blocks;
  if (f == MonoidFamily::IT) {
    blocks.push_back(bit(i) | bit(j) | bit(n + i) | bit(n + j));
  } else if (f == MonoidFamily::B || f == MonoidFamily::PB) {
    blocks.push_back(bit(i) | bit(j));
    blocks.push_back(bit(n + i) | bit(n + j));
  } else {
    throw Error("epsilon is defined for families B, IT and PB");
  }
  for (int p = 1; p <= n; ++p)
    if (p != i && p != j) blocks.push_back(bit(p) | bit(n + p));
  return Diagram(n, std::move(blocks));
}

Diagram mu(int i, int j, int n) {
  require(1 <= i && i < j && j <= n, "need 1 <= i < j <= n");
  std::vector<std::uint64_t> blocks{bit(i) | bit(j), bit(n + i), bit(n + j)};
  for (int p = 1; p <= n; ++p)
    if (p != i && p != j) blocks.push_back(bit(p) | bit(n + p));
  return Diagram(n, std::move(blocks));
}

Diagram nu(int i, int j, int n) { return flip(mu(i, j, n)); }

Diagram epsilon_rho(const std::vector<std::pair<int, int>>& relation, int n) {
  require(!relation.empty(), "epsilon_rho needs a non-empty relation");
  Diagram acc = identity(n);
  for (auto [i, j] : relation) {
    require(1 <= i && i <= n && 1 <= j && j <= n, "relation point out of range");
    if (i == j) continue;  // epsilon_{i,i} = e
    acc = multiply(acc, epsilon(std::min(i, j), std::max(i, j), n,
                                MonoidFamily::IT))
              .product;
  }
  return acc;
}

namespace {

// Value pools for the greedy lexicographically minimal permutation choice:
// consecutive pairs for brackets, then single positions for points, then
// line positions.  Pool boundaries follow the canonical element layout.
struct SideLayout {
  int pairs;        // bracket pairs occupy positions 1..2*pairs
  int points;       // point positions 2*pairs+1 .. 2*pairs+points
  int line_base;    // first line position (= 2*pairs+points+1)
};

struct BlockStats {
  std::vector<std::pair<int, int>> lbrackets, rbrackets;  // sorted by min
  std::vector<int> lpoints, rpoints;
  std::vector<std::pair<int, int>> lines;  // (left, right), sorted by left
};

BlockStats block_stats(const Diagram& x) {
  BlockStats st;
  const int n = x.degree();
  for (std::uint64_t blk : x.blocks()) {
    std::uint64_t left = blk & x.left_mask();
    std::uint64_t right = blk >> n;
    int nl = std::popcount(left);
    if (nl == 1 && right == 0)
      st.lpoints.push_back(std::countr_zero(left) + 1);
    else if (nl == 0 && std::popcount(right) == 1)
      st.rpoints.push_back(std::countr_zero(right) + 1);
    else if (nl == 2)
      st.lbrackets.emplace_back(std::countr_zero(left) + 1,
                                64 - std::countl_zero(left));
    else if (nl == 0)
      st.rbrackets.emplace_back(std::countr_zero(right) + 1,
                                64 - std::countl_zero(right));
    else
      st.lines.emplace_back(std::countr_zero(left) + 1,
                            std::countr_zero(right) + 1);
  }
  return st;
}

// Greedy one-line-minimal assignment of x's left-hand structure onto the
// canonical layout; returns the image vector of g (point -> position).
std::vector<int> assign_left(int n, const SideLayout& lay, const BlockStats& st) {
  std::vector<int> g(n + 1, 0);
  int next_pair = 0, next_point = 0, next_line = 0;
  std::vector<int> partner(n + 1, 0);
  std::vector<char> is_point(n + 1, 0);
  for (auto [a, b] : st.lbrackets) partner[a] = b, partner[b] = a;
  for (int p : st.lpoints) is_point[p] = 1;

  for (int i = 1; i <= n; ++i) {
    if (g[i]) continue;
    if (partner[i]) {
      g[i] = 2 * next_pair + 1;
      g[partner[i]] = 2 * next_pair + 2;
      ++next_pair;
    } else if (is_point[i]) {
      g[i] = 2 * lay.pairs + (++next_point);
    } else {
      g[i] = lay.line_base + (next_line++);
    }
  }
  return std::vector<int>(g.begin() + 1, g.end());
}

// Greedy one-line-minimal h (position -> point) for the right side; line
// values are forced by g through x's lines.
std::vector<int> assign_right(int n, const SideLayout& lay, const BlockStats& st,
                              const std::vector<int>& g_image) {
  std::vector<int> h(n + 1, 0);
  // Brackets: at each pair pick the unused bracket holding the smallest
  // point, smaller endpoint first.
  auto brackets = st.rbrackets;
  std::sort(brackets.begin(), brackets.end());
  for (int s = 0; s < lay.pairs; ++s) {
    h[2 * s + 1] = brackets[s].first;
    h[2 * s + 2] = brackets[s].second;
  }
  // Points ascending onto point positions ascending.
  auto points = st.rpoints;
  std::sort(points.begin(), points.end());
  for (int s = 0; s < lay.points; ++s) h[2 * lay.pairs + 1 + s] = points[s];
  // Lines: position g(p) carries x's line (p, q).
  for (auto [p, q] : st.lines) h[g_image[p - 1]] = q;
  return std::vector<int>(h.begin() + 1, h.end());
}

}  // namespace

Factorization factorize(const Diagram& x, MonoidFamily f) {
  if (!is_member(x, f))
    throw NotAMember("factorize: diagram is not in " +
                     std::string(family_name(f)) + "_" +
                     std::to_string(x.degree()));
  const int n = x.degree();
  const BlockStats st = block_stats(x);

  if (f == MonoidFamily::B || f == MonoidFamily::PB) {
    CanonicalSpec spec;
    if (f == MonoidFamily::B) {
      spec = BrauerSpec{static_cast<int>(st.lbrackets.size())};
    } else {
      int b1 = static_cast<int>(st.lbrackets.size());
      int b2 = static_cast<int>(st.rbrackets.size());
      spec = b1 >= b2 ? RookSpec{b2, b1 - b2, 0, static_cast<int>(st.lpoints.size())}
                      : RookSpec{b1, 0, b2 - b1, static_cast<int>(st.rpoints.size())};
    }
    SideLayout left{static_cast<int>(st.lbrackets.size()),
                    static_cast<int>(st.lpoints.size()), 0};
    left.line_base = 2 * left.pairs + left.points + 1;
    SideLayout right{static_cast<int>(st.rbrackets.size()),
                     static_cast<int>(st.rpoints.size()), 0};
    right.line_base = 2 * right.pairs + right.points + 1;
    auto g = assign_left(n, left, st);
    auto h = assign_right(n, right, st, g);
    return Factorization{perm_diagram(g), spec, perm_diagram(h)};
  }

  if (f != MonoidFamily::IT)
    throw NotAMember("factorize supports families B, IT and PB");

  // IT: blocks pair a left trace with an equal-sized right trace; slots of
  // the canonical partition are handed out smallest-first per size.
  struct Trace { std::uint64_t left, right; };
  std::vector<Trace> traces;
  for (std::uint64_t blk : x.blocks())
    traces.push_back({blk & x.left_mask(), blk >> n});

  std::vector<int> lambda;
  for (const auto& t : traces) lambda.push_back(std::popcount(t.left));
  std::sort(lambda.rbegin(), lambda.rend());

  // Slot s covers positions slot_base[s]+1 .. slot_base[s]+lambda[s].
  std::vector<int> slot_base(lambda.size());
  for (std::size_t s = 1; s < lambda.size(); ++s)
    slot_base[s] = slot_base[s - 1] + lambda[s - 1];
  std::vector<int> next_slot_of_size(n + 1, -1);
  for (int s = static_cast<int>(lambda.size()) - 1; s >= 0; --s)
    next_slot_of_size[lambda[s]] = s;

  std::vector<int> g(n + 1, 0), h(n + 1, 0);
  std::vector<int> slot_of_block(traces.size(), -1);
  std::vector<int> used_in_slot(lambda.size(), 0);
  std::vector<int> block_of_point(n + 1, 0);
  for (std::size_t b = 0; b < traces.size(); ++b)
    for (std::uint64_t rest = traces[b].left; rest; rest &= rest - 1)
      block_of_point[std::countr_zero(rest) + 1] = static_cast<int>(b);

  for (int i = 1; i <= n; ++i) {
    int b = block_of_point[i];
    if (slot_of_block[b] == -1) {
      int size = std::popcount(traces[b].left);
      int s = next_slot_of_size[size];
      slot_of_block[b] = s;
      // advance to the next unused slot of this size (slots of equal size
      // are consecutive in the canonical layout)
      next_slot_of_size[size] =
          (s + 1 < static_cast<int>(lambda.size()) && lambda[s + 1] == size)
              ? s + 1
              : -1;
    }
    int s = slot_of_block[b];
    g[i] = slot_base[s] + (++used_in_slot[s]);
  }
  // h: positions of slot s take the block's right trace in ascending order.
  for (std::size_t b = 0; b < traces.size(); ++b) {
    int s = slot_of_block[b];
    int pos = slot_base[s];
    for (std::uint64_t rest = traces[b].right; rest; rest &= rest - 1)
      h[++pos] = std::countr_zero(rest) + 1;
  }

  return Factorization{perm_diagram(std::vector<int>(g.begin() + 1, g.end())),
                       BlockSpec{lambda},
                       perm_diagram(std::vector<int>(h.begin() + 1, h.end()))};
}

}  // namespace brauer
