#include "brauer/enumerate.hpp"

#include <algorithm>
#include <chrono>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "brauer/canonical.hpp"

namespace brauer {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
  Clock::time_point end;
  bool active;
  explicit Deadline(double seconds)
      : end(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                               std::chrono::duration<double>(seconds))),
        active(seconds > 0) {}
  bool expired() const { return active && Clock::now() > end; }
};

std::vector<Diagram> generator_set(MonoidFamily f, int n) {
  std::vector<Diagram> gens;
  auto add_transpositions = [&] {
    for (int i = 1; i < n; ++i) gens.push_back(transposition(i, n));
  };
  switch (f) {
    case MonoidFamily::S:
      add_transpositions();
      break;
    case MonoidFamily::IS:
      add_transpositions();
      for (int i = 1; i <= n; ++i) gens.push_back(puncture(i, n));
      break;
    case MonoidFamily::B:
      add_transpositions();
      for (int i = 1; i < n; ++i) gens.push_back(hook(i, n));
      break;
    case MonoidFamily::PB:
      add_transpositions();
      for (int i = 1; i < n; ++i) gens.push_back(hook(i, n));
      for (int i = 1; i <= n; ++i) gens.push_back(puncture(i, n));
      break;
    case MonoidFamily::IT:
      add_transpositions();
      for (int i = 1; i < n; ++i) gens.push_back(block_join(i, n));
      break;
    default:
      throw Error("no generator set for this family");
  }
  return gens;
}

std::vector<Diagram> closure(const std::vector<Diagram>& gens, int n,
                             const EnumLimits& lim) {
  Deadline deadline(lim.max_seconds);
  std::unordered_set<Diagram> seen;
  std::vector<Diagram> frontier{identity(n)};
  seen.insert(frontier.front());

  while (!frontier.empty()) {
    if (deadline.expired()) throw CapExceeded(seen.size());

    // Expand one BFS level.  The products are computed possibly in
    // parallel; membership updates stay sequential, so the resulting set
    // is independent of the thread count.
    std::vector<Diagram> products;
    const std::size_t per = gens.size();
    products.reserve(frontier.size() * per);
    int threads = std::max(1, lim.threads);
    if (threads > 1 && frontier.size() >= 64) {
      products.resize(frontier.size() * per, identity(1));
      std::vector<std::thread> pool;
      std::size_t chunk = (frontier.size() + threads - 1) / threads;
      for (int t = 0; t < threads; ++t) {
        std::size_t lo = t * chunk, hi = std::min(frontier.size(), lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
          for (std::size_t i = lo; i < hi; ++i)
            for (std::size_t g = 0; g < per; ++g)
              products[i * per + g] = multiply(frontier[i], gens[g]).product;
        });
      }
      for (auto& th : pool) th.join();
    } else {
      for (const auto& d : frontier)
        for (const auto& g : gens)
          products.push_back(multiply(d, g).product);
    }

    std::vector<Diagram> next;
    for (auto& p : products) {
      if (seen.insert(p).second) {
        if (seen.size() > lim.max_elements) throw CapExceeded(seen.size());
        next.push_back(std::move(p));
      }
    }
    frontier = std::move(next);
  }

  std::vector<Diagram> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

// Partitions of {1..points} as block masks, via restricted growth strings.
void set_partitions(int points,
                    const std::function<bool(const std::vector<std::uint64_t>&)>& fn) {
  std::vector<std::uint64_t> blocks;
  auto rec = [&](auto&& self, int i, int used) -> bool {
    if (i == points) return fn(blocks);
    for (int b = 0; b <= used && b <= i; ++b) {
      bool fresh = b == used;
      if (fresh) blocks.emplace_back(0);
      blocks[b] |= 1ull << i;
      if (!self(self, i + 1, used + (fresh ? 1 : 0))) return false;
      blocks[b] &= ~(1ull << i);
      if (fresh) blocks.pop_back();
    }
    return true;
  };
  rec(rec, 0, 0);
}

std::vector<Diagram> enumerate_partition_monoid(int n, const EnumLimits& lim) {
  Deadline deadline(lim.max_seconds);
  std::vector<Diagram> out;
  set_partitions(2 * n, [&](const std::vector<std::uint64_t>& blocks) {
    out.emplace_back(n, blocks);
    if (out.size() > lim.max_elements || deadline.expired())
      throw CapExceeded(out.size());
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

// IP_n: pairs of partitions of the two sides with equally many blocks plus
// a bijection between the blocks.
std::vector<Diagram> enumerate_dual_inverse(int n, const EnumLimits& lim) {
  Deadline deadline(lim.max_seconds);
  std::vector<std::vector<std::vector<std::uint64_t>>> by_count(n + 1);
  set_partitions(n, [&](const std::vector<std::uint64_t>& blocks) {
    by_count[blocks.size()].push_back(blocks);
    return true;
  });

  std::vector<Diagram> out;
  for (int k = 1; k <= n; ++k) {
    for (const auto& lhs : by_count[k]) {
      for (const auto& rhs : by_count[k]) {
        std::vector<int> perm(k);
        for (int i = 0; i < k; ++i) perm[i] = i;
        do {
          std::vector<std::uint64_t> blocks(k);
          for (int i = 0; i < k; ++i)
            blocks[i] = lhs[i] | (rhs[perm[i]] << n);
          out.emplace_back(n, std::move(blocks));
          if (out.size() > lim.max_elements || deadline.expired())
            throw CapExceeded(out.size());
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

void for_each_set_partition(
    int points, const std::function<bool(const std::vector<std::uint64_t>&)>& fn) {
  set_partitions(points, fn);
}

std::vector<Diagram> enumerate(MonoidFamily f, int n, const EnumLimits& lim) {
  if (n < 1 || n > Diagram::max_degree)
    throw ParseError("degree must be between 1 and 32");
  switch (f) {
    case MonoidFamily::C:
      return enumerate_partition_monoid(n, lim);
    case MonoidFamily::IP:
      return enumerate_dual_inverse(n, lim);
    default:
      return closure(generator_set(f, n), n, lim);
  }
}

Int is_rank_count(int n, int k) {
  if (k < 0 || k > n) return 0;
  return binomial(n, k) * binomial(n, k) * factorial(k);
}

Int brauer_rank_count(int n, int k) {
  if (k < 0 || k > n || (n - k) % 2 != 0) return 0;
  int l = (n - k) / 2;
  return exact_div(factorial(n) * factorial(n),
                   ipow(2, 2 * l) * factorial(l) * factorial(l) * factorial(k));
}

Int it_type_count(int n, const ITType& m) {
  Int denom = 1;
  int covered = 0;
  for (int i = 1; i <= static_cast<int>(m.size()); ++i) {
    denom *= factorial(m[i - 1]) * ipow(factorial(i), 2 * m[i - 1]);
    covered += i * m[i - 1];
  }
  if (covered != n) return 0;
  return exact_div(factorial(n) * factorial(n), denom);
}

Int pb_type_count(int n, int k, int m, int t) {
  if (k < 0 || m < 0 || t < 0 || 2 * k + 2 * m + t > n) return 0;
  Int denom = factorial(k) * ipow(2, k) * factorial(t + 2 * m) *
              factorial(k + m) * ipow(2, k + m) * factorial(t) *
              factorial(n - 2 * k - 2 * m - t);
  return exact_div(factorial(n) * factorial(n), denom);
}

Int family_order(MonoidFamily f, int n) {
  Int total = 0;
  switch (f) {
    case MonoidFamily::S:
      return factorial(n);
    case MonoidFamily::IS:
      for (int k = 0; k <= n; ++k) total += is_rank_count(n, k);
      return total;
    case MonoidFamily::B:
      for (int k = n % 2; k <= n; k += 2) total += brauer_rank_count(n, k);
      return total;
    case MonoidFamily::IT:
      for (const auto& lambda : partitions_of(n)) {
        ITType m(n, 0);
        for (int part : lambda) ++m[part - 1];
        total += it_type_count(n, m);
      }
      return total;
    case MonoidFamily::PB:
      for (int k = 0; 2 * k <= n; ++k)
        for (int m = 0; 2 * k + 2 * m <= n; ++m)
          for (int t = 0; 2 * k + 2 * m + t <= n; ++t)
            total += pb_type_count(n, k, m, t) * (m > 0 ? 2 : 1);
      return total;
    case MonoidFamily::IP:
      for (int k = 1; k <= n; ++k)
        total += factorial(k) * stirling2(n, k) * stirling2(n, k);
      return total;
    case MonoidFamily::C:
      return bell(2 * n);
  }
  throw Error("unreachable");
}

std::string format_it_type(const ITType& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(t[i]);
  }
  return s + ")";
}

std::string format_pb_type(const PBType& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
         std::to_string(t[2]) + "," + std::to_string(t[3]) + ")";
}

Census census(MonoidFamily f, int n, const EnumLimits& lim) {
  if (f != MonoidFamily::IS && f != MonoidFamily::B && f != MonoidFamily::IT &&
      f != MonoidFamily::PB)
    throw Error("census supports families IS, B, IT and PB");

  Census c{f, n, 0, {}, {}, {}};
  for (const auto& d : enumerate(f, n, lim)) {
    c.total += 1;
    c.by_rank[rank(d)] += 1;
    if (f == MonoidFamily::IT) c.by_it_type[it_type(d)] += 1;
    if (f == MonoidFamily::PB) c.by_pb_type[pb_type(d)] += 1;
  }

  auto check = [&](const std::string& where, const Int& got, const Int& want) {
    if (got != want)
      throw FormulaMismatch(family_name(f) + ("_" + std::to_string(n)) + " " + where,
                            to_string(got), to_string(want));
  };
  if (f == MonoidFamily::IS || f == MonoidFamily::B) {
    for (int k = 0; k <= n; ++k) {
      Int want = f == MonoidFamily::IS ? is_rank_count(n, k)
                                       : brauer_rank_count(n, k);
      auto it = c.by_rank.find(k);
      check("rank " + std::to_string(k),
            it == c.by_rank.end() ? Int(0) : it->second, want);
    }
  } else if (f == MonoidFamily::IT) {
    for (const auto& lambda : partitions_of(n)) {
      ITType m(n, 0);
      for (int part : lambda) ++m[part - 1];
      auto it = c.by_it_type.find(m);
      check("type " + format_it_type(m),
            it == c.by_it_type.end() ? Int(0) : it->second, it_type_count(n, m));
    }
  } else {
    // Check from the formula side so empty buckets are caught too; both
    // orientations (k,m,0,t) and (k,0,m,t) carry the same count.
    for (int k = 0; 2 * k <= n; ++k)
      for (int m = 0; 2 * k + 2 * m <= n; ++m)
        for (int t = 0; 2 * k + 2 * m + t <= n; ++t) {
          Int want = pb_type_count(n, k, m, t);
          for (PBType type : {PBType{k, m, 0, t}, PBType{k, 0, m, t}}) {
            auto it = c.by_pb_type.find(type);
            check("type " + format_pb_type(type),
                  it == c.by_pb_type.end() ? Int(0) : it->second, want);
            if (m == 0) break;  // the two orientations coincide
          }
        }
  }
  check("total", c.total, family_order(f, n));
  return c;
}

Diagram act(const Diagram& g, const Diagram& x, const Diagram& h) {
  if (!is_permutation(g) || !is_permutation(h)) throw NotAPermutation();
  return multiply(multiply(perm_inverse(g), x).product, h).product;
}

std::vector<OrbitReport> orbits(MonoidFamily f, int n, const EnumLimits& lim) {
  const std::vector<Diagram> elems = enumerate(f, n, lim);
  std::unordered_map<Diagram, int> index;
  index.reserve(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i)
    index.emplace(elems[i], static_cast<int>(i));

  std::vector<Diagram> gens;
  for (int i = 1; i < n; ++i) gens.push_back(transposition(i, n));

  std::vector<int> orbit_of(elems.size(), -1);
  std::vector<Int> sizes;
  std::vector<int> seed_of;
  for (std::size_t seed = 0; seed < elems.size(); ++seed) {
    if (orbit_of[seed] != -1) continue;
    int id = static_cast<int>(sizes.size());
    seed_of.push_back(static_cast<int>(seed));
    std::uint64_t count = 0;
    std::vector<int> stack{static_cast<int>(seed)};
    orbit_of[seed] = id;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      ++count;
      for (const auto& g : gens) {
        for (const Diagram& next : {multiply(g, elems[cur]).product,
                                    multiply(elems[cur], g).product}) {
          int j = index.at(next);
          if (orbit_of[j] == -1) {
            orbit_of[j] = id;
            stack.push_back(j);
          }
        }
      }
    }
    sizes.push_back(Int(count));
  }

  const Int group_order = factorial(n) * factorial(n);
  std::vector<int> rep_of(sizes.size(), -1);
  for (const Diagram& c : canonical_elements(f, n)) {
    auto it = index.find(c);
    if (it == index.end())
      throw CanonicalMissing("canonical element " + to_text(c) +
                             " is not an element of " + family_name(f) + "_" +
                             std::to_string(n));
    int id = orbit_of[it->second];
    if (rep_of[id] != -1)
      throw CanonicalDuplicated(
          "orbit contains two canonical elements: " + to_text(elems[rep_of[id]]) +
          " and " + to_text(c));
    rep_of[id] = it->second;
  }
  for (std::size_t id = 0; id < sizes.size(); ++id)
    if (rep_of[id] == -1)
      throw CanonicalMissing("orbit of " + to_text(elems[seed_of[id]]) +
                             " contains no canonical element");

  std::vector<OrbitReport> reports;
  reports.reserve(sizes.size());
  for (std::size_t id = 0; id < sizes.size(); ++id)
    reports.push_back(OrbitReport{elems[rep_of[id]], sizes[id],
                                  exact_div(group_order, sizes[id]),
                                  group_order});
  std::sort(reports.begin(), reports.end(),
            [](const OrbitReport& a, const OrbitReport& b) {
              return a.representative < b.representative;
            });
  return reports;
}

}  // namespace brauer
