#include "brauer/enumerate.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

#include "brauer/canonical.hpp"
#include "oracles.hpp"

using namespace brauer;

namespace {

std::set<Diagram> as_set(const std::vector<Diagram>& v) {
  return std::set<Diagram>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("enumeration is sorted and deduplicated") {
  for (MonoidFamily f : {MonoidFamily::S, MonoidFamily::B, MonoidFamily::IT,
                         MonoidFamily::PB, MonoidFamily::IP, MonoidFamily::C}) {
    auto elems = enumerate(f, 3);
    CHECK(std::is_sorted(elems.begin(), elems.end()));
    CHECK(std::adjacent_find(elems.begin(), elems.end()) == elems.end());
  }
}

TEST_CASE("enumeration agrees with the reference constructions") {
  CHECK(enumerate(MonoidFamily::S, 3).size() == 6);
  CHECK(as_set(enumerate(MonoidFamily::S, 3)) == oracle::permutations(3));

  CHECK(enumerate(MonoidFamily::B, 4).size() == 105);
  CHECK(as_set(enumerate(MonoidFamily::B, 3)) == oracle::perfect_matchings(3));
  CHECK(as_set(enumerate(MonoidFamily::B, 4)) == oracle::perfect_matchings(4));

  CHECK(enumerate(MonoidFamily::IT, 3).size() == 16);
  CHECK(as_set(enumerate(MonoidFamily::IT, 2)) == oracle::block_bijections(2, true));
  CHECK(as_set(enumerate(MonoidFamily::IT, 3)) == oracle::block_bijections(3, true));

  CHECK(as_set(enumerate(MonoidFamily::IP, 2)) == oracle::block_bijections(2, false));
  CHECK(as_set(enumerate(MonoidFamily::IP, 3)) == oracle::block_bijections(3, false));

  CHECK(as_set(enumerate(MonoidFamily::IS, 2)) == oracle::partial_injections(2));
  CHECK(as_set(enumerate(MonoidFamily::IS, 3)) == oracle::partial_injections(3));

  CHECK(enumerate(MonoidFamily::PB, 2).size() == 10);
  CHECK(as_set(enumerate(MonoidFamily::PB, 2)) == oracle::partial_matchings(2));
  CHECK(as_set(enumerate(MonoidFamily::PB, 3)) == oracle::partial_matchings(3));

  CHECK(enumerate(MonoidFamily::C, 2).size() == 15);  // Bell(4)
  CHECK(enumerate(MonoidFamily::C, 3).size() == 203);  // Bell(6)
}

TEST_CASE("enumeration respects the element cap") {
  EnumLimits lim;
  lim.max_elements = 50;
  CHECK_THROWS_AS(enumerate(MonoidFamily::B, 4, lim), CapExceeded);
  try {
    enumerate(MonoidFamily::B, 4, lim);
  } catch (const CapExceeded& e) {
    CHECK(e.partial >= 50);
  }
  CHECK_THROWS_AS(enumerate(MonoidFamily::C, 4, lim), CapExceeded);
}

TEST_CASE("parallel closure matches single-threaded closure") {
  EnumLimits four;
  four.threads = 4;
  CHECK(enumerate(MonoidFamily::PB, 4, four) == enumerate(MonoidFamily::PB, 4));
  CHECK(enumerate(MonoidFamily::B, 5, four) == enumerate(MonoidFamily::B, 5));
}

TEST_CASE("closed counting formulas at small degrees") {
  CHECK(is_rank_count(2, 1) == 4);
  CHECK(brauer_rank_count(4, 2) == 72);
  CHECK(brauer_rank_count(4, 3) == 0);
  CHECK(it_type_count(3, {1, 1, 0}) == 9);
  CHECK(pb_type_count(2, 0, 0, 1) == 4);
  CHECK(family_order(MonoidFamily::B, 3) == 15);
  CHECK(family_order(MonoidFamily::B, 6) == 10395);
  CHECK(family_order(MonoidFamily::IT, 4) == 131);
  CHECK(family_order(MonoidFamily::IS, 2) == 7);
  CHECK(family_order(MonoidFamily::PB, 3) == 76);
  CHECK(family_order(MonoidFamily::C, 3) == 203);
  CHECK(family_order(MonoidFamily::S, 5) == 120);
  CHECK(family_order(MonoidFamily::IP, 3) == 25);
}

TEST_CASE("census tallies and formula cross-checks") {
  Census is2 = census(MonoidFamily::IS, 2);
  CHECK(is2.total == 7);
  CHECK(is2.by_rank[0] == 1);
  CHECK(is2.by_rank[1] == 4);
  CHECK(is2.by_rank[2] == 2);

  Census b4 = census(MonoidFamily::B, 4);
  CHECK(b4.total == 105);
  CHECK(b4.by_rank[0] == 9);
  CHECK(b4.by_rank[2] == 72);
  CHECK(b4.by_rank[4] == 24);

  Census pb2 = census(MonoidFamily::PB, 2);
  CHECK(pb2.total == 10);
  CHECK(pb2.by_pb_type[PBType{0, 0, 0, 0}] == 2);
  CHECK(pb2.by_pb_type[PBType{0, 0, 0, 1}] == 4);
  CHECK(pb2.by_pb_type[PBType{0, 0, 0, 2}] == 1);
  CHECK(pb2.by_pb_type[PBType{0, 1, 0, 0}] == 1);
  CHECK(pb2.by_pb_type[PBType{0, 0, 1, 0}] == 1);
  CHECK(pb2.by_pb_type[PBType{1, 0, 0, 0}] == 1);

  Census it3 = census(MonoidFamily::IT, 3);
  CHECK(it3.total == 16);
  CHECK(it3.by_it_type[ITType{3, 0, 0}] == 6);
  CHECK(it3.by_it_type[ITType{1, 1, 0}] == 9);
  CHECK(it3.by_it_type[ITType{0, 0, 1}] == 1);

  CHECK_THROWS_AS(census(MonoidFamily::C, 2), Error);
  CHECK_THROWS_AS(census(MonoidFamily::S, 2), Error);
}

TEST_CASE("two-sided action") {
  Diagram x = hook(1, 4);
  CHECK(act(identity(4), x, identity(4)) == x);
  // w^-1 hook_1 w = hook_i exactly when w({1,2}) = {i,i+1}
  for (int i = 1; i <= 3; ++i) {
    std::vector<int> image;
    for (int v = i; v <= i + 1; ++v) image.push_back(v);
    for (int v = 1; v <= 4; ++v)
      if (v < i || v > i + 1) image.push_back(v);
    std::vector<int> w(4);
    for (int p = 0; p < 4; ++p) w[p] = image[p];
    Diagram wd = perm_diagram(w);
    CHECK(act(wd, hook(1, 4), wd) == hook(i, 4));
    CHECK(act(wd, block_join(1, 4), wd) == block_join(i, 4));
  }
  CHECK_THROWS_AS(act(hook(1, 4), x, identity(4)), NotAPermutation);
  CHECK_THROWS_AS(act(identity(4), x, puncture(1, 4)), NotAPermutation);
}

TEST_CASE("orbit reports for the Brauer family at degree 2") {
  auto reports = orbits(MonoidFamily::B, 2);
  REQUIRE(reports.size() == 2);
  // sorted by representative encoding: the hook precedes the identity
  CHECK(reports[0].representative == hook(1, 2));
  CHECK(reports[0].orbit_size == 1);
  CHECK(reports[0].stabilizer_size == 4);
  CHECK(reports[1].representative == identity(2));
  CHECK(reports[1].orbit_size == 2);
  CHECK(reports[1].stabilizer_size == 2);
}

TEST_CASE("orbit-stabilizer bookkeeping against direct stabilizer counts") {
  for (MonoidFamily f : {MonoidFamily::B, MonoidFamily::IT, MonoidFamily::PB,
                         MonoidFamily::IS}) {
    for (int n = 1; n <= 3; ++n) {
      auto reports = orbits(f, n);
      Int group = factorial(n) * factorial(n);
      Int covered = 0;
      auto perms = enumerate(MonoidFamily::S, n);
      for (const auto& r : reports) {
        CHECK(r.orbit_size * r.stabilizer_size == group);
        covered += r.orbit_size;
        Int fixing = 0;
        for (const Diagram& g : perms)
          for (const Diagram& h : perms)
            if (act(g, r.representative, h) == r.representative) fixing += 1;
        CHECK(fixing == r.stabilizer_size);
      }
      CHECK(covered == family_order(f, n));
    }
  }
}

TEST_CASE("orbit representatives are exactly the canonical elements") {
  for (MonoidFamily f : {MonoidFamily::B, MonoidFamily::IT, MonoidFamily::PB})
    for (int n = 1; n <= 4; ++n) {
      auto reports = orbits(f, n);
      std::set<Diagram> reps;
      for (const auto& r : reports) reps.insert(r.representative);
      std::set<Diagram> canon;
      for (const Diagram& c : canonical_elements(f, n)) canon.insert(c);
      CHECK(reps == canon);
      CHECK(reps.size() == reports.size());
    }
}
