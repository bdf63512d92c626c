#include "brauer/presentation.hpp"

#include <doctest.h>

#include <climits>
#include <deque>
#include <random>
#include <set>

#include "brauer/enumerate.hpp"

using namespace brauer;

namespace {

Word random_word(int n, int max_len, bool with_points, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> kind(0, with_points ? 2 : 1);
  std::uniform_int_distribution<int> idx(1, n - 1);
  std::uniform_int_distribution<int> idx_v(1, n);
  Word w;
  int l = len(rng);
  for (int i = 0; i < l; ++i) {
    switch (kind(rng)) {
      case 0: w.push_back({GenKind::Sigma, (std::uint8_t)idx(rng)}); break;
      case 1: w.push_back({GenKind::Theta, (std::uint8_t)idx(rng)}); break;
      default: w.push_back({GenKind::Vartheta, (std::uint8_t)idx_v(rng)}); break;
    }
  }
  return w;
}

// Count congruence classes reachable from the root through sigma edges only.
std::size_t unit_class_count(const Presentation& p, const CongruenceResult& r) {
  std::vector<int> sigma_cols;
  for (std::size_t g = 0; g < p.generators.size(); ++g)
    if (p.generators[g].kind == GenKind::Sigma) sigma_cols.push_back((int)g);
  std::set<std::uint32_t> seen{0};
  std::vector<std::uint32_t> stack{0};
  while (!stack.empty()) {
    auto c = stack.back();
    stack.pop_back();
    for (int g : sigma_cols) {
      std::uint32_t d = r.action[c][g];
      if (seen.insert(d).second) stack.push_back(d);
    }
  }
  return seen.size();
}

}  // namespace

TEST_CASE("builtin relation lists at tiny degrees") {
  auto it2 = builtin_presentation(PresentationName::FactorizableIT, 2);
  REQUIRE(it2.relations.size() == 4);
  CHECK(format_presentation(it2) ==
        "gens: s1 tau1\n"
        "s1 s1 = e\n"
        "tau1 tau1 = tau1\n"
        "tau1 s1 = tau1\n"
        "s1 tau1 = tau1\n");

  auto is2 = builtin_presentation(PresentationName::SymmetricInverseIS, 2);
  REQUIRE(is2.relations.size() == 6);
  CHECK(format_presentation(is2) ==
        "gens: s1 v1 v2\n"
        "s1 s1 = e\n"
        "v1 v1 = v1\n"
        "v2 v2 = v2\n"
        "v1 v2 = v2 v1\n"
        "s1 v1 = v2 s1\n"
        "v1 s1 v1 = v1 v2\n");

  // mechanical expansion of the four Brauer relation families at n = 3:
  // 3 braid-block pairs, 4 hook pairs, 4 mixed pairs, 4 reduction pairs
  CHECK(builtin_presentation(PresentationName::BrauerB, 3).relations.size() == 15);
  CHECK(builtin_presentation(PresentationName::BrauerB, 2).relations.size() == 4);

  CHECK_THROWS_AS(builtin_presentation(PresentationName::BrauerB, 1),
                  DegreeTooSmall);
}

TEST_CASE("the rook presentation is the union of its three blocks") {
  auto pb3 = builtin_presentation(PresentationName::PartialBrauerPB, 3);
  auto b3 = builtin_presentation(PresentationName::BrauerB, 3);
  auto is3 = builtin_presentation(PresentationName::SymmetricInverseIS, 3);
  auto holds = [&](const std::pair<Word, Word>& rel) {
    for (const auto& r : pb3.relations)
      if ((r.first == rel.first && r.second == rel.second) ||
          (r.first == rel.second && r.second == rel.first))
        return true;
    return false;
  };
  for (const auto& rel : b3.relations) CHECK(holds(rel));
  for (const auto& rel : is3.relations) CHECK(holds(rel));
  // braid block shared between the two ingredients is not duplicated
  std::set<std::string> seen;
  for (const auto& [u, v] : pb3.relations)
    CHECK(seen.insert(format_word(u) + "=" + format_word(v)).second);
}

TEST_CASE("evaluation homomorphism") {
  CHECK(evaluate({}, 3) == identity(3));
  CHECK(evaluate(parse_word("t1 v1 t1"), 2) == hook(1, 2));
  CHECK(evaluate(parse_word("v1 t1 v1"), 2) == parse_diagram("{1|2|1'|2'}"));
  CHECK(evaluate(parse_word("v1 t1 v1"), 2) ==
        multiply(puncture(1, 2), puncture(2, 2)).product);
  CHECK_THROWS_AS(evaluate(parse_word("s3"), 3), ParseError);
  CHECK_THROWS_AS(evaluate(parse_word("v4"), 3), ParseError);

  std::mt19937_64 rng(20240818);
  for (int trial = 0; trial < 10000; ++trial) {
    Word u = random_word(4, 6, true, rng);
    Word v = random_word(4, 6, true, rng);
    Word uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    REQUIRE(evaluate(uv, 4) ==
            multiply(evaluate(u, 4), evaluate(v, 4)).product);
  }
}

TEST_CASE("soundness of all builtin presentations") {
  for (auto name : {PresentationName::BrauerB, PresentationName::FactorizableIT,
                    PresentationName::PartialBrauerPB,
                    PresentationName::SymmetricInverseIS})
    for (int n = 2; n <= 4; ++n) {
      auto rep = check_soundness(builtin_presentation(name, n));
      CHECK(rep.checked > 0);
      CHECK(rep.ok());
    }
}

TEST_CASE("a corrupted relation is reported") {
  auto p = builtin_presentation(PresentationName::BrauerB, 3);
  p.relations.emplace_back(parse_word("s1 s2"), parse_word("s2 s1"));
  auto rep = check_soundness(p);
  REQUIRE(rep.failures.size() == 1);
  CHECK(rep.failures[0].relation == p.relations.size() - 1);
  CHECK(rep.failures[0].lhs == "s1 s2");
  CHECK(rep.failures[0].lhs_value != rep.failures[0].rhs_value);
}

TEST_CASE("derived relations have replayable certificates") {
  auto b3 = builtin_presentation(PresentationName::BrauerB, 3);
  Word l5 = parse_word("s1 t2 s1"), r5 = parse_word("s2 t1 s2");
  auto d5 = derive(b3, l5, r5);
  REQUIRE(d5.has_value());
  CHECK(replay(b3, *d5, l5, r5));

  auto b4 = builtin_presentation(PresentationName::BrauerB, 4);
  Word l5b = parse_word("t1 s2 t1"), r5b = parse_word("t1");
  auto d5b = derive(b4, l5b, r5b);
  REQUIRE(d5b.has_value());
  CHECK(replay(b4, *d5b, l5b, r5b));

  Word l6 = parse_word("s3 s2 t1 t3"), r6 = parse_word("s1 s2 t1 t3");
  auto d6 = derive(b4, l6, r6);
  REQUIRE(d6.has_value());
  CHECK(replay(b4, *d6, l6, r6));

  auto pb4 = builtin_presentation(PresentationName::PartialBrauerPB, 4);
  Word l16 = parse_word("s3 s2 t1 v3 v4");
  Word r16 = parse_word("s1 s2 v1 t1 t3 v3");
  auto d16 = derive(pb4, l16, r16);
  REQUIRE(d16.has_value());
  CHECK(replay(pb4, *d16, l16, r16));
  CHECK(d16->steps.size() <= 20);

  // a tampered certificate no longer replays
  Derivation bad = *d16;
  bad.steps.back().pos += 1;
  CHECK_FALSE(replay(pb4, bad, l16, r16));
}

TEST_CASE("derive returns unknown when the caps are too small") {
  auto b4 = builtin_presentation(PresentationName::BrauerB, 4);
  Word l = parse_word("s3 s2 t1 t3"), r = parse_word("s1 s2 t1 t3");
  CHECK_FALSE(derive(b4, l, r, 1).has_value());
  CHECK_FALSE(derive(b4, l, r, 20, 10).has_value());
  // trivial target
  auto t = derive(b4, l, l);
  REQUIRE(t.has_value());
  CHECK(t->steps.empty());
}

TEST_CASE("congruence enumeration matches the diagram monoids") {
  auto b2 = enumerate_presented(builtin_presentation(PresentationName::BrauerB, 2));
  CHECK(b2.status == CongruenceResult::Status::Complete);
  CHECK(b2.size == 3);

  auto it3 = enumerate_presented(
      builtin_presentation(PresentationName::FactorizableIT, 3));
  CHECK(it3.size == 16);

  auto pb2 = enumerate_presented(
      builtin_presentation(PresentationName::PartialBrauerPB, 2));
  CHECK(pb2.size == 10);

  auto is2 = enumerate_presented(
      builtin_presentation(PresentationName::SymmetricInverseIS, 2));
  CHECK(is2.size == 7);
}

TEST_CASE("normal forms evaluate onto the whole diagram monoid") {
  auto p = builtin_presentation(PresentationName::BrauerB, 3);
  auto r = enumerate_presented(p);
  REQUIRE(r.size == 15);
  REQUIRE(r.normal_forms.size() == 15);
  CHECK(r.normal_forms[0].empty());
  std::set<Diagram> images;
  for (const Word& w : r.normal_forms) images.insert(evaluate(w, 3));
  auto elems = enumerate(MonoidFamily::B, 3);
  CHECK(images == std::set<Diagram>(elems.begin(), elems.end()));
  // every class is reachable by a word with at most floor(n/2) hook
  // symbols: 0-1 shortest paths with hook edges weighted 1
  for (int n = 3; n <= 4; ++n) {
    auto pn = builtin_presentation(PresentationName::BrauerB, n);
    auto rn = enumerate_presented(pn);
    std::vector<int> cost(rn.size, INT_MAX);
    cost[0] = 0;
    std::deque<std::uint32_t> queue{0};
    while (!queue.empty()) {
      auto c = queue.front();
      queue.pop_front();
      for (std::size_t g = 0; g < pn.generators.size(); ++g) {
        int w = pn.generators[g].kind == GenKind::Theta ? 1 : 0;
        std::uint32_t d = rn.action[c][g];
        if (cost[c] + w < cost[d]) {
          cost[d] = cost[c] + w;
          if (w) queue.push_back(d);
          else queue.push_front(d);
        }
      }
    }
    for (std::uint64_t c = 0; c < rn.size; ++c) CHECK(cost[c] <= n / 2);
  }
}

TEST_CASE("sigma words span exactly the unit group") {
  for (int n = 2; n <= 4; ++n) {
    auto p = builtin_presentation(PresentationName::BrauerB, n);
    auto r = enumerate_presented(p);
    CHECK(unit_class_count(p, r) == (std::size_t)factorial(n));
  }
  auto p = builtin_presentation(PresentationName::PartialBrauerPB, 3);
  CHECK(unit_class_count(p, enumerate_presented(p)) == 6);
}

TEST_CASE("words containing a non-unit generator evaluate to non-permutations") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    Word w = random_word(4, 8, true, rng);
    bool has_nonunit = false;
    for (GenSym g : w) has_nonunit |= g.kind != GenKind::Sigma;
    if (!has_nonunit) w.push_back({GenKind::Theta, 2});
    CHECK_FALSE(is_permutation(evaluate(w, 4)));
  }
}

TEST_CASE("congruence enumeration cap") {
  auto p = builtin_presentation(PresentationName::BrauerB, 4);
  auto r = enumerate_presented(p, 5);
  CHECK(r.status == CongruenceResult::Status::CapExceeded);
  // dropping an involution relation makes the monoid infinite
  auto q = drop_relation(builtin_presentation(PresentationName::BrauerB, 2), 0);
  CHECK(q.relations.size() == 3);
  auto rq = enumerate_presented(q, 2000);
  CHECK(rq.status == CongruenceResult::Status::CapExceeded);
  CHECK_THROWS_AS(drop_relation(q, 99), ParseError);
}

TEST_CASE("presentation files round trip") {
  auto p = builtin_presentation(PresentationName::PartialBrauerPB, 3);
  Presentation q = parse_presentation(format_presentation(p));
  CHECK(q.n == p.n);
  CHECK(q.generators == p.generators);
  CHECK(q.relations == p.relations);

  Presentation f = parse_presentation(
      "# comment\n"
      "gens: s1 s2 t1\n"
      "s1 s1 = e\n"
      "t1 s2 t1 = t1\n");
  CHECK(f.n == 3);
  CHECK(f.generators.size() == 3);
  CHECK(f.relations.size() == 2);

  CHECK_THROWS_AS(parse_presentation("s1 = e\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: s1\nt1 = e\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: q1\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: s1\ns1 s1\n"), ParseError);
}

TEST_CASE("word and symbol formatting") {
  CHECK(format_word({}) == "e");
  CHECK(parse_word("e").empty());
  CHECK(format_word(parse_word("s1 t2 tau3 v4")) == "s1 t2 tau3 v4");
  CHECK(symbol_name({GenKind::Tau, 7}) == "tau7");
  CHECK_THROWS_AS(parse_symbol("x1"), ParseError);
  CHECK_THROWS_AS(parse_symbol("s"), ParseError);
  CHECK_THROWS_AS(parse_symbol("s0"), ParseError);
  CHECK_THROWS_AS(parse_symbol("t1x"), ParseError);
}
