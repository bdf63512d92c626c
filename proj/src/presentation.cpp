#include "brauer/presentation.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <unordered_map>
#include <sstream>

namespace brauer {

namespace {

GenSym S(int i) { return {GenKind::Sigma, static_cast<std::uint8_t>(i)}; }
GenSym T(int i) { return {GenKind::Theta, static_cast<std::uint8_t>(i)}; }
GenSym U(int i) { return {GenKind::Tau, static_cast<std::uint8_t>(i)}; }
GenSym V(int i) { return {GenKind::Vartheta, static_cast<std::uint8_t>(i)}; }

struct RelationBuilder {
  std::vector<std::pair<Word, Word>> rels;

  // Skips exact and mirrored duplicates, so overlapping relation families
  // (the braid block appears twice in the rook presentation) stay a set.
  void add(Word u, Word v) {
    for (const auto& [a, b] : rels)
      if ((a == u && b == v) || (a == v && b == u)) return;
    rels.emplace_back(std::move(u), std::move(v));
  }
};

// sigma_i^2 = e, distant commutations, braid relations.
void braid_block(RelationBuilder& b, int n) {
  for (int i = 1; i < n; ++i) b.add({S(i), S(i)}, {});
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) {
      if (std::abs(i - j) > 1) b.add({S(i), S(j)}, {S(j), S(i)});
      if (std::abs(i - j) == 1)
        b.add({S(i), S(j), S(i)}, {S(j), S(i), S(j)});
    }
}

// The symmetric inverse block over sigma/vartheta.
void partial_identity_block(RelationBuilder& b, int n) {
  for (int i = 1; i <= n; ++i) b.add({V(i), V(i)}, {V(i)});
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) b.add({V(i), V(j)}, {V(j), V(i)});
  for (int i = 1; i < n; ++i) {
    b.add({S(i), V(i)}, {V(i + 1), S(i)});
    for (int j = 1; j <= n; ++j)
      if (j != i && j != i + 1) b.add({S(i), V(j)}, {V(j), S(i)});
    b.add({V(i), S(i), V(i)}, {V(i), V(i + 1)});
  }
}

void brauer_blocks(RelationBuilder& b, int n) {
  braid_block(b, n);
  for (int i = 1; i < n; ++i) b.add({T(i), T(i)}, {T(i)});
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) {
      if (std::abs(i - j) > 1) b.add({T(i), T(j)}, {T(j), T(i)});
      if (std::abs(i - j) == 1) b.add({T(i), T(j), T(i)}, {T(i)});
    }
  for (int i = 1; i < n; ++i) {
    b.add({T(i), S(i)}, {T(i)});
    b.add({S(i), T(i)}, {T(i)});
  }
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) {
      if (std::abs(i - j) > 1) b.add({T(i), S(j)}, {S(j), T(i)});
      if (std::abs(i - j) == 1) {
        b.add({S(i), T(j), T(i)}, {S(j), T(i)});
        b.add({T(i), T(j), S(i)}, {T(i), S(j)});
      }
    }
}

}  // namespace

const char* presentation_label(PresentationName name) {
  switch (name) {
    case PresentationName::BrauerB: return "brauer";
    case PresentationName::FactorizableIT: return "it";
    case PresentationName::PartialBrauerPB: return "pb";
    case PresentationName::SymmetricInverseIS: return "is";
  }
  return "?";
}

PresentationName presentation_from_label(const std::string& label) {
  if (label == "brauer") return PresentationName::BrauerB;
  if (label == "it") return PresentationName::FactorizableIT;
  if (label == "pb") return PresentationName::PartialBrauerPB;
  if (label == "is") return PresentationName::SymmetricInverseIS;
  throw ParseError("unknown presentation '" + label +
                   "' (expected brauer/it/pb/is)");
}

Presentation builtin_presentation(PresentationName name, int n) {
  if (n < 2)
    throw DegreeTooSmall("builtin presentations need degree n >= 2, got " +
                         std::to_string(n));
  Presentation p;
  p.label = presentation_label(name);
  p.n = n;
  RelationBuilder b;

  switch (name) {
    case PresentationName::BrauerB: {
      for (int i = 1; i < n; ++i) p.generators.push_back(S(i));
      for (int i = 1; i < n; ++i) p.generators.push_back(T(i));
      brauer_blocks(b, n);
      break;
    }
    case PresentationName::FactorizableIT: {
      for (int i = 1; i < n; ++i) p.generators.push_back(S(i));
      for (int i = 1; i < n; ++i) p.generators.push_back(U(i));
      braid_block(b, n);
      for (int i = 1; i < n; ++i) b.add({U(i), U(i)}, {U(i)});
      for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j)
          if (i != j) b.add({U(i), U(j)}, {U(j), U(i)});
      for (int i = 1; i < n; ++i) {
        b.add({U(i), S(i)}, {U(i)});
        b.add({S(i), U(i)}, {U(i)});
      }
      for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) {
          if (std::abs(i - j) > 1) b.add({U(i), S(j)}, {S(j), U(i)});
          if (std::abs(i - j) == 1) {
            b.add({S(i), U(j), S(i)}, {S(j), U(i), S(j)});
            b.add({U(i), S(j), U(i)}, {U(i), U(j)});
          }
        }
      break;
    }
    case PresentationName::SymmetricInverseIS: {
      for (int i = 1; i < n; ++i) p.generators.push_back(S(i));
      for (int i = 1; i <= n; ++i) p.generators.push_back(V(i));
      braid_block(b, n);
      partial_identity_block(b, n);
      break;
    }
    case PresentationName::PartialBrauerPB: {
      for (int i = 1; i < n; ++i) p.generators.push_back(S(i));
      for (int i = 1; i < n; ++i) p.generators.push_back(T(i));
      for (int i = 1; i <= n; ++i) p.generators.push_back(V(i));
      brauer_blocks(b, n);
      partial_identity_block(b, n);
      for (int i = 1; i < n; ++i)
        for (int j = 1; j <= n; ++j)
          if (j != i && j != i + 1) b.add({T(i), V(j)}, {V(j), T(i)});
      for (int i = 1; i < n; ++i) {
        b.add({T(i), V(i)}, {T(i), V(i + 1)});
        b.add({T(i), V(i + 1)}, {T(i), V(i), V(i + 1)});
        b.add({V(i), T(i)}, {V(i + 1), T(i)});
        b.add({V(i + 1), T(i)}, {V(i), V(i + 1), T(i)});
      }
      for (int i = 1; i < n; ++i) {
        b.add({T(i), V(i), T(i)}, {T(i)});
        b.add({V(i), T(i), V(i)}, {V(i), V(i + 1)});
      }
      break;
    }
  }
  p.relations = std::move(b.rels);
  return p;
}

Presentation drop_relation(const Presentation& p, std::size_t k) {
  if (k >= p.relations.size())
    throw ParseError("relation index " + std::to_string(k) +
                     " out of range (have " +
                     std::to_string(p.relations.size()) + ")");
  Presentation q = p;
  q.relations.erase(q.relations.begin() + static_cast<long>(k));
  return q;
}

std::string symbol_name(GenSym g) {
  const char* prefix = "";
  switch (g.kind) {
    case GenKind::Sigma: prefix = "s"; break;
    case GenKind::Theta: prefix = "t"; break;
    case GenKind::Tau: prefix = "tau"; break;
    case GenKind::Vartheta: prefix = "v"; break;
  }
  return prefix + std::to_string(g.index);
}

GenSym parse_symbol(const std::string& token) {
  std::size_t digits = 0;
  while (digits < token.size() &&
         !std::isdigit(static_cast<unsigned char>(token[digits])))
    ++digits;
  std::string prefix = token.substr(0, digits);
  std::string num = token.substr(digits);
  if (num.empty() || num.size() > 2 ||
      !std::all_of(num.begin(), num.end(),
                   [](unsigned char c) { return std::isdigit(c); }))
    throw ParseError("bad generator token '" + token + "'");
  int index = std::stoi(num);
  if (index < 1 || index > Diagram::max_degree)
    throw ParseError("generator index out of range in '" + token + "'");
  GenKind kind;
  if (prefix == "s") kind = GenKind::Sigma;
  else if (prefix == "t") kind = GenKind::Theta;
  else if (prefix == "tau") kind = GenKind::Tau;
  else if (prefix == "v") kind = GenKind::Vartheta;
  else throw ParseError("bad generator token '" + token + "' (prefixes: s, t, tau, v)");
  return {kind, static_cast<std::uint8_t>(index)};
}

std::string format_word(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += symbol_name(w[i]);
  }
  return out;
}

Word parse_word(const std::string& text) {
  Word w;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    if (token == "e") continue;
    w.push_back(parse_symbol(token));
  }
  return w;
}

Presentation parse_presentation(const std::string& text) {
  Presentation p;
  p.label = "file";
  std::istringstream in(text);
  std::string line;
  bool have_gens = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto where = [&] { return " (line " + std::to_string(lineno) + ")"; };
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!have_gens) {
      auto colon = line.find(':');
      if (colon == std::string::npos || line.substr(0, colon) != "gens")
        throw ParseError("presentation file must start with 'gens: ...'" + where());
      std::istringstream gens(line.substr(colon + 1));
      std::string token;
      while (gens >> token) p.generators.push_back(parse_symbol(token));
      if (p.generators.empty())
        throw ParseError("empty generator list" + where());
      have_gens = true;
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("expected 'u = v'" + where());
    Word lhs = parse_word(line.substr(0, eq));
    Word rhs = parse_word(line.substr(eq + 1));
    for (const Word* w : {&lhs, &rhs})
      for (GenSym g : *w)
        if (std::find(p.generators.begin(), p.generators.end(), g) ==
            p.generators.end())
          throw ParseError("symbol " + symbol_name(g) +
                           " is not a declared generator" + where());
    p.relations.emplace_back(std::move(lhs), std::move(rhs));
  }
  if (!have_gens) throw ParseError("presentation file has no 'gens:' line");
  int n = 1;
  for (GenSym g : p.generators)
    n = std::max(n, g.kind == GenKind::Vartheta ? int(g.index) : g.index + 1);
  p.n = n;
  return p;
}

std::string format_presentation(const Presentation& p) {
  std::string out = "gens:";
  for (GenSym g : p.generators) out += " " + symbol_name(g);
  out += '\n';
  for (const auto& [u, v] : p.relations)
    out += format_word(u) + " = " + format_word(v) + "\n";
  return out;
}

Diagram evaluate(const Word& w, int n) {
  Diagram acc = identity(n);
  for (GenSym g : w) {
    Diagram factor = identity(n);
    switch (g.kind) {
      case GenKind::Sigma: factor = transposition(g.index, n); break;
      case GenKind::Theta: factor = hook(g.index, n); break;
      case GenKind::Tau: factor = block_join(g.index, n); break;
      case GenKind::Vartheta: factor = puncture(g.index, n); break;
    }
    acc = multiply(acc, factor).product;
  }
  return acc;
}

SoundnessReport check_soundness(const Presentation& p) {
  SoundnessReport report;
  for (std::size_t r = 0; r < p.relations.size(); ++r) {
    const auto& [u, v] = p.relations[r];
    Diagram lhs = evaluate(u, p.n);
    Diagram rhs = evaluate(v, p.n);
    ++report.checked;
    if (lhs != rhs)
      report.failures.push_back(SoundnessFailure{
          r, format_word(u), format_word(v), to_text(lhs), to_text(rhs)});
  }
  return report;
}

namespace {

Word apply_step(const Word& w, const Word& from, const Word& to,
                std::size_t pos) {
  Word out;
  out.reserve(w.size() - from.size() + to.size());
  out.insert(out.end(), w.begin(), w.begin() + pos);
  out.insert(out.end(), to.begin(), to.end());
  out.insert(out.end(), w.begin() + pos + from.size(), w.end());
  return out;
}

struct SearchNode {
  Word parent;
  RewriteStep step;  // step applied to parent yields this word
};

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::uint64_t h = 1469598103934665603ull;
    for (GenSym g : w) {
      h ^= (static_cast<std::uint64_t>(g.kind) << 8) | g.index;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

bool replay(const Presentation& p, const Derivation& d, const Word& lhs,
            const Word& rhs) {
  if (d.words.empty() || d.words.front() != lhs || d.words.back() != rhs)
    return false;
  if (d.steps.size() + 1 != d.words.size()) return false;
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    const auto& st = d.steps[i];
    if (st.relation >= p.relations.size()) return false;
    const Word& from =
        st.forward ? p.relations[st.relation].first : p.relations[st.relation].second;
    const Word& to =
        st.forward ? p.relations[st.relation].second : p.relations[st.relation].first;
    const Word& w = d.words[i];
    if (st.pos + from.size() > w.size()) return false;
    if (!std::equal(from.begin(), from.end(), w.begin() + st.pos)) return false;
    if (apply_step(w, from, to, st.pos) != d.words[i + 1]) return false;
  }
  return true;
}

std::optional<Derivation> derive(const Presentation& p, const Word& lhs,
                                 const Word& rhs, int depth_cap,
                                 std::uint64_t width_cap) {
  if (lhs == rhs) return Derivation{{lhs}, {}};

  // Two breadth-first trees, one from each end; sides expand alternately
  // (smaller frontier first) so a meeting point gives a near-minimal chain.
  // Intermediate words are kept within a few symbols of the endpoints;
  // longer excursions count as cap exhaustion (Unknown), never as failure.
  const std::size_t max_len = std::max(lhs.size(), rhs.size()) + 3;
  std::unordered_map<Word, SearchNode, WordHash> visited[2];
  std::vector<Word> frontier[2] = {{lhs}, {rhs}};
  int depth[2] = {0, 0};
  visited[0].emplace(lhs, SearchNode{});
  visited[1].emplace(rhs, SearchNode{});
  std::uint64_t total = 2;

  // Chain from the tree root to `w`, as words and connecting steps.
  auto unwind = [&](int side, Word w) {
    std::vector<Word> words{w};
    std::vector<RewriteStep> steps;
    while (true) {
      const SearchNode& node = visited[side].at(words.back());
      if (node.parent.empty() && words.back() == (side == 0 ? lhs : rhs)) break;
      steps.push_back(node.step);
      words.push_back(node.parent);
    }
    std::reverse(words.begin(), words.end());
    std::reverse(steps.begin(), steps.end());
    return std::pair(words, steps);
  };

  auto stitch = [&](const Word& meet) -> Derivation {
    auto [words_a, steps_a] = unwind(0, meet);
    auto [words_b, steps_b] = unwind(1, meet);
    Derivation d;
    d.words = std::move(words_a);
    d.steps = std::move(steps_a);
    // The B-tree path runs rhs -> meet; append it reversed, inverting each
    // step (swap direction, same position).
    for (std::size_t i = words_b.size(); i-- > 1;) {
      const RewriteStep& st = steps_b[i - 1];
      d.steps.push_back(RewriteStep{st.relation, !st.forward, st.pos});
      d.words.push_back(words_b[i - 1]);
    }
    assert(replay(p, d, lhs, rhs));
    return d;
  };

  while (depth[0] + depth[1] < depth_cap) {
    int side;
    if (frontier[0].empty() && frontier[1].empty()) return std::nullopt;
    if (frontier[0].empty()) side = 1;
    else if (frontier[1].empty()) side = 0;
    else side = frontier[0].size() <= frontier[1].size() ? 0 : 1;

    std::vector<Word> next;
    for (const Word& w : frontier[side]) {
      for (std::size_t r = 0; r < p.relations.size(); ++r) {
        for (int dir = 0; dir < 2; ++dir) {
          const Word& from = dir == 0 ? p.relations[r].first : p.relations[r].second;
          const Word& to = dir == 0 ? p.relations[r].second : p.relations[r].first;
          if (from.size() > w.size()) continue;
          if (w.size() - from.size() + to.size() > max_len) continue;
          for (std::size_t pos = 0; pos + from.size() <= w.size(); ++pos) {
            if (!std::equal(from.begin(), from.end(), w.begin() + pos)) continue;
            Word succ = apply_step(w, from, to, pos);
            if (visited[side].contains(succ)) continue;
            visited[side].emplace(
                succ, SearchNode{w, RewriteStep{r, dir == 0, pos}});
            if (visited[1 - side].contains(succ)) return stitch(succ);
            if (++total > width_cap) return std::nullopt;
            next.push_back(std::move(succ));
          }
        }
      }
    }
    frontier[side] = std::move(next);
    ++depth[side];
  }
  return std::nullopt;
}

CongruenceResult enumerate_presented(const Presentation& p, std::uint64_t cap,
                                     bool want_normal_forms) {
  const int ngens = static_cast<int>(p.generators.size());
  std::map<GenSym, int> gen_index;
  for (int g = 0; g < ngens; ++g) gen_index.emplace(p.generators[g], g);

  std::vector<std::pair<std::vector<int>, std::vector<int>>> rels;
  rels.reserve(p.relations.size());
  for (const auto& [u, v] : p.relations) {
    std::vector<int> iu, iv;
    for (GenSym g : u) iu.push_back(gen_index.at(g));
    for (GenSym g : v) iv.push_back(gen_index.at(g));
    rels.emplace_back(std::move(iu), std::move(iv));
  }

  std::vector<std::vector<std::int32_t>> table;
  std::vector<std::int32_t> parent;
  std::deque<std::pair<std::int32_t, std::int32_t>> pending;
  bool exceeded = false;

  auto find = [&](std::int32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto new_class = [&]() -> std::int32_t {
    if (table.size() >= cap) {
      exceeded = true;
      return 0;
    }
    table.emplace_back(ngens, -1);
    parent.push_back(static_cast<std::int32_t>(table.size()) - 1);
    return static_cast<std::int32_t>(table.size()) - 1;
  };
  // Merge the classes of a and b, keeping the smaller id as root, and move
  // the dying row's edges over; clashing edges queue further coincidences.
  auto merge = [&](std::int32_t a, std::int32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    for (int g = 0; g < ngens; ++g) {
      if (table[b][g] == -1) continue;
      if (table[a][g] == -1) table[a][g] = table[b][g];
      else pending.emplace_back(table[a][g], table[b][g]);
    }
  };
  auto settle = [&] {
    while (!pending.empty()) {
      auto [a, b] = pending.front();
      pending.pop_front();
      merge(a, b);
    }
  };
  auto trace = [&](std::int32_t c, const std::vector<int>& word) {
    for (int g : word) {
      if (table[c][g] == -1) {
        std::int32_t fresh = new_class();
        if (exceeded) return c;
        table[c][g] = fresh;
      }
      c = find(table[c][g]);
    }
    return c;
  };

  new_class();  // class of the empty word
  for (std::int32_t c = 0; !exceeded && c < static_cast<std::int32_t>(table.size());
       ++c) {
    if (find(c) != c) continue;
    for (const auto& [u, v] : rels) {
      std::int32_t x = trace(c, u);
      if (exceeded) break;
      std::int32_t y = trace(c, v);
      if (exceeded) break;
      if (x != y) {
        pending.emplace_back(x, y);
        settle();
      }
      if (find(c) != c) break;  // c collapsed into an already-closed class
    }
    if (exceeded || find(c) != c) continue;
    for (int g = 0; g < ngens; ++g)
      if (table[c][g] == -1) {
        table[c][g] = new_class();
        if (exceeded) break;
      }
  }

  CongruenceResult result;
  if (exceeded) {
    result.status = CongruenceResult::Status::CapExceeded;
    return result;
  }

  // Compact live classes in breadth-first order from the root; the visit
  // order makes normal forms shortlex-minimal.
  std::int32_t root = find(0);
  std::vector<std::int32_t> order{root};
  std::vector<std::int32_t> new_id(table.size(), -1);
  new_id[root] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    std::int32_t c = order[head];
    for (int g = 0; g < ngens; ++g) {
      std::int32_t d = find(table[c][g]);
      if (new_id[d] == -1) {
        new_id[d] = static_cast<std::int32_t>(order.size());
        order.push_back(d);
      }
    }
  }

  result.status = CongruenceResult::Status::Complete;
  result.size = order.size();
  result.action.resize(order.size(), std::vector<std::uint32_t>(ngens));
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int g = 0; g < ngens; ++g)
      result.action[i][g] =
          static_cast<std::uint32_t>(new_id[find(table[order[i]][g])]);
  if (want_normal_forms) {
    result.normal_forms.resize(order.size());
    std::vector<bool> have(order.size(), false);
    have[0] = true;
    for (std::size_t i = 0; i < order.size(); ++i)
      for (int g = 0; g < ngens; ++g) {
        std::uint32_t dst = result.action[i][g];
        if (!have[dst]) {
          have[dst] = true;
          result.normal_forms[dst] = result.normal_forms[i];
          result.normal_forms[dst].push_back(p.generators[g]);
        }
      }
  }
  return result;
}

}  // namespace brauer
