#include "brauer/diagram.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>

namespace brauer {

namespace {

int lowest_point(std::uint64_t mask) { return std::countr_zero(mask); }

// Minimal union-find over a fixed node range.
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int size) : parent(size) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::string point_name(int p, int n) {
  return p <= n ? std::to_string(p) : std::to_string(p - n) + "'";
}

}  // namespace

Diagram::Diagram(int n, std::vector<std::uint64_t> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  if (n < 1 || n > max_degree)
    throw ParseError("degree must be between 1 and 32, got " + std::to_string(n));
  std::uint64_t seen = 0;
  int covered = 0;
  for (std::uint64_t b : blocks_) {
    if (b == 0) throw ParseError("empty block");
    if (b & ~full_mask())
      throw ParseError("point out of range for degree " + std::to_string(n));
    if (b & seen) {
      int p = lowest_point(b & seen) + 1;
      throw ParseError("duplicate point " + point_name(p, n));
    }
    seen |= b;
    covered += std::popcount(b);
  }
  if (covered != 2 * n) {
    int p = lowest_point(~seen & full_mask()) + 1;
    throw ParseError("missing point " + point_name(p, n));
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](std::uint64_t a, std::uint64_t b) {
              return lowest_point(a) < lowest_point(b);
            });
}

Diagram Diagram::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<std::uint64_t> masks;
  masks.reserve(blocks.size());
  for (const auto& blk : blocks) {
    std::uint64_t m = 0;
    for (int p : blk) {
      if (p < 1 || p > 2 * n)
        throw ParseError("point out of range: " + std::to_string(p));
      m |= 1ull << (p - 1);
    }
    masks.push_back(m);
  }
  return Diagram(n, std::move(masks));
}

int Diagram::block_of(int p) const {
  std::uint64_t bit = 1ull << (p - 1);
  for (int i = 0; i < block_count(); ++i)
    if (blocks_[i] & bit) return i;
  throw ParseError("point out of range: " + std::to_string(p));
}

const char* family_name(MonoidFamily f) {
  switch (f) {
    case MonoidFamily::C: return "C";
    case MonoidFamily::S: return "S";
    case MonoidFamily::IS: return "IS";
    case MonoidFamily::B: return "B";
    case MonoidFamily::PB: return "PB";
    case MonoidFamily::IP: return "IP";
    case MonoidFamily::IT: return "IT";
  }
  return "?";
}

MonoidFamily family_from_name(const std::string& name) {
  if (name == "C") return MonoidFamily::C;
  if (name == "S") return MonoidFamily::S;
  if (name == "IS") return MonoidFamily::IS;
  if (name == "B") return MonoidFamily::B;
  if (name == "PB") return MonoidFamily::PB;
  if (name == "IP") return MonoidFamily::IP;
  if (name == "IT") return MonoidFamily::IT;
  throw ParseError("unknown family '" + name + "' (expected C/S/IS/B/PB/IP/IT)");
}

MulResult multiply(const Diagram& a, const Diagram& b) {
  const int n = a.degree();
  if (n != b.degree()) throw DegreeMismatch(a.degree(), b.degree());

  // Layers: 0..n-1 = a's left pins, n..2n-1 = glued middle (a's primed pins
  // identified with b's unprimed), 2n..3n-1 = b's primed pins.
  UnionFind uf(3 * n);
  for (std::uint64_t blk : a.blocks()) {
    int first = lowest_point(blk);
    for (std::uint64_t rest = blk & (blk - 1); rest; rest &= rest - 1)
      uf.unite(first, lowest_point(rest));
  }
  for (std::uint64_t blk : b.blocks()) {
    int first = lowest_point(blk) + n;
    for (std::uint64_t rest = blk & (blk - 1); rest; rest &= rest - 1)
      uf.unite(first, lowest_point(rest) + n);
  }

  // Gather product blocks from the outer layers; middle-only classes are
  // the dead circles.
  std::vector<std::uint64_t> acc(3 * n, 0);
  for (int i = 0; i < n; ++i) {
    acc[uf.find(i)] |= 1ull << i;
    acc[uf.find(2 * n + i)] |= 1ull << (n + i);
  }
  std::vector<std::uint64_t> blocks;
  for (int r = 0; r < 3 * n; ++r)
    if (acc[r]) blocks.push_back(acc[r]);

  int circles = 0;
  for (int i = n; i < 2 * n; ++i)
    if (uf.find(i) == i && acc[i] == 0) ++circles;

  return MulResult{Diagram(n, std::move(blocks)), circles};
}

Diagram star_multiply(const Diagram& a, const Diagram& b) {
  const int n = a.degree();
  if (n != b.degree()) throw DegreeMismatch(a.degree(), b.degree());
  const std::uint64_t left = a.left_mask();

  // Match blocks of a and b whose traces on the glued interface coincide.
  // The trace must be non-empty: the degenerate "empty = empty" reading
  // breaks associativity.
  std::vector<std::uint64_t> blocks;
  for (std::uint64_t x : a.blocks()) {
    std::uint64_t iface = x >> n;           // X cap M', unprimed
    std::uint64_t lpart = x & left;         // X cap M
    if (!iface || !lpart) continue;
    for (std::uint64_t y : b.blocks()) {
      if ((y & left) != iface) continue;
      std::uint64_t rpart = y & ~left;      // Y cap M'
      if (rpart) blocks.push_back(lpart | rpart);
      break;  // blocks of b are disjoint, at most one can match
    }
  }
  std::uint64_t covered = 0;
  for (std::uint64_t blk : blocks) covered |= blk;
  for (std::uint64_t bit = a.full_mask() & ~covered; bit; bit &= bit - 1)
    blocks.push_back(bit & -bit);
  return Diagram(n, std::move(blocks));
}

BlockKind classify_block(const Diagram& d, int index) {
  if (index < 0 || index >= d.block_count())
    throw ParseError("block index out of range: " + std::to_string(index));
  std::uint64_t blk = d.blocks()[index];
  int size = std::popcount(blk);
  bool meets_left = (blk & d.left_mask()) != 0;
  bool meets_right = (blk & ~d.left_mask()) != 0;
  if (size == 1) return BlockKind::Point;
  if (meets_left && meets_right)
    return size == 2 ? BlockKind::Line : BlockKind::GeneralizedLine;
  return size == 2 ? BlockKind::Bracket : BlockKind::GeneralizedBracket;
}

bool is_generalized_line(const Diagram& d, int index) {
  if (index < 0 || index >= d.block_count())
    throw ParseError("block index out of range: " + std::to_string(index));
  std::uint64_t blk = d.blocks()[index];
  return (blk & d.left_mask()) != 0 && (blk & ~d.left_mask()) != 0;
}

bool is_member(const Diagram& d, MonoidFamily f) {
  if (f == MonoidFamily::C) return true;
  const std::uint64_t left = d.left_mask();
  for (std::uint64_t blk : d.blocks()) {
    int size = std::popcount(blk);
    int nl = std::popcount(blk & left);
    int nr = size - nl;
    bool crosses = nl > 0 && nr > 0;
    switch (f) {
      case MonoidFamily::S:
        if (!(size == 2 && crosses)) return false;
        break;
      case MonoidFamily::IS:
        if (!(size == 1 || (size == 2 && crosses))) return false;
        break;
      case MonoidFamily::B:
        if (size != 2) return false;
        break;
      case MonoidFamily::PB:
        if (size > 2) return false;
        break;
      case MonoidFamily::IP:
        if (!crosses) return false;
        break;
      case MonoidFamily::IT:
        if (!crosses || nl != nr) return false;
        break;
      case MonoidFamily::C:
        break;
    }
  }
  return true;
}

int rank(const Diagram& d) {
  int r = 0;
  for (int i = 0; i < d.block_count(); ++i)
    if (is_generalized_line(d, i)) ++r;
  return r;
}

ITType it_type(const Diagram& d) {
  if (!is_member(d, MonoidFamily::IT))
    throw NotAMember("it_type: diagram is not in IT_" + std::to_string(d.degree()));
  ITType m(d.degree(), 0);
  for (std::uint64_t blk : d.blocks())
    ++m[std::popcount(blk & d.left_mask()) - 1];
  return m;
}

PBType pb_type(const Diagram& d) {
  if (!is_member(d, MonoidFamily::PB))
    throw NotAMember("pb_type: diagram is not in PB_" + std::to_string(d.degree()));
  int r = 0, b1 = 0, b2 = 0, p1 = 0, p2 = 0;
  const std::uint64_t left = d.left_mask();
  for (std::uint64_t blk : d.blocks()) {
    int nl = std::popcount(blk & left);
    int nr = std::popcount(blk) - nl;
    if (nl == 1 && nr == 1) ++r;
    else if (nl == 2) ++b1;
    else if (nr == 2) ++b2;
    else if (nl == 1) ++p1;
    else ++p2;
  }
  const int n = d.degree();
  if (n != r + 2 * b1 + p1 || n != r + 2 * b2 + p2)
    throw NotAMember("pb_type: inconsistent block counts");
  if (b1 >= b2) return PBType{b2, b1 - b2, 0, p1};
  return PBType{b1, 0, b2 - b1, p2};
}

namespace {

void check_index(int i, int hi, const char* what) {
  if (i < 1 || i > hi)
    throw ParseError(std::string(what) + " index " + std::to_string(i) +
                     " out of range 1.." + std::to_string(hi));
}

std::vector<std::uint64_t> identity_blocks(int n) {
  std::vector<std::uint64_t> blocks(n);
  for (int j = 0; j < n; ++j) blocks[j] = (1ull << j) | (1ull << (n + j));
  return blocks;
}

}  // namespace

Diagram identity(int n) { return Diagram(n, identity_blocks(n)); }

Diagram transposition(int i, int n) {
  check_index(i, n - 1, "transposition");
  auto blocks = identity_blocks(n);
  blocks[i - 1] = (1ull << (i - 1)) | (1ull << (n + i));
  blocks[i] = (1ull << i) | (1ull << (n + i - 1));
  return Diagram(n, std::move(blocks));
}

Diagram hook(int i, int n) {
  check_index(i, n - 1, "hook");
  auto blocks = identity_blocks(n);
  blocks[i - 1] = (1ull << (i - 1)) | (1ull << i);
  blocks[i] = (1ull << (n + i - 1)) | (1ull << (n + i));
  return Diagram(n, std::move(blocks));
}

Diagram block_join(int i, int n) {
  check_index(i, n - 1, "block_join");
  auto blocks = identity_blocks(n);
  blocks[i - 1] = (1ull << (i - 1)) | (1ull << i) |
                  (1ull << (n + i - 1)) | (1ull << (n + i));
  blocks.erase(blocks.begin() + i);
  return Diagram(n, std::move(blocks));
}

Diagram puncture(int i, int n) {
  check_index(i, n, "puncture");
  auto blocks = identity_blocks(n);
  blocks[i - 1] = 1ull << (i - 1);
  blocks.push_back(1ull << (n + i - 1));
  return Diagram(n, std::move(blocks));
}

Diagram perm_diagram(const std::vector<int>& image) {
  const int n = static_cast<int>(image.size());
  std::vector<std::uint64_t> blocks(n);
  for (int i = 0; i < n; ++i) {
    if (image[i] < 1 || image[i] > n) throw NotAPermutation();
    blocks[i] = (1ull << i) | (1ull << (n + image[i] - 1));
  }
  return Diagram(n, std::move(blocks));  // duplicate images fail validation
}

bool is_permutation(const Diagram& d) { return is_member(d, MonoidFamily::S); }

std::vector<int> to_perm(const Diagram& d) {
  if (!is_permutation(d)) throw NotAPermutation();
  const int n = d.degree();
  std::vector<int> image(n);
  for (std::uint64_t blk : d.blocks()) {
    int i = lowest_point(blk);
    int j = lowest_point(blk >> n);
    image[i] = j + 1;
  }
  return image;
}

Diagram perm_inverse(const Diagram& d) {
  if (!is_permutation(d)) throw NotAPermutation();
  return flip(d);
}

Diagram flip(const Diagram& d) {
  const int n = d.degree();
  const std::uint64_t left = d.left_mask();
  std::vector<std::uint64_t> blocks;
  blocks.reserve(d.blocks().size());
  for (std::uint64_t blk : d.blocks())
    blocks.push_back(((blk & left) << n) | (blk >> n));
  return Diagram(n, std::move(blocks));
}

std::string to_text(const Diagram& d) {
  const int n = d.degree();
  std::string out = "{";
  bool first_block = true;
  for (std::uint64_t blk : d.blocks()) {
    if (!first_block) out += '|';
    first_block = false;
    bool first_pt = true;
    for (std::uint64_t rest = blk; rest; rest &= rest - 1) {
      if (!first_pt) out += ',';
      first_pt = false;
      out += point_name(lowest_point(rest) + 1, n);
    }
  }
  out += '}';
  return out;
}

Diagram parse_diagram(const std::string& text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError("diagram parse error at offset " + std::to_string(pos) +
                      ": " + msg);
  };
  if (text.empty() || text.front() != '{') throw fail("expected '{'");
  if (text.back() != '}') throw fail("expected closing '}'");

  struct Pt { int index; bool primed; };
  std::vector<std::vector<Pt>> blocks(1);
  std::vector<std::vector<bool>> seen(2, std::vector<bool>(Diagram::max_degree + 1));
  int max_index = 0;
  pos = 1;
  const std::size_t end = text.size() - 1;
  if (pos == end) throw fail("empty diagram");
  bool expect_point = true;
  while (pos < end) {
    char c = text[pos];
    if (expect_point) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw fail("expected a point");
      int v = 0;
      while (pos < end && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        if (v > Diagram::max_degree) throw fail("point index exceeds 32");
        ++pos;
      }
      if (v == 0) throw fail("point indices start at 1");
      bool primed = pos < end && text[pos] == '\'';
      if (primed) ++pos;
      if (seen[primed][v])
        throw fail("duplicate point " + std::to_string(v) + (primed ? "'" : ""));
      seen[primed][v] = true;
      blocks.back().push_back({v, primed});
      max_index = std::max(max_index, v);
      expect_point = false;
    } else if (c == ',') {
      ++pos;
      expect_point = true;
    } else if (c == '|') {
      ++pos;
      blocks.emplace_back();
      expect_point = true;
    } else {
      throw fail(std::string("unexpected character '") + c + "'");
    }
  }
  if (expect_point) throw fail("trailing separator");

  const int n = max_index;
  std::vector<std::uint64_t> masks;
  masks.reserve(blocks.size());
  for (const auto& blk : blocks) {
    std::uint64_t m = 0;
    for (Pt p : blk) m |= 1ull << (p.index - 1 + (p.primed ? n : 0));
    masks.push_back(m);
  }
  return Diagram(n, std::move(masks));  // reports duplicate/missing points
}

std::string render_ascii(const Diagram& d) {
  const int n = d.degree();
  static constexpr char kIds[] =
      "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789@#";

  // One hook column per block with >= 2 pins on that side; columns are
  // packed greedily so disjoint spans can share one.
  struct Span { std::uint64_t pins; int lo, hi, col; };
  auto layout = [&](bool right_side) {
    std::vector<Span> spans;
    for (int bi = 0; bi < d.block_count(); ++bi) {
      std::uint64_t side = right_side ? d.blocks()[bi] >> n
                                      : d.blocks()[bi] & d.left_mask();
      if (std::popcount(side) < 2) continue;
      spans.push_back({side, std::countr_zero(side),
                       63 - std::countl_zero(side), -1});
    }
    std::sort(spans.begin(), spans.end(),
              [](const Span& a, const Span& b) { return a.lo < b.lo; });
    std::vector<int> col_top;
    for (auto& s : spans) {
      int c = 0;
      while (c < static_cast<int>(col_top.size()) && col_top[c] >= s.lo) ++c;
      if (c == static_cast<int>(col_top.size())) col_top.push_back(-1);
      col_top[c] = s.hi;
      s.col = c;
    }
    return std::pair(spans, static_cast<int>(col_top.size()));
  };
  auto [lspans, lw] = layout(false);
  auto [rspans, rw] = layout(true);

  auto hook_cells = [](const std::vector<Span>& spans, int width, int row) {
    std::string cells(width, ' ');
    for (const auto& s : spans) {
      if (row < s.lo || row > s.hi) continue;
      cells[s.col] = (s.pins >> row) & 1 ? '+' : '|';
    }
    return cells;
  };

  const int lab_w = n >= 10 ? 2 : 1;
  std::string out;
  for (int row = 0; row < n; ++row) {
    std::string lab = std::to_string(row + 1);
    int bl = d.block_of(row + 1);
    int br = d.block_of(n + row + 1);
    bool joined = bl == br;
    std::string hl = hook_cells(lspans, lw, row);
    std::string hr = hook_cells(rspans, rw, row);
    std::reverse(hr.begin(), hr.end());
    out += std::string(lab_w - lab.size(), ' ') + lab + " o" + hl + "--" +
           kIds[bl] + (joined ? "--" : "  ") + kIds[br] + "--" + hr + "o " +
           lab + "'\n";
  }
  return out;
}

}  // namespace brauer
