#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "brauer/diagram.hpp"

namespace brauer {

// Abstract generators of the presented monoids.  Sigma maps to a
// transposition, Theta to a hook, Tau to a block join and Vartheta to a
// puncture under the evaluation homomorphism.
enum class GenKind : std::uint8_t { Sigma, Theta, Tau, Vartheta };

struct GenSym {
  GenKind kind;
  std::uint8_t index;  // 1-based
  friend bool operator==(const GenSym&, const GenSym&) = default;
  friend auto operator<=>(const GenSym&, const GenSym&) = default;
};

using Word = std::vector<GenSym>;

// Text tokens: s3, t2, tau1, v4.
std::string symbol_name(GenSym g);
GenSym parse_symbol(const std::string& token);
std::string format_word(const Word& w);  // "e" for the empty word
Word parse_word(const std::string& text);

enum class PresentationName {
  BrauerB,
  FactorizableIT,
  PartialBrauerPB,
  SymmetricInverseIS,
};
const char* presentation_label(PresentationName name);
PresentationName presentation_from_label(const std::string& label);

struct Presentation {
  std::string label;
  int n;
  std::vector<GenSym> generators;  // also fixes the shortlex symbol order
  std::vector<std::pair<Word, Word>> relations;
};

// The four relation families of the paper, fully expanded over their index
// ranges, with exact and mirrored duplicates removed.  Requires n >= 2.
Presentation builtin_presentation(PresentationName name, int n);

// Copy of p without relation k (0-based); for experimentation only.
Presentation drop_relation(const Presentation& p, std::size_t k);

// Line format: `gens: s1 s2 t1`, then one `u = v` per line; `#` comments.
Presentation parse_presentation(const std::string& text);
std::string format_presentation(const Presentation& p);

// The evaluation homomorphism into the diagram world.
Diagram evaluate(const Word& w, int n);

struct SoundnessFailure {
  std::size_t relation;
  std::string lhs, rhs;            // the words
  std::string lhs_value, rhs_value;  // their diagram images
};

struct SoundnessReport {
  std::size_t checked = 0;
  std::vector<SoundnessFailure> failures;
  bool ok() const { return failures.empty(); }
};

SoundnessReport check_soundness(const Presentation& p);

// One rewrite: apply relation `relation` (left-to-right when forward) at
// position `pos`.
struct RewriteStep {
  std::size_t relation;
  bool forward;
  std::size_t pos;
};

// words.front() == lhs, words.back() == rhs, and steps[i] transforms
// words[i] into words[i+1].
struct Derivation {
  std::vector<Word> words;
  std::vector<RewriteStep> steps;
};

// Bidirectional breadth-first search over the rewriting graph.  Returns a
// replayable certificate, or nullopt when the caps are exhausted (which
// means "unknown", never "not derivable").
std::optional<Derivation> derive(const Presentation& p, const Word& lhs,
                                 const Word& rhs, int depth_cap = 20,
                                 std::uint64_t width_cap = 1 << 22);

// Re-applies every step of d and checks it leads from lhs to rhs.
bool replay(const Presentation& p, const Derivation& d, const Word& lhs,
            const Word& rhs);

struct CongruenceResult {
  enum class Status { Complete, CapExceeded };
  Status status;
  std::uint64_t size = 0;          // exact when Complete
  std::vector<Word> normal_forms;  // shortlex-minimal, class order
  // action[c][g] = class of (word of c) * generator g, when Complete;
  // class 0 is the empty word.
  std::vector<std::vector<std::uint32_t>> action;
};

// Congruence enumeration: grows the right-multiplication action graph on
// classes of words, merging classes forced equal by the relations, until
// closure or until more than `cap` classes have been defined.
CongruenceResult enumerate_presented(const Presentation& p,
                                     std::uint64_t cap = 1'000'000,
                                     bool want_normal_forms = true);

}  // namespace brauer
