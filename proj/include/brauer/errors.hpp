#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace brauer {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegreeMismatch : Error {
  DegreeMismatch(int lhs, int rhs)
      : Error("degree mismatch: " + std::to_string(lhs) +
              " vs " + std::to_string(rhs)) {}
};

struct DegreeTooSmall : Error {
  explicit DegreeTooSmall(const std::string& what) : Error(what) {}
};

struct NotAPermutation : Error {
  NotAPermutation() : Error("diagram is not a permutation") {}
};

struct NotAMember : Error {
  explicit NotAMember(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

// Enumeration or congruence closure ran past its configured cap.
// `partial` is how far it got before giving up.
struct CapExceeded : Error {
  std::uint64_t partial;
  explicit CapExceeded(std::uint64_t got)
      : Error("cap exceeded after " + std::to_string(got) + " elements"),
        partial(got) {}
};

// An enumerated count disagrees with the closed formula; carries both sides.
struct FormulaMismatch : Error {
  std::string enumerated;
  std::string formula;
  FormulaMismatch(const std::string& where, std::string got, std::string want)
      : Error("formula mismatch at " + where + ": enumerated " + got +
              ", formula " + want),
        enumerated(std::move(got)),
        formula(std::move(want)) {}
};

struct CanonicalMissing : Error {
  explicit CanonicalMissing(const std::string& what) : Error(what) {}
};

struct CanonicalDuplicated : Error {
  explicit CanonicalDuplicated(const std::string& what) : Error(what) {}
};

}  // namespace brauer
