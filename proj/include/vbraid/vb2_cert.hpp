#pragma once

// Machine-checkable form of the VB_2 faithfulness diagram: nine sign-pattern
// boxes in Z^4, the arrows between them with their closed-form image maps,
// and a certifier that traces reduced VB_2 words through the diagram.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vbraid/dynnikov.hpp"
#include "vbraid/rng.hpp"
#include "vbraid/word.hpp"

namespace vbraid::vb2 {

enum class Sign { Zero, Plus, Minus, PlusZero, MinusZero };

template <class T>
bool sign_contains(Sign s, const T& x) {
  switch (s) {
    case Sign::Zero: return x == 0;
    case Sign::Plus: return x > 0;
    case Sign::Minus: return x < 0;
    case Sign::PlusZero: return x >= 0;
    case Sign::MinusZero: return x <= 0;
  }
  return false;
}

std::string to_string(Sign s);

struct SignPattern {
  std::array<Sign, 4> symbols;

  bool matches(const Quad& q) const;
  std::string str() const;  // e.g. "(-,-,+0,+)"
};

enum class Box { B1, B2, B3, B4, B5, B6, B7, B8, B9 };

inline constexpr std::array<Box, 9> kAllBoxes = {Box::B1, Box::B2, Box::B3,
                                                 Box::B4, Box::B5, Box::B6,
                                                 Box::B7, Box::B8, Box::B9};

const SignPattern& pattern(Box b);
std::string to_string(Box b);

/// Every box whose pattern contains q. Patterns overlap, so this may hold
/// more than one box or none.
std::vector<Box> classify(const Quad& q);

using ClosedForm = Quad (*)(const Quad&);

struct Arrow {
  int case_number;  // 1..14 for sigma arrows, 0 for rho arrows
  Box source;
  LetterKind generator;
  Box target;
  ClosedForm closed_form;

  std::string label() const;  // "3.sigma^-1", "rho B2->B4"
};

/// The 14 numbered sigma^{+-1} arrows followed by the five rho arrows.
const std::vector<Arrow>& arrow_table();

/// The arrow leaving `source` with generator `g`, or nullptr.
const Arrow* find_arrow(Box source, LetterKind g);

BigInt l1_norm(const Quad& q);

struct ArrowReport {
  std::string label;
  std::int64_t samples = 0;
  std::int64_t passed = 0;
  std::int64_t closed_form_mismatches = 0;
  std::int64_t target_misses = 0;
  std::int64_t norm_failures = 0;
  std::int64_t even_sum_failures = 0;
  std::optional<Quad> counterexample;

  bool ok() const { return passed == samples && samples > 0; }
};

// Draws a quad from the region of `p`: zero where the symbol is 0, magnitude 1
// or uniform in [1, 10^6] elsewhere, and boundary zeros for +0 / -0.
Quad sample_region(const SignPattern& p, Rng& rng);

// Per sample: closed form equals the general action, the image lies in the
// target box, b+d is unchanged, and the L1 norm strictly increases (sigma
// arrows) or is preserved (rho arrows).
ArrowReport verify_arrow(const Arrow& arrow, std::int64_t samples, Rng& rng);

struct MissingSuccessor {
  Box box;
  LetterKind generator;
};

struct ClosureReport {
  std::vector<MissingSuccessor> missing;
  bool closed() const { return missing.empty(); }
};

// Every box reached by an arrow labelled g must have an outgoing arrow for
// every generator that does not freely cancel g; the start box needs all three.
ClosureReport verify_closure();

struct DiagramReport {
  std::vector<ArrowReport> arrows;
  ClosureReport closure;
  bool ok() const;
};

// All arrows (in parallel, arrow k seeded from derive_seed(seed, k)) plus the
// closure check.
DiagramReport verify_diagram(std::int64_t samples_per_arrow, std::uint64_t seed);

enum class CertStatus { Trivial, Nontrivial, TheoremViolation };
std::string to_string(CertStatus s);

struct Certificate {
  CertStatus status = CertStatus::Trivial;
  BraidWord reduced{2};
  Quad start;
  Quad image;
  std::vector<Box> path;       // start box then one box per letter
  std::vector<BigInt> norms;   // L1 norm of every vector along the path
  std::string message;
};

/// Traces the freely reduced word from `start` (default (0,2,0,1)) through the
/// diagram. Throws std::invalid_argument if the word is not on 2 strands or the
/// start is not of the form (0,x,0,y) with x != y positive.
Certificate certify_nontrivial(const BraidWord& w);
Certificate certify_nontrivial(const BraidWord& w, const Quad& start);

}  // namespace vbraid::vb2
