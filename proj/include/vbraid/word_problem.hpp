#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "vbraid/dynnikov.hpp"
#include "vbraid/word.hpp"

namespace vbraid {

enum class Verdict { Equal, Distinct, Unknown };

std::string to_string(Verdict v);

// A vector moved differently by the two words.
struct VectorWitness {
  Coordinates probe;
  Coordinates image1;
  Coordinates image2;
};

struct EqualityVerdict {
  Verdict status = Verdict::Unknown;
  // Human-readable reason; always set.
  std::string reason;
  // Present on Distinct verdicts decided by coordinates.
  std::optional<VectorWitness> vector_witness;
  // Present on Distinct verdicts decided by the permutation images.
  std::optional<std::pair<Permutation, Permutation>> permutation_witness;
};

// Re-evaluates a Distinct verdict's witness from scratch.
bool witness_holds(const EqualityVerdict& v, const BraidWord& w1, const BraidWord& w2);

// Complete for B_n: the base vector (0,1,...,0,1) is a faithful probe.
// Throws std::invalid_argument if either word contains rho or strand counts differ.
EqualityVerdict are_equal_bn(const BraidWord& w1, const BraidWord& w2);

// Complete for VB_2 using the start vector (0,x,0,y), x != y positive.
// Throws std::invalid_argument unless both words are on 2 strands.
EqualityVerdict are_equal_vb2(const BraidWord& w1, const BraidWord& w2);
EqualityVerdict are_equal_vb2(const BraidWord& w1, const BraidWord& w2,
                              const Coordinates& start);

inline constexpr int kDefaultBattery = 1000;
inline constexpr std::int64_t kBatteryBound = 100;

// Sound but incomplete for n >= 3: Equal only for letter-identical reduced
// words, Distinct with a witness, Unknown otherwise. Delegates to
// are_equal_vb2 when n == 2. Battery vectors have entries uniform in
// [-100, 100]; vector k is drawn from the substream derive_seed(seed, k).
EqualityVerdict distinguish_vbn(const BraidWord& w1, const BraidWord& w2,
                                int battery = kDefaultBattery, std::uint64_t seed = 0);

inline constexpr std::size_t kDerivationBudget = 20000;

// Best-first search for a derivation of the identity from the defining
// relators: conjugation, free cancellation, and replacing a piece of a relator
// by the inverse of its complement whenever that does not lengthen the word.
// True is a proof of triviality; false only means that none was found among
// `max_states` cyclic words.
bool derives_identity(const BraidWord& w, std::size_t max_states = kDerivationBudget);

}  // namespace vbraid
