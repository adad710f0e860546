#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vbraid/dynnikov.hpp"
#include "vbraid/word.hpp"

namespace vbraid::hunt {

struct HuntConfig {
  int strands = 3;
  std::size_t min_length = 1;
  std::size_t max_length = 30;
  std::int64_t word_count = 0;
  std::uint64_t seed = 0;
  int battery_size = 100;
  std::int64_t coefficient_bound = 100;
  // 0 lets OpenMP decide. Never affects the report contents.
  int workers = 0;
  // Probe for the first filter; defaults to (0,1,...,0,1).
  std::optional<Coordinates> base;
  // Extra words tested ahead of the random corpus.
  std::vector<BraidWord> injected;

  Coordinates base_or_default() const;
  // Throws std::invalid_argument on an inconsistent configuration.
  void validate() const;
};

// Number of battery vectors moved by a word that fixes the base probe.
struct Candidate {
  BraidWord word;  // freely reduced
  std::int64_t moved = 0;
  std::int64_t samples = 0;
  // Set only for battery passers: derives_identity() found a derivation.
  bool provably_trivial = false;

  double moved_fraction() const {
    return samples == 0 ? 0.0 : static_cast<double>(moved) / static_cast<double>(samples);
  }
  // Fixes the base probe and every battery vector.
  bool passes_battery() const { return moved == 0; }
};

struct HuntReport {
  HuntConfig config;
  std::int64_t words_tested = 0;
  std::vector<Candidate> base_fixers;  // ordered by first occurrence, deduplicated
  double runtime_seconds = 0.0;
  int workers_used = 1;

  // Battery passers not shown trivial by derives_identity().
  std::vector<Candidate> potential_counterexamples() const;
};

// Random word k of the corpus: length uniform in [min_length, max_length],
// drawn from derive_seed(config.seed, k, kWordStream).
BraidWord corpus_word(const HuntConfig& config, std::int64_t k);

// Parallel over word indices; results merged in index order.
HuntReport run_hunt(const HuntConfig& config);
// Single-threaded reference with identical output.
HuntReport run_hunt_serial(const HuntConfig& config);

struct MovedFraction {
  std::int64_t moved = 0;
  std::int64_t samples = 0;

  double value() const {
    return samples == 0 ? 0.0 : static_cast<double>(moved) / static_cast<double>(samples);
  }
  // Binomial standard error of value().
  double standard_error() const;
};

// Fraction of vectors with iid entries uniform in [-bound, bound] that the word
// moves. Sample k uses derive_seed(seed, k), so the parallel and serial
// versions agree exactly.
MovedFraction moved_fraction(const BraidWord& w, std::int64_t samples, std::int64_t bound,
                             std::uint64_t seed);
MovedFraction moved_fraction_serial(const BraidWord& w, std::int64_t samples,
                                    std::int64_t bound, std::uint64_t seed);

}  // namespace vbraid::hunt
