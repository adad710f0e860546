#include "vbraid/kernel_hunt.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "vbraid/rng.hpp"
#include "vbraid/word_problem.hpp"

namespace vbraid::hunt {

namespace {

// Substream tags.
constexpr std::uint64_t kWordStream = 1;
constexpr std::uint64_t kBatteryStream = 2;
constexpr std::uint64_t kInjectedBatteryStream = 3;

std::vector<std::int64_t> to_int64(const Coordinates& v) {
  std::vector<std::int64_t> out;
  for (const auto& x : v.entries()) {
    if (!x.fits_slong_p()) throw std::invalid_argument("base vector entry exceeds 64 bits");
    out.push_back(x.get_si());
  }
  return out;
}

struct Evaluator {
  const HuntConfig& config;
  std::vector<std::int64_t> base;

  // A candidate if the reduced word is nonempty and fixes the base probe.
  std::optional<Candidate> operator()(const BraidWord& word, Rng battery_rng) const {
    BraidWord reduced = free_reduce(word);
    if (reduced.empty() || !fixes(base, reduced)) return std::nullopt;
    Candidate c{std::move(reduced), 0, config.battery_size};
    std::uniform_int_distribution<std::int64_t> coeff(-config.coefficient_bound,
                                                      config.coefficient_bound);
    std::vector<std::int64_t> v(base.size());
    for (int j = 0; j < config.battery_size; ++j) {
      for (auto& x : v) x = coeff(battery_rng);
      if (!fixes(v, c.word)) ++c.moved;
    }
    // Random reduced words are sometimes relator products; rule those out.
    if (c.passes_battery()) c.provably_trivial = derives_identity(c.word);
    return c;
  }
};

using Indexed = std::pair<std::int64_t, Candidate>;

void finish(HuntReport& report, std::vector<Indexed> found) {
  std::sort(found.begin(), found.end(),
            [](const Indexed& x, const Indexed& y) { return x.first < y.first; });
  std::unordered_set<std::string> seen;
  for (auto& [index, cand] : found) {
    if (seen.insert(format_word(cand.word)).second) {
      report.base_fixers.push_back(std::move(cand));
    }
  }
}

// Global index: injected words first, then the random corpus.
std::optional<Candidate> evaluate_index(const Evaluator& eval, std::int64_t index) {
  const auto& cfg = eval.config;
  const auto injected = static_cast<std::int64_t>(cfg.injected.size());
  if (index < injected) {
    return eval(cfg.injected[static_cast<std::size_t>(index)],
                make_rng(cfg.seed, static_cast<std::uint64_t>(index), kInjectedBatteryStream));
  }
  const std::int64_t k = index - injected;
  return eval(corpus_word(cfg, k),
              make_rng(cfg.seed, static_cast<std::uint64_t>(k), kBatteryStream));
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

Coordinates HuntConfig::base_or_default() const {
  return base ? *base : base_vector(strands);
}

void HuntConfig::validate() const {
  if (strands < 2) throw std::invalid_argument("strands must be at least 2");
  if (min_length > max_length) throw std::invalid_argument("min_length exceeds max_length");
  if (word_count < 0) throw std::invalid_argument("word_count must be non-negative");
  if (battery_size < 1) throw std::invalid_argument("battery_size must be positive");
  if (coefficient_bound < 1) throw std::invalid_argument("coefficient_bound must be >= 1");
  if (workers < 0) throw std::invalid_argument("workers must be non-negative");
  if (base) {
    if (base->strands() != strands) {
      throw std::invalid_argument("base vector does not match strand count");
    }
    to_int64(*base);
  }
  for (const auto& w : injected) {
    if (w.strands() != strands) {
      throw std::invalid_argument("injected word does not match strand count");
    }
  }
}

std::vector<Candidate> HuntReport::potential_counterexamples() const {
  std::vector<Candidate> out;
  for (const auto& c : base_fixers) {
    if (c.passes_battery() && !c.provably_trivial) out.push_back(c);
  }
  return out;
}

BraidWord corpus_word(const HuntConfig& config, std::int64_t k) {
  auto rng = make_rng(config.seed, static_cast<std::uint64_t>(k), kWordStream);
  std::uniform_int_distribution<std::size_t> length(config.min_length, config.max_length);
  const std::size_t len = length(rng);
  return random_reduced_word(config.strands, len, rng);
}

HuntReport run_hunt_serial(const HuntConfig& config) {
  config.validate();
  const auto t0 = std::chrono::steady_clock::now();
  const Evaluator eval{config, to_int64(config.base_or_default())};
  const std::int64_t total = static_cast<std::int64_t>(config.injected.size()) + config.word_count;

  std::vector<Indexed> found;
  for (std::int64_t i = 0; i < total; ++i) {
    if (auto c = evaluate_index(eval, i)) found.emplace_back(i, std::move(*c));
  }
  HuntReport report;
  report.config = config;
  report.words_tested = total;
  report.workers_used = 1;
  finish(report, std::move(found));
  report.runtime_seconds = seconds_since(t0);
  return report;
}

HuntReport run_hunt(const HuntConfig& config) {
  config.validate();
  const auto t0 = std::chrono::steady_clock::now();
  const Evaluator eval{config, to_int64(config.base_or_default())};
  const std::int64_t total = static_cast<std::int64_t>(config.injected.size()) + config.word_count;

  int workers = 1;
#ifdef _OPENMP
  workers = config.workers > 0 ? config.workers : omp_get_max_threads();
#endif

  std::vector<Indexed> found;
#pragma omp parallel num_threads(workers)
  {
    std::vector<Indexed> local;
#pragma omp for schedule(dynamic, 1024) nowait
    for (std::int64_t i = 0; i < total; ++i) {
      if (auto c = evaluate_index(eval, i)) local.emplace_back(i, std::move(*c));
    }
#pragma omp critical(vbraid_hunt_merge)
    found.insert(found.end(), std::make_move_iterator(local.begin()),
                 std::make_move_iterator(local.end()));
  }

  HuntReport report;
  report.config = config;
  report.words_tested = total;
  report.workers_used = workers;
  finish(report, std::move(found));
  report.runtime_seconds = seconds_since(t0);
  return report;
}

double MovedFraction::standard_error() const {
  if (samples == 0) return 0.0;
  const double p = value();
  return std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
}

namespace {

bool sample_moved(const BraidWord& w, std::int64_t bound, std::uint64_t seed, std::int64_t k,
                  std::vector<std::int64_t>& v) {
  auto rng = make_rng(seed, static_cast<std::uint64_t>(k));
  std::uniform_int_distribution<std::int64_t> coeff(-bound, bound);
  for (auto& x : v) x = coeff(rng);
  return !fixes(v, w);
}

void check_fraction_args(std::int64_t samples, std::int64_t bound) {
  if (samples < 1) throw std::invalid_argument("samples must be positive");
  if (bound < 1) throw std::invalid_argument("bound must be positive");
}

}  // namespace

MovedFraction moved_fraction_serial(const BraidWord& w, std::int64_t samples, std::int64_t bound,
                                    std::uint64_t seed) {
  check_fraction_args(samples, bound);
  std::vector<std::int64_t> v(2 * static_cast<std::size_t>(w.strands()));
  MovedFraction r{0, samples};
  for (std::int64_t k = 0; k < samples; ++k) {
    if (sample_moved(w, bound, seed, k, v)) ++r.moved;
  }
  return r;
}

MovedFraction moved_fraction(const BraidWord& w, std::int64_t samples, std::int64_t bound,
                             std::uint64_t seed) {
  check_fraction_args(samples, bound);
  std::int64_t moved = 0;
#pragma omp parallel reduction(+ : moved)
  {
    std::vector<std::int64_t> v(2 * static_cast<std::size_t>(w.strands()));
#pragma omp for schedule(static)
    for (std::int64_t k = 0; k < samples; ++k) {
      if (sample_moved(w, bound, seed, k, v)) ++moved;
    }
  }
  return {moved, samples};
}

}  // namespace vbraid::hunt
