#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vbraid/word.hpp"

namespace vbraid {

using BigInt = mpz_class;

/// x^+ = max(0, x).
template <class T>
T pos_part(const T& x) {
  return x > 0 ? T(x) : T(0);
}

/// x^- = min(x, 0).
template <class T>
T neg_part(const T& x) {
  return x < 0 ? T(x) : T(0);
}

template <class T>
struct BasicQuad {
  T a{}, b{}, c{}, d{};
  friend bool operator==(const BasicQuad&, const BasicQuad&) = default;
};

using Quad = BasicQuad<BigInt>;

namespace kernel {

// The piecewise-linear maps on Z^4. Written once over the integer type so the
// exact (BigInt) and fast (int64) paths evaluate the same expressions.

template <class T>
BasicQuad<T> sigma(const T& a, const T& b, const T& c, const T& d) {
  const T e = a - neg_part(b) - c + pos_part(d);
  const T ep = pos_part(e);
  return {a + pos_part(b) + pos_part(T(pos_part(d) - e)), d - ep,
          c + neg_part(d) + neg_part(T(neg_part(b) + e)), b + ep};
}

template <class T>
BasicQuad<T> sigma_inv(const T& a, const T& b, const T& c, const T& d) {
  const T f = a + neg_part(b) - c - pos_part(d);
  const T fm = neg_part(f);
  return {a - pos_part(b) - pos_part(T(pos_part(d) + f)), d + fm,
          c - neg_part(d) - neg_part(T(neg_part(b) - f)), b - fm};
}

}  // namespace kernel

Quad act_quad_sigma(const Quad& q);
Quad act_quad_sigma_inv(const Quad& q);
Quad act_quad_rho(const Quad& q);
Quad act_quad(const Quad& q, LetterKind kind);

/// Dynnikov coordinates (a_1, b_1, ..., a_n, b_n) in Z^{2n}.
class Coordinates {
 public:
  // Throws std::invalid_argument unless entries.size() == 2 * strands and
  // strands >= 2.
  Coordinates(int strands, std::vector<BigInt> entries);
  static Coordinates from_int64(std::span<const std::int64_t> entries);

  int strands() const { return strands_; }
  const std::vector<BigInt>& entries() const { return entries_; }
  const BigInt& a(int k) const { return entries_[2 * static_cast<std::size_t>(k - 1)]; }
  const BigInt& b(int k) const { return entries_[2 * static_cast<std::size_t>(k - 1) + 1]; }

  // The quadruple (a_i, b_i, a_{i+1}, b_{i+1}).
  Quad quad(int i) const;
  void set_quad(int i, const Quad& q);

  friend bool operator==(const Coordinates&, const Coordinates&) = default;

 private:
  int strands_;
  std::vector<BigInt> entries_;
};

/// (0,1) repeated `strands` times.
Coordinates base_vector(int strands);

// Throw std::invalid_argument on an index or strand-count mismatch.
Coordinates act_generator(const Coordinates& v, const Letter& g);
Coordinates act_word(const Coordinates& v, const BraidWord& w);

/// b_1 + ... + b_n; preserved by every generator.
BigInt even_sum(const Coordinates& v);

// Comma-separated decimal entries, e.g. "0,1,0,1".
std::string format_coordinates(const Coordinates& v);
Coordinates parse_coordinates(std::string_view csv);

// Fast path over machine words. A generator is applied in int64 only when its
// four inputs are bounded by kFastLimit in magnitude; every intermediate of the
// kernels is then below 8 * kFastLimit < 2^63, so no overflow is possible and
// the result equals the exact one.
inline constexpr std::int64_t kFastLimit = std::int64_t{1} << 59;

// Returns false (leaving v unchanged) when the magnitude guard fails.
bool act_generator_fast(std::span<std::int64_t> v, const Letter& g);
// Returns false when some step fails the guard; v then holds the partial result.
bool act_word_fast(std::span<std::int64_t> v, const BraidWord& w);

// Whether the word maps v to itself, using the fast path with exact fallback.
bool fixes(std::span<const std::int64_t> v, const BraidWord& w);

}  // namespace vbraid
