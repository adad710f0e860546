#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vbraid/rng.hpp"

namespace vbraid {

enum class LetterKind : unsigned char { SigmaPositive, SigmaNegative, Rho };

// A generator sigma_i^{+1}, sigma_i^{-1} or rho_i, with 1 <= index <= n-1.
struct Letter {
  LetterKind kind = LetterKind::SigmaPositive;
  int index = 1;

  static constexpr Letter sigma(int i) { return {LetterKind::SigmaPositive, i}; }
  static constexpr Letter sigma_inv(int i) { return {LetterKind::SigmaNegative, i}; }
  static constexpr Letter rho(int i) { return {LetterKind::Rho, i}; }

  constexpr bool is_sigma() const { return kind != LetterKind::Rho; }
  constexpr Letter inverse() const {
    switch (kind) {
      case LetterKind::SigmaPositive: return sigma_inv(index);
      case LetterKind::SigmaNegative: return sigma(index);
      case LetterKind::Rho: break;
    }
    return *this;
  }

  friend constexpr bool operator==(const Letter&, const Letter&) = default;
};

// True when the adjacent pair (first, second) freely cancels.
constexpr bool cancels(const Letter& first, const Letter& second) {
  return second == first.inverse();
}

class BraidWord {
 public:
  // Throws std::invalid_argument if strands < 2 or a letter index is out of
  // [1, strands-1].
  explicit BraidWord(int strands, std::vector<Letter> letters = {});

  int strands() const { return strands_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  bool has_rho() const;

  void push_back(Letter l);
  BraidWord concat(const BraidWord& other) const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<Letter> letters_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t token, const std::string& what);
  // Zero-based position of the offending token.
  std::size_t token() const { return token_; }

 private:
  std::size_t token_;
};

// Grammar: token = ('s' | 'S' | 'r') index [ '^' signed-integer ], tokens
// separated by whitespace. Without `strands` the strand count is the largest
// index plus one, and at least 2.
BraidWord parse_word(std::string_view text, std::optional<int> strands = std::nullopt);

// One token per letter, space separated, no exponents.
std::string format_word(const BraidWord& w);
std::string format_letter(const Letter& l);

BraidWord free_reduce(const BraidWord& w);
BraidWord inverse(const BraidWord& w);

// Relators of VB_n (each equal to the identity) beyond free cancellation:
// braid and far-commutation relations among the sigma_i, the same among the
// rho_i, rho_i^2, and the mixed relations. Without rho only the B_n ones.
std::vector<BraidWord> defining_relators(int strands, bool with_rho = true);

// A word of exactly `length` letters; each letter is uniform over the
// generators that do not freely cancel the previous letter.
BraidWord random_reduced_word(int strands, std::size_t length, Rng& rng);

// One-line notation: images[k] is the strand (1-based) sitting at position k+1
// after the word, each letter swapping positions i and i+1.
struct Permutation {
  std::vector<int> images;

  static Permutation identity(int n);
  bool is_identity() const;
  friend bool operator==(const Permutation&, const Permutation&) = default;
};

Permutation permutation(const BraidWord& w);
std::string format_permutation(const Permutation& p);

}  // namespace vbraid
