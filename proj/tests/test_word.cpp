#include <random>

#include "doctest.h"
#include "support/oracle.hpp"
#include "vbraid/word.hpp"

using namespace vbraid;

namespace {

bool has_cancelling_fragment(const BraidWord& w) {
  const auto& l = w.letters();
  for (std::size_t k = 1; k < l.size(); ++k) {
    const auto& x = l[k - 1];
    const auto& y = l[k];
    if (x.index != y.index) continue;
    if (x.kind == LetterKind::Rho && y.kind == LetterKind::Rho) return true;
    if (x.kind == LetterKind::SigmaPositive && y.kind == LetterKind::SigmaNegative) return true;
    if (x.kind == LetterKind::SigmaNegative && y.kind == LetterKind::SigmaPositive) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("parse maps tokens to letters") {
  auto w = parse_word("s1 S2", 3);
  CHECK(w.strands() == 3);
  CHECK(w.letters() == std::vector<Letter>{Letter::sigma(1), Letter::sigma_inv(2)});

  CHECK(parse_word("s1^3", 2).letters() ==
        std::vector<Letter>{Letter::sigma(1), Letter::sigma(1), Letter::sigma(1)});
  CHECK(parse_word("s1^-2", 2).letters() ==
        std::vector<Letter>{Letter::sigma_inv(1), Letter::sigma_inv(1)});
  CHECK(parse_word("S1^-1", 2).letters() == std::vector<Letter>{Letter::sigma(1)});
  CHECK(parse_word("s1^0", 2).empty());
  CHECK(parse_word("r1^3", 2).letters() == std::vector<Letter>{Letter::rho(1)});
  CHECK(parse_word("r1^-4", 2).empty());
  CHECK(parse_word("r1^-1", 2).letters() == std::vector<Letter>{Letter::rho(1)});
  CHECK(parse_word("  \t", std::nullopt).empty());
}

TEST_CASE("parse infers the strand count") {
  CHECK(parse_word("").strands() == 2);
  CHECK(parse_word("s1").strands() == 2);
  CHECK(parse_word("s1 r4").strands() == 5);
}

TEST_CASE("parse reads the 20-letter word of the near-kernel example") {
  auto w = parse_word("s1 r2 s1 S2 s1 s2 S1 r1 s2 r1 s1 r2 S1 r2 S2 S1 s2 S1 r2 S1", 3);
  CHECK(w.size() == 20);
  CHECK(w.letters()[1] == Letter::rho(2));
  CHECK(w.letters()[19] == Letter::sigma_inv(1));
}

TEST_CASE("parse reports errors with token positions") {
  auto position_of = [](std::string_view text, std::optional<int> n) -> long {
    try {
      parse_word(text, n);
    } catch (const ParseError& e) {
      return static_cast<long>(e.token());
    }
    return -1;
  };
  CHECK(position_of("s1 x2", 3) == 1);
  CHECK(position_of("s1 s0", 3) == 1);
  CHECK(position_of("s1 s2 s3", 3) == 2);
  CHECK(position_of("s1^a", 3) == 0);
  CHECK(position_of("s1^1.5", 3) == 0);
  CHECK(position_of("s1^", 3) == 0);
  CHECK(position_of("s", 3) == 0);
  CHECK(position_of("sx1", 3) == 0);
  CHECK(position_of("s1 S2 r-1", std::nullopt) == 2);
  CHECK_THROWS_AS(parse_word("s1", 1), std::invalid_argument);
}

TEST_CASE("format is canonical") {
  CHECK(format_word(BraidWord(3, {Letter::sigma(1), Letter::sigma_inv(2)})) == "s1 S2");
  CHECK(format_word(BraidWord(2)) == "");
  CHECK(format_word(BraidWord(2, {Letter::rho(1), Letter::sigma_inv(1)})) == "r1 S1");
}

TEST_CASE("BraidWord rejects out-of-range indices") {
  CHECK_THROWS_AS(BraidWord(2, {Letter::sigma(2)}), std::invalid_argument);
  CHECK_THROWS_AS(BraidWord(3, {Letter::rho(0)}), std::invalid_argument);
  CHECK_THROWS_AS(BraidWord(1), std::invalid_argument);
  BraidWord w(3);
  CHECK_THROWS_AS(w.push_back(Letter::sigma(3)), std::invalid_argument);
}

TEST_CASE("free_reduce cancels only free pairs") {
  CHECK(free_reduce(parse_word("s1 S1", 2)).empty());
  CHECK(free_reduce(parse_word("r1 r1 s2", 3)) == parse_word("s2", 3));
  CHECK(free_reduce(parse_word("s1 r2 r2 S1", 3)).empty());
  // Relations other than free cancellation are left alone.
  auto braid = parse_word("s1 s2 s1 S2 S1 S2", 3);
  CHECK(free_reduce(braid) == braid);
  CHECK(free_reduce(parse_word("s1 r1 S1", 2)).size() == 3);
}

TEST_CASE("inverse reverses and inverts sigma letters") {
  CHECK(inverse(parse_word("s1 r1", 2)) == parse_word("r1 S1", 2));
  CHECK(inverse(BraidWord(2)).empty());
  CHECK(inverse(parse_word("s1 S2", 3)) == parse_word("s2 S1", 3));
}

TEST_CASE("random_reduced_word") {
  Rng rng(7);
  CHECK(random_reduced_word(2, 0, rng).empty());

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng r(seed);
    auto w = random_reduced_word(2, 3, r);
    CHECK(w.size() == 3);
    CHECK_FALSE(has_cancelling_fragment(w));
  }

  Rng a(99), b(99);
  CHECK(random_reduced_word(4, 40, a) == random_reduced_word(4, 40, b));
}

TEST_CASE("random_reduced_word uses every non-cancelling letter") {
  // After sigma_1 in VB_2 the next letter must be sigma_1 or rho_1, evenly.
  Rng rng(3);
  int counts[3] = {0, 0, 0};
  for (int k = 0; k < 30000; ++k) {
    auto w = random_reduced_word(2, 2, rng);
    if (w.letters()[0] != Letter::sigma(1)) continue;
    ++counts[static_cast<int>(w.letters()[1].kind)];
  }
  CHECK(counts[static_cast<int>(LetterKind::SigmaNegative)] == 0);
  const double ratio = static_cast<double>(counts[0]) / counts[2];
  CHECK(ratio == doctest::Approx(1.0).epsilon(0.1));
}

TEST_CASE("permutation image") {
  auto swap12 = permutation(parse_word("s1", 2));
  CHECK(swap12.images == std::vector<int>{2, 1});
  CHECK(permutation(parse_word("r1 r1", 2)).is_identity());
  CHECK(permutation(parse_word("s1 s2 s1", 3)).images == std::vector<int>{3, 2, 1});
  CHECK(permutation(parse_word("S1 r2 s1", 3)) == permutation(parse_word("r1 s2 r1", 3)));
  CHECK(format_permutation(swap12) == "2 1");
}

TEST_CASE("word properties on random words") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + trial % 5;
    auto w = oracle::random_word(n, trial % 40, true, rng);
    auto r = free_reduce(w);
    CHECK(free_reduce(r) == r);
    CHECK_FALSE(has_cancelling_fragment(r));
    CHECK(permutation(r) == permutation(w));
    CHECK(permutation(w.concat(inverse(w))).is_identity());
    CHECK(free_reduce(w.concat(inverse(w))).empty());
    CHECK(parse_word(format_word(w), n) == w);
  }
}
