#include <random>

#include "doctest.h"
#include "support/oracle.hpp"
#include "vbraid/word_problem.hpp"

using namespace vbraid;

namespace {

const char* kNearKernel = "s1 r2 s1 S2 s1 s2 S1 r1 s2 r1 s1 r2 S1 r2 S2 S1 s2 S1 r2 S1";
const char* kBurauBlind = "s1^2 r1 S1 r1 S1 r1 s1^2 r1 S1 r1 S1 r1";

}  // namespace

TEST_CASE("classical braid equality") {
  auto v = are_equal_bn(parse_word("s1 s2 s1", 3), parse_word("s2 s1 s2", 3));
  CHECK(v.status == Verdict::Equal);

  auto a = parse_word("s1", 2), b = parse_word("S1", 2);
  auto d = are_equal_bn(a, b);
  REQUIRE(d.status == Verdict::Distinct);
  REQUIRE(d.vector_witness);
  CHECK(format_coordinates(d.vector_witness->image1) == "1,0,0,2");
  CHECK(format_coordinates(d.vector_witness->image2) == "-1,0,0,2");
  CHECK(witness_holds(d, a, b));

  CHECK(are_equal_bn(BraidWord(2), parse_word("s1 S1", 2)).status == Verdict::Equal);
  CHECK_THROWS_AS(are_equal_bn(parse_word("r1", 2), BraidWord(2)), std::invalid_argument);
  CHECK_THROWS_AS(are_equal_bn(BraidWord(3), BraidWord(2)), std::invalid_argument);
}

TEST_CASE("VB_2 equality") {
  auto m = parse_word(kBurauBlind, 2);
  auto d = are_equal_vb2(m, BraidWord(2));
  CHECK(d.status == Verdict::Distinct);
  CHECK(witness_holds(d, m, BraidWord(2)));

  CHECK(are_equal_vb2(parse_word("r1 r1", 2), BraidWord(2)).status == Verdict::Equal);

  // (0,2,0,1) . s1 r1 = (0,3,2,0) while (0,2,0,1) . r1 s1 = (1,0,0,3).
  auto x = are_equal_vb2(parse_word("s1 r1", 2), parse_word("r1 s1", 2));
  REQUIRE(x.status == Verdict::Distinct);
  CHECK(format_coordinates(x.vector_witness->image1) == "0,3,2,0");
  CHECK(format_coordinates(x.vector_witness->image2) == "1,0,0,3");

  CHECK_THROWS_AS(are_equal_vb2(BraidWord(3), BraidWord(3)), std::invalid_argument);
  CHECK_THROWS_AS(are_equal_vb2(BraidWord(2), BraidWord(2), base_vector(2)),
                  std::invalid_argument);
  CHECK(are_equal_vb2(m, BraidWord(2), parse_coordinates("0,5,0,3")).status ==
        Verdict::Distinct);
}

TEST_CASE("VB_n distinguisher") {
  auto w1 = parse_word("r1 s2 s1", 3), w2 = parse_word("s2 s1 r2", 3);
  auto d = distinguish_vbn(w1, w2, 10, 1);
  REQUIRE(d.status == Verdict::Distinct);
  REQUIRE(d.vector_witness);
  CHECK(format_coordinates(d.vector_witness->probe) == "0,1,0,1,0,1");
  CHECK(format_coordinates(d.vector_witness->image1) == "2,0,0,1,0,2");
  CHECK(format_coordinates(d.vector_witness->image2) == "2,0,0,2,0,1");

  auto beta = parse_word(kNearKernel, 3);
  // r1 r2 has the same permutation and also fixes the base vector, so only the
  // battery can separate it from beta.
  auto rr = parse_word("r1 r2", 3);
  CHECK(permutation(beta) == permutation(rr));
  auto e = distinguish_vbn(beta, rr, kDefaultBattery, 42);
  REQUIRE(e.status == Verdict::Distinct);
  REQUIRE(e.vector_witness);
  CHECK(e.vector_witness->probe != base_vector(3));
  CHECK(witness_holds(e, beta, rr));

  CHECK(distinguish_vbn(beta, beta).status == Verdict::Equal);
  CHECK(distinguish_vbn(parse_word("s1 r2 r2", 3), parse_word("s1", 3)).status ==
        Verdict::Equal);

  auto p = distinguish_vbn(parse_word("s1", 3), parse_word("s2", 3));
  REQUIRE(p.status == Verdict::Distinct);
  CHECK(p.permutation_witness);
  CHECK(witness_holds(p, parse_word("s1", 3), parse_word("s2", 3)));

  // Braid relation: sound, so never Distinct; not letter-identical, so Unknown.
  auto u = distinguish_vbn(parse_word("s1 s2 s1", 3), parse_word("s2 s1 s2", 3), 200, 3);
  CHECK(u.status == Verdict::Unknown);

  CHECK(distinguish_vbn(parse_word("s1 r1", 2), parse_word("r1 s1", 2)).status ==
        Verdict::Distinct);
  CHECK_THROWS_AS(distinguish_vbn(BraidWord(3), BraidWord(4)), std::invalid_argument);
}

TEST_CASE("relator insertion never yields Distinct") {
  std::mt19937_64 rng(17);
  for (int n = 3; n <= 5; ++n) {
    const auto brels = oracle::braid_relators(n);
    const auto vrels = oracle::virtual_relators(n);
    for (int k = 0; k < 60; ++k) {
      auto w = oracle::random_word(n, 12, false, rng);
      auto w2 = oracle::insert_relator(oracle::insert_relator(w, brels, rng), brels, rng);
      CHECK(are_equal_bn(w, w2).status == Verdict::Equal);

      auto vw = oracle::random_word(n, 12, true, rng);
      auto vw2 = oracle::insert_relator(oracle::insert_relator(vw, vrels, rng), vrels, rng);
      CHECK(distinguish_vbn(vw, vw2, 50, static_cast<std::uint64_t>(k)).status !=
            Verdict::Distinct);
    }
  }
  const auto rels2 = oracle::virtual_relators(2);
  for (int k = 0; k < 100; ++k) {
    auto w = oracle::random_word(2, 15, true, rng);
    auto w2 = oracle::insert_relator(w, rels2, rng);
    CHECK(are_equal_vb2(w, w2).status == Verdict::Equal);
  }
}

TEST_CASE("derives_identity") {
  CHECK(derives_identity(BraidWord(3)));
  CHECK(derives_identity(parse_word("s1 S1 r2 r2", 3)));
  CHECK(derives_identity(parse_word("S2 S1 s2 s1 s2 S1", 3)));
  CHECK(derives_identity(parse_word("r2 r1 r2 r1 r2 r1", 3)));
  CHECK(derives_identity(parse_word("r1 S2 S2 r2 r1 r2 r1 s1 s1 r2", 3)));
  CHECK(derives_identity(parse_word("S1 S2 s1 s2 s1 s1 s2 s2 S1 S2 S1 S1", 3)));
  CHECK(derives_identity(parse_word("s1 r3 S1 r3 r1 s3 r1 S3", 4)));

  // Never claimed for elements that move some vector.
  CHECK_FALSE(derives_identity(parse_word("s1", 3)));
  CHECK_FALSE(derives_identity(parse_word("r1 s2 s1 r2 S1 S2", 3)));
  CHECK_FALSE(derives_identity(parse_word(kNearKernel, 3), 2000));

  // Relator insertions into a random word w, followed by w^-1.
  std::mt19937_64 rng(31);
  for (int n = 3; n <= 4; ++n) {
    const auto rels = oracle::virtual_relators(n);
    for (int k = 0; k < 100; ++k) {
      auto w = oracle::random_word(n, 4, true, rng);
      auto v = oracle::insert_relator(w, rels, rng);
      CHECK(derives_identity(v.concat(inverse(w))));
    }
  }
}
