#include <doctest.h>

#include "oracles.hpp"
#include "sjack/tableaux.hpp"

using namespace sjack;

namespace {

const AlphaRational A = AlphaRational::alpha();
const AlphaRational ONE_PLUS_A(AlphaPoly::linear(1, 1));

// Every horizontal strip o / i with |o| <= max_size.
std::vector<std::pair<Partition, Partition>> all_horizontal_strips(int max_size) {
  std::vector<std::pair<Partition, Partition>> out;
  for (const auto& o : partitions_up_to(max_size))
    for (const auto& i : horizontal_strip_inners(o)) out.emplace_back(o, i);
  return out;
}

}  // namespace

TEST_CASE("reverse tableau enumeration: examples") {
  CHECK(enumerate_rssyt(Partition{1}, 3).size() == 3);
  CHECK(enumerate_rssyt(Partition{1, 1}, 2).size() == 1);
  CHECK(enumerate_rssyt(Partition{1, 1}, 1).empty());
  CHECK(enumerate_rssyt(Partition{}, 0).size() == 1);
  const auto two = enumerate_rssyt(Partition{2}, 2);
  REQUIRE(two.size() == 3);
  for (const auto& t : two) {
    CHECK(t.shape == Partition{2});
    CHECK(t.max_entry == 2);
    REQUIRE(t.chain.size() == 3);
    CHECK(t.chain.front() == Partition{2});
    CHECK(t.chain.back().empty());
  }
  // deterministic order: S_2 ascending
  CHECK(two[0].chain[1].empty());
  CHECK(two[1].chain[1] == Partition{1});
  CHECK(two[2].chain[1] == Partition{2});
}

TEST_CASE("reverse tableau chains are valid and enumeration stops early") {
  for (const auto& mu : partitions_up_to(5))
    for (int n = 0; n <= 4; ++n)
      for (const auto& t : enumerate_rssyt(mu, n)) {
        for (std::size_t k = 0; k + 1 < t.chain.size(); ++k) {
          CHECK(is_horizontal_strip({t.chain[k], t.chain[k + 1]}));
          CHECK(t.chain[k + 1].length() <= n - static_cast<int>(k) - 1);
        }
      }
  int seen = 0;
  const bool finished = for_each_rssyt(Partition{2, 1}, 4, [&](const ReverseTableau&) { return ++seen < 3; });
  CHECK_FALSE(finished);
  CHECK(seen == 3);
}

TEST_CASE("reverse tableau counts match the hook-content formula") {
  for (const auto& mu : partitions_up_to(5))
    for (int n = 0; n <= 5; ++n) {
      const BigInt expected = mu.length() > n ? BigInt(0) : oracle::ssyt_count(mu, n);
      CHECK(BigInt(enumerate_rssyt(mu, n).size()) == expected);
    }
}

TEST_CASE("standard chains") {
  CHECK(enumerate_syt({Partition{2}, Partition{1}}).size() == 1);
  CHECK(enumerate_syt({Partition{2, 1}, Partition{2, 1}}).size() == 1);
  CHECK(enumerate_syt({Partition{2, 1}, Partition{2, 1}}).front().chain == ShapeChain{Partition{2, 1}});
  CHECK(enumerate_syt({Partition{2, 1}, Partition{}}).size() == 2);
  CHECK_THROWS_AS(enumerate_syt({Partition{1}, Partition{2}}), std::invalid_argument);
  for (const auto& lam : partitions_up_to(7)) {
    const auto chains = enumerate_syt({lam, Partition{}});
    CHECK(BigInt(chains.size()) == oracle::syt_count(lam));
    for (const auto& c : chains)
      for (std::size_t k = 0; k + 1 < c.chain.size(); ++k) CHECK(c.chain[k + 1].size() == c.chain[k].size() + 1);
  }
}

TEST_CASE("psi examples") {
  CHECK(psi_strip(Partition{1}, Partition{}) == AlphaRational(1));
  CHECK(psi_strip(Partition{2}, Partition{1}) == AlphaRational(2) / ONE_PLUS_A);
  CHECK(psi_strip(Partition{2, 1}, Partition{2, 1}) == AlphaRational(1));
  CHECK_THROWS_AS(psi_strip(Partition{1, 1}, Partition{}), std::invalid_argument);
  CHECK_THROWS_AS(psi_strip(Partition{1}, Partition{2}), std::invalid_argument);

  CHECK(psi_prime_strip(Partition{2}, Partition{1}) == AlphaRational(1));
  CHECK(psi_prime_strip(Partition{1, 1}, Partition{1}) == AlphaRational(2) * A / ONE_PLUS_A);
  CHECK(psi_prime_strip(Partition{1}, Partition{1}) == AlphaRational(1));
  CHECK_THROWS_AS(psi_prime_strip(Partition{2}, Partition{}), std::invalid_argument);

  ReverseTableau t{Partition{2}, 2, {Partition{2}, Partition{1}, Partition{}}};
  CHECK(psi_tableau(t) == AlphaRational(2) / ONE_PLUS_A);
  ReverseTableau single{Partition{2, 1}, 2, {Partition{2, 1}, Partition{2, 1}, Partition{}}};
  CHECK_THROWS(psi_tableau(single));  // (2,1)/empty is not a horizontal strip
  ReverseTableau flat{Partition{3}, 1, {Partition{3}, Partition{}}};
  CHECK(psi_tableau(flat) == psi_strip(Partition{3}, Partition{}));
}

TEST_CASE("psi and psi' are 1 at alpha = 1 and positive for alpha > 0") {
  oracle::RationalSource src(21);
  std::vector<BigRat> samples;
  for (int k = 0; k < 20; ++k) samples.push_back(src.positive());
  for (const auto& [o, i] : all_horizontal_strips(6)) {
    const AlphaRational p = psi_strip(o, i);
    CHECK(p.eval_at(1) == 1);
    for (const auto& q : samples) CHECK(sgn(p.eval_at(q)) > 0);
    const AlphaRational pp = psi_prime_strip(conjugate(o), conjugate(i));
    CHECK(pp.eval_at(1) == 1);
    for (const auto& q : samples) CHECK(sgn(pp.eval_at(q)) > 0);
  }
  for (const auto& mu : partitions_up_to(4))
    for (const auto& t : enumerate_rssyt(mu, 3)) CHECK(psi_tableau(t).eval_at(1) == 1);
  for (const auto& c : enumerate_syt({Partition{3, 2}, Partition{}})) CHECK(psi_prime_tableau(c).eval_at(1) == 1);
}

TEST_CASE("psi' is psi of the conjugate strip at the reciprocal parameter") {
  oracle::RationalSource src(22);
  for (const auto& [o, i] : all_horizontal_strips(6)) {
    const Partition co = conjugate(o), ci = conjugate(i);
    const BigRat q = src.nonzero(6);
    try {
      CHECK(psi_prime_strip(co, ci).eval_at(q) == psi_strip(o, i).eval_at(1 / q));
    } catch (const PoleError&) {
    }
  }
}
