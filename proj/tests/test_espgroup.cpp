#include <doctest.h>

#include <random>
#include <vector>

#include "hexarep/espgroup.hpp"
#include "hexarep/reps.hpp"

using namespace hexarep;
using espgroup::GroupDescriptor;
using espgroup::GroupElement;

namespace {

// Test-side closure oracle, independent of generated_order: plain BFS over
// explicit multiplication.
std::vector<GroupElement> enumerate_subgroup(const GroupDescriptor& d,
                                             std::vector<GroupElement> gens) {
  std::vector<GroupElement> out{d.identity()};
  bool grew = true;
  while (grew) {
    grew = false;
    for (size_t i = 0; i < out.size(); ++i)
      for (const auto& g : gens) {
        const auto prod = espgroup::mul(d, out[i], g);
        bool seen = false;
        for (const auto& o : out)
          if (o == prod) seen = true;
        if (!seen) {
          out.push_back(prod);
          grew = true;
        }
      }
  }
  return out;
}

int involution_count(const GroupDescriptor& d) {
  int count = 0;
  for (std::uint64_t c = 0; c < d.order(); ++c) {
    const GroupElement g{static_cast<std::uint32_t>(c >> 1),
                         static_cast<std::uint8_t>(c & 1)};
    if (espgroup::is_involution(d, g)) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("d8 and q8 basics") {
  const auto d8 = espgroup::d8();
  CHECK(d8.order() == 8);
  const auto a = d8.generator(0), b = d8.generator(1);
  CHECK(espgroup::is_involution(d8, a));
  CHECK(espgroup::is_involution(d8, b));
  CHECK(espgroup::commutator(d8, a, b) == d8.lambda());
  // non-commuting pair differs by lambda
  const auto ab = espgroup::mul(d8, a, b);
  const auto ba = espgroup::mul(d8, b, a);
  CHECK(!(ab == ba));
  CHECK(espgroup::mul(d8, ab, d8.lambda()) == ba);

  const auto q8 = espgroup::q8();
  const auto i = q8.generator(0), j = q8.generator(1);
  const auto k = espgroup::mul(q8, i, j);
  CHECK(k == GroupElement{0b11, 0});
  CHECK(espgroup::mul(q8, j, k) == i);
  CHECK(espgroup::mul(q8, k, i) == j);
  CHECK(espgroup::square(q8, i) == q8.lambda());
  CHECK(espgroup::square(q8, j) == q8.lambda());
  CHECK(espgroup::square(q8, k) == q8.lambda());
  CHECK(espgroup::commutator(q8, i, j) == q8.lambda());
}

TEST_CASE("identity and inverse behave") {
  const auto d8 = espgroup::d8();
  for (std::uint64_t c = 0; c < 8; ++c) {
    const GroupElement g{static_cast<std::uint32_t>(c >> 1),
                         static_cast<std::uint8_t>(c & 1)};
    CHECK(espgroup::mul(d8, g, d8.identity()) == g);
    CHECK(espgroup::mul(d8, d8.identity(), g) == g);
    CHECK(espgroup::mul(d8, g, espgroup::inverse(d8, g)) == d8.identity());
    CHECK(espgroup::commutator(d8, g, g) == d8.identity());
  }
}

TEST_CASE("element orders divide 4 and order 4 occurs") {
  for (const auto& d : {espgroup::d8(), espgroup::q8(),
                        espgroup::central_product(espgroup::d8(),
                                                  espgroup::q8())}) {
    bool has4 = false;
    for (std::uint64_t c = 0; c < d.order(); ++c) {
      const GroupElement g{static_cast<std::uint32_t>(c >> 1),
                           static_cast<std::uint8_t>(c & 1)};
      const int ord = espgroup::element_order(d, g);
      CHECK((ord == 1 || ord == 2 || ord == 4));
      if (ord == 4) has4 = true;
    }
    CHECK(has4);
  }
}

TEST_CASE("central products assemble the right sizes") {
  const auto six_d8 = reps::rep81_descriptor();
  CHECK(six_d8.n() == 12);
  CHECK(six_d8.order() == 8192);

  auto n6 = espgroup::central_product(
      espgroup::central_product(espgroup::d8(), espgroup::d8()),
      espgroup::q8());
  CHECK(n6.n() == 6);
  CHECK(n6.order() == 128);
}

TEST_CASE("group signs") {
  const auto d8 = espgroup::d8();
  const auto q8 = espgroup::q8();
  CHECK(espgroup::group_sign(d8) == '+');
  CHECK(espgroup::group_sign(q8) == '-');
  CHECK(espgroup::group_sign(espgroup::central_product(d8, q8)) == '-');
  CHECK(espgroup::group_sign(espgroup::central_product(q8, q8)) == '+');
  // oracle: the +/- types differ in involution count, so q8 o q8 must match
  // d8 o d8 and differ from d8 o q8
  const int d8d8 = involution_count(espgroup::central_product(d8, d8));
  const int q8q8 = involution_count(espgroup::central_product(q8, q8));
  const int d8q8 = involution_count(espgroup::central_product(d8, q8));
  CHECK(d8d8 == q8q8);
  CHECK(d8d8 != d8q8);
  // the delta-table group is 2^{1+6}_-
  CHECK(espgroup::group_sign(espgroup::central_product(
            espgroup::central_product(d8, d8), q8)) == '-');
  // sign of a central product adds Arf invariants
  auto arf = [](const GroupDescriptor& d) {
    return espgroup::group_sign(d) == '+' ? 0 : 1;
  };
  for (const auto& a : {d8, q8})
    for (const auto& b : {d8, q8})
      CHECK(arf(espgroup::central_product(a, b)) == (arf(a) + arf(b)) % 2);
}

TEST_CASE("group_sign faults on a degenerate gram") {
  const GroupDescriptor degenerate(2, 0, {0, 0});
  CHECK_THROWS_AS(espgroup::group_sign(degenerate), Fault);
}

TEST_CASE("generated_order on full and partial generating sets") {
  const auto d = reps::rep81_descriptor();
  std::vector<GroupElement> gens;
  for (int i = 0; i < 12; ++i) gens.push_back(d.generator(i));
  const auto full = espgroup::generated_order(d, gens);
  CHECK(full.order == 8192);
  CHECK(full.contains_lambda);
  CHECK(full.cross_checked);

  // a single involution generates a C2
  const auto single = espgroup::generated_order(
      d, std::vector<GroupElement>{d.generator(0)});
  CHECK(single.order == 2);
  CHECK(!single.contains_lambda);

  // the first six generators span the elementary abelian M of order 2^6
  std::vector<GroupElement> mside(gens.begin(), gens.begin() + 6);
  const auto m = espgroup::generated_order(d, mside);
  CHECK(m.order == 64);
  CHECK(!m.contains_lambda);
}

TEST_CASE("generated_order agrees with a naive closure oracle") {
  const auto q8 = espgroup::q8();
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    std::vector<GroupElement> gens;
    const int k = 1 + static_cast<int>(rng() % 3);
    for (int g = 0; g < k; ++g)
      gens.push_back(GroupElement{static_cast<std::uint32_t>(rng() % 4),
                                  static_cast<std::uint8_t>(rng() % 2)});
    const auto fast = espgroup::generated_order(q8, gens);
    const auto slow = enumerate_subgroup(q8, gens);
    CHECK(fast.order == slow.size());
    bool has_lambda = false;
    for (const auto& e : slow)
      if (e == q8.lambda()) has_lambda = true;
    CHECK(fast.contains_lambda == has_lambda);
  }
}

TEST_CASE("verify_descriptor passes on the real groups") {
  CHECK(espgroup::verify_descriptor(espgroup::d8()).all_passed());
  CHECK(espgroup::verify_descriptor(espgroup::q8()).all_passed());
  const auto n18 = espgroup::central_product(
      reps::rep81_descriptor(),
      espgroup::central_product(
          espgroup::central_product(espgroup::d8(), espgroup::d8()),
          espgroup::q8()));
  CHECK(n18.n() == 18);
  CHECK(espgroup::verify_descriptor(n18).all_passed());
}

TEST_CASE("verify_descriptor flags an abelian (degenerate) presentation") {
  const GroupDescriptor degenerate(2, 0, {0, 0});
  const auto rep = espgroup::verify_descriptor(degenerate);
  CHECK(!rep.all_passed());
  const auto* center = rep.find("center_size_2");
  REQUIRE(center != nullptr);
  CHECK(!center->pass);
}

TEST_CASE("dimension mismatches fault") {
  const auto d8 = espgroup::d8();
  CHECK_THROWS_AS(espgroup::mul(d8, GroupElement{0b100, 0}, d8.identity()),
                  Fault);
  CHECK_THROWS_AS(
      espgroup::generated_order(d8,
                                std::vector<GroupElement>{{0b1000, 0}}),
      Fault);
}

TEST_CASE("descriptor constructor validates shape") {
  CHECK_THROWS_AS(GroupDescriptor(2, 0, {0b01, 0b10}), Fault);  // diagonal set
  CHECK_THROWS_AS(GroupDescriptor(2, 0, {0b10}), Fault);        // row count
  CHECK_THROWS_AS(GroupDescriptor(2, 0, {0b10, 0b10}), Fault);  // asymmetric
  CHECK_THROWS_AS(GroupDescriptor(2, 0b100, {0b10, 0b01}), Fault);
}
