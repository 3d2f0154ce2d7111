#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "mpr/errors.hpp"
#include "mpr/ntheory.hpp"
#include "mpr/permcensus.hpp"

using namespace mpr;

namespace {

CycleType ct(std::vector<unsigned> parts) { return CycleType{std::move(parts)}; }

std::vector<unsigned> primes_up_to(unsigned m) {
  std::vector<unsigned> out;
  for (unsigned p = 2; p <= m; ++p) {
    if (is_prime(p)) out.push_back(p);
  }
  return out;
}

const Alt6Realization kAlt6Oracle = [](unsigned p) {
  const auto row = alt6_full_aut_census(p);
  return std::make_pair(row.mpr_p, row.m_p);
};

}  // namespace

TEST_CASE("permutation basics") {
  const Permutation x = Permutation::from_cycle_type(ct({3, 2, 1}));
  CHECK(x.str() == "(0 1 2)(3 4)");
  CHECK(x.order() == 6);
  CHECK_FALSE(x.is_even());
  CHECK(x * x.inverse() == Permutation::identity(6));
  CHECK(x.pow(6) == Permutation::identity(6));
  CHECK(x.pow(2).cycle_type() == ct({3, 1, 1, 1}));
  const Permutation sigma({5, 4, 3, 2, 1, 0});
  CHECK(x.conjugate_by(sigma) == sigma.inverse() * x * sigma);
  CHECK(Permutation::identity(5).str() == "()");
  CHECK_THROWS_AS(Permutation({0, 0, 1}), DomainError);
}

TEST_CASE("order_p_cycle_types examples") {
  CHECK(order_p_cycle_types(5, 2) == std::vector<CycleType>{ct({2, 2, 1})});
  CHECK(order_p_cycle_types(9, 2) ==
        std::vector<CycleType>{ct({2, 2, 1, 1, 1, 1, 1}), ct({2, 2, 2, 2, 1})});
  CHECK(order_p_cycle_types(6, 3) == std::vector<CycleType>{ct({3, 1, 1, 1}), ct({3, 3})});
  CHECK_THROWS_AS(order_p_cycle_types(4, 2), DomainError);
  CHECK_THROWS_AS(order_p_cycle_types(7, 4), DomainError);
}

TEST_CASE("order_p_cycle_types emits only even types") {
  for (unsigned m = 5; m <= 40; ++m) {
    for (const unsigned p : primes_up_to(m)) {
      for (const auto& t : order_p_cycle_types(m, p)) {
        CHECK(t.degree() == m);
        CHECK(t.order() == p);
        CHECK(Permutation::from_cycle_type(t).is_even());
        if (p == 2) CHECK(t.count(2) % 2 == 0);
      }
    }
  }
}

TEST_CASE("alt_mpr_p examples") {
  CHECK(alt_mpr_p(6, 2, kAlt6Oracle) == 1);
  CHECK(alt_mpr_p(8, 2) == 2);
  CHECK(alt_mpr_p(7, 3) == 2);
  CHECK(alt_mpr_p(7, 11) == 0);
  CHECK_THROWS_WITH_AS(alt_mpr_p(6, 2), doctest::Contains("requires matrix realization"), DomainError);
}

TEST_CASE("involution classes number floor(m/4)") {
  for (unsigned m = 5; m <= 40; ++m) {
    if (m == 6) continue;
    CHECK(alt_mpr_p(m, 2) == m / 4);
  }
}

TEST_CASE("brute force examples") {
  CHECK(brute_force_alt_census(5, 5).mpr_p == 1);
  CHECK(brute_force_alt_census(7, 7).mpr_p == 1);
  const auto row = brute_force_alt_census(8, 2);
  CHECK(row.mpr_p == 2);
  CHECK(row.source == CensusSource::BruteForce);
  CHECK_THROWS_AS(brute_force_alt_census(6, 2), RangeError);
  CHECK_THROWS_AS(brute_force_alt_census(9, 2), RangeError);
}

TEST_CASE("brute force agrees with the closed form") {
  for (const unsigned m : {5u, 7u, 8u}) {
    for (const unsigned p : primes_up_to(m)) {
      const auto brute = brute_force_alt_census(m, p);
      const auto closed = closed_form_alt_census(m, p);
      CAPTURE(m);
      CAPTURE(p);
      CHECK(brute.mpr_p == closed.mpr_p);
      CHECK(brute.m_p == closed.m_p);
      CHECK(brute.mpr_p <= brute.m_p);
      CHECK(brute.class_cycle_types == closed.class_cycle_types);
      REQUIRE(brute.classes.size() == closed.classes.size());
      for (std::size_t i = 0; i < brute.classes.size(); ++i) {
        const auto& b = brute.classes[i];
        CHECK(b.class_size == closed.classes[i].class_size);
        CHECK(b.representative == closed.classes[i].representative);
        // Both sides of the mpr* formula, and the alternating-group value 1.
        CHECK(euler_phi(p) / b.n_over_c_index == b.generator_orbit_count);
        CHECK(euler_phi(p) % b.n_over_c_index == 0);
        CHECK(b.mpr_star == 1);
        CHECK(b.generator_orbit_count == 1);
        CHECK(mpr_star_alt(m, p, b.cycle_type) == 1);
      }
    }
  }
}

TEST_CASE("brute force output does not depend on worker count") {
  const auto a = brute_force_alt_census(7, 3, 1);
  const auto b = brute_force_alt_census(7, 3, 4);
  CHECK(a.mpr_p == b.mpr_p);
  CHECK(a.m_p == b.m_p);
  REQUIRE(a.classes.size() == b.classes.size());
  for (std::size_t i = 0; i < a.classes.size(); ++i) {
    CHECK(a.classes[i].representative == b.classes[i].representative);
    CHECK(a.classes[i].class_size == b.classes[i].class_size);
    CHECK(a.classes[i].n_over_c_index == b.classes[i].n_over_c_index);
  }
}

TEST_CASE("closed-form class sizes") {
  CHECK(sym_class_size(ct({2, 2, 1})) == 15);
  CHECK(sym_class_size(ct({5})) == 24);
  CHECK(sym_class_size(ct({3, 3, 1, 1})) == 1120);
  // 39!! for a fixed-point-free involution of degree 40.
  i128 double_factorial = 1;
  for (i128 k = 39; k > 1; k -= 2) double_factorial *= k;
  CHECK(sym_class_size(CycleType{std::vector<unsigned>(20, 2)}) == double_factorial);
}

TEST_CASE("p-power cycle types") {
  // Alt(8), p = 2: (2,2), (2,2,2,2), (4,2), (4,4).
  const auto t = p_power_cycle_types(8, 2);
  CHECK(t.size() == 4);
  CHECK(p_power_cycle_types(9, 3).size() == 4);  // (3), (3,3), (3,3,3), (9)
}

TEST_CASE("mpr_star_alt examples") {
  CHECK(mpr_star_alt(5, 2, ct({2, 2, 1})) == 1);
  CHECK(mpr_star_alt(7, 3, ct({3, 3, 1})) == 1);
  CHECK(mpr_star_alt(8, 7, ct({7, 1})) == 1);
  const Permutation x = Permutation::from_cycle_type(ct({7, 1}));
  for (unsigned k = 1; k < 7; ++k) CHECK(x.pow(k).cycle_type() == ct({7, 1}));
  CHECK_THROWS_AS(mpr_star_alt(8, 2, ct({2, 1, 1, 1, 1, 1, 1})), DomainError);
}

TEST_CASE("Sym(6) outer automorphism") {
  const auto sym6 = sym_elements(6);
  const auto images = sym6_outer_automorphism_images();
  REQUIRE(images.size() == 720);
  std::mt19937 gen(3);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto i = gen() % 720, j = gen() % 720;
    const auto prod = sym6[i] * sym6[j];
    const auto k = static_cast<std::size_t>(std::find(sym6.begin(), sym6.end(), prod) - sym6.begin());
    CHECK(images[k] == images[i] * images[j]);
  }
  // Outer: a transposition goes to a triple transposition, and 3-cycles go to (3,3).
  const auto t_index = static_cast<std::size_t>(
      std::find(sym6.begin(), sym6.end(), Permutation({1, 0, 2, 3, 4, 5})) - sym6.begin());
  CHECK(images[t_index].cycle_type() == ct({2, 2, 2}));
  const auto c_index = static_cast<std::size_t>(
      std::find(sym6.begin(), sym6.end(), Permutation({1, 2, 0, 3, 4, 5})) - sym6.begin());
  CHECK(images[c_index].cycle_type() == ct({3, 3}));
}

TEST_CASE("Aut(Alt(6)) census by permutations") {
  const auto two = alt6_full_aut_census(2);
  CHECK(two.mpr_p == 1);
  CHECK(two.m_p == 2);
  CHECK(two.classes[0].class_size == 45);
  const auto three = alt6_full_aut_census(3);
  CHECK(three.mpr_p == 1);
  CHECK(three.classes[0].class_size == 80);
  const auto five = alt6_full_aut_census(5);
  CHECK(five.mpr_p == 1);
  CHECK(five.classes[0].class_size == 144);
  for (const unsigned p : {2u, 3u, 5u}) {
    for (const auto& rec : alt6_full_aut_census(p).classes) {
      CHECK(euler_phi(p) / rec.n_over_c_index == rec.generator_orbit_count);
    }
  }
}
