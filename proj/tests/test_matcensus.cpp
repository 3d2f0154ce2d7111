#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "mpr/errors.hpp"
#include "mpr/matcensus.hpp"
#include "mpr/ntheory.hpp"
#include "mpr/permcensus.hpp"
#include "mpr/similarity.hpp"

using namespace mpr;

namespace {

GroupSpec psl(unsigned d, unsigned q) { return make_group_spec(GroupFamily::PSL, d, q); }
GroupSpec pgl(unsigned d, unsigned q) { return make_group_spec(GroupFamily::PGL, d, q); }

std::vector<unsigned> prime_divisors(i128 n) {
  std::vector<unsigned> out;
  for (const auto& pp : factorize(n).factors) out.push_back(static_cast<unsigned>(pp.prime));
  return out;
}

}  // namespace

TEST_CASE("field construction") {
  const auto f2 = FiniteField::build(2, 1);
  CHECK(f2->size() == 2);
  CHECK(f2->modulus() == std::vector<unsigned>{0, 1});
  const auto f9 = FiniteField::build(3, 2);
  CHECK(f9->size() == 9);
  CHECK(f9->modulus_str() == "x^2 + 1");
  const auto f8 = FiniteField::build(2, 3);
  CHECK(f8->modulus_str() == "x^3 + x + 1");
  CHECK_THROWS_AS(FiniteField::build(2, 8), RangeError);
  CHECK_THROWS_AS(FiniteField::build(4, 1), DomainError);
}

TEST_CASE("field axioms") {
  for (const auto& [p, a] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {3, 2}, {2, 3}, {5, 2}, {2, 4}, {3, 3}, {7, 1}}) {
    const auto F = FiniteField::build(p, a);
    const unsigned q = F->size();
    CAPTURE(q);
    for (unsigned x = 0; x < q; ++x) {
      const auto fx = static_cast<FieldElement>(x);
      CHECK(F->add(fx, F->neg(fx)) == 0);
      CHECK(F->pow(fx, q) == fx);
      if (x != 0) CHECK(F->mul(fx, F->inv(fx)) == 1);
      for (unsigned y = 0; y < q; ++y) {
        const auto fy = static_cast<FieldElement>(y);
        CHECK(F->frobenius(F->mul(fx, fy)) == F->mul(F->frobenius(fx), F->frobenius(fy)));
        CHECK(F->frobenius(F->add(fx, fy)) == F->add(F->frobenius(fx), F->frobenius(fy)));
      }
    }
    // The multiplicative group is cyclic.
    bool has_generator = false;
    for (unsigned x = 1; x < q; ++x) has_generator = has_generator || F->order(static_cast<FieldElement>(x)) == q - 1;
    CHECK(has_generator);
  }
}

TEST_CASE("group orders and enumeration") {
  CHECK(enumerate_group(psl(2, 5)).size() == 60);
  CHECK(enumerate_group(psl(2, 9)).size() == 360);
  CHECK(enumerate_group(psl(3, 2)).size() == 168);
  CHECK(enumerate_group(pgl(2, 7)).size() == 336);
  CHECK(enumerate_group(psl(3, 4)).size() == 20160);
  CHECK(group_order(GroupFamily::PGL, 3, 9) == 42456960);
  const auto elems = enumerate_group(psl(2, 8));
  CHECK(std::is_sorted(elems.begin(), elems.end()));
  CHECK(std::adjacent_find(elems.begin(), elems.end()) == elems.end());
  CHECK_THROWS_WITH_AS(enumerate_group(psl(2, 64)), doctest::Contains("262080"), RangeError);
  CHECK_THROWS_AS(enumerate_group(pgl(3, 5)), RangeError);
}

TEST_CASE("group spec parsing") {
  const auto a = parse_group_spec("psl(2,9)");
  CHECK(a.name() == "PSL(2,9)");
  CHECK(a.order == 360);
  CHECK(parse_group_spec(" PGL( 3 , 4 ) ").order == 60480);
  CHECK_THROWS_AS(parse_group_spec("PSL(2,6)"), DomainError);
  CHECK_THROWS_AS(parse_group_spec("PSU(3,3)"), DomainError);
  CHECK_THROWS_AS(parse_group_spec("PSL(5,2)"), DomainError);
  CHECK_THROWS_AS(parse_group_spec("PSL(2,9"), DomainError);
}

TEST_CASE("element orders") {
  const MatrixRing r7(FiniteField::build(7, 1), 2);
  CHECK(element_order(r7, r7.identity()) == 1);
  CHECK(element_order(r7, r7.from_rows({{1, 1}, {0, 1}})) == 7);
  const auto x = psl2_torus_element(11, 5);
  const MatrixRing r11(FiniteField::build(11, 1), 2);
  CHECK(element_order(r11, x) == 5);
  CHECK(x == r11.canonical(r11.from_rows({{3, 0}, {0, 4}})));  // 3 has order 5 mod 11
  CHECK_THROWS_AS(psl2_torus_element(11, 3), DomainError);
  CHECK_THROWS_AS(psl2_torus_element(3, 2), DomainError);
}

TEST_CASE("automorphism orbits") {
  const MatrixRing r7(FiniteField::build(7, 1), 2);
  CHECK(aut_orbit(psl(2, 7), r7.identity()).size() == 1);
  CHECK(aut_orbit(psl(2, 7), r7.from_rows({{1, 1}, {0, 1}})).size() == 48);
  // Order-3 elements of PSL_2(9) = Alt(6): both Sym(6) types fuse into one orbit of 80.
  const auto spec = psl(2, 9);
  AutCensus engine(spec, Acting::FullAut);
  std::size_t order3 = 0;
  for (std::uint32_t i = 0; i < engine.group().size(); ++i) order3 += engine.group().order_of(i) == 3;
  CHECK(order3 == 80);
  for (std::uint32_t i = 0; i < engine.group().size(); ++i) {
    if (engine.group().order_of(i) == 3) {
      CHECK(engine.orbit(engine.group()[i]).size() == 80);
      break;
    }
  }
}

TEST_CASE("census examples") {
  CHECK(census(psl(2, 7), 7).mpr_p == 1);
  CHECK(census(psl(2, 9), 2).mpr_p == 1);
  const auto row = census(psl(2, 11), 5);
  // Two Aut-classes of order-5 elements, 132 each, both with mpr* = 2.
  REQUIRE(row.mpr_p == 2);
  for (const auto& rec : row.classes) {
    CHECK(rec.class_size == 132);
    CHECK(rec.n_over_c_index == 2);
    CHECK(rec.mpr_star == 2);
    CHECK(rec.generator_orbit_count == 2);
  }
  // The graph automorphism fuses the two order-7 classes of PSL_3(2).
  const auto l32 = census(psl(3, 2), 7);
  REQUIRE(l32.mpr_p == 1);
  CHECK(l32.classes[0].class_size == 48);
  CHECK(l32.classes[0].mpr_star == 1);
  CHECK(census(pgl(3, 2), 7).mpr_p == 1);
}

TEST_CASE("census partitions the order-p elements and matches phi(o(x)) / |N:C|") {
  for (const auto& spec : {psl(2, 4), psl(2, 5), psl(2, 7), psl(2, 8), psl(2, 9), psl(2, 11), psl(2, 13),
                           psl(2, 16), psl(3, 2), psl(3, 3)}) {
    AutCensus engine(spec, Acting::FullAut);
    for (const unsigned p : prime_divisors(spec.order)) {
      const auto row = engine.census(p);
      CAPTURE(row.group);
      CAPTURE(p);
      i128 direct = 0;
      for (std::uint32_t i = 0; i < engine.group().size(); ++i) direct += engine.group().order_of(i) == p;
      CHECK(row.order_p_elements == direct);
      CHECK(row.mpr_p <= row.m_p);
      for (const auto& rec : row.classes) {
        CHECK(rec.lemma1_consistent());
        CHECK(rec.class_size * rec.centralizer_count == static_cast<i128>(engine.acting_size()));
      }
    }
  }
}

TEST_CASE("normalizer/centralizer index") {
  const MatrixRing r7(FiniteField::build(7, 1), 2);
  // The unipotent element: the Borel subgroup normalizes, so the index is q - 1.
  CHECK(normalizer_centralizer_index(pgl(2, 7), Acting::PGL, r7.from_rows({{1, 1}, {0, 1}})) == 6);
  CHECK(normalizer_centralizer_index(pgl(2, 11), Acting::PGL, psl2_torus_element(11, 5)) == 2);
  CHECK(normalizer_centralizer_index(psl(2, 7), Acting::FullAut, r7.identity()) == 1);
  AutCensus engine(psl(2, 13), Acting::FullAut);
  const auto nc = engine.normalizer_centralizer(psl2_torus_element(13, 3));
  CHECK(nc.normalizer == 24);
  CHECK(nc.centralizer == 12);
}

TEST_CASE("dihedral normalizer of the split torus") {
  for (const auto& [p, s] : std::vector<std::pair<unsigned, unsigned>>{{11, 5}, {13, 3}, {19, 3}, {29, 7}, {31, 5}}) {
    const auto r = verify_dihedral_structure(p, s);
    CAPTURE(r.detail);
    CHECK(r.holds);
    CHECK(r.lhs == Rational((s - 1) / 2));
  }
  CHECK(verify_dihedral_structure(11, 5).lhs == Rational(2));
  CHECK(verify_dihedral_structure(13, 3).lhs == Rational(1));
}

TEST_CASE("isomorphism cross-checks") {
  AutCensus a4(psl(2, 4), Acting::FullAut);
  AutCensus a5(psl(2, 5), Acting::FullAut);
  for (const unsigned p : {2u, 3u, 5u}) {
    const auto x = a4.census(p);
    const auto y = a5.census(p);
    const auto z = brute_force_alt_census(5, p);
    CHECK(x.mpr_p == z.mpr_p);
    CHECK(y.mpr_p == z.mpr_p);
    CHECK(x.m_p == z.m_p);
    CHECK(y.m_p == z.m_p);
  }
  const auto realization = psl2_9_alt6_realization();
  for (const unsigned p : {2u, 3u, 5u}) {
    const auto oracle = alt6_full_aut_census(p);
    const auto [mpr, m] = realization(p);
    CHECK(mpr == oracle.mpr_p);
    CHECK(m == oracle.m_p);
    const auto row = census(psl(2, 9), p);
    REQUIRE(row.classes.size() == oracle.classes.size());
    for (std::size_t i = 0; i < row.classes.size(); ++i) CHECK(row.classes[i].class_size == oracle.classes[i].class_size);
  }
  CHECK(alt_mpr_p(6, 2, realization) == 1);
}

TEST_CASE("census does not depend on worker count") {
  const auto a = census(psl(2, 13), 7, {1, kDefaultCeiling});
  const auto b = census(psl(2, 13), 7, {8, kDefaultCeiling});
  REQUIRE(a.classes.size() == b.classes.size());
  CHECK(a.m_p == b.m_p);
  for (std::size_t i = 0; i < a.classes.size(); ++i) {
    CHECK(a.classes[i].representative == b.classes[i].representative);
    CHECK(a.classes[i].class_size == b.classes[i].class_size);
    CHECK(a.classes[i].normalizer_count == b.classes[i].normalizer_count);
  }
}

TEST_CASE("similarity invariants") {
  for (const unsigned q : {2u, 3u, 4u, 5u}) {
    const MatrixRing r2(pgl(2, q).field, 2);
    CHECK(rational_canonical_forms(r2).size() == q * q - 1);
    const MatrixRing r3(pgl(3, q).field, 3);
    CHECK(rational_canonical_forms(r3).size() == q * q * q - q);
  }
  // Jordan types (2,2) and (2,1,1) share characteristic and minimal polynomials.
  const MatrixRing r4(FiniteField::build(3, 1), 4);
  const auto j22 = r4.from_rows({{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}});
  const auto j211 = r4.from_rows({{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  CHECK_FALSE(gl_similar(r4, j22, j211));
  const auto g = r4.from_rows({{1, 2, 0, 1}, {0, 1, 1, 0}, {2, 0, 1, 1}, {1, 1, 1, 2}});
  REQUIRE(r4.det(g) != 0);
  CHECK(gl_similar(r4, j22, r4.mul(r4.mul(r4.inverse(g), j22), g)));
}

TEST_CASE("PGL class routes agree") {
  std::vector<std::pair<unsigned, unsigned>> targets;
  for (const unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) targets.emplace_back(2, q);
  for (const unsigned q : {2u, 3u, 4u}) targets.emplace_back(3, q);
  for (const auto& [d, q] : targets) {
    CAPTURE(d);
    CAPTURE(q);
    const auto brute = pgl_prime_order_classes(d, q, IndexRoute::BruteForce);
    const auto sim = pgl_prime_order_classes(d, q, IndexRoute::Similarity);
    REQUIRE(brute.size() == sim.size());
    std::multiset<std::pair<unsigned, unsigned>> a, b;
    for (const auto& c : brute) a.insert({c.order, c.index});
    for (const auto& c : sim) b.insert({c.order, c.index});
    CHECK(a == b);
    const MatrixRing ring(pgl(d, q).field, d);
    for (const auto& c : brute) CHECK(pgl_index_by_similarity(ring, c.representative) == c.index);
  }
}

TEST_CASE("PSL_4(2) and Alt(8)") {
  AutCensus engine(psl(4, 2), Acting::FullAut);
  for (const unsigned p : {2u, 3u, 5u, 7u}) {
    const auto row = engine.census(p);
    const auto alt = closed_form_alt_census(8, p);
    CAPTURE(p);
    CHECK(row.mpr_p == alt.mpr_p);
    CHECK(row.m_p == alt.m_p);
  }
}
