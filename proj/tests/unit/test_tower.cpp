#include <doctest.h>

#include "halfspin/norms.hpp"
#include "halfspin/random.hpp"

using namespace halfspin;

namespace {

TowerSpec q_i() { return TowerSpec(std::nullopt, Rational(-1)); }
TowerSpec q_sqrt2_i() { return TowerSpec(Rational(2), Rational(-1)); }

}  // namespace

TEST_SUITE_BEGIN("tower");

TEST_CASE("rational parsing and printing") {
  CHECK(rational_from_string("3/4") == Rational(3, 4));
  CHECK(rational_from_string("-7") == Rational(-7));
  CHECK(rational_from_string("6/4") == Rational(3, 2));
  CHECK(rational_to_string(Rational(-5, 3)) == "-5/3");
  CHECK(rational_to_string(Rational(4)) == "4");
  CHECK_THROWS_AS(rational_from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("x"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);

  Rational root;
  CHECK(rational_is_square(Rational(9, 4), &root));
  CHECK(root == Rational(3, 2));
  CHECK_FALSE(rational_is_square(Rational(2)));
  CHECK_FALSE(rational_is_square(Rational(-4)));
}

TEST_CASE("tower validation") {
  CHECK_THROWS_AS(TowerSpec(Rational(-2), Rational(-1)), std::invalid_argument);
  CHECK_THROWS_AS(TowerSpec(Rational(4), Rational(-1)), std::invalid_argument);
  CHECK_THROWS_AS(TowerSpec(std::nullopt, Rational(1)), std::invalid_argument);
  // 1 - sqrt(2) is negative under embedding 1 but positive under embedding 2.
  CHECK_THROWS_AS(TowerSpec(Rational(2), Rational(1), Rational(-1)), std::invalid_argument);
  // -3 + sqrt(2) is totally negative.
  CHECK_NOTHROW(TowerSpec(Rational(2), Rational(-3), Rational(1)));
  CHECK_THROWS_AS(TowerSpec(std::nullopt, Rational(-1), Rational(1)), std::invalid_argument);
}

TEST_CASE("conjugation") {
  for (const TowerSpec t : {q_i(), q_sqrt2_i()}) {
    CHECK(conj(t.sqrt_m2()) == -t.sqrt_m2());
    CHECK(conj(t.from_rational(Rational(3, 2))) == t.from_rational(Rational(3, 2)));
    // (1 + 2 sqrt(m2)) * conj(same) = 1 - 4 m2
    const FieldElement x = t.one() + t.from_int(2) * t.sqrt_m2();
    CHECK(x * conj(x) == t.one() - t.from_int(4) * t.m2());

    Rng rng(11);
    for (int i = 0; i < 10000; ++i) {
      const FieldElement y = rand_element(rng, t);
      CHECK(conj(conj(y)) == y);
    }
  }
}

TEST_CASE("norm to base") {
  const TowerSpec t = q_sqrt2_i();
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const FieldElement a = rand_base_element(rng, t);
    CHECK(norm_to_base(a) == a * a);  // conjugation fixes E0
  }
  CHECK(norm_to_base(t.sqrt_m2()) == -t.m2());
  for (int i = 0; i < 200; ++i) {
    const FieldElement x = rand_base_element(rng, t);
    const FieldElement y = rand_base_element(rng, t);
    const FieldElement z = x + y * t.sqrt_m2();
    CHECK(norm_to_base(z) == x * x - t.m2() * y * y);
    CHECK(norm_to_base(z).in_base());
  }
  // multiplicativity
  for (int i = 0; i < 500; ++i) {
    const FieldElement x = rand_element(rng, t);
    const FieldElement y = rand_element(rng, t);
    CHECK(norm_to_base(x * y) == norm_to_base(x) * norm_to_base(y));
  }
}

TEST_CASE("field arithmetic") {
  Rng rng(17);
  for (const TowerSpec t : {q_i(), q_sqrt2_i()}) {
    for (int i = 0; i < 300; ++i) {
      const FieldElement x = rand_element(rng, t);
      const FieldElement y = rand_element(rng, t);
      const FieldElement z = rand_element(rng, t);
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x * y == y * x);
      CHECK((x * y) * z == x * (y * z));
    }
    for (int i = 0; i < 300; ++i) {
      const FieldElement x = rand_nonzero_element(rng, t);
      CHECK(x * x.inverse() == t.one());
      CHECK(x / x == t.one());
    }
    CHECK_THROWS_AS(t.zero().inverse(), std::domain_error);
  }
  // sqrt(m1) * sqrt(m1) = m1, sqrt(m2)^2 = m2
  const TowerSpec t = q_sqrt2_i();
  CHECK(t.sqrt_m1() * t.sqrt_m1() == t.from_int(2));
  CHECK(t.sqrt_m2() * t.sqrt_m2() == t.m2());
  CHECK((t.sqrt_m1() * t.sqrt_m2()) * (t.sqrt_m1() * t.sqrt_m2()) == t.from_int(-2));

  CHECK_THROWS_AS(q_i().one() + q_sqrt2_i().one(), std::invalid_argument);
}

TEST_CASE("embedding signs") {
  const TowerSpec t = q_sqrt2_i();
  const FieldElement r2 = t.sqrt_m1();
  CHECK(embed_sign(r2, 1) == 1);
  CHECK(embed_sign(r2, 2) == -1);
  CHECK(embed_sign(t.from_int(3) - t.from_int(2) * r2, 1) == 1);  // 9 > 8
  CHECK(embed_sign(t.from_int(3) - t.from_int(2) * r2, 2) == 1);
  CHECK(embed_sign(t.one() - r2, 1) == -1);  // 1 < 2
  CHECK(embed_sign(t.one() - r2, 2) == 1);
  CHECK(embed_sign(t.zero(), 1) == 0);
  CHECK(embed_sign(t.zero(), 2) == 0);
  CHECK_THROWS_AS(embed_sign(t.sqrt_m2(), 1), std::invalid_argument);
  CHECK_THROWS_AS(embed_sign(t.one(), 3), std::invalid_argument);

  Rng rng(23);
  for (int i = 0; i < 500; ++i) {
    const FieldElement x = rand_base_element(rng, t);
    const FieldElement y = rand_base_element(rng, t);
    for (int e = 1; e <= 2; ++e) {
      CHECK(embed_sign(x * x, e) >= 0);
      CHECK(embed_sign(x * y, e) == embed_sign(x, e) * embed_sign(y, e));
    }
  }
}

TEST_CASE("base square roots") {
  const TowerSpec t = q_sqrt2_i();
  const FieldElement r2 = t.sqrt_m1();

  auto root_of_two = base_sqrt(t.from_int(2));
  REQUIRE(root_of_two.has_value());
  CHECK(*root_of_two * *root_of_two == t.from_int(2));

  auto root = base_sqrt(t.from_int(3) + t.from_int(2) * r2);  // (1 + sqrt 2)^2
  REQUIRE(root.has_value());
  CHECK(*root * *root == t.from_int(3) + t.from_int(2) * r2);

  CHECK(base_sqrt(t.from_rational(Rational(9, 4))).has_value());
  CHECK_FALSE(base_sqrt(t.from_int(3)).has_value());
  CHECK_FALSE(base_sqrt(t.from_int(-1)).has_value());
  CHECK_FALSE(base_sqrt(r2 + t.one()).has_value());

  Rng rng(31);
  for (int i = 0; i < 300; ++i) {
    const FieldElement x = rand_base_element(rng, t);
    auto r = base_sqrt(x * x);
    REQUIRE(r.has_value());
    CHECK(*r * *r == x * x);
  }
}

TEST_CASE("norm membership over Q(i)") {
  const TowerSpec t = q_i();
  // two-squares criterion: 3 has the prime 3 = 3 mod 4 to an odd power
  CHECK(is_norm(t.from_int(3)).status == NormStatus::NotNorm);
  CHECK(is_norm(t.from_int(-5)).status == NormStatus::NotNorm);

  for (long v : {5L, 9L, 13L, 45L, 50L, 325L}) {
    const NormVerdict nv = is_norm(t.from_int(v));
    REQUIRE(nv.status == NormStatus::Norm);
    REQUIRE(nv.witness.has_value());
    CHECK(norm_to_base(*nv.witness) == t.from_int(v));
  }
  const NormVerdict frac = is_norm(t.from_rational(Rational(45, 4)));
  REQUIRE(frac.status == NormStatus::Norm);
  CHECK(norm_to_base(*frac.witness) == t.from_rational(Rational(45, 4)));

  CHECK_THROWS_AS(is_norm(t.zero()), std::invalid_argument);
  CHECK_THROWS_AS(is_norm(t.sqrt_m2()), std::invalid_argument);
}

TEST_CASE("norm membership over real quadratic towers") {
  const TowerSpec t = q_sqrt2_i();
  // delta^2 is a norm with witness delta
  const NormVerdict sq = is_norm(t.from_int(2));
  REQUIRE(sq.status == NormStatus::Norm);
  CHECK(*sq.witness == t.sqrt_m1());
  // totally-positive test: -sqrt(2) is negative under embedding 1
  CHECK(is_norm(-t.sqrt_m1()).status == NormStatus::NotNorm);
  // 3 - 2 sqrt(2) is positive at both embeddings and is (1-sqrt2)^2
  const NormVerdict tp = is_norm(t.from_int(3) - t.from_int(2) * t.sqrt_m1());
  CHECK(tp.status == NormStatus::Norm);

  // golden-ratio witness: 3 = ((1+sqrt5)/2)^2 + ((1-sqrt5)/2)^2 over Q(sqrt5)
  const TowerSpec t5(Rational(5), Rational(-1));
  const NormVerdict three = is_norm(t5.from_int(3));
  REQUIRE(three.status == NormStatus::Norm);
  CHECK(norm_to_base(*three.witness) == t5.from_int(3));

  // 11 is totally positive but not a norm (odd valuation at the split prime
  // 11 = 3 mod 4); the bounded search cannot decide and must stay honest.
  CHECK(is_norm(t5.from_int(11)).status == NormStatus::Unknown);
}

TEST_CASE("unfactorable input stays unknown") {
  const TowerSpec t = q_i();
  // product of two distinct Mersenne primes, beyond both the trial-division
  // bound and the exact-primality range
  const mpz_class m61("2305843009213693951");
  const mpz_class m89("618970019642690137449562111");
  NormSearchLimits limits;
  limits.trial_division_bound = 1000;
  const NormVerdict nv = is_norm(t.from_rational(Rational(m61 * m89)), limits);
  CHECK(nv.status == NormStatus::Unknown);
}

TEST_SUITE_END();
