#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "schurkit/schur.hpp"
#include "schurkit/semisimplicity.hpp"

namespace schurkit {
namespace {

Multipartition MP(std::vector<Partition> components) { return Multipartition(std::move(components)); }

Specialization Q(std::vector<mpq_class> params) { return Specialization(Field::rationals(), params); }

bool contains(const std::vector<Multipartition>& list, const Multipartition& lambda) {
  return std::find(list.begin(), list.end(), lambda) != list.end();
}

/// (n) in slot s of an otherwise empty m-multipartition.
Multipartition row_in_slot(int m, int n, int s) {
  std::vector<Partition> parts(static_cast<std::size_t>(m));
  parts[static_cast<std::size_t>(s - 1)] = Partition{n};
  return MP(parts);
}

TEST(IsSemisimple, Examples) {
  EXPECT_TRUE(is_semisimple(1, 3, Q({0})));
  EXPECT_FALSE(is_semisimple(2, 1, Q({0, 0})));
  EXPECT_FALSE(is_semisimple(2, 2, Q({1, 0})));
  EXPECT_TRUE(is_semisimple(2, 2, Q({mpq_class(1, 2), 0})));
  EXPECT_FALSE(is_semisimple(1, 3, Specialization(Field::prime(3), {0})));
  EXPECT_TRUE(is_semisimple(1, 3, Specialization(Field::prime(5), {0})));
}

TEST(VanishingSchurElements, Examples) {
  EXPECT_EQ(vanishing_schur_elements(2, 1, Q({4, 4})),
            (std::vector<Multipartition>{MP({Partition{1}, Partition{}}), MP({Partition{}, Partition{1}})}));
  EXPECT_TRUE(vanishing_schur_elements(2, 1, Q({5, 0})).empty());
  EXPECT_TRUE(vanishing_schur_elements(2, 1, Q({1, 0})).empty());
}

TEST(CrossCheck, Examples) {
  const SemisimplicityReport a = cross_check_criterion(2, 2, Q({1, 0}));
  EXPECT_TRUE(a.p_value.is_zero());
  EXPECT_FALSE(a.semisimple);
  ASSERT_TRUE(a.vanishing);
  EXPECT_TRUE(contains(*a.vanishing, MP({Partition{}, Partition{2}})));
  EXPECT_FALSE(contains(*a.vanishing, MP({Partition{2}, Partition{}})));
  EXPECT_EQ(a.agreement, std::optional<bool>(true));

  // q1 - q2 = -1 is the mirror image: (2) sits in the first slot
  const SemisimplicityReport mirror = cross_check_criterion(2, 2, Q({0, 1}));
  EXPECT_TRUE(contains(*mirror.vanishing, MP({Partition{2}, Partition{}})));
  EXPECT_EQ(mirror.agreement, std::optional<bool>(true));

  for (const std::uint64_t p : {2U, 3U, 5U}) {
    const SemisimplicityReport b =
        cross_check_criterion(1, static_cast<int>(p), Specialization(Field::prime(p), {0}));
    EXPECT_TRUE(b.factorial_vanishes);
    EXPECT_FALSE(b.semisimple);
    ASSERT_TRUE(b.vanishing);
    EXPECT_TRUE(contains(*b.vanishing, MP({Partition{static_cast<int>(p)}})));
    EXPECT_EQ(b.agreement, std::optional<bool>(true));
  }

  const SemisimplicityReport c = cross_check_criterion(2, 1, Q({mpq_class(7, 3), mpq_class(-2, 5)}));
  EXPECT_TRUE(c.semisimple);
  EXPECT_FALSE(c.p_value.is_zero());
  EXPECT_TRUE(c.vanishing->empty());
  EXPECT_EQ(c.agreement, std::optional<bool>(true));
}

TEST(CrossCheck, WithoutScan) {
  const SemisimplicityReport r = cross_check_criterion(2, 2, Q({1, 0}), false);
  EXPECT_FALSE(r.vanishing);
  EXPECT_FALSE(r.agreement);
  EXPECT_FALSE(r.semisimple);
}

TEST(CrossCheck, PValueMatchesEvaluation) {
  const Specialization theta(Field::prime(101), {3, 50, 77});
  const SemisimplicityReport r = cross_check_criterion(3, 3, theta);
  EXPECT_EQ(r.p_value, fr_eval(p_invariant(3, 3), theta));
  EXPECT_EQ(r.field, Field::prime(101));
}

TEST(CrossCheck, SeededRandomAgreement) {
  for (const Field field : {Field::rationals(), Field::prime(7), Field::prime(101)}) {
    std::mt19937_64 rng(2024);
    for (int m = 1; m <= 3; ++m)
      for (int n = 1; n <= 3; ++n) {
        int non_semisimple = 0;
        for (int trial = 0; trial < 30; ++trial) {
          const Specialization theta = random_specialization(m, n, field, rng);
          const SemisimplicityReport r = cross_check_criterion(m, n, theta);
          EXPECT_EQ(r.agreement, std::optional<bool>(true)) << field.tag() << " m=" << m << " n=" << n;
          if (!r.semisimple) ++non_semisimple;
        }
        if (m >= 2) EXPECT_GT(non_semisimple, 0) << "box too wide to hit collisions";
      }
  }
}

TEST(ProofWitnesses, FactorialCase) {
  const auto w = proof_witnesses(3, 5, Specialization(Field::prime(5), {1, 2, 3}));
  EXPECT_TRUE(contains(w, MP({Partition{5}, Partition{}, Partition{}})));
}

TEST(ProofWitnesses, NonNegativeShift) {
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k < n; ++k) {
      // theta(k + q1 - q3) = 0 with the other differences generic
      const Specialization theta = Q({mpq_class(-k), mpq_class(1, 3), 0});
      const auto w = proof_witnesses(3, n, theta);
      const Multipartition witness = row_in_slot(3, n, 1);
      EXPECT_TRUE(contains(w, witness));
      const auto vanishing = vanishing_schur_elements(3, n, theta);
      EXPECT_TRUE(contains(vanishing, witness)) << n << " " << k;
      EXPECT_FALSE(is_semisimple(3, n, theta));
    }
}

TEST(ProofWitnesses, NegativeShift) {
  for (int n = 2; n <= 4; ++n)
    for (int k = -n + 1; k < 0; ++k) {
      // theta(k + q2 - q3) = 0
      const Specialization theta = Q({mpq_class(1, 3), mpq_class(-k), 0});
      const Multipartition witness = row_in_slot(3, n, 3);
      EXPECT_TRUE(contains(proof_witnesses(3, n, theta), witness));
      EXPECT_TRUE(contains(vanishing_schur_elements(3, n, theta), witness)) << n << " " << k;
      EXPECT_FALSE(is_semisimple(3, n, theta));
    }
}

TEST(ProofWitnesses, SemisimpleHasNone) {
  EXPECT_TRUE(proof_witnesses(2, 3, Q({mpq_class(1, 2), 0})).empty());
}

TEST(RandomSpecialization, StaysInBoxAndIsSeeded) {
  std::mt19937_64 a(77);
  std::mt19937_64 b(77);
  for (int trial = 0; trial < 200; ++trial) {
    const Specialization s = random_specialization(3, 4, Field::rationals(), a);
    const Specialization t = random_specialization(3, 4, Field::rationals(), b);
    for (int k = 1; k <= 3; ++k) {
      EXPECT_EQ(s.param(k), t.param(k));
      EXPECT_LE(abs(s.param(k).value()), 4);
    }
  }
  std::mt19937_64 c(1);
  const Specialization f = random_specialization(2, 3, Field::prime(7), c);
  EXPECT_EQ(f.field(), Field::prime(7));
  EXPECT_LT(f.param(1).value(), 7);
}

}  // namespace
}  // namespace schurkit
