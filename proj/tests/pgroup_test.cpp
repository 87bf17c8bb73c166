#include <gtest/gtest.h>

#include "pgc/enumerate.hpp"
#include "pgc/pgroup.hpp"
#include "test_util.hpp"

namespace pgc {
namespace {

const PrimeField F2(2), F3(3);

Presentation pres_for(Scalar p) {
  const PrimeField field(p);
  return build_presentation(build_default_f(field, 3), p);
}

std::vector<std::uint32_t> comm_of(const Vector& v) { return std::vector<std::uint32_t>(v.begin(), v.end()); }

GroupElement word(const Presentation& pres, std::initializer_list<std::pair<std::size_t, int>> letters) {
  auto e = identity_element(pres);
  for (auto [i, k] : letters) e = multiply(e, power(generator(pres, i), k, pres), pres);
  return e;
}

TEST(Presentation, Examples) {
  const auto p3 = pres_for(3);
  EXPECT_EQ(p3.q(), 3u);
  EXPECT_EQ(p3.power_table().row_vector(0), (Vector{1, 0, 0, 1, 0, 0}));
  EXPECT_FALSE(p3.commutator_power_relations_explicit());
  EXPECT_EQ(p3.order(), 59049u);

  const auto p2 = pres_for(2);
  EXPECT_EQ(p2.q(), 4u);
  EXPECT_EQ(p2.power_table(), build_default_f(F2, 3).full());
  EXPECT_TRUE(p2.commutator_power_relations_explicit());
  EXPECT_EQ(p2.order(), 16384u);

  EXPECT_THROW(build_presentation(build_default_f(F2, 3), 3), InvalidArgument);
}

TEST(Multiply, Examples) {
  for (Scalar p : {2u, 3u}) {
    const auto pres = pres_for(p);
    const auto c = word(pres, {{0, -1}, {1, -1}, {0, 1}, {1, 1}});
    EXPECT_EQ(c, commutator_generator(pres, 0, 1));
    EXPECT_EQ(commutator(generator(pres, 0), generator(pres, 1), pres), c);
    EXPECT_EQ(c.gen_exp, std::vector<std::uint32_t>(4, 0));
    EXPECT_EQ(c.comm_exp, (std::vector<std::uint32_t>{1, 0, 0, 0, 0, 0}));
  }
  const auto pres = pres_for(3);
  auto x = identity_element(pres);
  for (int i = 0; i < 3; ++i) x = multiply(x, generator(pres, 0), pres);
  EXPECT_EQ(x.gen_exp, std::vector<std::uint32_t>(4, 0));
  EXPECT_EQ(x.comm_exp, (std::vector<std::uint32_t>{1, 0, 0, 1, 0, 0}));
  EXPECT_TRUE(is_identity(inverse(identity_element(pres), pres)));
}

TEST(Multiply, RejectsForeignElements) {
  const auto p3 = pres_for(3);
  const auto p2 = pres_for(2);
  EXPECT_THROW(multiply(generator(p2, 0), GroupElement{{1, 0, 0}, {0, 0, 0}}, p2), InvalidArgument);
  EXPECT_THROW(multiply(GroupElement{{3, 0, 0, 0}, {0, 0, 0, 0, 0, 0}}, generator(p3, 0), p3), InvalidArgument);
}

TEST(GroupAxioms, RandomSamples) {
  for (Scalar p : {2u, 3u}) {
    const auto pres = pres_for(p);
    std::mt19937_64 rng(51 + p);
    const auto one = identity_element(pres);
    for (int trial = 0; trial < 1000; ++trial) {
      const auto a = random_element(pres, rng);
      const auto b = random_element(pres, rng);
      const auto c = random_element(pres, rng);
      EXPECT_EQ(multiply(multiply(a, b, pres), c, pres), multiply(a, multiply(b, c, pres), pres));
      EXPECT_EQ(multiply(one, a, pres), a);
      EXPECT_EQ(multiply(a, one, pres), a);
      EXPECT_TRUE(is_identity(multiply(a, inverse(a, pres), pres)));
      EXPECT_TRUE(is_identity(multiply(inverse(a, pres), a, pres)));
      EXPECT_TRUE(is_identity(commutator(a, a, pres)));
      // u v = v u [u, v]
      EXPECT_EQ(multiply(a, b, pres), multiply(multiply(b, a, pres), commutator(a, b, pres), pres));
      EXPECT_EQ(decode_element(encode_element(a, pres), pres), a);
    }
  }
}

TEST(GroupAxioms, PowerAgreesWithRepeatedProduct) {
  const auto pres = pres_for(3);
  std::mt19937_64 rng(57);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_element(pres, rng);
    auto acc = identity_element(pres);
    for (int k = 0; k <= 12; ++k) {
      EXPECT_EQ(power(a, k, pres), acc);
      EXPECT_EQ(power(a, -k, pres), inverse(acc, pres));
      acc = multiply(acc, a, pres);
    }
  }
}

TEST(Relations, AllHold) {
  for (Scalar p : {2u, 3u}) {
    const auto pres = pres_for(p);
    const std::size_t d = pres.generator_count();
    for (std::size_t i = 0; i < d; ++i) {
      const auto xq = power(generator(pres, i), pres.q(), pres);
      EXPECT_EQ(xq.gen_exp, std::vector<std::uint32_t>(d, 0));
      EXPECT_EQ(xq.comm_exp, comm_of(pres.power_table().row_vector(i)));
      for (std::size_t j = i + 1; j < d; ++j) {
        const auto c = commutator(generator(pres, i), generator(pres, j), pres);
        EXPECT_TRUE(is_identity(power(c, p, pres)));
        EXPECT_FALSE(is_identity(c));
        for (std::size_t k = 0; k < d; ++k) EXPECT_TRUE(is_identity(commutator(c, generator(pres, k), pres)));
      }
    }
  }
}

TEST(PowerMap, EqualsF) {
  for (Scalar p : {2u, 3u}) {
    const auto pres = pres_for(p);
    EXPECT_EQ(power_map_matrix(pres), build_default_f(PrimeField(p), 3).full());
  }
}

TEST(PowerMap, LinearInExponents) {
  for (Scalar p : {2u, 3u}) {
    const PrimeField field(p);
    const auto f = build_default_f(field, 3);
    const auto pres = build_presentation(f, p);
    std::mt19937_64 rng(58);
    std::uniform_int_distribution<std::uint32_t> exp(0, pres.q() - 1);
    auto x_to = [&](const std::vector<std::uint32_t>& u) {
      GroupElement e = identity_element(pres);
      for (std::size_t i = 0; i < u.size(); ++i) e = multiply(e, power(generator(pres, i), u[i], pres), pres);
      return e;
    };
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<std::uint32_t> u(4), v(4);
      for (auto& x : u) x = exp(rng);
      for (auto& x : v) x = exp(rng);
      Vector su(4), sum(4);
      for (std::size_t i = 0; i < 4; ++i) {
        su[i] = field.reduce(u[i]);
        sum[i] = field.reduce(u[i] + v[i]);
      }
      const auto xu = x_to(u);
      EXPECT_EQ(power(xu, pres.q(), pres).comm_exp, comm_of(vec_mul(su, f.full())));
      const auto prod = power(multiply(xu, x_to(v), pres), pres.q(), pres);
      EXPECT_EQ(prod.comm_exp, comm_of(vec_mul(sum, f.full())));
      EXPECT_EQ(prod.gen_exp, std::vector<std::uint32_t>(4, 0));
    }
  }
}

TEST(Center, Orders) {
  const auto c3 = compute_center(pres_for(3));
  EXPECT_EQ(c3.order, 729u);
  EXPECT_TRUE(c3.elementary_abelian);
  const auto c2 = compute_center(pres_for(2));
  EXPECT_EQ(c2.order, 1024u);
  EXPECT_THROW(compute_center(pres_for(3), 1000), GuardExceeded);
}

TEST(Center, CommutatorsAreCentral) {
  for (Scalar p : {2u, 3u}) {
    const auto pres = pres_for(p);
    for (std::size_t j = 0; j < 4; ++j) {
      for (std::size_t k = j + 1; k < 4; ++k) EXPECT_TRUE(is_central(commutator_generator(pres, j, k), pres));
      EXPECT_FALSE(is_central(generator(pres, j), pres));
    }
  }
}

TEST(Structure, OddP) {
  const auto r = structure_report(pres_for(3));
  EXPECT_EQ(r.order_P, 59049u);
  EXPECT_EQ(r.order_derived, 729u);
  EXPECT_EQ(r.order_abelianization, 81u);
  EXPECT_EQ(r.order_center, 729u);
  EXPECT_EQ(r.order_frattini, 729u);
  EXPECT_EQ(r.order_agemo, 81u);
  EXPECT_TRUE(r.all_match_paper);
}

TEST(Structure, EvenP) {
  const auto r = structure_report(pres_for(2));
  EXPECT_EQ(r.order_P, 16384u);
  EXPECT_EQ(r.order_derived, 64u);
  EXPECT_EQ(r.order_abelianization, 256u);
  EXPECT_EQ(r.order_center, 1024u);
  EXPECT_EQ(r.order_frattini, 1024u);
  EXPECT_EQ(r.order_agemo, 16u);
  EXPECT_TRUE(r.all_match_paper);
  for (const auto& c : r.checks) EXPECT_TRUE(c.matches()) << c.name;
}

TEST(Structure, ZeroTableHasTrivialAgemo) {
  const auto pres = Presentation::from_table(Matrix(F3, 4, 6));
  const auto r = structure_report(pres);
  EXPECT_EQ(r.order_agemo, 1u);
  EXPECT_EQ(r.order_P, 59049u);
}

TEST(Obstruction, Examples) {
  const auto pres = pres_for(3);
  EXPECT_TRUE(inverse_image_obstruction(pres, generator(pres, 0)));
  EXPECT_FALSE(is_central(power(generator(pres, 0), 2, pres), pres));
  EXPECT_FALSE(inverse_image_obstruction(pres, commutator_generator(pres, 0, 1)));
  EXPECT_FALSE(inverse_image_obstruction(pres, identity_element(pres)));
  const auto p2 = pres_for(2);
  EXPECT_THROW(inverse_image_obstruction(p2, generator(p2, 0)), InvalidArgument);
}

TEST(Obstruction, RandomNonCentral) {
  const auto pres = pres_for(3);
  std::mt19937_64 rng(59);
  int checked = 0;
  while (checked < 100) {
    const auto a = random_element(pres, rng);
    if (is_central(a, pres)) continue;
    EXPECT_TRUE(inverse_image_obstruction(pres, a));
    EXPECT_FALSE(is_central(multiply(a, a, pres), pres));
    ++checked;
  }
}

TEST(Export, Formats) {
  const auto pres = pres_for(3);
  const auto text = export_text(pres);
  EXPECT_EQ(text.substr(0, text.find('\n')), "3 3 4");
  EXPECT_NE(text.find("0: 1 0 0 1 0 0"), std::string::npos);
  const auto rel = export_relations(pres);
  ASSERT_FALSE(rel.empty());
  EXPECT_EQ(rel[0], "x0^3 = [x0,x1]*[x1,x2]");
  const auto j = export_json(pres);
  EXPECT_EQ(j["p"], 3);
  EXPECT_EQ(j["q"], 3);
  EXPECT_EQ(j["commutator_power_relations"], "implied");
  EXPECT_EQ(export_json(pres_for(2))["commutator_power_relations"], "explicit");
  EXPECT_EQ(export_relations(pres_for(2))[0], "x0^4 = [x0,x1]*[x1,x2]");
}

}  // namespace
}  // namespace pgc
