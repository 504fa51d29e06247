#include <gtest/gtest.h>

#include <random>

#include "fqt/factor.hpp"
#include "fqt/irreducible.hpp"
#include "fqt/text.hpp"

using namespace fqt;

namespace {

const Field F2 = Field::prime(2);
const Field F3 = Field::prime(3);

Poly P2(const char* s) { return parse_poly(F2, s); }

// Irreducibility by trial division over every monic of degree <= deg/2.
bool irreducible_by_trial(const Poly& f) {
    const auto d = f.degree().value();
    if (d < 1) return false;
    const Field& F = f.field();
    for (std::uint64_t i = F.q(); i < count_up_to_degree(F.q(), d / 2); ++i) {
        const Poly g = Poly::from_index(F, i);
        if (g.is_monic() && g.degree() >= 1 && g.divides(f)) return false;
    }
    return true;
}

}  // namespace

TEST(Irreducible, Examples) {
    EXPECT_EQ(enumerate_monic_irreducibles(F2, 1), (std::vector<Poly>{P2("t"), P2("t+1")}));
    EXPECT_EQ(enumerate_monic_irreducibles(F2, 2), (std::vector<Poly>{P2("t^2+t+1")}));
    EXPECT_EQ(enumerate_monic_irreducibles(F2, 4).size(), 3u);
    EXPECT_TRUE(enumerate_monic_irreducibles(F2, 0).empty());
    EXPECT_EQ(count_irreducibles(2, 1), 2u);
    EXPECT_EQ(count_irreducibles(2, 4), 3u);
    EXPECT_EQ(count_irreducibles(3, 1), 3u);
}

TEST(Irreducible, RabinAgreesWithTrialDivision) {
    for (const Field& F : {F2, F3, Field(FieldSpec{2, 2, {}})}) {
        for (std::uint64_t i = 0; i < std::min<std::uint64_t>(count_up_to_degree(F.q(), 6), 3000); ++i) {
            const Poly f = Poly::from_index(F, i);
            if (!f.is_monic()) continue;
            EXPECT_EQ(is_irreducible(f), irreducible_by_trial(f)) << to_human(f);
        }
    }
}

TEST(Irreducible, EnumerationMatchesCount) {
    for (std::uint64_t q : {2, 3, 4, 5}) {
        const Field F = q == 4 ? Field(FieldSpec{2, 2, {}}) : Field::prime(static_cast<std::uint32_t>(q));
        for (std::uint64_t d = 1; pow_or_throw(q, d, "") <= 4096; ++d) {
            const auto list = enumerate_monic_irreducibles(F, d);
            EXPECT_EQ(list.size(), count_irreducibles(q, d)) << q << " " << d;
            EXPECT_TRUE(std::is_sorted(list.begin(), list.end()));
        }
    }
}

TEST(Irreducible, DnExamplesAndBounds) {
    EXPECT_EQ(d_n(F2, 1), 2u);
    EXPECT_EQ(d_n(F2, 2), 4u);
    EXPECT_EQ(d_n(F2, 3), 10u);
    EXPECT_THROW(d_n(F2, 0), std::invalid_argument);
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9})
        for (std::uint64_t n = 1; n <= 12; ++n) {
            const auto qn = pow_or_throw(q, n, "");
            const auto dn = degree_of_irreducible_product(q, n);
            EXPECT_LE(qn, dn);
            EXPECT_LT(dn, 2 * qn);
        }
}

TEST(Irreducible, ProductIdentity) {
    EXPECT_TRUE(product_identity_check(F2, 1).equal);
    EXPECT_TRUE(product_identity_check(F2, 2).equal);
    EXPECT_TRUE(product_identity_check(F3, 1).equal);
    EXPECT_TRUE(product_identity_check(Field(FieldSpec{2, 2, {}}), 2).equal);
    EXPECT_THROW(product_identity_check(F2, 30, 1u << 10), budget_exceeded);
}

TEST(Factor, Examples) {
    const auto a = factor(P2("t^4+t"));
    EXPECT_EQ(a.unit, F2.one());
    ASSERT_EQ(a.factors.size(), 3u);
    EXPECT_EQ(a.factors[0], std::make_pair(P2("t"), std::uint64_t{1}));
    EXPECT_EQ(a.factors[1], std::make_pair(P2("t+1"), std::uint64_t{1}));
    EXPECT_EQ(a.factors[2], std::make_pair(P2("t^2+t+1"), std::uint64_t{1}));

    const auto b = factor(P2("t^2-1"));
    ASSERT_EQ(b.factors.size(), 1u);
    EXPECT_EQ(b.factors[0], std::make_pair(P2("t+1"), std::uint64_t{2}));

    const auto c = factor(P2("t^3+t+1"));
    ASSERT_EQ(c.factors.size(), 1u);
    EXPECT_EQ(c.factors[0].first, P2("t^3+t+1"));
    EXPECT_THROW(factor(Poly(F2)), std::invalid_argument);
}

TEST(Factor, ReproducesInputRandom) {
    std::mt19937_64 rng(17);
    for (const Field& F : {F2, F3, Field::prime(5), Field(FieldSpec{2, 2, {}}), Field(FieldSpec{3, 2, {}})}) {
        for (int it = 0; it < 60; ++it) {
            // products of random small factors, with repeats and p-th powers
            Poly f = Poly::constant(F, F.element(1 + rng() % (F.q() - 1)));
            const int parts = 1 + static_cast<int>(rng() % 4);
            for (int k = 0; k < parts; ++k) {
                Poly g = Poly::from_index(F, F.q() + rng() % 400);
                f *= g.pow(1 + rng() % (F.p() + 1));
            }
            const auto fl = factor(f);
            EXPECT_EQ(fl.expand(F), f);
            for (std::size_t i = 0; i < fl.factors.size(); ++i) {
                EXPECT_TRUE(fl.factors[i].first.is_monic());
                EXPECT_TRUE(irreducible_by_trial(fl.factors[i].first));
                if (i) {
                    EXPECT_LT(fl.factors[i - 1].first, fl.factors[i].first);
                }
            }
        }
    }
}

TEST(Factor, SeedDoesNotChangeResult) {
    const Poly f = parse_poly(F3, "t^12+2*t^7+t^3+t+2");
    const auto a = factor(f, {0, 0}), b = factor(f, {99, 0});
    EXPECT_EQ(a.factors, b.factors);
}

TEST(Rad, Examples) {
    EXPECT_EQ(rad(P2("t^2")), P2("t"));
    EXPECT_EQ(rad(P2("t^4+t")), P2("t^4+t"));
    EXPECT_EQ(rad(P2("t") * P2("t+1").pow(2)), P2("t^2+t"));
    EXPECT_THROW(rad(P2("1")), std::invalid_argument);
    EXPECT_THROW(rad(Poly(F2)), std::invalid_argument);
}

TEST(Rad, PropertiesRandom) {
    std::mt19937_64 rng(23);
    for (const Field& F : {F2, F3, Field(FieldSpec{2, 2, {}})}) {
        for (int it = 0; it < 80; ++it) {
            const Poly a = Poly::from_index(F, F.q() + rng() % 2000).pow(1 + rng() % 5);
            const Poly r = rad(a);
            EXPECT_TRUE(r.is_monic());
            EXPECT_TRUE(r.divides(a));
            Poly expect = Poly::one(F);
            for (const auto& [P, m] : factor(a).factors) expect *= P;
            EXPECT_EQ(r, expect);
            EXPECT_EQ(rad(a.pow(3)), r);
            EXPECT_EQ(rad(r.scale(F.element(F.q() - 1))), r);
        }
    }
}
