#include <gtest/gtest.h>

#include "fqt/degree.hpp"
#include "fqt/field.hpp"

using namespace fqt;

namespace {

std::vector<Field> sample_fields() {
    return {Field::prime(2), Field::prime(3), Field::prime(5), Field::prime(7), Field(FieldSpec{2, 2, {}}),
            Field(FieldSpec{2, 3, {}}), Field(FieldSpec{3, 2, {}}), Field(FieldSpec{2, 4, {}})};
}

}  // namespace

TEST(Degree, NegInfIsLeastAndAbsorbing) {
    EXPECT_LT(NEG_INF, Degree(0));
    EXPECT_LT(NEG_INF, Degree(-1000));
    EXPECT_EQ(NEG_INF + Degree(5), NEG_INF);
    EXPECT_EQ(Degree(2) + Degree(3), Degree(5));
    EXPECT_EQ(NEG_INF.to_string(), "-inf");
    EXPECT_THROW((void)NEG_INF.value(), std::domain_error);
    EXPECT_EQ(NEG_INF.value_or(-1), -1);
}

TEST(Field, RejectsBadSpecs) {
    EXPECT_THROW(Field::prime(4), std::invalid_argument);
    EXPECT_THROW(Field::prime(1), std::invalid_argument);
    EXPECT_THROW(Field(FieldSpec{2, 0, {}}), std::invalid_argument);
    // t^2 + 1 = (t+1)^2 over F_2
    EXPECT_THROW(Field(FieldSpec{2, 2, {1, 0, 1}}), std::invalid_argument);
    // wrong degree
    EXPECT_THROW(Field(FieldSpec{2, 2, {1, 1, 0, 1}}), std::invalid_argument);
    // not monic
    EXPECT_THROW(Field(FieldSpec{3, 2, {1, 0, 2}}), std::invalid_argument);
}

TEST(Field, DefaultModulusIsLeastIrreducible) {
    EXPECT_EQ(Field(FieldSpec{2, 2, {}}).spec().modulus, (std::vector<std::uint32_t>{1, 1, 1}));
    EXPECT_EQ(Field(FieldSpec{2, 3, {}}).spec().modulus, (std::vector<std::uint32_t>{1, 1, 0, 1}));
    // x^2 + 1 is irreducible over F_3 and precedes x^2 + x + 2 canonically
    EXPECT_EQ(Field(FieldSpec{3, 2, {}}).spec().modulus, (std::vector<std::uint32_t>{1, 0, 1}));
}

TEST(Field, AxiomsExhaustive) {
    for (const auto& F : sample_fields()) {
        const auto q = F.q();
        for (std::uint64_t i = 0; i < q; ++i) {
            const auto a = F.element(i);
            EXPECT_EQ(F.add(a, F.neg(a)), F.zero());
            EXPECT_EQ(F.mul(a, F.one()), a);
            if (a != F.zero()) {
                EXPECT_EQ(F.mul(a, F.inv(a)), F.one());
            }
            EXPECT_EQ(F.pow(a, q), a);  // Fermat
            EXPECT_EQ(F.pow(F.pth_root(a), F.p()), a);
            for (std::uint64_t j = 0; j < q; ++j) {
                const auto b = F.element(j);
                EXPECT_EQ(F.add(a, b), F.add(b, a));
                EXPECT_EQ(F.mul(a, b), F.mul(b, a));
                for (std::uint64_t k = 0; k < q; k += 3) {
                    const auto c = F.element(k);
                    EXPECT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
                    EXPECT_EQ(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)));
                }
            }
        }
    }
}

TEST(Field, ZeroHasNoInverse) { EXPECT_THROW((void)Field::prime(5).inv(Field::prime(5).zero()), std::domain_error); }

TEST(Field, ExtensionMultiplicationMatchesModulus) {
    // F_4 = F_2[x]/(x^2+x+1): x * x = x + 1
    const Field F(FieldSpec{2, 2, {}});
    const auto x = F.from_coords({0, 1});
    EXPECT_EQ(F.coords(F.mul(x, x)), (std::vector<std::uint32_t>{1, 1}));
    EXPECT_EQ(F.pow(x, 3), F.one());
}

TEST(Field, CoordsRoundTripAndOrder) {
    const Field F(FieldSpec{3, 2, {}});
    for (std::uint64_t i = 0; i < F.q(); ++i) EXPECT_EQ(F.from_coords(F.coords(F.element(i))), F.element(i));
    // integer order equals coordinates read from the highest index down
    EXPECT_LT(F.from_coords({2, 0}), F.from_coords({0, 1}));
    EXPECT_TRUE(F.in_prime_field(F.from_int(-1)));
    EXPECT_EQ(F.from_int(-1), F.from_int(2));
}

TEST(Field, EqualityBySpec) {
    EXPECT_EQ(Field::prime(3), Field::prime(3));
    EXPECT_FALSE(Field::prime(3) == Field::prime(5));
    EXPECT_FALSE(Field(FieldSpec{2, 2, {}}) == Field::prime(2));
}
