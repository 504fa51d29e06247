#include <gtest/gtest.h>

#include "fqt/hallwoodall.hpp"
#include "fqt/relations.hpp"

using namespace fqt;

namespace {

const Field F2 = Field::prime(2);

Poly P2(const char* s) { return parse_poly(F2, s); }

}  // namespace

TEST(HallWoodall, SmallValues) {
    const auto b = build_counterexample(F2, 2);
    EXPECT_TRUE(b.table.at(Poly(F2)).is_zero());
    EXPECT_TRUE(b.table.at(P2("1")).is_zero());
    EXPECT_EQ(b.table.at(P2("t")), P2("t^2+t"));
    EXPECT_EQ(b.table.at(P2("t+1")), P2("t^2+t"));
    for (std::size_t i = 4; i < 8; ++i) {
        EXPECT_GE(b.table.value(i).degree(), Degree(4));
        EXPECT_LT(b.table.value(i).degree(), Degree(8));
    }
    const auto& row = b.trace.rows.front();
    EXPECT_EQ(row.B, P2("t"));
    EXPECT_TRUE(row.R.is_zero());
    EXPECT_EQ(row.modulus, P2("t^2+t"));
}

TEST(HallWoodall, CertifiesAcrossFields) {
    for (auto [F, D] : {std::pair{F2, 4}, std::pair{Field::prime(3), 3}, std::pair{Field(FieldSpec{2, 2, {}}), 2},
                        std::pair{Field::prime(5), 2}}) {
        const auto b = build_counterexample(F, D);
        const auto c = certify_counterexample(b.table, b.trace);
        EXPECT_TRUE(c.ok) << F.q();
        EXPECT_TRUE(c.p3.pass);
        EXPECT_TRUE(c.window_failures.empty());
        EXPECT_TRUE(c.trace_failures.empty());
    }
}

TEST(HallWoodall, Deterministic) {
    const auto a = build_counterexample(F2, 4), b = build_counterexample(F2, 4);
    EXPECT_EQ(a.table, b.table);
    EXPECT_EQ(table_to_json(a.table).dump(), table_to_json(b.table).dump());
}

TEST(HallWoodall, OverwrittenValueFailsWindowOnly) {
    auto b = build_counterexample(F2, 4);
    b.table.set(P2("t"), Poly(F2));
    const auto c = certify_counterexample(b.table, b.trace);
    EXPECT_FALSE(c.ok);
    ASSERT_FALSE(c.window_failures.empty());
    EXPECT_EQ(c.window_failures.front().B, P2("t"));
    EXPECT_EQ(c.window_failures.front().degree, NEG_INF);
    for (const auto& v : c.p3.violations) EXPECT_FALSE(v.P == P2("t") && v.A == P2("t") && v.A_ref.is_zero());
}

TEST(HallWoodall, TamperedTraceDetected) {
    auto b = build_counterexample(F2, 3);
    b.trace.rows[3].modulus = b.trace.rows[3].modulus + P2("1");
    const auto c = certify_counterexample(b.table, b.trace);
    EXPECT_FALSE(c.ok);
    ASSERT_FALSE(c.trace_failures.empty());
    EXPECT_EQ(c.trace_failures.front().B, b.trace.rows[3].B);
}

TEST(HallWoodall, BudgetAndArguments) {
    EXPECT_THROW(build_counterexample(F2, 13), budget_exceeded);
    EXPECT_THROW(build_counterexample(F2, -1), std::invalid_argument);
    EXPECT_NO_THROW(build_counterexample(F2, 0));
}

TEST(HallWoodall, CustomLiftStillCongruent) {
    // k = B instead of k = 1 keeps (P3); the window no longer applies
    const FuncTable seed(F2, 0, {Poly(F2), P2("t")});
    const auto b = extend_congruently(seed, 3, [](const Poly& B, const Poly&, const Poly&) { return B; });
    EXPECT_TRUE(verify_p3(b.table).pass);
    EXPECT_EQ(b.table.at(P2("1")), P2("t"));
}

TEST(HallWoodall, InterpolantsMispredict) {
    const auto t = build_counterexample(F2, 5).table;
    const auto pts = table_points(t);
    for (std::uint64_t B = 0; B <= 5; ++B) EXPECT_FALSE(fit_polynomial(F2, pts, B).mispredicted.empty()) << B;
}
