#include <gtest/gtest.h>

#include <random>

#include "fqt/hallwoodall.hpp"
#include "fqt/json_io.hpp"
#include "fqt/lemmalab.hpp"
#include "fqt/relations.hpp"

using namespace fqt;

namespace {

const Field F2 = Field::prime(2);
const Field F3 = Field::prime(3);

Poly P2(const char* s) { return parse_poly(F2, s); }

template <class Fn>
FuncTable table(const Field& F, std::int64_t D, Fn fn) {
    return FuncTable::tabulate(F, D, fn);
}

Poly eval_apoly(const Field& F, const std::vector<Poly>& c, const Poly& A) {
    Poly acc(F);
    for (std::size_t j = c.size(); j-- > 0;) acc = acc * A + c[j];
    return acc;
}

// Q(X, Y) from explicit (i, j, k, c) terms.
RelationQ make_relation(const Field& F, TriDegreeBounds b, std::vector<std::tuple<int, int, int, int>> terms) {
    RelationQ r{b, FqVector(b.unknowns(), F.zero())};
    for (auto [i, j, k, c] : terms) r.coeffs[b.column(i, j, k)] = F.from_int(c);
    return r;
}

}  // namespace

TEST(FindRelation, SquareMap) {
    const auto t = table(F2, 2, [](const Poly& A) { return A * A; });
    const auto s = find_relation(t, {0, 2, 1});
    ASSERT_TRUE(s.relation.has_value());
    EXPECT_EQ(s.relation->coeffs, make_relation(F2, {0, 2, 1}, {{0, 2, 0, 1}, {0, 0, 1, 1}}).coeffs);
    EXPECT_TRUE(relation_failures(t, *s.relation).empty());
    EXPECT_EQ(s.unknowns, 6u);
}

TEST(FindRelation, ZeroMap) {
    const auto t = table(F2, 2, [](const Poly&) { return Poly(F2); });
    const auto s = find_relation(t, {0, 0, 1});
    ASSERT_TRUE(s.relation.has_value());
    EXPECT_EQ(s.relation->coeffs, make_relation(F2, {0, 0, 1}, {{0, 0, 1, 1}}).coeffs);
}

TEST(FindRelation, HallWoodallHasNoBilinearRelation) {
    const auto t = build_counterexample(F2, 3).table;
    const auto s = find_relation(t, {0, 1, 1});
    EXPECT_FALSE(s.relation.has_value());
    EXPECT_EQ(s.rank, 4u);
}

TEST(FindRelation, ReturnedRelationVanishesRandom) {
    std::mt19937_64 rng(5);
    for (const Field& F : {F2, F3}) {
        for (int it = 0; it < 6; ++it) {
            const std::uint64_t q = F.q();
            std::vector<Poly> c{Poly::from_index(F, rng() % (q * q)), Poly::from_index(F, rng() % (q * q)), Poly::from_index(F, rng() % q)};
            const auto t = table(F, 3, [&](const Poly& A) { return eval_apoly(F, c, A); });
            const auto s = find_relation(t, {1, 2, 1});
            ASSERT_TRUE(s.relation.has_value());
            EXPECT_TRUE(relation_failures(t, *s.relation).empty());
            EXPECT_FALSE(s.relation->is_zero());
        }
    }
}

TEST(FindRelation, DeterministicAcrossThreads) {
    const auto t = table(F3, 3, [](const Poly& A) { return A * A * A + A; });
    const auto a = find_relation(t, {1, 3, 1}, {1}), b = find_relation(t, {1, 3, 1}, {8});
    ASSERT_TRUE(a.relation && b.relation);
    EXPECT_EQ(a.relation->coeffs, b.relation->coeffs);
}

TEST(FindRelation, KernelMembershipByEnumeration) {
    // <= 12 unknowns over F_2: every one of the 2^n candidates is checked
    std::mt19937_64 rng(6);
    for (int it = 0; it < 10; ++it) {
        const auto t = table(F2, 2, [&](const Poly&) { return Poly::from_index(F2, rng() % 8); });
        const TriDegreeBounds b{rng() % 2, 1 + rng() % 2, 1};
        ASSERT_LE(b.unknowns(), 12u);
        const auto s = find_relation(t, b);
        std::uint64_t kernel = 0;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << b.unknowns()); ++mask) {
            RelationQ r{b, FqVector(b.unknowns())};
            for (std::size_t c = 0; c < b.unknowns(); ++c) r.coeffs[c] = F2.element((mask >> c) & 1);
            if (relation_failures(t, r).empty()) ++kernel;
        }
        EXPECT_EQ(kernel, std::uint64_t{1} << (b.unknowns() - s.rank));
        EXPECT_EQ(s.relation.has_value(), kernel > 1);
    }
}

TEST(FindRelation, BudgetGuard) {
    const auto t = table(F2, 1, [](const Poly& A) { return A; });
    EXPECT_THROW(find_relation(t, {100, 100, 100}), budget_exceeded);
}

TEST(UnknownCount, Examples) {
    const auto a = unknown_count_check(2, 4);
    EXPECT_EQ(a.unknowns, 6u * 2u * 73u);
    EXPECT_EQ(a.equations, 512u);
    EXPECT_TRUE(a.unknowns_exceed_equations);
    const auto b = unknown_count_check(2, 2);
    EXPECT_TRUE(b.degenerate);
    EXPECT_EQ(b.bounds.j_max, 0u);
    const auto c = unknown_count_check(3, 3);
    EXPECT_EQ(c.unknowns, 10u * 4u * 82u);
    EXPECT_EQ(c.equations, 2187u);
    EXPECT_THROW(unknown_count_check(2, 1), std::invalid_argument);
}

TEST(DegreeBound, Examples) {
    const auto a = degree_bound_from_relation(F2, make_relation(F2, {0, 2, 1}, {{0, 0, 1, 1}, {0, 2, 0, 1}}));
    EXPECT_EQ(a.C3, 2u);
    EXPECT_EQ(a.C4, 0u);
    // Y^2 + tXY + X
    const auto b = degree_bound_from_relation(F2, make_relation(F2, {1, 1, 2}, {{0, 0, 2, 1}, {1, 1, 1, 1}, {0, 1, 0, 1}}));
    EXPECT_EQ(b.C3, 1u);
    EXPECT_EQ(b.C4, 1u);
    EXPECT_EQ(b.y_degree, 2u);
    const auto c = degree_bound_from_relation(F2, make_relation(F2, {0, 0, 1}, {{0, 0, 1, 1}}));
    EXPECT_EQ(c.C3, 0u);
    EXPECT_EQ(c.C4, 0u);
    EXPECT_THROW(degree_bound_from_relation(F2, make_relation(F2, {1, 2, 1}, {{1, 2, 0, 1}})), std::invalid_argument);
    EXPECT_THROW(degree_bound_from_relation(F2, make_relation(F2, {1, 2, 1}, {})), std::invalid_argument);
}

TEST(DegreeBound, Checker) {
    EXPECT_TRUE(check_degree_bound(table(F2, 3, [](const Poly& A) { return A * A; }), {2, 0, 1}).empty());
    EXPECT_TRUE(check_degree_bound(table(F2, 3, [](const Poly&) { return Poly(F2); }), {0, 0, 1}).empty());
    const auto hw = build_counterexample(F2, 3).table;
    const auto bad = check_degree_bound(hw, {1, 1, 1});
    for (std::int64_t n = 2; n <= 3; ++n)
        EXPECT_TRUE(std::any_of(bad.begin(), bad.end(), [n](const Poly& A) { return A.degree() == n; })) << n;
}

TEST(DegreeBound, HoldsForFoundRelations) {
    const auto t = table(F3, 3, [](const Poly& A) { return A * A + parse_poly(F3, "t") * A; });
    const auto s = find_relation(t, {1, 2, 1});
    ASSERT_TRUE(s.relation);
    EXPECT_TRUE(check_degree_bound(t, degree_bound_from_relation(F3, *s.relation)).empty());
}

TEST(LinearRelation, CubeMap) {
    const Poly T = Poly::t(F2);
    SamplePoints pts;
    for (int n = 0; n <= 4; ++n) {
        const Poly U = T.pow(n);
        pts.emplace_back(U, U * U * U + T * U);
    }
    const auto a = find_linear_relation(F2, pts, {0, 0, 3, 1});
    ASSERT_TRUE(a);
    EXPECT_EQ(a->P, std::vector<Poly>{P2("1")});
    EXPECT_EQ(a->Q, (std::vector<Poly>{Poly(F2), P2("t"), Poly(F2), P2("1")}));
    for (const auto& [x, y] : pts) EXPECT_TRUE(a->evaluate(F2, x, y).is_zero());
    const KPoly F = recover_polymap(F2, *a);
    EXPECT_EQ(F, KPoly::from_polys(F2, {Poly(F2), P2("t"), Poly(F2), P2("1")}));
}

TEST(LinearRelation, ZeroSamples) {
    SamplePoints pts{{P2("1"), Poly(F2)}, {P2("t"), Poly(F2)}};
    const auto a = find_linear_relation(F2, pts, {1, 0, 1, 0});
    ASSERT_TRUE(a);
    EXPECT_TRUE(a->Q.empty());
    EXPECT_FALSE(a->P.empty());
}

TEST(LinearRelation, TinyCapsOnFastGrowth) {
    std::mt19937_64 rng(8);
    SamplePoints pts;
    Poly U = P2("1");
    for (int n = 0; n <= 5; ++n, U *= P2("t")) {
        std::vector<FieldElem> c(n * n + 1);
        for (auto& x : c) x = F2.element(rng() & 1);
        c.back() = F2.one();
        pts.emplace_back(U, Poly(F2, c));
    }
    EXPECT_FALSE(find_linear_relation(F2, pts, {0, 0, 1, 1}).has_value());
}

TEST(LinearRelation, Errors) {
    EXPECT_THROW(find_linear_relation(F2, {}, {0, 0, 0, 0}), std::invalid_argument);
    EXPECT_THROW(find_linear_relation(F2, {{P2("t"), P2("1")}, {P2("t"), P2("0")}}, {0, 0, 0, 0}), std::invalid_argument);
}

TEST(LinearRelation, RecoversRandomMaps) {
    std::mt19937_64 rng(12);
    for (const Field& F : {F2, F3}) {
        for (int it = 0; it < 8; ++it) {
            const std::uint64_t q2 = F.q() * F.q();
            std::vector<Poly> c{Poly::from_index(F, rng() % q2), Poly::from_index(F, rng() % q2),
                                Poly::from_index(F, 1 + rng() % (q2 - 1))};
            SamplePoints pts;
            const Poly U = Poly::t(F) + Poly::one(F);
            Poly Un = Poly::one(F);
            for (int n = 0; n <= 7; ++n, Un *= U) pts.emplace_back(Un, eval_apoly(F, c, Un));
            const auto a = find_linear_relation(F, pts, {0, 0, 2, 1});
            ASSERT_TRUE(a);
            EXPECT_EQ(recover_polymap(F, *a), KPoly::from_polys(F, c));
        }
    }
}

TEST(Recover, Examples) {
    EXPECT_EQ(recover_polymap(F2, {{}, {P2("1")}, {Poly(F2), P2("t"), Poly(F2), P2("1")}}),
              KPoly::from_polys(F2, {Poly(F2), P2("t"), Poly(F2), P2("1")}));
    EXPECT_EQ(recover_polymap(F2, {{}, {Poly(F2), P2("1")}, {Poly(F2), Poly(F2), P2("1")}}),
              KPoly::from_polys(F2, {Poly(F2), P2("1")}));
    // over F_3 the sign is visible: -X^2 / X = -X
    EXPECT_EQ(recover_polymap(F3, {{}, {Poly(F3), Poly::one(F3)}, {Poly(F3), Poly(F3), Poly::one(F3)}}),
              KPoly::from_polys(F3, {Poly(F3), parse_poly(F3, "2")}));
    EXPECT_THROW(recover_polymap(F2, {{}, {Poly(F2), P2("1")}, {P2("1"), Poly(F2), P2("1")}}), std::domain_error);
    EXPECT_THROW(recover_polymap(F2, {{}, {}, {P2("1")}}), std::invalid_argument);
}

TEST(Fit, Examples) {
    const auto sq = table(F2, 3, [](const Poly& A) { return A * A; });
    const auto r = fit_polynomial(F2, table_points(sq), 2);
    EXPECT_EQ(r.F, KPoly::from_polys(F2, {Poly(F2), Poly(F2), P2("1")}));
    EXPECT_TRUE(r.matches_all);
    EXPECT_TRUE(r.maps_into_A);
    const auto id = fit_polynomial(F2, {{Poly(F2), Poly(F2)}, {P2("1"), P2("1")}}, 1);
    EXPECT_EQ(id.F, KPoly::from_polys(F2, {Poly(F2), P2("1")}));
    EXPECT_THROW(fit_polynomial(F2, {{P2("1"), P2("1")}}, 1), std::invalid_argument);
    EXPECT_THROW(fit_polynomial(F2, {{P2("1"), P2("1")}, {P2("1"), P2("0")}}, 1), std::invalid_argument);
}

TEST(Fit, ReproducesLowDegreeMapsFromAnyNodes) {
    std::mt19937_64 rng(13);
    for (int it = 0; it < 10; ++it) {
        std::vector<Poly> c{Poly::from_index(F3, rng() % 27), Poly::from_index(F3, rng() % 27), Poly::from_index(F3, rng() % 27)};
        auto pts = table_points(table(F3, 2, [&](const Poly& A) { return eval_apoly(F3, c, A); }));
        std::shuffle(pts.begin(), pts.end(), rng);
        const auto r = fit_polynomial(F3, pts, 2);
        EXPECT_EQ(r.F, KPoly::from_polys(F3, c));
        EXPECT_TRUE(r.matches_all);
    }
}

TEST(Vanishing, ZeroTable) {
    const auto r = check_vanishing_lemma(table(F2, 3, [](const Poly&) { return Poly(F2); }), 1);
    EXPECT_TRUE(r.hypotheses_hold);
    EXPECT_TRUE(r.identically_zero);
    EXPECT_TRUE(r.conclusion_holds);
    EXPECT_FALSE(r.first_nonzero);
}

TEST(Vanishing, SquareFailsHypothesisC) {
    const auto r = check_vanishing_lemma(table(F2, 3, [](const Poly& A) { return A * A; }), 1);
    EXPECT_FALSE(r.hypotheses_hold);
    EXPECT_TRUE(std::find(r.nonzero_low.begin(), r.nonzero_low.end(), P2("t")) != r.nonzero_low.end());
    EXPECT_TRUE(r.conclusion_holds);
}

TEST(Vanishing, InjectedValueBreaksCongruence) {
    auto t = table(F2, 3, [](const Poly&) { return Poly(F2); });
    t.set(P2("t^3"), Poly::monomial(F2, F2.one(), 7));
    const auto r = check_vanishing_lemma(t, 2);
    EXPECT_FALSE(r.congruence.pass);
    EXPECT_TRUE(r.degree_violations.empty());
    EXPECT_TRUE(r.nonzero_low.empty());
    EXPECT_FALSE(r.hypotheses_hold);
    ASSERT_TRUE(r.first_nonzero);
    EXPECT_EQ(r.first_nonzero->A, P2("t^3"));
    EXPECT_FALSE(r.first_nonzero->witness_divides);
    EXPECT_EQ(r.first_nonzero->witness.degree(), Degree(10));
    EXPECT_THROW(check_vanishing_lemma(t, 4), std::invalid_argument);
}

TEST(Schedule, CountingInequality) {
    const auto s = ansatz_schedule(100, {1, 2}, 1, 3, 5);
    EXPECT_EQ(s.N + 1, 150u);
    EXPECT_EQ(s.D2, 2u * 149u * 150u);
    EXPECT_TRUE(s.inequality_holds);
    // tiny D1 with large C5 fails the count
    EXPECT_FALSE(ansatz_schedule(2, {1, 2}, 1, 50, 0).inequality_holds);
    EXPECT_THROW(ansatz_schedule(10, {0, 1}, 1, 0, 0), std::invalid_argument);
    EXPECT_THROW(ansatz_schedule(0, {1, 2}, 1, 0, 0), std::invalid_argument);
}

TEST(Pipeline, RecoversCube) {
    const auto t = table(F2, 5, [](const Poly& A) { return A * A * A + P2("t") * A; });
    const auto r = run_pipeline(t);
    EXPECT_EQ(r.stage, "verify");
    ASSERT_TRUE(r.F);
    EXPECT_EQ(kpoly_to_human(*r.F), "X^3 + (t)*X");
    EXPECT_TRUE(r.reproduces_table);
    EXPECT_EQ(r.samples, 6u);
}

TEST(Pipeline, StopsOnHallWoodall) {
    const auto r = run_pipeline(build_counterexample(F2, 4).table);
    EXPECT_FALSE(r.reproduces_table);
    EXPECT_NE(r.stage, "verify");
}

TEST(Pipeline, MaxDegreeBelow) {
    const auto t = table(F2, 3, [](const Poly& A) { return A * A; });
    EXPECT_EQ(max_degree_below(t, 0), NEG_INF);
    EXPECT_EQ(max_degree_below(t, 2), Degree(2));
    EXPECT_EQ(max_degree_below(t, 4), Degree(6));
}

TEST(DeltaPropagation, AnsatzVanishingOnPowersForcesRadicalDivisibility) {
    // g = P f + Q vanishes on U^0..U^N and satisfies (P3); then
    // rad(Delta_{N,n,U}) | g(U^n) for n > N.
    const auto hw = build_counterexample(F2, 5).table;
    const Poly U = P2("t");
    const std::uint64_t N = 1;
    SamplePoints pts;
    for (std::uint64_t n = 0; n <= N; ++n) pts.emplace_back(U.pow(n), hw.at(U.pow(n)));
    const auto a = find_linear_relation(F2, pts, {0, 1, 1, 1});
    ASSERT_TRUE(a);
    const auto g = FuncTable::tabulate(F2, 5, [&](const Poly& A) { return a->evaluate(F2, A, hw.at(A)); });
    ASSERT_TRUE(verify_p3(g).pass);
    for (std::uint64_t n = N + 1; n <= 5; ++n) {
        const Poly r = rad(delta({U, N, n}));
        EXPECT_TRUE(r.divides(g.at(U.pow(n)))) << n;
    }
}

TEST(Json, RelationAndAnsatzRoundTrip) {
    const auto rel = make_relation(F3, {1, 1, 2}, {{0, 0, 2, 1}, {1, 1, 1, 2}});
    const auto back = relation_from_json(F3, relation_to_json(F3, rel));
    EXPECT_EQ(back.bounds, rel.bounds);
    EXPECT_EQ(back.coeffs, rel.coeffs);
    const LinearAnsatz a{{0, 1, 2, 1}, {parse_poly(F3, "t+2")}, {Poly(F3), parse_poly(F3, "2*t")}};
    const auto b = ansatz_from_json(F3, ansatz_to_json(a));
    EXPECT_EQ(b.caps, a.caps);
    EXPECT_EQ(b.P, a.P);
    EXPECT_EQ(b.Q, a.Q);
}
