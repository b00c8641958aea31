#include "curvess/affine.hpp"
#include "curvess/error.hpp"
#include "curvess/spectral.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <json.hpp>

using namespace curvess;
using namespace curvess::testing;

namespace {

const AffineExpr kappa = AffineExpr::unknown("kappa");
const AffineExpr c = AffineExpr::unknown("c");
const AffineExpr kv = AffineExpr::unknown("k_v");

PlaneRecord record(const std::string& label, std::size_t mu, std::size_t tau, std::size_t delta, std::size_t r,
                   std::size_t tail_rank)
{
    LocalInvariants inv;
    inv.mu = mu;
    inv.tau = tau;
    inv.qh_by_saito = mu == tau;
    inv.delta = delta;
    inv.r = r;
    return {label, inv, tail_rank};
}

PlaneRecord node() { return record("node", 1, 1, 1, 2, 1); }
PlaneRecord cusp() { return record("cusp", 2, 2, 1, 1, 2); }
PlaneRecord nonqh() { return record("u^5+v^5+u^3v^3", 16, 15, 10, 5, 14); }

LciRecord t469()
{
    const VarList xyz{"x", "y", "z"};
    const LciPresentation p(xyz, {P("y^2 - x^3", xyz), P("z^2 - y^3", xyz)}, branch({"t^4", "t^6", "t^9"}));
    return {"t469", obstruction(p), 6, 1};
}

CurveModel model(std::size_t genus, std::vector<SingularityRecord> s)
{
    return {genus, std::move(s), "test"};
}

Entry E(const AffineExpr& e) { return Entry::of(e); }

} // namespace

TEST(Affine, Arithmetic)
{
    const AffineExpr e = kappa + 1 - c;
    EXPECT_EQ(to_string(e), "kappa - c + 1");
    EXPECT_FALSE(e.is_constant());
    EXPECT_TRUE((e - e).is_constant());
    EXPECT_EQ((e * Rational(2)).coefficient("kappa"), 2);
    EXPECT_EQ(e.substituted("c", 1), kappa);
    EXPECT_EQ(to_string(AffineExpr(0)), "0");
}

TEST(Affine, ConstraintSystem)
{
    ConstraintSystem cs;
    cs.add(c, 0);
    cs.add(kv + kappa, 3);
    cs.add(kv, 1);
    EXPECT_TRUE(cs.consistent());
    EXPECT_EQ(cs.reduce(kappa - c), AffineExpr(2));
    EXPECT_TRUE(cs.implies(kappa + kv, 3));
    EXPECT_FALSE(cs.implies(kappa, 3));
    const auto sol = cs.solutions();
    ASSERT_EQ(sol.size(), 3u);
    EXPECT_EQ(to_string(sol[0]), "c = 0");
    EXPECT_EQ(to_string(sol[2]), "kappa = 2");
    cs.add(kappa, 5);
    EXPECT_FALSE(cs.consistent());
}

TEST(GlobalInvariants, Examples)
{
    const GlobalInvariants smooth = global_invariants(model(2, {}));
    EXPECT_EQ(smooth.delta_total, 0u);
    EXPECT_EQ(smooth.R, 0u);
    EXPECT_EQ(smooth.p_a, 2u);
    EXPECT_EQ((std::array{smooth.b0, smooth.b1, smooth.b2}), (std::array<std::size_t, 3>{1, 4, 1}));

    const GlobalInvariants n = global_invariants(model(0, {node()}));
    EXPECT_EQ(n.delta_total, 1u);
    EXPECT_EQ(n.R, 1u);
    EXPECT_EQ(n.tau_total, 1u);
    EXPECT_EQ(n.p_a, 1u);
    EXPECT_EQ(n.b1, 1u);

    const GlobalInvariants k = global_invariants(model(0, {cusp()}));
    EXPECT_EQ(k.delta_total, 1u);
    EXPECT_EQ(k.R, 0u);
    EXPECT_EQ(k.tau_total, 2u);
    EXPECT_EQ(k.b1, 0u);

    PlaneRecord missing = node();
    missing.invariants->delta.reset();
    EXPECT_THROW(global_invariants(model(0, {missing})), Error);
}

TEST(Verdict, Examples)
{
    EXPECT_EQ(degeneration_verdict(model(0, {node()})).verdict, Verdict::Degenerates);
    EXPECT_EQ(degeneration_verdict(model(0, {cusp()})).verdict, Verdict::Degenerates);
    const VerdictReport bad = degeneration_verdict(model(0, {node(), nonqh()}));
    EXPECT_EQ(bad.verdict, Verdict::FailsViaTau);
    EXPECT_EQ(bad.witness, 1u);
    EXPECT_EQ(bad.tau_equals_2delta_minus_R, false);
    EXPECT_EQ(bad.ledger_consistent, true);
    const VerdictReport np = degeneration_verdict(model(1, {node(), t469()}));
    EXPECT_EQ(np.verdict, Verdict::FailsViaNonPlanar);
    EXPECT_EQ(np.obstruction_position, (Position{4, -1}));
    EXPECT_EQ(np.obstruction->total_degree, 3u);
    PlaneRecord unanalyzed{"x", std::nullopt, std::nullopt};
    EXPECT_THROW(degeneration_verdict(model(0, {unanalyzed})), Error);
}

TEST(E1, NodalRational)
{
    const SSPage p = e1_page(model(0, {node()}));
    EXPECT_EQ(p.at(0, 0), E(1));
    EXPECT_EQ(p.at(0, 1), E(1));
    EXPECT_EQ(p.at(2, 0), E(1));
    for (int k = 1; k <= 4; ++k) {
        EXPECT_EQ(p.at(k + 1, -k), E(1));
        EXPECT_EQ(p.at(k + 2, -k), E(1));
    }
    // Degeneration pins kappa + k_v = 1 and c = 0; kappa itself stays free.
    EXPECT_EQ(p.at(1, 0), E(kappa + 1));
    EXPECT_EQ(p.at(1, 1), E(kappa + 1));
}

TEST(E1, SmoothGenusOne)
{
    const SSPage p = e1_page(model(1, {}));
    EXPECT_EQ(p.at(0, 0), E(1));
    EXPECT_EQ(p.at(0, 1), E(1));
    EXPECT_EQ(p.at(1, 0), E(1));
    EXPECT_EQ(p.at(1, 1), E(1));
    EXPECT_EQ(p.at(2, 0), E(0));
    for (int k = 1; k <= 4; ++k)
        EXPECT_TRUE(p.at(k + 1, -k).is_zero());
}

TEST(E1, Cusp)
{
    const SSPage p = e1_page(model(0, {cusp()}));
    EXPECT_EQ(p.at(0, 1), E(1));
    EXPECT_EQ(p.at(2, 0), E(2));
    for (int k = 1; k <= 4; ++k) {
        EXPECT_EQ(p.at(k + 1, -k), E(2));
        EXPECT_EQ(p.at(k + 2, -k), E(2));
    }
}

TEST(E1, RejectsNonPlanar)
{
    try {
        e1_page(model(0, {t469()}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NonPlanarInput);
    }
}

TEST(E2, NodalRational)
{
    const SSPage p = e2_page(model(0, {node()}));
    EXPECT_EQ(p.verdict, Verdict::Degenerates);
    for (int k = 1; k <= 4; ++k) {
        EXPECT_TRUE(p.at(k + 1, -k).is_zero());
        EXPECT_TRUE(p.at(k + 2, -k).is_zero());
    }
    EXPECT_TRUE(p.constraints.implies(kv + kappa, 1));
    EXPECT_TRUE(p.constraints.implies(c, 0));
    EXPECT_TRUE(higher_differentials_vanish(p));
    EXPECT_TRUE(betti_consistent(p, global_invariants(model(0, {node()}))));
}

TEST(E2, SmoothEqualsE1)
{
    const CurveModel m = model(3, {});
    const SSPage e1 = e1_page(m);
    const SSPage e2 = e2_page(m);
    for (const auto& [pos, rank] : e1.d1_ranks)
        EXPECT_TRUE(rank.is_zero()) << pos.first << "," << pos.second;
    for (const auto& [pos, e] : e1.entries)
        EXPECT_EQ(e2.at(pos.first, pos.second), e);
}

TEST(E2, NonQuasihomogeneousTail)
{
    const SSPage p = e2_page(model(0, {nonqh()}));
    EXPECT_EQ(p.verdict, Verdict::FailsViaTau);
    EXPECT_EQ(p.at(3, -2), E(1));
    EXPECT_EQ(p.at(2, -1), E(1));
}

TEST(E2, NonPlanarMarker)
{
    const SSPage p = e2_page(model(0, {t469()}));
    EXPECT_EQ(p.verdict, Verdict::FailsViaNonPlanar);
    EXPECT_EQ(p.at(4, -1).kind, EntryKind::Positive);
    EXPECT_EQ(p.at(0, 0), E(1));
}

TEST(HC, QuasihomogeneousShapes)
{
    const HCPages h = hc_pages(model(0, {cusp()}), {-2, 5});
    EXPECT_EQ(h.verdict, Verdict::Degenerates);
    EXPECT_TRUE(h.agrees_with_hodge);
    // m = 2: a single supported position.
    const SSPage& m2 = h.per_m.at(2);
    std::size_t supported = 0;
    for (const auto& [pos, e] : m2.entries)
        supported += !e.is_zero();
    EXPECT_EQ(supported, 1u);
    EXPECT_EQ(m2.at(0, 0), E(2));
    // m = 0 is the Hodge page itself.
    const SSPage e2 = e2_page(model(0, {cusp()}));
    for (const auto& [pos, e] : e2.entries)
        EXPECT_EQ(h.per_m.at(0).at(pos.first, pos.second), e);
    // m = -1 is the same shape moved one column right.
    for (const auto& [pos, e] : e2.entries)
        EXPECT_EQ(h.per_m.at(-1).at(pos.first + 1, pos.second), e);
}

TEST(HC, LeadingTailSurvivesForTauPositive)
{
    // For m >= 3 the first kept column receives no differential, so the
    // tail entry there is tau rather than 0. Still a single position.
    const HCPages h = hc_pages(model(0, {cusp()}), {3, 5});
    for (int m = 3; m <= 5; ++m) {
        const SSPage& page = h.per_m.at(m);
        EXPECT_EQ(page.at(0, 2 - m), E(2)) << m;
        std::size_t supported = 0;
        for (const auto& [pos, e] : page.entries)
            supported += !e.is_zero();
        EXPECT_EQ(supported, 1u);
    }
}

TEST(HC, AgreesOnFailures)
{
    EXPECT_EQ(hc_pages(model(0, {nonqh()})).verdict, Verdict::FailsViaTau);
    const HCPages np = hc_pages(model(1, {node(), t469()}));
    EXPECT_EQ(np.verdict, Verdict::FailsViaNonPlanar);
    EXPECT_EQ(np.per_m.at(0).at(4, -1).kind, EntryKind::Positive);
    EXPECT_EQ(np.per_m.at(-1).at(1, 0), E(1));
    EXPECT_THROW(hc_pages(model(0, {}), {3, 1}), Error);
}

TEST(Render, Text)
{
    const std::string text = render_page(e2_page(model(2, {})), "text");
    EXPECT_NE(text.find("q\\p"), std::string::npos);
    // q rows descending: row 1 printed before row 0.
    EXPECT_LT(text.find("  1 |"), text.find("  0 |"));
    EXPECT_NE(text.find("verdict: Degenerates"), std::string::npos);
    EXPECT_NE(render_page(e2_page(model(0, {t469()})), "text").find(">0"), std::string::npos);
}

TEST(Render, Json)
{
    const auto j = nlohmann::json::parse(render_page(e2_page(model(0, {node()})), "json"));
    EXPECT_EQ(j["page"], "E2");
    EXPECT_EQ(j["verdict"], "Degenerates");
    ASSERT_TRUE(j["entries"].is_array());
    for (const auto& e : j["entries"])
        EXPECT_TRUE(e["provenance"] == "[computed]" || e["provenance"] == "[symbolic]");
    EXPECT_THROW(render_page(e2_page(model(0, {node()})), "yaml"), Error);
}

TEST(Render, SmoothGridHasTwoColumns)
{
    const std::string text = render_page(e2_page(model(0, {})), "text");
    EXPECT_NE(text.find("q\\p    0  1\n"), std::string::npos) << text;
}
