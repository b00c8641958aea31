#include "curvess/error.hpp"
#include "curvess/report.hpp"

#include <gtest/gtest.h>

#include <json.hpp>

using namespace curvess;

namespace {

Report run(const std::string& name)
{
    return analyze(load_embedded(name));
}

const Check* find_check(const std::vector<Check>& checks, const std::string& name)
{
    for (const Check& c : checks)
        if (c.name == name)
            return &c;
    return nullptr;
}

} // namespace

TEST(Report, NodalRational)
{
    const Report r = run("nodal-rational.json");
    EXPECT_EQ(r.overall_verdict(), Verdict::Degenerates);
    EXPECT_FALSE(r.any_failed());
    const Check* milnor = find_check(r.singularities[0].checks, "Milnor formula");
    ASSERT_NE(milnor, nullptr);
    EXPECT_EQ(milnor->status, CheckStatus::Pass);
    const Check* ledger = find_check(r.checks, "Degenerates iff tau = 2 delta - R");
    ASSERT_NE(ledger, nullptr);
    EXPECT_EQ(ledger->status, CheckStatus::Pass);
}

TEST(Report, NonQuasihomogeneous)
{
    const Report r = run("nonqh-quintic.json");
    EXPECT_EQ(r.overall_verdict(), Verdict::FailsViaTau);
    EXPECT_EQ(r.verdict->witness, 0u);
    const auto& inv = r.singularities[0].plane->invariants;
    EXPECT_LT(inv.tau, inv.mu);
    EXPECT_EQ(r.singularities[0].plane->delta, std::nullopt);
    EXPECT_EQ(*inv.delta, 10u);
    EXPECT_FALSE(r.any_failed());
}

TEST(Report, NonPlanar)
{
    const Report r = run("nonplanar-t469.json");
    EXPECT_EQ(r.overall_verdict(), Verdict::FailsViaNonPlanar);
    EXPECT_EQ(r.verdict->obstruction_position, (Position{4, -1}));
    EXPECT_FALSE(r.e1);
    ASSERT_TRUE(r.e2);
    EXPECT_EQ(r.e2->at(4, -1).kind, EntryKind::Positive);
}

TEST(Report, NotACompleteIntersection)
{
    const Report r = run("t345-not-lci.json");
    EXPECT_EQ(r.overall_verdict(), Verdict::Undetermined);
    EXPECT_FALSE(r.model);
    EXPECT_FALSE(r.any_failed());
    EXPECT_EQ(r.singularities[0].lci->delta, 2u);
}

TEST(Report, JsonCarriesProvenance)
{
    const auto j = nlohmann::json::parse(render_report(run("nonqh-quintic.json"), "json"));
    EXPECT_EQ(j["verdict"], "FailsViaTau");
    const auto& s = j["singularities"][0];
    EXPECT_EQ(s["mu"]["provenance"], "[computed]");
    EXPECT_EQ(s["delta"]["provenance"], "[asserted-input]");
    EXPECT_EQ(j["genus"]["provenance"], "[asserted-input]");
    EXPECT_EQ(j["status"], "pass");
}

TEST(Report, Deterministic)
{
    for (const char* name : {"three-points.json", "two-pair.json", "mixed-node-t469.json"}) {
        for (const char* fmt : {"text", "json"}) {
            EXPECT_EQ(render_report(run(name), fmt), render_report(run(name), fmt)) << name;
        }
    }
}

TEST(Report, UnknownFormat)
{
    EXPECT_THROW(render_report(run("nodal-rational.json"), "xml"), Error);
}

TEST(Report, NonIsolatedIsFatal)
{
    CurveDocument doc;
    doc.label = "bad";
    SingularityDocument s;
    s.kind = "plane";
    s.variables = {"u", "v"};
    s.f = "u^2*v^2";
    doc.singularities.push_back(s);
    ReportOptions o;
    o.analysis.cap = 24;
    try {
        analyze(parse_curve(doc), o);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NonIsolated);
    }
}

TEST(Report, BadBranchDataFailsACheck)
{
    CurveDocument doc;
    doc.label = "node with one branch";
    SingularityDocument s;
    s.kind = "plane";
    s.variables = {"u", "v"};
    s.f = "u*v";
    s.branches.push_back({{"t", "0"}, std::nullopt});
    doc.singularities.push_back(s);
    const Report r = analyze(parse_curve(doc));
    EXPECT_TRUE(r.any_failed());
    const Check* milnor = find_check(r.singularities[0].checks, "Milnor formula");
    ASSERT_NE(milnor, nullptr);
    EXPECT_EQ(milnor->status, CheckStatus::Fail);
}

TEST(Corpus, SummaryRows)
{
    const CorpusSummary s = run_corpus();
    EXPECT_FALSE(s.any_failed);
    bool saw_nonqh = false, saw_marker = false;
    for (const CorpusRow& row : s.rows) {
        EXPECT_TRUE(row.error.empty()) << row.document << ": " << row.error;
        if (row.document.rfind("ade-", 0) == 0) {
            EXPECT_EQ(row.mu, row.tau) << row.document;
            EXPECT_EQ(row.qh, true) << row.document;
        }
        if (row.document == "nonqh-quintic.json") {
            saw_nonqh = true;
            EXPECT_LT(*row.tau, *row.mu);
        }
        if (row.document == "nonplanar-t469.json") {
            saw_marker = true;
            EXPECT_EQ(row.verdict, "FailsViaNonPlanar");
        }
    }
    EXPECT_TRUE(saw_nonqh);
    EXPECT_TRUE(saw_marker);
    EXPECT_NE(render_corpus(s, "text").find("status: pass"), std::string::npos);
    EXPECT_EQ(nlohmann::json::parse(render_corpus(s, "json"))["status"], "pass");
}

TEST(Corpus, UnknownName)
{
    EXPECT_THROW(load_embedded("missing.json"), Error);
}
