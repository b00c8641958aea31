#include "curvess/report.hpp"

#include "curvess/error.hpp"
#include "page_json.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace curvess {
namespace {

using nlohmann::ordered_json;

constexpr std::uint64_t kSecondSeed = 0x9e3779b97f4a7c15ULL;

bool is_fatal(const Error& e)
{
    return e.kind() == ErrorKind::NonIsolated || e.kind() == ErrorKind::NotMPrimary;
}

Check make_check(std::string name, bool ok, std::string detail = {})
{
    return {std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)};
}

Check skipped(std::string name, std::string why)
{
    return {std::move(name), CheckStatus::Skipped, std::move(why)};
}

// Runs `f`, turning non-fatal library errors into a failed check.
template <typename F>
void guarded(std::vector<Check>& checks, const std::string& name, F&& f)
{
    try {
        f();
    } catch (const Error& e) {
        if (is_fatal(e))
            throw;
        checks.push_back({name, CheckStatus::Fail, std::string(to_string(e.kind())) + ": " + e.what()});
    }
}

std::size_t delta_order_for(const BranchParam& b)
{
    return 8 * b.max_image_degree();
}

std::size_t lci_delta(const BranchParam& b)
{
    for (std::uint32_t order = static_cast<std::uint32_t>(delta_order_for(b));; order *= 2) {
        try {
            return delta_one_branch(b, order);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NoConductor || order >= 1024)
                throw;
        }
    }
}

SingularityReport analyze_plane(const PlaneSingularity& given, const ParsedSingularity& ps,
                                const ReportOptions& opts)
{
    SingularityReport rep;
    rep.label = ps.label;
    rep.kind = "plane";
    rep.equations = {to_string(given.f())};
    auto& checks = rep.checks;
    PlaneAnalysis pa;
    pa.asserted = ps.asserted;
    pa.weights_given = given.weights().has_value();
    pa.weights = given.weights() ? given.weights() : weight_feasibility(given.f());
    const PlaneSingularity s(given.f(), pa.weights, given.branches(), given.label());
    const AnalysisOptions& ao = opts.analysis;

    pa.invariants = local_invariants(s, ao);
    LocalInvariants& inv = pa.invariants;
    checks.push_back(make_check("tau <= mu", inv.tau <= inv.mu,
                                "mu = " + std::to_string(inv.mu) + ", tau = " + std::to_string(inv.tau)));
    checks.push_back(make_check("weighted homogeneous implies tau = mu", !inv.wh_in_coords || inv.qh_by_saito));
    if (inv.qh_without_rational_weights())
        rep.notes.push_back("tau = mu but no rational weights exist in these coordinates");

    const JetAlgebra M = milnor_algebra(s, ao);
    const MultByF mf = mult_by_f(s, M);
    pa.kernel_dim = mf.kernel_dim;
    pa.cokernel_dim = mf.cokernel_dim;
    checks.push_back(make_check("ker(f) = coker(f) = tau",
                                mf.kernel_dim == inv.tau && mf.cokernel_dim == inv.tau,
                                "kernel " + std::to_string(mf.kernel_dim) + ", cokernel "
                                    + std::to_string(mf.cokernel_dim)));
    if (pa.weights)
        checks.push_back(make_check("Euler relation kills f on M_f", mf.matrix.is_zero()));
    else
        checks.push_back(skipped("Euler relation kills f on M_f", "no weights"));

    guarded(checks, "tail map", [&] {
        pa.tail = tail_map_general(s, ao);
        AnalysisOptions other = ao;
        other.witness_seed = ao.witness_seed + kSecondSeed;
        const TailMap second = tail_map_general(s, other);
        checks.push_back(make_check("tail classes independent of the witness",
                                    second.matrix == pa.tail->matrix));
    });
    if (pa.weights && pa.tail) {
        guarded(checks, "scalar tail formula", [&] {
            pa.scalar_tail = tail_map_wh_scalar(s, ao);
            checks.push_back(make_check("scalar tail formula = general tail map",
                                        pa.scalar_tail->matrix == pa.tail->matrix));
        });
    } else {
        checks.push_back(skipped("scalar tail formula = general tail map", "no weights"));
    }
    if (pa.tail && inv.qh_by_saito && pa.weights)
        checks.push_back(make_check("quasihomogeneous tail has full rank", pa.tail->rank == inv.tau,
                                    "rank " + std::to_string(pa.tail->rank)));
    else
        checks.push_back(skipped("quasihomogeneous tail has full rank",
                                 inv.qh_by_saito ? "no weights in these coordinates" : "not quasihomogeneous"));

    if (!s.branches().empty()) {
        guarded(checks, "Milnor formula", [&] {
            pa.delta = delta_report(s, ao);
            inv.delta = pa.delta->delta;
            inv.r = pa.delta->r;
            checks.push_back(make_check("Milnor formula", true,
                                        std::to_string(inv.mu) + " = 2*" + std::to_string(*inv.delta)
                                            + " - " + std::to_string(*inv.r) + " + 1"));
        });
        if (ps.asserted && pa.delta)
            checks.push_back(make_check("asserted delta/r match the branch data",
                                        ps.asserted->delta == pa.delta->delta && ps.asserted->r == pa.delta->r));
    } else if (ps.asserted) {
        inv.delta = ps.asserted->delta;
        inv.r = ps.asserted->r;
        checks.push_back(skipped("Milnor formula", "delta and r are asserted input"));
    } else {
        checks.push_back(skipped("Milnor formula", "no branch data"));
    }

    if (opts.stabilization) {
        guarded(checks, "stable under truncation + 2", [&] {
            AnalysisOptions bumped = ao;
            bumped.bump += 2;
            const MilnorTjurina mt = milnor_tjurina(s, bumped);
            bool same = mt.mu == inv.mu && mt.tau == inv.tau;
            if (pa.tail)
                same = same && tail_map_general(s, bumped).matrix == pa.tail->matrix;
            if (pa.delta)
                same = same && delta_report(s, ao, pa.delta->working_order + 4).delta == pa.delta->delta;
            checks.push_back(make_check("stable under truncation + 2", same));
        });
    }
    rep.plane = std::move(pa);
    return rep;
}

SingularityReport analyze_lci(const LciPresentation& p, const ParsedSingularity& ps)
{
    SingularityReport rep;
    rep.label = ps.label;
    rep.kind = "lci";
    for (const Poly& f : p.equations())
        rep.equations.push_back(to_string(f));
    auto& checks = rep.checks;
    LciAnalysis la;

    try {
        la.e = embedding_dimension(p);
        la.complete_intersection = true;
        if (ps.declared_lci)
            checks.push_back(make_check("declared lci flag", *ps.declared_lci));
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::NotCompleteIntersection && ps.declared_lci == false) {
            checks.push_back(make_check("declared non-lci germ is not a complete intersection", true, e.what()));
            rep.notes.push_back("outside the lci setting; no degeneration verdict applies");
        } else {
            checks.push_back(make_check("minimal complete-intersection presentation", false, e.what()));
        }
    }

    if (p.parametrization() && !p.equations().empty()) {
        la.parametrization_ok = verify_parametrization(p);
        checks.push_back(make_check("equations vanish on the parametrization", *la.parametrization_ok));
    } else {
        checks.push_back(skipped("equations vanish on the parametrization", "no parametrization"));
    }

    if (la.e) {
        guarded(checks, "obstruction", [&] {
            la.obstruction = obstruction(p);
            const ObstructionReport& ob = *la.obstruction;
            checks.push_back(make_check("Jacobian entries lie in m", ob.jacobian_in_m));
            checks.push_back(make_check("coker fibre dimension = e - 1", ob.coker_mod_m_dim + 1 == ob.e,
                                        std::to_string(ob.coker_mod_m_dim)));
            checks.push_back(make_check("H^-1 nonzero in weight e + 1", ob.nonzero_H_minus1));
        });
    }

    if (ps.asserted) {
        la.delta = ps.asserted->delta;
        la.r = ps.asserted->r;
        la.delta_asserted = true;
    } else if (p.parametrization() && la.parametrization_ok.value_or(false)) {
        guarded(checks, "delta from the parametrization", [&] {
            la.delta = lci_delta(*p.parametrization());
            la.r = 1;
        });
    }
    rep.lci = std::move(la);
    return rep;
}

bool tails_uniform(const SSPage& page)
{
    for (int p = 2; p <= page.tail_window; ++p)
        if (!(page.at(p + 1, -p) == page.at(2, -1)) || !(page.at(p + 2, -p) == page.at(3, -1)))
            return false;
    return true;
}

void global_analysis(Report& rep, const ReportOptions& opts)
{
    CurveModel model;
    model.genus = rep.genus;
    model.label = rep.label;
    for (const SingularityReport& s : rep.singularities) {
        if (s.plane) {
            PlaneRecord rec{s.label, s.plane->invariants, std::nullopt};
            if (s.plane->tail)
                rec.tail_rank = s.plane->tail->rank;
            model.singularities.emplace_back(std::move(rec));
        } else if (s.lci && s.lci->obstruction) {
            model.singularities.emplace_back(LciRecord{s.label, *s.lci->obstruction, s.lci->delta, s.lci->r});
        } else {
            rep.notes.push_back("no verdict: '" + s.label + "' is outside the lci setting");
            return;
        }
    }

    rep.verdict = degeneration_verdict(model);
    if (rep.verdict->ledger_consistent)
        rep.checks.push_back(make_check("Degenerates iff tau = 2 delta - R", *rep.verdict->ledger_consistent));
    else
        rep.checks.push_back(skipped("Degenerates iff tau = 2 delta - R",
                                     rep.verdict->verdict == Verdict::FailsViaNonPlanar ? "non-planar curve"
                                                                                        : "missing branch data"));
    try {
        rep.global = global_invariants(model);
        if (rep.verdict->verdict != Verdict::FailsViaNonPlanar)
            rep.checks.push_back(make_check("mu_total = 2 delta - R",
                                            rep.global->mu_total + rep.global->R == 2 * rep.global->delta_total));
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::MissingBranchData)
            throw;
        rep.notes.push_back(std::string("pages skipped: ") + e.what());
        rep.model = std::move(model);
        return;
    }

    try {
        if (rep.verdict->verdict != Verdict::FailsViaNonPlanar)
            rep.e1 = e1_page(model, opts.tail_window);
        rep.e2 = e2_page(model, opts.tail_window);
        rep.hc = hc_pages(model, opts.hc_window, opts.tail_window);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::UnanalyzedSingularity)
            throw;
        rep.notes.push_back(std::string("pages skipped: ") + e.what());
        rep.model = std::move(model);
        return;
    }
    rep.checks.push_back(make_check("Hochschild-to-cyclic verdict = Hodge verdict", rep.hc->agrees_with_hodge,
                                    std::string(to_string(rep.hc->verdict))));
    rep.checks.push_back(make_check("page constraints consistent", rep.e2->constraints.consistent()));
    if (rep.e1)
        rep.checks.push_back(make_check("tail entries independent of p", tails_uniform(*rep.e1) && tails_uniform(*rep.e2)));
    if (rep.verdict->verdict == Verdict::Degenerates)
        rep.checks.push_back(make_check("E2 totals match Betti numbers", betti_consistent(*rep.e2, *rep.global)));
    rep.model = std::move(model);
}

ordered_json tagged(const ordered_json& value, std::string_view provenance)
{
    ordered_json j;
    j["value"] = value;
    j["provenance"] = provenance;
    return j;
}

ordered_json matrix_json(const Matrix& m)
{
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json checks_json(const std::vector<Check>& checks)
{
    ordered_json arr = ordered_json::array();
    for (const Check& c : checks) {
        ordered_json j;
        j["name"] = c.name;
        j["status"] = to_string(c.status);
        if (!c.detail.empty())
            j["detail"] = c.detail;
        arr.push_back(std::move(j));
    }
    return arr;
}

std::string monomial_text(const Monomial& m)
{
    return to_string(Poly::monomial({"u", "v"}, m));
}

ordered_json singularity_json(const SingularityReport& s)
{
    constexpr std::string_view C = "[computed]";
    constexpr std::string_view A = "[asserted-input]";
    ordered_json j;
    j["label"] = s.label;
    j["kind"] = s.kind;
    j["equations"] = s.equations;
    if (s.plane) {
        const PlaneAnalysis& pa = *s.plane;
        const LocalInvariants& inv = pa.invariants;
        j["mu"] = tagged(inv.mu, C);
        j["tau"] = tagged(inv.tau, C);
        j["qh_by_saito"] = tagged(inv.qh_by_saito, C);
        j["wh_in_coords"] = tagged(inv.wh_in_coords, C);
        if (pa.weights)
            j["weights"] = tagged(ordered_json::array({to_string(pa.weights->w1), to_string(pa.weights->w2)}),
                                  pa.weights_given ? A : C);
        const std::string_view dprov = pa.delta ? C : A;
        if (inv.delta)
            j["delta"] = tagged(*inv.delta, dprov);
        if (inv.r)
            j["r"] = tagged(*inv.r, dprov);
        if (pa.delta) {
            j["per_branch_delta"] = tagged(pa.delta->per_branch_delta, C);
            j["intersections"] = tagged(pa.delta->pairwise, C);
        }
        if (pa.asserted)
            j["asserted_provenance"] = pa.asserted->provenance;
        j["kernel_dim"] = tagged(pa.kernel_dim, C);
        j["cokernel_dim"] = tagged(pa.cokernel_dim, C);
        if (pa.tail) {
            ordered_json t;
            ordered_json basis = ordered_json::array();
            for (const Monomial& m : pa.tail->target_basis)
                basis.push_back(monomial_text(m));
            t["target_basis"] = basis;
            t["matrix"] = tagged(matrix_json(pa.tail->matrix), C);
            t["rank"] = tagged(pa.tail->rank, C);
            j["tail_map"] = std::move(t);
            j["d10_local_rank"] = tagged(pa.tail->rank, C);
        }
    }
    if (s.lci) {
        const LciAnalysis& la = *s.lci;
        j["complete_intersection"] = tagged(la.complete_intersection, C);
        if (la.e)
            j["embedding_dimension"] = tagged(*la.e, C);
        const std::string_view dprov = la.delta_asserted ? A : C;
        if (la.delta)
            j["delta"] = tagged(*la.delta, dprov);
        if (la.r)
            j["r"] = tagged(*la.r, dprov);
        if (la.obstruction) {
            const ObstructionReport& ob = *la.obstruction;
            ordered_json o;
            ordered_json ranks = ordered_json::array();
            for (const TermRank& tr : ob.term_ranks)
                ranks.push_back({{"degree", tr.degree}, {"rank", tr.rank.get_str()}});
            o["term_ranks"] = tagged(ranks, C);
            o["coker_mod_m_dim"] = tagged(ob.coker_mod_m_dim, C);
            o["nonzero_H_minus1"] = tagged(ob.nonzero_H_minus1, C);
            o["position"] = tagged(ordered_json::array({ob.obstruction_position.first, ob.obstruction_position.second}), C);
            o["total_degree"] = tagged(ob.total_degree, C);
            j["obstruction"] = std::move(o);
        }
    }
    j["checks"] = checks_json(s.checks);
    j["notes"] = s.notes;
    return j;
}

void render_matrix_text(std::ostream& os, const Matrix& m, const std::string& indent)
{
    std::vector<std::size_t> width(m.cols(), 1);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            width[j] = std::max(width[j], to_string(m(i, j)).size());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << indent << "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const std::string s = to_string(m(i, j));
            os << (j ? " " : "") << std::string(width[j] - s.size(), ' ') << s;
        }
        os << "]\n";
    }
}

void render_checks_text(std::ostream& os, const std::vector<Check>& checks, const std::string& indent)
{
    for (const Check& c : checks) {
        os << indent << (c.status == CheckStatus::Pass ? "PASS " : c.status == CheckStatus::Fail ? "FAIL " : "SKIP ")
           << c.name;
        if (!c.detail.empty())
            os << " (" << c.detail << ")";
        os << "\n";
    }
}

} // namespace

std::string_view to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
    }
    return "?";
}

bool Report::any_failed() const
{
    auto failed = [](const std::vector<Check>& cs) {
        for (const Check& c : cs)
            if (c.status == CheckStatus::Fail)
                return true;
        return false;
    };
    if (failed(checks))
        return true;
    for (const SingularityReport& s : singularities)
        if (failed(s.checks))
            return true;
    return false;
}

Verdict Report::overall_verdict() const
{
    return verdict ? verdict->verdict : Verdict::Undetermined;
}

Report analyze(const ParsedCurve& curve, const ReportOptions& options)
{
    Report rep;
    rep.label = curve.document.label;
    rep.genus = curve.document.genus;
    for (const ParsedSingularity& ps : curve.singularities) {
        if (const auto* plane = std::get_if<PlaneSingularity>(&ps.geometry))
            rep.singularities.push_back(analyze_plane(*plane, ps, options));
        else
            rep.singularities.push_back(analyze_lci(std::get<LciPresentation>(ps.geometry), ps));
    }
    global_analysis(rep, options);
    return rep;
}

std::string render_report(const Report& rep, std::string_view format)
{
    if (format == "json") {
        ordered_json j;
        j["label"] = rep.label;
        j["genus"] = tagged(rep.genus, "[asserted-input]");
        j["singularities"] = ordered_json::array();
        for (const SingularityReport& s : rep.singularities)
            j["singularities"].push_back(singularity_json(s));
        if (rep.global) {
            constexpr std::string_view C = "[computed]";
            ordered_json g;
            g["delta"] = tagged(rep.global->delta_total, C);
            g["tau"] = tagged(rep.global->tau_total, C);
            g["mu"] = tagged(rep.global->mu_total, C);
            g["R"] = tagged(rep.global->R, C);
            g["p_a"] = tagged(rep.global->p_a, C);
            g["betti"] = tagged(ordered_json::array({rep.global->b0, rep.global->b1, rep.global->b2}), C);
            j["global"] = std::move(g);
        }
        j["verdict"] = std::string(to_string(rep.overall_verdict()));
        if (rep.verdict && rep.verdict->witness)
            j["witness"] = rep.verdict->witness_label;
        if (rep.verdict && rep.verdict->obstruction_position)
            j["obstruction_position"] = ordered_json::array(
                {rep.verdict->obstruction_position->first, rep.verdict->obstruction_position->second});
        if (rep.e1)
            j["e1"] = detail::page_to_json(*rep.e1);
        if (rep.e2)
            j["e2"] = detail::page_to_json(*rep.e2);
        if (rep.hc) {
            ordered_json h;
            h["verdict"] = std::string(to_string(rep.hc->verdict));
            h["pages"] = ordered_json::array();
            for (const auto& [m, page] : rep.hc->per_m) {
                ordered_json pj = detail::page_to_json(page);
                pj["m"] = m;
                h["pages"].push_back(std::move(pj));
            }
            j["hc"] = std::move(h);
        }
        j["checks"] = checks_json(rep.checks);
        j["notes"] = rep.notes;
        j["status"] = rep.any_failed() ? "fail" : "pass";
        return j.dump(2) + "\n";
    }
    if (format != "text")
        throw Error(ErrorKind::UnknownFormat, "unknown format '" + std::string(format) + "'");

    std::ostringstream os;
    os << "curve: " << rep.label << " (genus " << rep.genus << " [asserted-input])\n";
    for (std::size_t i = 0; i < rep.singularities.size(); ++i) {
        const SingularityReport& s = rep.singularities[i];
        os << "\nsingular point " << i + 1 << ": " << s.label << " [" << s.kind << "]\n";
        if (s.plane) {
            const PlaneAnalysis& pa = *s.plane;
            const LocalInvariants& inv = pa.invariants;
            os << "  mu = " << inv.mu << ", tau = " << inv.tau << " [computed]\n";
            os << "  quasihomogeneous (tau = mu): " << (inv.qh_by_saito ? "yes" : "no") << " [computed]\n";
            os << "  weights: ";
            if (pa.weights)
                os << "(" << to_string(pa.weights->w1) << ", " << to_string(pa.weights->w2) << ") "
                   << (pa.weights_given ? "[asserted-input]" : "[computed]") << "\n";
            else
                os << "none in these coordinates [computed]\n";
            if (inv.delta)
                os << "  delta = " << *inv.delta << ", r = " << *inv.r << " "
                   << (pa.delta ? "[computed]" : "[asserted-input]") << "\n";
            if (pa.asserted)
                os << "  asserted data: " << pa.asserted->provenance << "\n";
            os << "  multiplication by f on M_f: kernel " << pa.kernel_dim << ", cokernel " << pa.cokernel_dim
               << " [computed]\n";
            if (pa.tail) {
                os << "  tail d1: rank " << pa.tail->rank << " of " << pa.tail->matrix.rows() << " [computed]\n";
                render_matrix_text(os, pa.tail->matrix, "    ");
            }
        }
        if (s.lci) {
            const LciAnalysis& la = *s.lci;
            os << "  equations:";
            for (const auto& e : s.equations)
                os << " " << e << ";";
            os << "\n";
            if (la.e)
                os << "  embedding dimension " << *la.e << " [computed]\n";
            if (la.delta)
                os << "  delta = " << *la.delta << ", r = " << *la.r << " "
                   << (la.delta_asserted ? "[asserted-input]" : "[computed]") << "\n";
            if (la.obstruction) {
                const ObstructionReport& ob = *la.obstruction;
                os << "  term ranks (weight " << ob.e + 1 << "):";
                for (const TermRank& tr : ob.term_ranks)
                    os << " " << tr.degree << ":" << tr.rank.get_str();
                os << " [computed]\n";
                os << "  coker fibre dimension " << ob.coker_mod_m_dim << ", obstruction at ("
                   << ob.obstruction_position.first << ", " << ob.obstruction_position.second
                   << "), total degree " << ob.total_degree << " [computed]\n";
            }
        }
        for (const auto& n : s.notes)
            os << "  note: " << n << "\n";
        render_checks_text(os, s.checks, "  ");
    }
    if (rep.global) {
        const GlobalInvariants& g = *rep.global;
        os << "\nglobal: delta = " << g.delta_total << ", tau = " << g.tau_total << ", mu = " << g.mu_total
           << ", R = " << g.R << ", p_a = " << g.p_a << ", betti (" << g.b0 << ", " << g.b1 << ", " << g.b2
           << ") [computed]\n";
    }
    os << "\nverdict: " << to_string(rep.overall_verdict());
    if (rep.verdict && rep.verdict->witness)
        os << " (witness: " << rep.verdict->witness_label << ")";
    if (rep.verdict && rep.verdict->obstruction_position)
        os << " at (" << rep.verdict->obstruction_position->first << ", "
           << rep.verdict->obstruction_position->second << ")";
    os << "\n";
    if (rep.e1)
        os << "\n" << render_page(*rep.e1, "text");
    if (rep.e2)
        os << "\n" << render_page(*rep.e2, "text");
    if (rep.hc) {
        os << "\nHochschild-to-cyclic verdict: " << to_string(rep.hc->verdict) << "\n";
        for (const auto& [m, page] : rep.hc->per_m)
            os << "\n" << render_page(page, "text");
    }
    for (const auto& n : rep.notes)
        os << "note: " << n << "\n";
    os << "\n";
    render_checks_text(os, rep.checks, "");
    os << "status: " << (rep.any_failed() ? "fail" : "pass") << "\n";
    return os.str();
}

} // namespace curvess
