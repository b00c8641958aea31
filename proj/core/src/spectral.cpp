#include "curvess/spectral.hpp"

#include "curvess/error.hpp"
#include "page_json.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace curvess {
namespace {

const AffineExpr kKappa = AffineExpr::unknown("kappa");
const AffineExpr kC = AffineExpr::unknown("c");
const AffineExpr kKv = AffineExpr::unknown("k_v");

const LocalInvariants& require_invariants(const PlaneRecord& rec)
{
    if (!rec.invariants)
        throw Error(ErrorKind::UnanalyzedSingularity, "singularity '" + rec.label + "' was not analyzed");
    return *rec.invariants;
}

const LciRecord* first_nonplanar(const CurveModel& c)
{
    for (const auto& rec : c.singularities)
        if (const auto* l = std::get_if<LciRecord>(&rec))
            return l;
    return nullptr;
}

struct PageData {
    SSPage e1;
    GlobalInvariants global;
};

PageData build_e1(const CurveModel& c, int tail_window)
{
    if (first_nonplanar(c))
        throw Error(ErrorKind::NonPlanarInput, "E1 shape needs plane singularities only");
    if (tail_window < 1)
        throw Error(ErrorKind::InvalidArgument, "tail window must be at least 1");
    PageData d;
    d.global = global_invariants(c);
    std::size_t tail_rank = 0;
    for (const auto& rec : c.singularities) {
        const auto& plane = std::get<PlaneRecord>(rec);
        if (!plane.tail_rank)
            throw Error(ErrorKind::UnanalyzedSingularity, "no tail map for '" + plane.label + "'");
        tail_rank += *plane.tail_rank;
    }

    const AffineExpr g = c.genus;
    const AffineExpr delta = d.global.delta_total;
    const AffineExpr tau = d.global.tau_total;
    SSPage& page = d.e1;
    page.name = "E1";
    page.tail_window = tail_window;
    auto set = [&](int p, int q, const AffineExpr& value, const AffineExpr& out_rank) {
        page.entries[{p, q}] = Entry::of(value);
        page.d1_ranks[{p, q}] = Entry::of(out_rank);
    };
    set(0, 0, 1, 0);
    set(0, 1, g + delta, g + delta - kKv);
    set(1, 0, kKappa + tau - kC, tau - kC);
    set(1, 1, tau + 1 - g - delta + kKappa - kC, 0);
    set(2, 0, tau, 0);
    for (int p = 1; p <= tail_window; ++p) {
        set(p + 1, -p, tau, tail_rank);
        set(p + 2, -p, tau, 0);
    }
    page.notes.push_back("tail rows repeat for every p >= 1; shown for p <= " + std::to_string(tail_window));
    return d;
}

Entry d1_rank_at(const SSPage& e1, int p, int q)
{
    auto it = e1.d1_ranks.find({p, q});
    return it == e1.d1_ranks.end() ? Entry{} : it->second;
}

ConstraintSystem page_constraints(const CurveModel& c, const GlobalInvariants& g, Verdict v,
                                  const AffineExpr& e2_11)
{
    ConstraintSystem cs;
    if (g.tau_total == 0)
        cs.add(kC, 0);
    if (c.singularities.empty())
        cs.add(kKv, c.genus);
    if (v == Verdict::Degenerates) {
        cs.add(kC, 0);
        cs.add(kKv + kKappa, 2 * c.genus + g.R);
        cs.add(e2_11 + kC, 1);
    }
    return cs;
}

// E2 of the subcomplex keeping Hodge columns p >= first_col, shifted by -shift.
SSPage derived_page(const SSPage& e1, int first_col, int shift, const ConstraintSystem& cs)
{
    SSPage page;
    page.tail_window = e1.tail_window;
    page.constraints = cs;
    for (const auto& [pos, entry] : e1.entries) {
        const auto [p, q] = pos;
        if (p < first_col)
            continue;
        AffineExpr value = entry.value - d1_rank_at(e1, p, q).value;
        if (p > first_col)
            value -= d1_rank_at(e1, p - 1, q).value;
        page.entries[{p - shift, q}] = Entry::of(cs.reduce(value));
    }
    return page;
}

Verdict hodge_verdict_only(const CurveModel& c)
{
    return degeneration_verdict(c).verdict;
}

} // namespace

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::Degenerates: return "Degenerates";
    case Verdict::FailsViaTau: return "FailsViaTau";
    case Verdict::FailsViaNonPlanar: return "FailsViaNonPlanar";
    case Verdict::Undetermined: return "Undetermined";
    }
    return "?";
}

std::string to_string(const Entry& e)
{
    return e.kind == EntryKind::Positive ? ">0" : to_string(e.value);
}

Entry SSPage::at(int col, int q) const
{
    auto it = entries.find({col, q});
    return it == entries.end() ? Entry{} : it->second;
}

GlobalInvariants global_invariants(const CurveModel& c)
{
    GlobalInvariants g;
    for (const auto& rec : c.singularities) {
        std::size_t delta = 0;
        std::size_t r = 0;
        if (const auto* plane = std::get_if<PlaneRecord>(&rec)) {
            const LocalInvariants& inv = require_invariants(*plane);
            if (!inv.delta || !inv.r)
                throw Error(ErrorKind::MissingBranchData, "no delta/r for '" + plane->label + "'");
            delta = *inv.delta;
            r = *inv.r;
            g.tau_total += inv.tau;
            g.mu_total += inv.mu;
        } else {
            const auto& lci = std::get<LciRecord>(rec);
            if (!lci.delta || !lci.r)
                throw Error(ErrorKind::MissingBranchData, "no delta/r for '" + lci.label + "'");
            delta = *lci.delta;
            r = *lci.r;
            g.mu_total += 2 * delta + 1 - r;
        }
        if (r == 0)
            throw Error(ErrorKind::InvalidArgument, "branch count must be positive");
        g.delta_total += delta;
        g.R += r - 1;
    }
    g.p_a = c.genus + g.delta_total;
    g.b0 = 1;
    g.b1 = 2 * c.genus + g.R;
    g.b2 = 1;
    return g;
}

VerdictReport degeneration_verdict(const CurveModel& c)
{
    VerdictReport rep;
    rep.verdict = Verdict::Degenerates;
    bool planar = true;
    for (std::size_t i = 0; i < c.singularities.size(); ++i) {
        if (const auto* plane = std::get_if<PlaneRecord>(&c.singularities[i])) {
            const LocalInvariants& inv = require_invariants(*plane);
            if (!inv.qh_by_saito && rep.verdict == Verdict::Degenerates) {
                rep.verdict = Verdict::FailsViaTau;
                rep.witness = i;
                rep.witness_label = plane->label;
            }
        } else {
            const auto& lci = std::get<LciRecord>(c.singularities[i]);
            if (planar) {
                planar = false;
                rep.verdict = lci.obstruction.nonzero_H_minus1 ? Verdict::FailsViaNonPlanar
                                                               : Verdict::Undetermined;
                rep.witness = i;
                rep.witness_label = lci.label;
                rep.obstruction = lci.obstruction;
                rep.obstruction_position = lci.obstruction.obstruction_position;
            }
        }
    }
    if (planar) {
        try {
            const GlobalInvariants g = global_invariants(c);
            rep.tau_equals_2delta_minus_R = g.tau_total + g.R == 2 * g.delta_total;
            rep.ledger_consistent =
                *rep.tau_equals_2delta_minus_R == (rep.verdict == Verdict::Degenerates);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::MissingBranchData)
                throw;
        }
    }
    return rep;
}

SSPage e1_page(const CurveModel& c, int tail_window)
{
    PageData d = build_e1(c, tail_window);
    const Verdict v = hodge_verdict_only(c);
    const AffineExpr e2_11 = d.e1.at(1, 1).value - d1_rank_at(d.e1, 0, 1).value;
    SSPage page = std::move(d.e1);
    page.constraints = page_constraints(c, d.global, v, e2_11);
    for (auto& [pos, e] : page.entries)
        e = Entry::of(page.constraints.reduce(e.value));
    for (auto& [pos, e] : page.d1_ranks)
        e = Entry::of(page.constraints.reduce(e.value));
    page.verdict = v;
    return page;
}

SSPage e2_page(const CurveModel& c, int tail_window)
{
    const VerdictReport vr = degeneration_verdict(c);
    if (vr.verdict == Verdict::FailsViaNonPlanar || vr.verdict == Verdict::Undetermined) {
        SSPage page;
        page.name = "E2";
        page.tail_window = tail_window;
        page.verdict = vr.verdict;
        page.entries[{0, 0}] = Entry::of(1);
        if (vr.obstruction_position)
            page.entries[*vr.obstruction_position] = Entry::positive();
        page.notes.push_back("non-planar point '" + vr.witness_label + "': H^-1 of weight "
                             + std::to_string(vr.obstruction->e + 1) + " is nonzero");
        return page;
    }

    const PageData d = build_e1(c, tail_window);
    const AffineExpr e2_11 = d.e1.at(1, 1).value - d1_rank_at(d.e1, 0, 1).value;
    const ConstraintSystem cs = page_constraints(c, d.global, vr.verdict, e2_11);
    SSPage page = derived_page(d.e1, 0, 0, cs);
    page.name = "E2";
    page.verdict = vr.verdict;
    page.notes = d.e1.notes;
    if (!cs.consistent())
        page.notes.push_back("constraint system is inconsistent");
    return page;
}

HCPages hc_pages(const CurveModel& c, std::pair<int, int> window, int tail_window)
{
    if (window.first > window.second)
        throw Error(ErrorKind::InvalidArgument, "empty HC window");
    const VerdictReport vr = degeneration_verdict(c);
    HCPages out;

    if (vr.verdict == Verdict::FailsViaNonPlanar || vr.verdict == Verdict::Undetermined) {
        const int top = static_cast<int>(vr.obstruction->e) + 1;
        for (int m = window.first; m <= window.second; ++m) {
            SSPage page;
            page.name = "E2(F_" + std::to_string(m) + ")";
            page.column_name = "a";
            page.tail_window = tail_window;
            page.verdict = vr.verdict;
            if (m <= 0)
                page.entries[{-m, 0}] = Entry::of(1);
            if (top >= std::max(0, m))
                page.entries[{top - m, -1}] = Entry::positive();
            out.per_m.emplace(m, std::move(page));
        }
        out.verdict = vr.verdict;
        out.agrees_with_hodge = true;
        return out;
    }

    const PageData d = build_e1(c, tail_window);
    const AffineExpr e2_11 = d.e1.at(1, 1).value - d1_rank_at(d.e1, 0, 1).value;
    const ConstraintSystem cs = page_constraints(c, d.global, vr.verdict, e2_11);
    bool all_vanish = true;
    for (int m = window.first; m <= window.second; ++m) {
        SSPage page = derived_page(d.e1, std::max(0, m), m, cs);
        page.name = "E2(F_" + std::to_string(m) + ")";
        page.column_name = "a";
        all_vanish = all_vanish && higher_differentials_vanish(page);
        out.per_m.emplace(m, std::move(page));
    }
    if (vr.verdict != Verdict::Degenerates)
        out.verdict = vr.verdict; // the m = 0 summand is the Hodge sequence itself
    else
        out.verdict = all_vanish ? Verdict::Degenerates : Verdict::Undetermined;
    for (auto& [m, page] : out.per_m)
        page.verdict = out.verdict;
    out.agrees_with_hodge = out.verdict == vr.verdict;
    return out;
}

bool higher_differentials_vanish(const SSPage& page)
{
    std::vector<Position> support;
    for (const auto& [pos, e] : page.entries)
        if (!e.is_zero())
            support.push_back(pos);
    for (const Position& s : support)
        for (const Position& t : support) {
            const int r = t.first - s.first;
            if (r >= 2 && t.second == s.second + 1 - r)
                return false;
        }
    return true;
}

bool betti_consistent(const SSPage& e2, const GlobalInvariants& g)
{
    AffineExpr deg1;
    AffineExpr deg2;
    for (const auto& [pos, e] : e2.entries) {
        if (e.kind == EntryKind::Positive)
            return false;
        if (pos.first + pos.second == 1)
            deg1 += e.value;
        else if (pos.first + pos.second == 2)
            deg2 += e.value;
    }
    return e2.constraints.implies(deg1, g.b1) && e2.constraints.implies(deg2, g.b2);
}

namespace detail {

std::string_view provenance_of(const Entry& e)
{
    return e.kind == EntryKind::Symbolic ? "[symbolic]" : "[computed]";
}

nlohmann::ordered_json page_to_json(const SSPage& page)
{
    using nlohmann::ordered_json;
    ordered_json j;
    j["page"] = page.name;
    j["column_index"] = page.column_name;
    auto entry_json = [](const Position& pos, const Entry& e, const std::string& col) {
        ordered_json x;
        x[col] = pos.first;
        x["q"] = pos.second;
        x["value"] = to_string(e);
        x["kind"] = e.kind == EntryKind::Exact ? "exact"
                    : e.kind == EntryKind::Symbolic ? "symbolic" : "positive";
        x["provenance"] = provenance_of(e);
        return x;
    };
    j["entries"] = ordered_json::array();
    for (const auto& [pos, e] : page.entries)
        j["entries"].push_back(entry_json(pos, e, page.column_name));
    if (!page.d1_ranks.empty()) {
        j["d1_ranks"] = ordered_json::array();
        for (const auto& [pos, e] : page.d1_ranks)
            j["d1_ranks"].push_back(entry_json(pos, e, page.column_name));
    }
    j["constraints"] = ordered_json::array();
    for (const auto& eq : page.constraints.equations())
        j["constraints"].push_back(to_string(eq));
    j["solved"] = ordered_json::array();
    for (const auto& eq : page.constraints.solutions())
        j["solved"].push_back(to_string(eq));
    j["verdict"] = to_string(page.verdict);
    j["notes"] = page.notes;
    return j;
}

} // namespace detail

std::string render_page(const SSPage& page, std::string_view format)
{
    if (format == "json")
        return detail::page_to_json(page).dump(2) + "\n";
    if (format != "text")
        throw Error(ErrorKind::UnknownFormat, "unknown format '" + std::string(format) + "'");

    std::set<int> cols{0, 1};
    std::set<int> rows{0, 1};
    for (const auto& [pos, e] : page.entries) {
        if (e.is_zero())
            continue;
        cols.insert(pos.first);
        rows.insert(pos.second);
    }
    const int c0 = *cols.begin(), c1 = *cols.rbegin();
    const int r0 = *rows.begin(), r1 = *rows.rbegin();

    std::size_t width = 1;
    for (const auto& [pos, e] : page.entries)
        width = std::max(width, to_string(e).size());
    for (int p = c0; p <= c1; ++p)
        width = std::max(width, std::to_string(p).size());
    std::size_t label_width = page.column_name.size() + 2;
    for (int q = r0; q <= r1; ++q)
        label_width = std::max(label_width, std::to_string(q).size());

    auto pad = [](const std::string& s, std::size_t w) {
        return std::string(w > s.size() ? w - s.size() : 0, ' ') + s;
    };
    std::ostringstream os;
    os << page.name << "\n";
    for (int q = r1; q >= r0; --q) {
        os << pad(std::to_string(q), label_width) << " |";
        for (int p = c0; p <= c1; ++p)
            os << "  " << pad(to_string(page.at(p, q)), width);
        os << "\n";
    }
    os << std::string(label_width, ' ') << " +";
    for (int p = c0; p <= c1; ++p)
        os << std::string(width + 2, '-');
    os << "\n" << pad("q\\" + page.column_name, label_width) << "  ";
    for (int p = c0; p <= c1; ++p)
        os << "  " << pad(std::to_string(p), width);
    os << "\n";
    for (const auto& eq : page.constraints.solutions())
        os << "constraint: " << to_string(eq) << "\n";
    if (!page.constraints.consistent())
        os << "constraint: inconsistent\n";
    for (const auto& note : page.notes)
        os << "note: " << note << "\n";
    os << "verdict: " << to_string(page.verdict) << "\n";
    return os.str();
}

} // namespace curvess
