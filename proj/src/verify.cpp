#include "heronq/verify.hpp"

#include <algorithm>

#include "heronq/correspond.hpp"
#include "heronq/curve.hpp"
#include "heronq/families.hpp"
#include "heronq/heights.hpp"

namespace heronq {

std::vector<Quadrilateral> dihedral_labelings(const Quadrilateral& q) {
    const Rational s[4] = {q.a(), q.b(), q.c(), q.d()};
    std::vector<Quadrilateral> out;
    out.reserve(8);
    for (int r = 0; r < 4; ++r) {
        out.push_back(Quadrilateral::make(s[r], s[(r + 1) % 4], s[(r + 2) % 4], s[(r + 3) % 4]));
        out.push_back(Quadrilateral::make(s[(r + 3) % 4], s[(r + 2) % 4], s[(r + 1) % 4], s[r]));
    }
    return out;
}

namespace {

Rational alpha_of(const Quadrilateral& q) {
    return (q.a().squared() + q.b().squared() - q.c().squared() + q.d().squared()) / 2;
}

Table2RowReport verify_row2(const Table2Row& row, double tol) {
    Table2RowReport rep;
    rep.n = row.n;
    rep.claimed_rank = row.claimed_rank;

    rep.area_ok = area(row.sides) == std::optional<Rational>(Rational(row.n));

    // Which labeling, if any, reproduces the printed alpha.
    const Quadrilateral* match = nullptr;
    std::vector<Quadrilateral> labelings = dihedral_labelings(row.sides);
    for (const auto& lab : labelings) {
        Rational a = alpha_of(lab);
        if (std::find(rep.labeling_alphas.begin(), rep.labeling_alphas.end(), a) ==
            rep.labeling_alphas.end())
            rep.labeling_alphas.push_back(a);
        if (!match && a == row.alpha) match = &lab;
    }
    std::sort(rep.labeling_alphas.begin(), rep.labeling_alphas.end());
    rep.alpha_ok = match != nullptr;

    // Forward map on the matching labeling (printed order when none matches,
    // so the row still gets point and independence evidence on its own curve).
    Correspondence corr = quad_to_curve(match ? *match : row.sides);
    rep.points_ok = corr.curve.contains(corr.p1) && corr.curve.contains(corr.p2) &&
                    corr.curve.contains(corr.p3) &&
                    corr.curve.add(corr.curve.add(corr.p1, corr.p2), corr.p3).infinity;

    rep.det = pairing_matrix(corr.curve, {corr.p1, corr.p2}).det;
    rep.independent_ok = rep.det > tol;

    rep.passed = rep.area_ok && rep.alpha_ok && rep.points_ok && rep.independent_ok;
    return rep;
}

Table1RowReport verify_row1(const Rational& u, const Rational& w, int claimed_rank, bool control,
                            const SieveThresholds& thresholds, double tol) {
    Table1RowReport rep;
    rep.u = u;
    rep.w = w;
    rep.claimed_rank = claimed_rank;
    rep.control = control;

    FamilyInstance fi = family_6_1(u, w);
    rep.points_produced = static_cast<int>(fi.points.size());
    rep.points_on_curve = static_cast<int>(std::count_if(
        fi.points.begin(), fi.points.end(), [&](const CurvePoint& p) { return fi.curve.contains(p); }));
    rep.four_points_ok = rep.points_on_curve >= 4;

    rep.det = pairing_matrix(fi.curve, fi.points).det;
    rep.independent_ok = rep.det > tol;

    rep.sieve = sieve_one(fi.curve, thresholds);

    // Control rows certify only that the construction's points land on the
    // curve; their independence and sieve outcomes are reported, not gated
    // (a single small specialization need not have full generic rank).
    // four_points_ok is likewise reported, not gated: the fourth point exists
    // only when the square condition holds at (u,w), and most rows lack it.
    bool points_all_on = rep.points_on_curve == rep.points_produced;
    rep.passed = control ? points_all_on
                         : (points_all_on && rep.independent_ok && rep.sieve.passed);
    return rep;
}

}  // namespace

Table2Report verify_table2(double tol) {
    const std::vector<Table2Row>& rows = table2();
    Table2Report report;
    report.rows.resize(rows.size());

#pragma omp parallel for schedule(dynamic) num_threads(effective_threads())
    for (long i = 0; i < static_cast<long>(rows.size()); ++i)
        report.rows[i] = verify_row2(rows[i], tol);

    report.areas_all_ok =
        std::all_of(report.rows.begin(), report.rows.end(), [](const Table2RowReport& r) { return r.area_ok; });
    report.discrepancies = static_cast<int>(
        std::count_if(report.rows.begin(), report.rows.end(), [](const Table2RowReport& r) { return !r.passed; }));
    return report;
}

Table1Report verify_table1(const SieveThresholds& thresholds, double tol, bool include_control) {
    const std::vector<Table1Row>& rows = table1();
    Table1Report report;
    report.rows.resize(rows.size() + (include_control ? 1 : 0));

#pragma omp parallel for schedule(dynamic) num_threads(effective_threads())
    for (long i = 0; i < static_cast<long>(report.rows.size()); ++i) {
        if (i < static_cast<long>(rows.size()))
            report.rows[i] = verify_row1(rows[i].u, rows[i].w, rows[i].claimed_rank, false,
                                         thresholds, tol);
        else
            report.rows[i] = verify_row1(Rational(3), Rational(2), 0, true, thresholds, tol);
    }

    report.discrepancies = static_cast<int>(std::count_if(
        report.rows.begin(), report.rows.end(),
        [](const Table1RowReport& r) { return !r.control && !r.passed; }));
    return report;
}

}  // namespace heronq
