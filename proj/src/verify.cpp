#include "excolex/verify.hpp"

#include "excolex/cartan.hpp"
#include "excolex/enumerate.hpp"
#include "excolex/error.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace excolex {

const char* to_string(ReportStatus status)
{
    switch (status) {
    case ReportStatus::Verified: return "verified";
    case ReportStatus::Counterexample: return "counterexample";
    case ReportStatus::Skipped: return "skipped";
    }
    return "unknown";
}

ReportStatus VerificationReport::status() const
{
    if (!failures.empty())
        return ReportStatus::Counterexample;
    return instances > 0 ? ReportStatus::Verified : ReportStatus::Skipped;
}

json VerificationReport::to_json() const
{
    return {{"claim", claim},
            {"universe", universe},
            {"instances", instances},
            {"failures", failures},
            {"observations", observations},
            {"status", excolex::to_string(status())}};
}

VerificationReport merge_reports(const std::string& claim, const std::vector<VerificationReport>& parts)
{
    VerificationReport out;
    out.claim = claim;
    for (const auto& part : parts) {
        out.universe[part.claim] = part.universe;
        out.observations[part.claim] = part.observations;
        out.observations[part.claim]["instances"] = part.instances;
        out.instances += part.instances;
        for (const auto& f : part.failures) {
            json tagged = f;
            tagged["part"] = part.claim;
            out.failures.push_back(std::move(tagged));
        }
    }
    return out;
}

MonomialIdeal ideal_from_text(int n, const std::string& generators)
{
    std::vector<Monomial> gens;
    std::stringstream in(generators);
    std::string item;
    while (std::getline(in, item, ','))
        gens.push_back(monomial_from_text(item));
    return minimalize(Ambient(n), std::move(gens));
}

namespace {

template <class T, class Check>
void run_campaign(VerificationReport& report, const std::vector<T>& items, ExecPolicy policy, Check&& check)
{
    std::vector<std::vector<json>> found(items.size());
    for_each_index(items.size(), policy, [&](std::size_t k) { found[k] = check(items[k]); });
    report.instances += items.size();
    for (auto& batch : found)
        for (auto& f : batch)
            report.failures.push_back(std::move(f));
}

struct SetInstance {
    int n;
    MonomialSet set;
};

std::vector<SetInstance> all_stable_sets(int n_max)
{
    std::vector<SetInstance> out;
    for (int n = 1; n <= n_max; ++n)
        for (int d = 1; d <= n; ++d)
            for_each_strongly_stable_set(Ambient(n), d, [&](const MonomialSet& s) { out.push_back({n, s}); });
    return out;
}

std::vector<MonomialIdeal> stable_ideals(int n_min, int n_max, const IdealBounds& bounds)
{
    std::vector<MonomialIdeal> out;
    for (int n = n_min; n <= n_max; ++n)
        for_each_strongly_stable_ideal(Ambient(n), bounds, [&](const MonomialIdeal& I) { out.push_back(I); });
    return out;
}

json set_json(const MonomialSet& s)
{
    json out = json::array();
    for (Monomial u : s)
        out.push_back(to_json(u));
    return out;
}

template <class T>
std::vector<T> evenly_spaced(const std::vector<T>& items, std::size_t k)
{
    std::vector<T> out;
    if (items.empty() || k == 0)
        return out;
    k = std::min(k, items.size());
    for (std::size_t q = 0; q < k; ++q)
        out.push_back(items[q * items.size() / k]);
    return out;
}

}  // namespace

VerificationReport verify_prop42(int n_max, ExecPolicy policy)
{
    VerificationReport report;
    report.claim = "Prop4.2";
    report.universe = {{"objects", "strongly stable sets"}, {"n_max", n_max}, {"degrees", "all"}};
    run_campaign(report, all_stable_sets(n_max), policy, [](const SetInstance& inst) {
        std::vector<json> bad;
        const Ambient amb(inst.n);
        const MonomialSet shad = shadow(inst.set, amb);
        std::size_t expected = 0;
        std::vector<Monomial> pieces;
        for (Monomial u : inst.set) {
            expected += static_cast<std::size_t>(inst.n - u.max_index());
            for (int k = u.max_index() + 1; k <= inst.n; ++k)
                pieces.push_back(u.with(k));
        }
        const MonomialSet union_of_pieces(inst.set.degree() + 1, pieces);
        const bool disjoint = union_of_pieces.size() == pieces.size();
        if (shad.size() != expected || !disjoint || !(union_of_pieces == shad))
            bad.push_back({{"n", inst.n},
                           {"set", set_json(inst.set)},
                           {"shadow_size", shad.size()},
                           {"expected", expected},
                           {"disjoint", disjoint}});
        return bad;
    });
    return report;
}

VerificationReport verify_lemma41(int n_max, ExecPolicy policy)
{
    VerificationReport report;
    report.claim = "Lemma4.1";
    report.universe = {{"objects", "strongly stable sets"}, {"n_max", n_max}, {"degrees", "all"}};
    run_campaign(report, all_stable_sets(n_max), policy, [](const SetInstance& inst) {
        std::vector<json> bad;
        const Ambient amb(inst.n);
        const Monomial tau = inst.set.revlex_min();
        if (tau.degree() == inst.n)
            return bad;
        const MonomialSet rest = inst.set.without(tau);
        const MonomialSet shad = shadow(rest, amb);
        for (int i = 1; i <= inst.n; ++i) {
            if (tau.contains(i))
                continue;
            const bool in_shadow = shad.contains(tau.with(i));
            const bool below_top = i < tau.max_index();
            if (in_shadow != below_top)
                bad.push_back({{"n", inst.n},
                               {"set", set_json(inst.set)},
                               {"tau", to_json(tau)},
                               {"i", i},
                               {"in_shadow", in_shadow}});
        }
        return bad;
    });
    return report;
}

VerificationReport verify_cor43(int n_max, ExecPolicy policy)
{
    VerificationReport report;
    report.claim = "Cor4.3";
    report.universe = {{"objects", "strongly stable sets (graded components of strongly stable ideals)"},
                       {"n_max", n_max}};
    run_campaign(report, all_stable_sets(n_max), policy, [](const SetInstance& inst) {
        std::vector<json> bad;
        const Ambient amb(inst.n);
        const int t = inst.set.degree();
        for (int p = t + 1; p <= inst.n; ++p) {
            const MonomialSet lhs = bold_e_mul(restrict_le(inst.set, p), p, amb);
            MonomialSet rhs(t + 1);
            for (int i = t + 1; i <= p; ++i)
                for (Monomial u : times_variable(restrict_le(inst.set, i), i))
                    rhs.insert(u);
            if (!(lhs == rhs))
                bad.push_back({{"n", inst.n}, {"set", set_json(inst.set)}, {"p", p}});
        }
        return bad;
    });
    return report;
}

VerificationReport verify_green(int n_max, ExecPolicy policy)
{
    VerificationReport report;
    report.claim = "Thm4.5";
    report.universe = {{"objects", "strongly stable ideals"}, {"n_max", n_max}, {"max_degrees", 2}};
    const auto ideals = stable_ideals(1, n_max, IdealBounds{});
    std::vector<std::size_t> comparisons(ideals.size(), 0);
    std::vector<char> extended(ideals.size(), 0);
    std::vector<std::vector<json>> found(ideals.size());
    for_each_index(ideals.size(), policy, [&](std::size_t k) {
        const MonomialIdeal& I = ideals[k];
        const ColexResult colex = colex_ideal(I);
        const int N = std::max(I.n(), colex.m);
        extended[k] = colex.m > I.n();
        const MonomialIdeal Iw = I.in_ambient(Ambient(N));
        const MonomialIdeal Jw = colex.J.in_ambient(Ambient(N));
        for (int t = I.initial_degree(); t <= N; ++t) {
            const MonomialSet a = graded_component(Iw, t);
            const MonomialSet b = graded_component(Jw, t);
            for (int p = t; p <= N; ++p) {
                ++comparisons[k];
                const auto lhs = m_le(a, p);
                const auto rhs = m_le(b, p);
                if (lhs > rhs)
                    found[k].push_back(
                        {{"I", to_json(I)}, {"J", to_json(colex.J)}, {"t", t}, {"p", p}, {"lhs", lhs}, {"rhs", rhs}});
            }
        }
    });
    report.instances = ideals.size();
    for (auto& batch : found)
        for (auto& f : batch)
            report.failures.push_back(std::move(f));
    std::size_t total = 0;
    for (auto c : comparisons)
        total += c;
    report.observations = {{"inequalities_checked", total},
                           {"ideals_needing_extra_variables",
                            static_cast<std::size_t>(std::count(extended.begin(), extended.end(), 1))}};
    return report;
}

VerificationReport verify_colex_lower_bound(int n_max, int i_max, ExecPolicy policy)
{
    VerificationReport report;
    report.claim = "Thm5.2";
    report.universe = {{"objects", "strongly stable ideals generated in one degree"},
                       {"n_max", n_max},
                       {"i_max", i_max}};
    IdealBounds bounds;
    bounds.exact_degrees = 1;
    const auto ideals = stable_ideals(1, n_max, bounds);
    std::vector<int> mode_of(ideals.size(), 0);
    std::vector<std::vector<json>> found(ideals.size());
    for_each_index(ideals.size(), policy, [&](std::size_t k) {
        const MonomialIdeal& I = ideals[k];
        const ColexResult colex = colex_ideal(I);
        const ComparisonVerdict v = compare_betti(I, colex.J, i_max);
        mode_of[k] = static_cast<int>(v.mode);
        const bool bound_ok = v.mode == ComparisonMode::LowerBoundAllChecked || v.mode == ComparisonMode::EqualAllChecked;
        if (!bound_ok || !v.domination)
            found[k].push_back({{"I", to_json(I)}, {"J", to_json(colex.J)}, {"verdict", to_json(v)}});
    });
    report.instances = ideals.size();
    for (auto& batch : found)
        for (auto& f : batch)
            report.failures.push_back(std::move(f));
    report.observations = {
        {"lower_bound_strict",
         static_cast<std::size_t>(std::count(mode_of.begin(), mode_of.end(),
                                             static_cast<int>(ComparisonMode::LowerBoundAllChecked)))},
        {"equal", static_cast<std::size_t>(
                      std::count(mode_of.begin(), mode_of.end(), static_cast<int>(ComparisonMode::EqualAllChecked)))}};
    return report;
}

namespace {

struct TableRow {
    const char* I;
    const char* J;
};

// Comparison tables over E with five variables.
constexpr TableRow kLowerRows[] = {
    {"e1e2,e1e3e4,e1e3e5", "e1e2,e1e3e4,e2e3e4"},
    {"e1e2,e1e3e4,e1e3e5,e1e4e5", "e1e2,e1e3e4,e2e3e4,e1e3e5"},
    {"e1e2,e1e3,e1e4e5", "e1e2,e1e3,e2e3e4"},
    {"e1e2,e1e3,e1e4,e1e5,e2e3e4", "e1e2,e1e3,e2e3,e1e4,e2e4e5"},
    {"e1e2,e1e3,e1e4,e1e5,e2e3e4,e2e3e5", "e1e2,e1e3,e2e3,e1e4,e2e4e5,e3e4e5"},
    {"e1e2,e1e3,e1e4,e1e5,e2e3,e2e4e5", "e1e2,e1e3,e2e3,e1e4,e2e4,e3e4e5"},
    {"e1e2,e1e3,e1e4,e1e5,e2e3e4,e2e3e5", "e1e2,e1e3,e2e3,e1e4,e2e4e5,e3e4e5"},
    {"e1e2e3,e1e2e4,e1e2e5,e1e3e4e5", "e1e2e3,e1e2e4,e1e3e4,e2e3e4e5"},
};

constexpr TableRow kUpperRows[] = {
    {"e1e2,e1e3,e1e4,e2e3e4", "e1e2,e1e3,e2e3,e1e4e5"},
    {"e1e2,e1e3,e1e4,e2e3e4,e2e3e5", "e1e2,e1e3,e2e3,e1e4e5,e2e4e5"},
    {"e1e2,e1e3,e1e4,e2e3e4,e2e3e5,e2e4e5", "e1e2,e1e3,e2e3,e1e4e5,e2e4e5,e3e4e5"},
};

std::string ideal_text(const MonomialIdeal& I)
{
    std::string s;
    for (Monomial g : I.generators())
        s += (s.empty() ? "" : ",") + g.to_text();
    return s;
}

}  // namespace

VerificationReport reproduce_example_51(int i_max)
{
    VerificationReport report;
    report.claim = "Ex5.1";
    report.universe = {{"n", 5}, {"rows_lower_table", std::size(kLowerRows)},
                       {"rows_upper_table", std::size(kUpperRows)}, {"i_max", i_max}};
    std::vector<MonomialIdeal> listed;

    auto check_row = [&](const TableRow& row, int table, std::size_t index) {
        const std::string id = "Ex5.1-table" + std::to_string(table) + "-row" + std::to_string(index + 1);
        const MonomialIdeal I = ideal_from_text(5, row.I);
        listed.push_back(I);
        const MonomialIdeal expected = ideal_from_text(5, row.J);
        const ColexResult colex = colex_ideal(I);
        ++report.instances;
        json obs = {{"m", colex.m}};
        if (colex.J.generators() != expected.generators())
            report.failures.push_back({{"row", id}, {"reason", "colexsegment ideal differs"},
                                       {"expected", to_json(expected)}, {"got", to_json(colex.J)}});
        const ComparisonVerdict v = compare_betti(I, colex.J, i_max);
        obs["verdict"] = to_json(v);
        if (table == 1) {
            const bool bound = v.mode == ComparisonMode::LowerBoundAllChecked || v.mode == ComparisonMode::EqualAllChecked;
            if (!bound || !v.domination)
                report.failures.push_back({{"row", id}, {"reason", "lower bound not certified"}, {"verdict", to_json(v)}});
        } else {
            const bool bound = v.mode == ComparisonMode::UpperBoundAllChecked || v.mode == ComparisonMode::EqualAllChecked;
            const bool strict_tail = std::all_of(v.equal_indices.begin(), v.equal_indices.end(), [](int i) { return i < 2; });
            if (!bound || !strict_tail)
                report.failures.push_back({{"row", id}, {"reason", "upper bound not strict for 2 <= i"}, {"verdict", to_json(v)}});
            obs["equal_at"] = v.equal_indices;
        }
        report.observations[id] = obs;
    };
    for (std::size_t k = 0; k < std::size(kLowerRows); ++k)
        check_row(kLowerRows[k], 1, k);
    for (std::size_t k = 0; k < std::size(kUpperRows); ++k)
        check_row(kUpperRows[k], 2, k);

    // Partition of every other two-degree strongly stable ideal over n = 5.
    IdealBounds bounds;
    bounds.exact_degrees = 2;
    std::map<std::string, std::size_t> partition;
    json not_listed = json::object();
    bool all_rows_enumerated = true;
    const auto ideals = enumerate_strongly_stable_ideals(Ambient(5), bounds);
    for (const auto& row : listed)
        all_rows_enumerated = all_rows_enumerated && std::find(ideals.begin(), ideals.end(), row) != ideals.end();
    for (const auto& I : ideals) {
        if (std::find(listed.begin(), listed.end(), I) != listed.end())
            continue;
        const ColexResult colex = colex_ideal(I);
        const ComparisonVerdict v = compare_betti(I, colex.J, i_max);
        ++partition[to_string(v.mode)];
        if (v.mode != ComparisonMode::EqualAllChecked)
            not_listed[to_string(v.mode)].push_back(ideal_text(I) + " -> " + ideal_text(colex.J));
    }
    report.observations["unlisted_two_degree_ideals"] = {{"count_by_mode", partition},
                                                         {"not_equal", not_listed},
                                                         {"listed_rows_enumerated", all_rows_enumerated}};
    return report;
}

VerificationReport verify_section6(int n_max_segments, int n_max_ideals, ExecPolicy policy)
{
    VerificationReport report;
    report.claim = "Sec6";
    report.universe = {{"segment_n_max", n_max_segments}, {"ideal_n_max", n_max_ideals}};

    // Worked examples.
    {
        const ColexResult one = colex_ideal(ideal_from_text(6, "e1e2,e1e3,e1e4e5"));
        const MonomialIdeal want_one = ideal_from_text(6, "e1e2,e1e3,e2e3e4");
        ++report.instances;
        if (one.J.generators() != want_one.generators() || one.m != 6 || is_revlex_ideal(one.J))
            report.failures.push_back({{"case", "example (1)"}, {"J", to_json(one.J)}, {"is_revlex", is_revlex_ideal(one.J)}});
        const ColexResult two = colex_ideal(ideal_from_text(5, "e1e2,e1e3,e1e4,e2e3e4"));
        const MonomialIdeal want_two = ideal_from_text(5, "e1e2,e1e3,e2e3,e1e4e5");
        ++report.instances;
        if (two.J.generators() != want_two.generators() || two.m != 5 || !is_revlex_ideal(two.J))
            report.failures.push_back({{"case", "example (2)"}, {"J", to_json(two.J)}, {"is_revlex", is_revlex_ideal(two.J)}});
    }

    // Segment shadows.
    struct Segment {
        int n, d;
        std::uint64_t len;
    };
    std::vector<Segment> segments;
    for (int n = 4; n <= n_max_segments; ++n)
        for (int d = 1; d < n - 2; ++d)
            for (std::uint64_t len = 1; len <= binomial(n, d); ++len)
                segments.push_back({n, d, len});
    std::vector<char> segment_holds(segments.size(), 0);
    run_campaign(report, segments, policy, [](const Segment& s) {
        std::vector<json> bad;
        const Ambient amb(s.n);
        const MonomialSet M(s.d, revlex_segment(amb, s.d, s.len));
        const Prop63Result r = prop63_check(M, amb);
        if (!r.consistent())
            bad.push_back({{"n", s.n}, {"d", s.d}, {"length", s.len}, {"a", r.shadow_is_segment},
                           {"b", r.long_enough}, {"c", r.has_boundary}});
        return bad;
    });

    // Enumerated ideals inside the hypotheses.
    std::vector<MonomialIdeal> two_degree;
    std::vector<MonomialIdeal> one_degree;
    for (int n = 4; n <= n_max_ideals; ++n) {
        IdealBounds bounds;
        bounds.max_degree = n - 3;
        for_each_strongly_stable_ideal(Ambient(n), bounds, [&](const MonomialIdeal& I) {
            (degree_profile(I).size() == 1 ? one_degree : two_degree).push_back(I);
        });
    }
    std::vector<int> outcome(two_degree.size(), 0);  // 0 checked, 1 needs m > n
    std::vector<char> literal_agrees(two_degree.size(), 1);
    std::vector<char> extended_with_i(two_degree.size(), 0);
    std::vector<std::vector<json>> found(two_degree.size());
    for_each_index(two_degree.size(), policy, [&](std::size_t k) {
        RevlexConditionReport r = prop64_check(two_degree[k]);
        if (r.m > two_degree[k].n()) {
            // Too few variables for J; re-read I in the ambient J lives in.
            outcome[k] = 1;
            extended_with_i[k] = r.holds_i;
            const MonomialIdeal lifted = two_degree[k].in_ambient(Ambient(r.m));
            r = prop64_check(lifted);
            if (!r.biconditional())
                found[k].push_back({{"I", to_json(lifted)}, {"lifted_from", two_degree[k].n()}, {"report", to_json(r)}});
            return;
        }
        literal_agrees[k] = r.literal_biconditional();
        if (!r.biconditional())
            found[k].push_back({{"I", to_json(two_degree[k])}, {"report", to_json(r)}});
    });
    std::size_t in_hypothesis = 0;
    std::size_t literal_disagreements = 0;
    json literal_examples = json::array();
    for (std::size_t k = 0; k < two_degree.size(); ++k) {
        for (auto& f : found[k])
            report.failures.push_back(std::move(f));
        if (outcome[k] == 1)
            continue;
        ++in_hypothesis;
        if (!literal_agrees[k]) {
            ++literal_disagreements;
            if (literal_examples.size() < 5)
                literal_examples.push_back(ideal_text(two_degree[k]) + " (n=" + std::to_string(two_degree[k].n()) + ")");
        }
    }
    report.instances += two_degree.size();

    run_campaign(report, one_degree, policy, [](const MonomialIdeal& I) {
        std::vector<json> bad;
        const Cor65Result r = cor65_check(I);
        if (!r.consistent())
            bad.push_back({{"I", to_json(I)}, {"enough_generators", r.enough_generators}, {"is_revlex", r.is_revlex}});
        return bad;
    });

    report.observations = {
        {"segments_checked", segments.size()},
        {"two_degree_in_hypothesis", in_hypothesis},
        {"two_degree_checked_after_lifting_to_m", two_degree.size() - in_hypothesis},
        {"two_degree_needing_extra_variables_with_condition_i",
         static_cast<std::size_t>(std::count(extended_with_i.begin(), extended_with_i.end(), 1))},
        {"one_degree_checked", one_degree.size()},
        {"dimension_of_I_reading_disagreements", literal_disagreements},
        {"dimension_of_I_reading_examples", literal_examples},
    };
    return report;
}

VerificationReport verify_oracle_agreement(int n_max, int i_max, ExecPolicy policy)
{
    VerificationReport report;
    report.claim = "OracleAgreement";
    report.universe = {{"objects", "strongly stable ideals"}, {"n_max", n_max}, {"max_degrees", 2}, {"i_max", i_max}};
    const auto ideals = stable_ideals(1, n_max, IdealBounds{});
    run_campaign(report, ideals, policy, [i_max](const MonomialIdeal& I) {
        std::vector<json> bad;
        CartanOptions options;
        options.i_max = i_max;
        options.policy = ExecPolicy::Serial;
        const CartanTables oracle = cartan_betti(I, options);
        const BettiTable formula = ahh_betti(I, i_max);
        if (!(oracle.ideal == formula))
            bad.push_back({{"I", to_json(I)}, {"oracle", to_json(oracle.ideal)}, {"formula", to_json(formula)}});
        return bad;
    });
    return report;
}

VerificationReport verify_oracle_generators(int n_max, std::size_t extra_stride, ExecPolicy policy)
{
    VerificationReport report;
    report.claim = "OracleGenerators";
    report.universe = {{"objects", "all monomial ideals"}, {"n_max", n_max}, {"extra_stride", extra_stride}};
    std::vector<MonomialIdeal> ideals;
    for (int n = 1; n <= n_max; ++n)
        for_each_monomial_ideal(Ambient(n), [&](const MonomialIdeal& I) { ideals.push_back(I); });
    const std::size_t exhaustive = ideals.size();
    if (extra_stride > 0) {
        std::size_t k = 0;
        for_each_monomial_ideal(Ambient(n_max + 1), [&](const MonomialIdeal& I) {
            if (k++ % extra_stride == 0)
                ideals.push_back(I);
        });
    }
    std::vector<char> stable(ideals.size(), 0);
    run_campaign(report, ideals, policy, [](const MonomialIdeal& I) {
        std::vector<json> bad;
        CartanOptions options;
        options.i_max = 0;
        options.policy = ExecPolicy::Serial;
        const CartanTables t = cartan_betti(I, options);
        for (int j = 0; j <= I.n() + 1; ++j) {
            const BigInt want = I.generators_of_degree(j).size();
            if (t.quotient.at(1, j) != want)
                bad.push_back({{"I", to_json(I)}, {"j", j}, {"beta_1j", to_json(t.quotient.at(1, j))}});
        }
        if (t.quotient.total(0) != 1 || t.quotient.at(0, 0) != 1)
            bad.push_back({{"I", to_json(I)}, {"reason", "beta_0 of the quotient is not concentrated at (0,0)"}});
        return bad;
    });
    for (std::size_t k = 0; k < ideals.size(); ++k)
        stable[k] = is_strongly_stable_ideal(ideals[k]);
    report.observations = {{"exhaustive_part", exhaustive},
                           {"sampled_part", ideals.size() - exhaustive},
                           {"not_strongly_stable", static_cast<std::size_t>(std::count(stable.begin(), stable.end(), 0))}};
    return report;
}

VerificationReport verify_dd_zero(int n_max, int i_max, ExecPolicy policy)
{
    VerificationReport report;
    report.claim = "CartanComplex";
    report.universe = {{"objects", "all monomial ideals"}, {"n_max", n_max}, {"i_max", i_max}};
    std::vector<MonomialIdeal> ideals;
    for (int n = 1; n <= n_max; ++n)
        for_each_monomial_ideal(Ambient(n), [&](const MonomialIdeal& I) { ideals.push_back(I); });
    run_campaign(report, ideals, policy, [i_max](const MonomialIdeal& I) {
        std::vector<json> bad;
        for (int i = 1; i <= i_max; ++i)
            for (int j = i; j <= I.n() + i; ++j)
                for (const auto& x : chain_space(I, i, j)) {
                    std::map<CartanBasisElement, int> twice;
                    for (const auto& term : differential(x, I)) {
                        if (term.element.internal_degree() != j || term.element.homological_degree() != i - 1)
                            bad.push_back({{"I", to_json(I)}, {"i", i}, {"j", j}, {"reason", "degree not preserved"}});
                        for (const auto& t2 : differential(term.element, I))
                            twice[t2.element] += term.coefficient * t2.coefficient;
                    }
                    for (const auto& [elem, coeff] : twice)
                        if (coeff != 0) {
                            bad.push_back({{"I", to_json(I)}, {"i", i}, {"j", j}, {"reason", "d^2 != 0"},
                                           {"source", to_json(x.mono)}, {"powers", x.powers}});
                            break;
                        }
                }
        return bad;
    });
    return report;
}

VerificationReport verify_ambient_stability(std::size_t count, ExecPolicy policy)
{
    VerificationReport report;
    report.claim = "AmbientStability";
    report.universe = {{"objects", "strongly stable ideals, n in [4, 6], at most two degrees"}, {"count", count}};
    std::vector<MonomialIdeal> extended;
    std::vector<MonomialIdeal> plain;
    for (const auto& I : stable_ideals(4, 6, IdealBounds{}))
        (colex_ideal(I).m > I.n() ? extended : plain).push_back(I);
    auto chosen = evenly_spaced(extended, count / 2);
    for (auto& I : evenly_spaced(plain, count - chosen.size()))
        chosen.push_back(std::move(I));
    run_campaign(report, chosen, policy, [](const MonomialIdeal& I) {
        std::vector<json> bad;
        const ColexResult base = colex_ideal(I);
        const auto profile = degree_profile(I);
        for (int extra = 1; extra <= 2; ++extra) {
            const auto again = colex_ideal_at(profile, base.m + extra);
            if (!again || again->J.generators() != base.J.generators())
                bad.push_back({{"I", to_json(I)}, {"m", base.m}, {"extra", extra}});
        }
        return bad;
    });
    report.observations = {{"needing_extra_variables", std::min(extended.size(), count / 2)}};
    return report;
}

}  // namespace excolex
