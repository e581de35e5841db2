#include "excolex/colex.hpp"

#include "excolex/error.hpp"

#include <algorithm>

namespace excolex {

namespace {

bool divisible_by_any(Monomial u, const std::vector<Monomial>& gens)
{
    return std::any_of(gens.begin(), gens.end(), [u](Monomial g) { return g.divides(u); });
}

}  // namespace

std::optional<ColexResult> colex_ideal_at(const DegreeProfile& profile, int m)
{
    const Ambient amb(m);
    std::vector<Monomial> gens;
    std::vector<ColexStep> steps;
    for (const auto& [d, p] : profile) {
        if (d > m)
            return std::nullopt;
        ColexStep step{d, {}};
        // all_monomials is revlex-decreasing, so the first p survivors are the largest.
        for (Monomial u : all_monomials(amb, d)) {
            if (step.chosen.size() == p)
                break;
            if (!divisible_by_any(u, gens))
                step.chosen.push_back(u);
        }
        if (step.chosen.size() < p)
            return std::nullopt;
        gens.insert(gens.end(), step.chosen.begin(), step.chosen.end());
        steps.push_back(std::move(step));
    }
    return ColexResult{MonomialIdeal(amb, std::move(gens)), m, std::move(steps)};
}

ColexResult colex_ideal(const MonomialIdeal& ideal, int m_cap)
{
    if (m_cap < ideal.n())
        throw Error(ErrorKind::ContractViolation, "ambient cap is below the ideal's own n");
    if (m_cap > kMaxVariables)
        throw Error(ErrorKind::ContractViolation, "ambient cap exceeds 64 variables");
    const auto profile = degree_profile(ideal);
    const int start = std::max(ideal.n(), profile.back().degree);
    for (int m = start; m <= m_cap; ++m)
        if (auto result = colex_ideal_at(profile, m))
            return std::move(*result);
    throw Error(ErrorKind::AmbientCapExceeded,
                "construction did not complete for any m <= " + std::to_string(m_cap) + " (last attempted m = " +
                    std::to_string(m_cap) + ")");
}

bool is_revlex_segment(const MonomialSet& set, const Ambient& amb)
{
    if (set.empty())
        return true;
    const auto& elems = set.elements();
    // A revlex segment of length l is exactly the l smallest masks of that popcount.
    const auto expected = all_monomials(amb, set.degree());
    if (elems.size() > expected.size())
        return false;
    return std::equal(elems.begin(), elems.end(), expected.begin());
}

bool is_revlex_ideal(const MonomialIdeal& ideal)
{
    for (int j = ideal.initial_degree(); j <= ideal.n(); ++j)
        if (!is_revlex_segment(graded_component(ideal, j), ideal.ambient()))
            return false;
    return true;
}

namespace {

Monomial interval(int lo, int hi)
{
    Monomial u;
    for (int k = lo; k <= hi; ++k)
        u = u.with(k);
    return u;
}

}  // namespace

Prop63Result prop63_check(const MonomialSet& segment, const Ambient& amb)
{
    const int d = segment.degree();
    const int n = amb.n;
    if (d < 1 || d >= n - 2)
        throw Error(ErrorKind::DegreeTooHigh, "need 1 <= d < n-2, got d = " + std::to_string(d));
    if (segment.empty() || !is_revlex_segment(segment, amb))
        throw Error(ErrorKind::NotARevlexSegment, "input is not a nonempty revlex segment");
    Prop63Result r{};
    r.shadow_is_segment = is_revlex_segment(shadow(segment, amb), amb);
    r.long_enough = segment.size() >= binomial(n - 2, d);
    r.has_boundary = segment.contains(interval(n - d - 1, n - 2));
    return r;
}

RevlexConditionReport prop64_check(const MonomialIdeal& ideal)
{
    const auto profile = degree_profile(ideal);
    const int n = ideal.n();
    if (profile.size() != 2)
        throw Error(ErrorKind::HypothesisViolated, "ideal must be generated in exactly two degrees");
    RevlexConditionReport r;
    r.d1 = profile[0].degree;
    r.d2 = profile[1].degree;
    if (r.d2 >= n - 2)
        throw Error(ErrorKind::HypothesisViolated, "need d2 < n-2");
    const ColexResult colex = colex_ideal(ideal, std::max(n, kDefaultAmbientCap));
    r.m = colex.m;

    r.dim_d1 = profile[0].count;
    r.threshold_i = binomial(n - 2, r.d1);
    r.holds_i = r.dim_d1 >= r.threshold_i;

    for (int k = r.d1; k <= n - 2; ++k)
        r.A_size += binomial(k, r.d1);
    r.z = interval(n - r.d1 - 1, n - 1);
    r.dim_d2_ideal = graded_component(ideal, r.d2).size();

    if (colex.m == n) {
        const Ambient& amb = ideal.ambient();
        const MonomialSet Jd1 = graded_component(colex.J, r.d1);
        r.w = shadow(Jd1, amb).revlex_min();
        // z > v >= w in revlex means mask(z) < mask(v) <= mask(w).
        for (Monomial v : all_monomials(amb, r.d2))
            if (v.mask() > r.z.mask() && v.mask() <= r.w.mask())
                ++r.c;
        r.dim_d2_colex = graded_component(colex.J, r.d2).size();
        r.is_revlex = is_revlex_ideal(colex.J);
    } else {
        // J does not live in E; use the shadow of the degree-d1 segment of E for w and c.
        const Ambient& amb = ideal.ambient();
        MonomialSet seg(r.d1, revlex_segment(amb, r.d1, std::min<std::uint64_t>(r.dim_d1, binomial(n, r.d1))));
        r.w = shadow(seg, amb).revlex_min();
        for (Monomial v : all_monomials(amb, r.d2))
            if (v.mask() > r.z.mask() && v.mask() <= r.w.mask())
                ++r.c;
    }
    const bool consecutive = r.d2 == r.d1 + 1;
    r.holds_ii = consecutive && colex.m == n && r.dim_d2_colex >= r.A_size + r.c;
    r.holds_ii_literal = consecutive && r.dim_d2_ideal >= r.A_size + r.c;
    return r;
}

Cor65Result cor65_check(const MonomialIdeal& ideal)
{
    const auto profile = degree_profile(ideal);
    const int n = ideal.n();
    if (profile.size() != 1)
        throw Error(ErrorKind::HypothesisViolated, "ideal must be generated in a single degree");
    const int d = profile[0].degree;
    if (d >= n - 2)
        throw Error(ErrorKind::HypothesisViolated, "need d < n-2");
    const ColexResult colex = colex_ideal(ideal, std::max(n, kDefaultAmbientCap));
    Cor65Result r{};
    r.enough_generators = profile[0].count >= binomial(n - 2, d);
    r.is_revlex = colex.m == n && is_revlex_ideal(colex.J);
    return r;
}

}  // namespace excolex
