#include "excolex/ideal.hpp"

#include "excolex/error.hpp"

#include <algorithm>

namespace excolex {

void sort_generators(std::vector<Monomial>& gens)
{
    std::sort(gens.begin(), gens.end(), [](Monomial a, Monomial b) {
        if (a.degree() != b.degree())
            return a.degree() < b.degree();
        return a.mask() < b.mask();
    });
}

MonomialIdeal::MonomialIdeal(Ambient amb, std::vector<Monomial> gens) : amb_(amb), gens_(std::move(gens))
{
    if (gens_.empty())
        throw Error(ErrorKind::ContractViolation, "an ideal needs at least one generator");
    for (Monomial g : gens_) {
        if (g.is_unit())
            throw Error(ErrorKind::ContractViolation, "the unit ideal is not a proper ideal");
        if (!amb_.hosts(g))
            throw Error(ErrorKind::ContractViolation,
                        "generator " + g.to_text() + " uses a variable beyond n = " + std::to_string(amb_.n));
    }
    sort_generators(gens_);
    for (std::size_t a = 0; a < gens_.size(); ++a)
        for (std::size_t b = 0; b < gens_.size(); ++b)
            if (a != b && gens_[a].divides(gens_[b]))
                throw Error(ErrorKind::ContractViolation, "generators are not minimal: " + gens_[a].to_text() +
                                                              " divides " + gens_[b].to_text());
}

std::vector<Monomial> MonomialIdeal::generators_of_degree(int d) const
{
    std::vector<Monomial> out;
    for (Monomial g : gens_)
        if (g.degree() == d)
            out.push_back(g);
    return out;
}

bool MonomialIdeal::contains(Monomial u) const
{
    return std::any_of(gens_.begin(), gens_.end(), [u](Monomial g) { return g.divides(u); });
}

MonomialIdeal MonomialIdeal::in_ambient(const Ambient& amb) const
{
    return MonomialIdeal(amb, gens_);
}

MonomialIdeal minimalize(const Ambient& amb, std::vector<Monomial> raw)
{
    if (raw.empty())
        throw Error(ErrorKind::ContractViolation, "cannot minimalize an empty generator list");
    sort_generators(raw);
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    std::vector<Monomial> kept;
    // Sorted by degree, so any divisor of raw[k] comes earlier.
    for (Monomial u : raw)
        if (std::none_of(kept.begin(), kept.end(), [u](Monomial g) { return g.divides(u); }))
            kept.push_back(u);
    return MonomialIdeal(amb, std::move(kept));
}

MonomialSet graded_component(const MonomialIdeal& ideal, int t)
{
    std::vector<Monomial> out;
    if (t < ideal.initial_degree())
        return MonomialSet(t);
    for (Monomial u : all_monomials(ideal.ambient(), t))
        if (ideal.contains(u))
            out.push_back(u);
    return MonomialSet(t, std::move(out));
}

bool is_strongly_stable_ideal(const MonomialIdeal& ideal)
{
    for (int d = ideal.initial_degree(); d <= ideal.n(); ++d)
        if (!is_strongly_stable(graded_component(ideal, d)))
            return false;
    return true;
}

bool is_strongly_stable_ideal_by_generators(const MonomialIdeal& ideal)
{
    for (Monomial g : ideal.generators())
        for (Monomial v : borel_moves(g))
            if (!ideal.contains(v))
                return false;
    return true;
}

bool is_stable_ideal(const MonomialIdeal& ideal)
{
    for (int d = ideal.initial_degree(); d <= ideal.n(); ++d)
        if (!is_stable(graded_component(ideal, d)))
            return false;
    return true;
}

DegreeProfile degree_profile(const MonomialIdeal& ideal)
{
    DegreeProfile profile;
    for (Monomial g : ideal.generators()) {
        if (profile.empty() || profile.back().degree != g.degree())
            profile.push_back({g.degree(), 0});
        ++profile.back().count;
    }
    return profile;
}

}  // namespace excolex
