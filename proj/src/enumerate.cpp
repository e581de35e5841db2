#include "excolex/enumerate.hpp"

#include "excolex/error.hpp"

#include <algorithm>

namespace excolex {

namespace {

struct BorelPoset {
    std::vector<Monomial> elems;                 // revlex-decreasing: a linear extension
    std::vector<std::vector<std::size_t>> below; // indices of one-move images (all earlier)
};

BorelPoset make_poset(const Ambient& amb, int d)
{
    BorelPoset poset;
    poset.elems = all_monomials(amb, d);
    poset.below.resize(poset.elems.size());
    for (std::size_t k = 0; k < poset.elems.size(); ++k)
        for (Monomial v : borel_moves(poset.elems[k])) {
            auto it = std::lower_bound(poset.elems.begin(), poset.elems.end(), v, MaskLess{});
            poset.below[k].push_back(static_cast<std::size_t>(it - poset.elems.begin()));
        }
    return poset;
}

class DownSetWalker {
public:
    DownSetWalker(const BorelPoset& poset, int d, const MonomialSet* forced, std::size_t max_extra,
                  const std::function<void(const MonomialSet&)>& visit)
        : poset_(poset), d_(d), max_extra_(max_extra), visit_(visit), chosen_(poset.elems.size(), 0),
          forced_(poset.elems.size(), 0)
    {
        if (forced)
            for (std::size_t k = 0; k < poset.elems.size(); ++k)
                forced_[k] = forced->contains(poset.elems[k]);
    }

    void run() { step(0, 0, 0); }

private:
    void step(std::size_t k, std::size_t size, std::size_t extra)
    {
        if (k == poset_.elems.size()) {
            if (size == 0)
                return;
            std::vector<Monomial> members;
            members.reserve(size);
            for (std::size_t q = 0; q < chosen_.size(); ++q)
                if (chosen_[q])
                    members.push_back(poset_.elems[q]);
            visit_(MonomialSet(d_, std::move(members)));
            return;
        }
        const bool allowed = std::all_of(poset_.below[k].begin(), poset_.below[k].end(),
                                         [this](std::size_t q) { return chosen_[q] != 0; });
        if (forced_[k]) {
            if (!allowed)
                return;
            chosen_[k] = 1;
            step(k + 1, size + 1, extra);
            chosen_[k] = 0;
            return;
        }
        if (allowed && extra < max_extra_) {
            chosen_[k] = 1;
            step(k + 1, size + 1, extra + 1);
            chosen_[k] = 0;
        }
        step(k + 1, size, extra);
    }

    const BorelPoset& poset_;
    int d_;
    std::size_t max_extra_;
    const std::function<void(const MonomialSet&)>& visit_;
    std::vector<char> chosen_;
    std::vector<char> forced_;
};

}  // namespace

void for_each_strongly_stable_set(const Ambient& amb, int d, const std::function<void(const MonomialSet&)>& visit,
                                  const MonomialSet* forced, std::size_t max_extra)
{
    if (d < 1 || d > amb.n)
        throw Error(ErrorKind::ContractViolation, "degree must lie in [1, n]");
    if (forced && forced->degree() != d)
        throw Error(ErrorKind::ContractViolation, "forced set has the wrong degree");
    const BorelPoset poset = make_poset(amb, d);
    DownSetWalker(poset, d, forced, max_extra, visit).run();
}

std::vector<MonomialSet> enumerate_strongly_stable_sets(const Ambient& amb, int d)
{
    std::vector<MonomialSet> out;
    for_each_strongly_stable_set(amb, d, [&](const MonomialSet& s) { out.push_back(s); });
    return out;
}

void for_each_strongly_stable_ideal(const Ambient& amb, const IdealBounds& bounds,
                                    const std::function<void(const MonomialIdeal&)>& visit)
{
    const int lo = std::max(1, bounds.min_degree);
    const int hi = bounds.max_degree > 0 ? std::min(bounds.max_degree, amb.n) : amb.n;
    const bool singles = bounds.exact_degrees == 0 || bounds.exact_degrees == 1;
    const bool pairs = (bounds.exact_degrees == 0 && bounds.max_degrees >= 2) || bounds.exact_degrees == 2;
    for (int d1 = lo; d1 <= hi; ++d1) {
        for_each_strongly_stable_set(
            amb, d1,
            [&](const MonomialSet& first) {
                if (singles)
                    visit(MonomialIdeal(amb, first.elements()));
                if (!pairs)
                    return;
                const MonomialIdeal base(amb, first.elements());
                for (int d2 = d1 + 1; d2 <= hi; ++d2) {
                    const MonomialSet inherited = graded_component(base, d2);
                    for_each_strongly_stable_set(
                        amb, d2,
                        [&](const MonomialSet& second) {
                            if (second.size() == inherited.size())
                                return;
                            std::vector<Monomial> gens = first.elements();
                            for (Monomial u : second)
                                if (!inherited.contains(u))
                                    gens.push_back(u);
                            visit(MonomialIdeal(amb, std::move(gens)));
                        },
                        &inherited, bounds.max_gens_per_degree);
                }
            },
            nullptr, bounds.max_gens_per_degree);
    }
}

std::vector<MonomialIdeal> enumerate_strongly_stable_ideals(const Ambient& amb, const IdealBounds& bounds)
{
    std::vector<MonomialIdeal> out;
    for_each_strongly_stable_ideal(amb, bounds, [&](const MonomialIdeal& I) { out.push_back(I); });
    return out;
}

}  // namespace excolex

namespace excolex {

void for_each_monomial_ideal(const Ambient& amb, const std::function<void(const MonomialIdeal&)>& visit)
{
    if (amb.n > 5)
        throw Error(ErrorKind::ContractViolation, "exhaustive ideal enumeration is limited to n <= 5");
    std::vector<Monomial> supports;
    for (int d = 1; d <= amb.n; ++d)
        for (Monomial u : all_monomials(amb, d))
            supports.push_back(u);
    std::vector<Monomial> chosen;
    // Supports are ordered by degree, so only earlier picks can divide later ones.
    std::function<void(std::size_t)> step = [&](std::size_t k) {
        if (k == supports.size()) {
            if (!chosen.empty())
                visit(MonomialIdeal(amb, chosen));
            return;
        }
        const Monomial u = supports[k];
        if (std::none_of(chosen.begin(), chosen.end(), [u](Monomial g) { return g.divides(u); })) {
            chosen.push_back(u);
            step(k + 1);
            chosen.pop_back();
        }
        step(k + 1);
    };
    step(0);
}

}  // namespace excolex
