#pragma once

#include "excolex/ideal.hpp"

#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

namespace excolex {

/// Visits every nonempty strongly stable subset of Mon_d over [n] (the
/// nonempty down-sets of the Borel order) exactly once, in a fixed order.
/// Sets containing `forced` only, when it is given; `forced` must itself be
/// strongly stable. At most max_extra elements outside `forced` are taken.
void for_each_strongly_stable_set(const Ambient& amb, int d, const std::function<void(const MonomialSet&)>& visit,
                                  const MonomialSet* forced = nullptr,
                                  std::size_t max_extra = std::numeric_limits<std::size_t>::max());

std::vector<MonomialSet> enumerate_strongly_stable_sets(const Ambient& amb, int d);

struct IdealBounds {
    /// Number of distinct generator degrees, 1 or 2.
    int max_degrees = 2;
    /// Only ideals with exactly this many generator degrees, when nonzero.
    int exact_degrees = 0;
    std::size_t max_gens_per_degree = std::numeric_limits<std::size_t>::max();
    int min_degree = 1;
    /// Largest generator degree; defaults to n.
    int max_degree = 0;
};

/// Every strongly stable ideal of E over [n] within the bounds, each once.
/// A two-degree ideal is a strongly stable set M1 in degree d1 plus a
/// strongly stable set M2 in degree d2 strictly containing the degree-d2
/// component of (M1); its new generators are M2 minus that component.
void for_each_strongly_stable_ideal(const Ambient& amb, const IdealBounds& bounds,
                                    const std::function<void(const MonomialIdeal&)>& visit);

std::vector<MonomialIdeal> enumerate_strongly_stable_ideals(const Ambient& amb, const IdealBounds& bounds = {});

}  // namespace excolex

namespace excolex {

/// Every proper nonzero monomial ideal over [n] (all antichains of nonempty
/// supports), in a fixed order. Exponential in 2^n; meant for n <= 5.
void for_each_monomial_ideal(const Ambient& amb, const std::function<void(const MonomialIdeal&)>& visit);

}  // namespace excolex
