#pragma once

#include "excolex/ideal.hpp"

#include <initializer_list>
#include <vector>

namespace testutil {

using namespace excolex;

inline Monomial mono(std::initializer_list<int> idx) { return Monomial::from_indices(idx); }

inline std::vector<Monomial> monos(std::initializer_list<std::initializer_list<int>> list)
{
    std::vector<Monomial> out;
    for (auto idx : list)
        out.push_back(mono(idx));
    return out;
}

inline MonomialSet mset(int d, std::initializer_list<std::initializer_list<int>> list) { return MonomialSet(d, monos(list)); }

inline MonomialIdeal ideal(int n, std::initializer_list<std::initializer_list<int>> gens)
{
    return minimalize(Ambient(n), monos(gens));
}

/// Definitional revlex: compare from the largest position down; at the first
/// position where the sorted index lists differ, the smaller index wins.
inline int revlex_by_definition(Monomial u, Monomial v)
{
    auto a = u.indices();
    auto b = v.indices();
    for (std::size_t s = a.size(); s-- > 0;) {
        if (a[s] != b[s])
            return a[s] < b[s] ? 1 : -1;
    }
    return 0;
}

/// Every degree-d subset of [n], by brute force over all masks.
inline std::vector<Monomial> brute_monomials(int n, int d)
{
    std::vector<Monomial> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
        if (std::popcount(m) == d)
            out.emplace_back(m);
    return out;
}

/// Strong stability straight from the definition: for u in M, j in supp(u),
/// i < j not in supp(u), u e_i / e_j lies in M.
inline bool strongly_stable_by_definition(const std::vector<Monomial>& set)
{
    auto in = [&](Monomial x) {
        for (auto y : set)
            if (y == x)
                return true;
        return false;
    };
    for (auto u : set)
        for (int j : u.indices())
            for (int i = 1; i < j; ++i)
                if (!u.contains(i) && !in(u.without(j).with(i)))
                    return false;
    return true;
}

}  // namespace testutil
