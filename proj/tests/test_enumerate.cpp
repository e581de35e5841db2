#include "helpers.hpp"

#include "excolex/enumerate.hpp"
#include "excolex/error.hpp"

#include <doctest.h>

#include <set>

using namespace excolex;
using namespace testutil;

namespace {

std::set<std::vector<std::uint64_t>> brute_strongly_stable_sets(int n, int d)
{
    auto all = brute_monomials(n, d);
    std::set<std::vector<std::uint64_t>> out;
    for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << all.size()); ++pick) {
        std::vector<Monomial> v;
        for (std::size_t k = 0; k < all.size(); ++k)
            if ((pick >> k) & 1)
                v.push_back(all[k]);
        if (!strongly_stable_by_definition(v))
            continue;
        std::vector<std::uint64_t> key;
        for (auto u : v)
            key.push_back(u.mask());
        std::sort(key.begin(), key.end());
        out.insert(key);
    }
    return out;
}

std::vector<std::uint64_t> key_of(const std::vector<Monomial>& v)
{
    std::vector<std::uint64_t> key;
    for (auto u : v)
        key.push_back(u.mask());
    std::sort(key.begin(), key.end());
    return key;
}

std::size_t distinct_degrees(const MonomialIdeal& I) { return degree_profile(I).size(); }

}  // namespace

TEST_CASE("strongly stable set counts")
{
    CHECK(enumerate_strongly_stable_sets(Ambient(3), 2).size() == 3);
    CHECK(enumerate_strongly_stable_sets(Ambient(4), 2).size() == 7);
    CHECK(enumerate_strongly_stable_sets(Ambient(5), 2).size() == 15);
    for (int n = 1; n <= 7; ++n)
        CHECK(enumerate_strongly_stable_sets(Ambient(n), n).size() == 1);
    auto three = enumerate_strongly_stable_sets(Ambient(3), 2);
    std::set<std::vector<std::uint64_t>> got;
    for (auto& s : three)
        got.insert(key_of(s.elements()));
    CHECK(got == std::set<std::vector<std::uint64_t>>{key_of(monos({{1, 2}})), key_of(monos({{1, 2}, {1, 3}})),
                                                      key_of(monos({{1, 2}, {1, 3}, {2, 3}}))});
    CHECK_THROWS_AS(enumerate_strongly_stable_sets(Ambient(3), 4), Error);
    CHECK_THROWS_AS(enumerate_strongly_stable_sets(Ambient(3), 0), Error);
}

TEST_CASE("set enumerator equals a brute-force power-set filter")
{
    for (int n = 1; n <= 5; ++n)
        for (int d = 1; d <= n; ++d) {
            if (binomial(n, d) > 16)
                continue;
            auto want = brute_strongly_stable_sets(n, d);
            auto sets = enumerate_strongly_stable_sets(Ambient(n), d);
            std::set<std::vector<std::uint64_t>> got;
            for (auto& s : sets) {
                CHECK(is_strongly_stable(s));
                got.insert(key_of(s.elements()));
            }
            CHECK(got.size() == sets.size());  // no repeats
            CHECK(got == want);
        }
}

TEST_CASE("forced sets and extra limits")
{
    Ambient a5(5);
    auto forced = MonomialSet(2, revlex_segment(a5, 2, 3));
    std::size_t count = 0;
    for_each_strongly_stable_set(a5, 2, [&](const MonomialSet& s) {
        ++count;
        for (auto u : forced)
            CHECK(s.contains(u));
        CHECK(s.size() <= forced.size() + 2);
    }, &forced, 2);
    // segments of length 3 plus up to two more: {e1e4}, {e1e4,e2e4}, {e1e4,e1e5}, plus itself
    CHECK(count == 4);
}

TEST_CASE("ideal enumerator equals a brute-force filter over all monomial ideals")
{
    for (int n = 1; n <= 5; ++n) {
        std::set<std::vector<std::uint64_t>> want;
        for_each_monomial_ideal(Ambient(n), [&](const MonomialIdeal& I) {
            if (distinct_degrees(I) <= 2 && is_strongly_stable_ideal(I))
                want.insert(key_of(I.generators()));
        });
        auto ideals = enumerate_strongly_stable_ideals(Ambient(n));
        std::set<std::vector<std::uint64_t>> got;
        for (auto& I : ideals)
            got.insert(key_of(I.generators()));
        CHECK(got.size() == ideals.size());
        CHECK(got == want);
    }
}

TEST_CASE("ideal enumerator bounds and counts")
{
    auto twos = enumerate_strongly_stable_ideals(Ambient(2));
    CHECK(twos.size() == 3);  // (e1), (e1, e2), (e1e2)
    CHECK(enumerate_strongly_stable_ideals(Ambient(5), {.max_degrees = 1, .min_degree = 2, .max_degree = 2}).size() == 15);
    const std::size_t ones[] = {0, 1, 3, 7, 16, 41, 140};
    const std::size_t pairs[] = {0, 0, 0, 1, 9, 68, 669};
    for (int n = 1; n <= 6; ++n) {
        CHECK(enumerate_strongly_stable_ideals(Ambient(n), {.max_degrees = 1}).size() == ones[n]);
        CHECK(enumerate_strongly_stable_ideals(Ambient(n), {.exact_degrees = 2}).size() == pairs[n]);
    }
    for (auto& I : enumerate_strongly_stable_ideals(Ambient(5), {.max_gens_per_degree = 2, .max_degree = 3})) {
        CHECK(I.top_generator_degree() <= 3);
        for (auto [d, p] : degree_profile(I))
            CHECK(p <= 2);
    }
}

TEST_CASE("every strongly stable row of the comparison tables is enumerated")
{
    auto all = enumerate_strongly_stable_ideals(Ambient(5));
    auto has = [&](const MonomialIdeal& I) { return std::find(all.begin(), all.end(), I) != all.end(); };
    CHECK(has(ideal(5, {{1, 2}, {1, 3, 4}, {1, 3, 5}})));
    CHECK(has(ideal(5, {{1, 2}, {1, 3}, {1, 4, 5}})));
    CHECK(has(ideal(5, {{1, 2}, {1, 3}, {1, 4}, {2, 3, 4}})));
    CHECK(has(ideal(5, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4, 5}})));
}

TEST_CASE("monomial ideal counts")
{
    const std::size_t want[] = {0, 1, 4, 18, 166};
    for (int n = 1; n <= 4; ++n) {
        std::size_t count = 0;
        for_each_monomial_ideal(Ambient(n), [&](const MonomialIdeal&) { ++count; });
        CHECK(count == want[n]);
    }
    CHECK_THROWS_AS(for_each_monomial_ideal(Ambient(6), [](const MonomialIdeal&) {}), Error);
}
