#include "helpers.hpp"

#include "excolex/betti.hpp"
#include "excolex/cartan.hpp"
#include "excolex/enumerate.hpp"
#include "excolex/error.hpp"
#include "excolex/rank.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <doctest.h>

#include <map>
#include <random>

using namespace excolex;
using namespace testutil;

namespace {

using Rational = boost::multiprecision::cpp_rational;

// Plain Gaussian elimination over Q, for comparison with the fraction-free kernel.
int rank_by_fractions(const IntMatrix& m)
{
    std::vector<std::vector<Rational>> a(m.rows, std::vector<Rational>(m.cols));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c)
            a[r][c] = m(r, c);
    int rank = 0;
    for (int c = 0; c < m.cols && rank < m.rows; ++c) {
        int p = rank;
        while (p < m.rows && a[p][c] == 0)
            ++p;
        if (p == m.rows)
            continue;
        std::swap(a[p], a[rank]);
        for (int r = rank + 1; r < m.rows; ++r) {
            if (a[r][c] == 0)
                continue;
            Rational f = a[r][c] / a[rank][c];
            for (int k = c; k < m.cols; ++k)
                a[r][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

CartanOptions opts(int i_max, ExecPolicy policy = ExecPolicy::Parallel, FieldSpec field = {})
{
    CartanOptions o;
    o.i_max = i_max;
    o.policy = policy;
    o.field = field;
    return o;
}

}  // namespace

TEST_CASE("rank kernels agree with rational Gaussian elimination")
{
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> size(0, 9);
    std::uniform_int_distribution<int> entry(-2, 2);
    for (int trial = 0; trial < 400; ++trial) {
        IntMatrix m(size(rng), size(rng));
        for (auto& x : m.data)
            x = entry(rng);
        // force some dependent rows
        if (m.rows >= 3)
            for (int c = 0; c < m.cols; ++c)
                m(2, c) = m(0, c) - 2 * m(1, c);
        const int want = rank_by_fractions(m);
        CHECK(rank_rational(m) == want);
        CHECK(rank_mod_p(m, 32003) == want);
    }
    // characteristic matters: [[1,1],[1,-1]] has determinant -2
    IntMatrix two(2, 2);
    two(0, 0) = 1, two(0, 1) = 1, two(1, 0) = 1, two(1, 1) = -1;
    CHECK(rank_rational(two) == 2);
    CHECK(rank_mod_p(two, 2) == 1);
}

TEST_CASE("chain_space examples")
{
    auto I = ideal(2, {{1, 2}});
    auto c01 = chain_space(I, 0, 1);
    REQUIRE(c01.size() == 2);
    CHECK(c01[0].mono == mono({1}));
    CHECK(c01[1].mono == mono({2}));
    CHECK(c01[0].powers == std::vector<int>{0, 0});
    CHECK(chain_space(I, 1, 1).size() == 2);
    for (auto& e : chain_space(I, 1, 1)) {
        CHECK(e.mono.is_unit());
        CHECK(e.homological_degree() == 1);
    }
    auto c00 = chain_space(ideal(4, {{1, 3}}), 0, 0);
    REQUIRE(c00.size() == 1);
    CHECK(c00[0].mono.is_unit());
    CHECK(chain_space(I, 0, 2).empty());
    CHECK(chain_dimension(I, 3, 4) == 2 * 4);  // sigma in {e1, e2}, 4 compositions of 3 into 2 parts
}

TEST_CASE("chain_dimension matches chain_space size")
{
    auto I = ideal(4, {{1, 2}, {3}});
    for (int i = 0; i <= 4; ++i)
        for (int j = 0; j <= 8; ++j)
            CHECK(chain_dimension(I, i, j) == chain_space(I, i, j).size());
}

TEST_CASE("differential examples")
{
    auto I = ideal(2, {{1, 2}});
    CartanBasisElement unit_x1{Monomial(), {1, 0}};
    auto d = differential(unit_x1, I);
    REQUIRE(d.size() == 1);
    CHECK(d[0].coefficient == 1);
    CHECK(d[0].element == CartanBasisElement{mono({1}), {0, 0}});

    CartanBasisElement e1_x2{mono({1}), {0, 1}};
    CHECK(differential(e1_x2, I).empty());

    // sign (-1)^alpha: e2 (x) x_3 gives -e2e3 (one index of sigma below 3), e3 (x) x_2 gives +e2e3
    auto J = ideal(3, {{1}});
    auto a = differential({mono({2}), {0, 0, 1}}, J);
    auto b = differential({mono({3}), {0, 1, 0}}, J);
    REQUIRE(a.size() == 1);
    REQUIRE(b.size() == 1);
    CHECK(a[0].coefficient == -1);
    CHECK(b[0].coefficient == 1);
    CHECK(a[0].element == b[0].element);
}

TEST_CASE("d o d = 0 and internal degree is preserved")
{
    for (auto& I : {ideal(4, {{1, 2}, {3, 4}}), ideal(4, {{2}}), ideal(3, {{1, 3}}), ideal(4, {{1, 2, 3}, {2, 4}})})
        for (int i = 0; i <= 3; ++i)
            for (int j = i; j <= I.n() + i; ++j)
                for (auto& e : chain_space(I, i, j)) {
                    std::map<CartanBasisElement, int> acc;
                    for (auto& t : differential(e, I)) {
                        CHECK(t.element.internal_degree() == j);
                        CHECK(t.element.homological_degree() == i - 1);
                        for (auto& s : differential(t.element, I))
                            acc[s.element] += t.coefficient * s.coefficient;
                    }
                    for (auto& [k, v] : acc)
                        CHECK(v == 0);
                }
}

TEST_CASE("oracle on the ideal (e1) over one variable")
{
    auto t = cartan_betti(ideal(1, {{1}}), opts(6));
    for (int i = 0; i <= 7; ++i)
        CHECK(t.quotient.total(i) == 1);
    for (int i = 0; i <= 6; ++i) {
        CHECK(t.ideal.total(i) == 1);
        CHECK(t.ideal.at(i, i + 1) == 1);
    }
}

TEST_CASE("oracle on a principal quadric matches i + 1")
{
    for (int n = 2; n <= 5; ++n) {
        auto t = cartan_betti(ideal(n, {{1, 2}}), opts(5));
        for (int i = 0; i <= 5; ++i)
            CHECK(t.ideal.total(i) == i + 1);
        CHECK(t.ideal == ahh_betti(ideal(n, {{1, 2}}), 5));
    }
}

TEST_CASE("oracle normalisation and generator count")
{
    for (auto& I : {ideal(4, {{2, 3}}), ideal(4, {{1, 4}, {2, 3}}), ideal(3, {{1}, {2, 3}}), ideal(5, {{3, 4, 5}})}) {
        auto t = cartan_betti(I, opts(2));
        CHECK(t.quotient.at(0, 0) == 1);
        CHECK(t.quotient.total(0) == 1);
        for (int j = 1; j <= I.n(); ++j)
            CHECK(t.quotient.at(1, j) == I.generators_of_degree(j).size());
    }
}

TEST_CASE("Euler characteristic of each internal degree matches the chain dimensions")
{
    // For fixed j the complex is bounded (i <= j), so sum (-1)^i beta_{i,j} = sum (-1)^i dim C_{i,j}.
    for (auto& I : {ideal(4, {{2, 3}}), ideal(4, {{1, 4}, {2, 3}}), ideal(5, {{1, 2}, {1, 3}, {2, 4, 5}})}) {
        const int j_max = 5;
        CartanOptions o = opts(j_max);
        o.j_max = j_max;
        auto t = cartan_betti(I, o);
        for (int j = 0; j <= j_max; ++j) {
            BigInt lhs = 0, rhs = 0;
            for (int i = 0; i <= j; ++i) {
                const BigInt sign = i % 2 == 0 ? 1 : -1;
                lhs += sign * t.quotient.at(i, j);
                rhs += sign * chain_dimension(I, i, j);
            }
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("fast kernel, reference, finite field and serial runs agree")
{
    for (int n = 1; n <= 4; ++n)
        for (auto& I : enumerate_strongly_stable_ideals(Ambient(n))) {
            auto fast = cartan_betti(I, opts(3));
            auto serial = cartan_betti(I, opts(3, ExecPolicy::Serial));
            auto ref = cartan_betti_reference(I, opts(3));
            auto gf = cartan_betti(I, opts(3, ExecPolicy::Parallel, FieldSpec::gf(32003)));
            CHECK(fast.quotient == serial.quotient);
            CHECK(fast.quotient == ref.quotient);
            CHECK(fast.quotient == gf.quotient);
            CHECK(fast.ideal == ahh_betti(I, 3));
        }
    // a non-stable ideal, where only the oracles apply
    auto I = ideal(4, {{2, 3}, {1, 4}});
    CHECK(cartan_betti(I, opts(3)).quotient == cartan_betti_reference(I, opts(3)).quotient);
    CHECK(cartan_betti_reference(I, opts(3, ExecPolicy::Serial, FieldSpec::gf(7))).quotient ==
          cartan_betti(I, opts(3)).quotient);
}

TEST_CASE("oracle guards")
{
    CartanOptions tiny = opts(4);
    tiny.max_chain_dim = 10;
    try {
        cartan_betti(ideal(4, {{1, 2}}), tiny);
        FAIL("expected OracleTooLarge");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::OracleTooLarge);
        CHECK(e.is_resource_cap());
    }
    CHECK_THROWS_AS(cartan_betti_reference(ideal(4, {{1, 2}}), tiny), Error);
    CHECK_THROWS_AS(cartan_betti(ideal(17, {{1}}), opts(1)), Error);
    CHECK_THROWS_AS(cartan_betti(ideal(3, {{1}}), opts(-1)), Error);
    CHECK_THROWS_AS(cartan_betti(ideal(3, {{1}}), opts(1, ExecPolicy::Serial, FieldSpec::gf(1))), Error);
}
