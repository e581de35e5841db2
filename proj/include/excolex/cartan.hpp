#pragma once

// Graded Betti numbers of E/I from the homology of E/I tensored with the
// Cartan resolution of K over E.
//
// The chain space in homological degree i and internal degree j is spanned by
// e_sigma (x) x^(a), sigma not in I, |sigma| = j - i, |a| = i, where x^(a) is a
// divided-power monomial. The differential is
//   d(e_sigma (x) x^(a)) = sum_{k : a_k > 0} (-1)^alpha(sigma,k) e_k e_sigma (x) x^(a - eps_k),
// with terms vanishing when k is in sigma or sigma + k lies in I.

#include "excolex/betti.hpp"
#include "excolex/exec.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace excolex {

struct CartanBasisElement {
    Monomial mono;
    std::vector<int> powers;  // a_1..a_n

    int homological_degree() const;
    int internal_degree() const { return mono.degree() + homological_degree(); }

    friend bool operator==(const CartanBasisElement&, const CartanBasisElement&) = default;
    friend auto operator<=>(const CartanBasisElement& a, const CartanBasisElement& b)
    {
        if (a.mono != b.mono)
            return b.mono.mask() <=> a.mono.mask();
        return a.powers <=> b.powers;
    }
};

struct CartanTerm {
    int coefficient;  // +1 or -1
    CartanBasisElement element;
};

/// Basis of the (i, j) chain space: revlex-decreasing on sigma, then
/// lexicographic on a.
std::vector<CartanBasisElement> chain_space(const MonomialIdeal& ideal, int i, int j);

/// Number of basis elements of the (i, j) chain space.
BigInt chain_dimension(const MonomialIdeal& ideal, int i, int j);

std::vector<CartanTerm> differential(const CartanBasisElement& element, const MonomialIdeal& ideal);

struct FieldSpec {
    /// 0 selects the rationals; otherwise a prime below 2^31.
    std::uint32_t prime = 0;

    static FieldSpec rationals() { return {}; }
    static FieldSpec gf(std::uint32_t p) { return {p}; }
    bool is_rational() const { return prime == 0; }
};

struct CartanOptions {
    /// Cutoff for the ideal's table; the quotient table runs to i_max + 1.
    int i_max = 4;
    /// Largest internal degree; defaults to n + i_max + 1.
    std::optional<int> j_max;
    FieldSpec field;
    /// OracleTooLarge is raised when any needed chain space exceeds this.
    std::uint64_t max_chain_dim = 50'000'000;
    ExecPolicy policy = ExecPolicy::Parallel;
};

struct CartanTables {
    BettiTable quotient;  // beta_{i,j}(E/I), 0 <= i <= i_max + 1
    BettiTable ideal;     // beta_{i,j}(I) = beta_{i+1,j}(E/I), 0 <= i <= i_max
};

/// Multigraded kernel: the differential splits into blocks by multidegree
/// and a block depends only on the support of its multidegree, so ranks are
/// computed once per (support, |sigma|) and scaled by the number of
/// multidegrees with that support. Blocks are ranked in parallel.
CartanTables cartan_betti(const MonomialIdeal& ideal, const CartanOptions& options = {});

/// Serial reference: materializes chain_space() and differential() for each
/// cell and ranks the assembled sparse matrix one connected component at a
/// time. Only practical at small n and i.
CartanTables cartan_betti_reference(const MonomialIdeal& ideal, const CartanOptions& options = {});

}  // namespace excolex
