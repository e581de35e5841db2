#pragma once

#include "excolex/ideal.hpp"

#include <optional>
#include <vector>

namespace excolex {

struct ColexStep {
    int degree;
    std::vector<Monomial> chosen;  // revlex-decreasing
};

/// The colexsegment ideal J attached to a monomial ideal, with the ambient
/// size m it was completed in.
struct ColexResult {
    MonomialIdeal J;
    int m;
    std::vector<ColexStep> steps;
};

inline constexpr int kDefaultAmbientCap = 32;

/// Runs the greedy construction in exactly m variables; nullopt when some
/// degree runs out of available monomials.
std::optional<ColexResult> colex_ideal_at(const DegreeProfile& profile, int m);

/// Scans m upward from max(n, d_t) and returns the first ambient in which
/// the greedy completes. Throws AmbientCapExceeded past m_cap.
ColexResult colex_ideal(const MonomialIdeal& ideal, int m_cap = kDefaultAmbientCap);

bool is_revlex_segment(const MonomialSet& set, const Ambient& amb);
bool is_revlex_ideal(const MonomialIdeal& ideal);

struct Prop63Result {
    bool shadow_is_segment;  // (a)
    bool long_enough;        // (b) |M| >= binom(n-2, d)
    bool has_boundary;       // (c) e_{n-d-1} ... e_{n-2} in M
    bool consistent() const { return shadow_is_segment == long_enough && long_enough == has_boundary; }
};

/// Evaluates the three equivalent conditions for a revlex segment M of degree
/// d < n-2. Throws NotARevlexSegment / DegreeTooHigh on bad input.
Prop63Result prop63_check(const MonomialSet& segment, const Ambient& amb);

/// Conditions under which the colexsegment ideal of a two-degree ideal is a
/// revlex ideal, evaluated alongside a direct check.
struct RevlexConditionReport {
    int d1 = 0;
    int d2 = 0;
    int m = 0;                        // ambient of the colexsegment ideal
    std::size_t dim_d1 = 0;           // dim I_{d1} = |G(I)_{d1}|
    std::uint64_t threshold_i = 0;    // binom(n-2, d1)
    std::uint64_t A_size = 0;         // sum_{r=d1}^{n-2} binom(r, d1)
    std::size_t c = 0;                // #{ v : z > v >= w }
    Monomial w;                       // revlex-min of Shad(Mon(J_{d1}))
    Monomial z;                       // e_{n-d1-1} ... e_{n-2} e_{n-1}
    std::size_t dim_d2_ideal = 0;     // dim I_{d2}
    std::size_t dim_d2_colex = 0;     // dim J_{d2}, 0 when m > n
    bool holds_i = false;
    bool holds_ii = false;            // dimension test on J_{d2}
    bool holds_ii_literal = false;    // same test on I_{d2}
    bool is_revlex = false;           // m == n and J is a revlex ideal of E

    bool biconditional() const { return is_revlex == (holds_i || holds_ii); }
    bool literal_biconditional() const { return is_revlex == (holds_i || holds_ii_literal); }
};

/// Requires exactly two generator degrees d1 < d2 < n-2; HypothesisViolated otherwise.
RevlexConditionReport prop64_check(const MonomialIdeal& ideal);

struct Cor65Result {
    bool enough_generators;  // |G(I)| >= binom(n-2, d)
    bool is_revlex;          // direct check on the colexsegment ideal
    bool consistent() const { return enough_generators == is_revlex; }
};

/// Requires a single generator degree d < n-2; HypothesisViolated otherwise.
Cor65Result cor65_check(const MonomialIdeal& ideal);

}  // namespace excolex
