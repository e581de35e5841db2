#pragma once

#include "excolex/monomial.hpp"

#include <vector>

namespace excolex {

struct DegreeCount {
    int degree;
    std::size_t count;
    friend bool operator==(const DegreeCount&, const DegreeCount&) = default;
};

/// (d_j, p_j) pairs, degrees strictly increasing, counts positive.
using DegreeProfile = std::vector<DegreeCount>;

/// A proper nonzero monomial ideal of E = K<e_1..e_n>, held by its minimal
/// generating set G(I). Generators are sorted by degree, then revlex-decreasing.
class MonomialIdeal {
public:
    /// Validates that gens is already minimal; use minimalize() for raw input.
    MonomialIdeal(Ambient amb, std::vector<Monomial> gens);

    const Ambient& ambient() const { return amb_; }
    int n() const { return amb_.n; }
    const std::vector<Monomial>& generators() const { return gens_; }

    /// G(I)_d.
    std::vector<Monomial> generators_of_degree(int d) const;
    int initial_degree() const { return gens_.front().degree(); }
    int top_generator_degree() const { return gens_.back().degree(); }

    bool contains(Monomial u) const;

    /// The same generators read in a different ambient (must host them).
    MonomialIdeal in_ambient(const Ambient& amb) const;

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b)
    {
        return a.amb_.n == b.amb_.n && a.gens_ == b.gens_;
    }

private:
    Ambient amb_;
    std::vector<Monomial> gens_;
};

/// Orders generators by degree, then revlex-decreasing.
void sort_generators(std::vector<Monomial>& gens);

/// Drops duplicates and every monomial divisible by another one.
MonomialIdeal minimalize(const Ambient& amb, std::vector<Monomial> raw);

/// Mon(I_t): degree-t monomials divisible by some generator.
MonomialSet graded_component(const MonomialIdeal& ideal, int t);

/// Checks every graded component from indeg(I) to n.
bool is_strongly_stable_ideal(const MonomialIdeal& ideal);
/// Generator-level test: every Borel move of every generator stays in I.
bool is_strongly_stable_ideal_by_generators(const MonomialIdeal& ideal);
bool is_stable_ideal(const MonomialIdeal& ideal);

DegreeProfile degree_profile(const MonomialIdeal& ideal);

}  // namespace excolex
