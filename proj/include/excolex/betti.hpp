#pragma once

#include "excolex/ideal.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace excolex {

using BigInt = boost::multiprecision::cpp_int;

BigInt big_binomial(int n, int k);

enum class BettiSubject { Ideal, Quotient };

const char* to_string(BettiSubject subject);

/// Graded Betti numbers beta_{i,j} for 0 <= i <= i_max. Only nonzero entries are stored.
class BettiTable {
public:
    BettiTable(BettiSubject subject, int i_max) : subject_(subject), i_max_(i_max) {}

    BettiSubject subject() const { return subject_; }
    int i_max() const { return i_max_; }

    BigInt at(int i, int j) const;
    void set(int i, int j, BigInt value);
    void add(int i, int j, const BigInt& value);

    /// beta_i = sum_j beta_{i,j}.
    BigInt total(int i) const;
    std::vector<BigInt> totals() const;

    /// Nonzero (j, beta_{i,j}) pairs of row i, j ascending.
    std::vector<std::pair<int, BigInt>> row(int i) const;
    const std::map<std::pair<int, int>, BigInt>& entries() const { return entries_; }

    friend bool operator==(const BettiTable&, const BettiTable&) = default;

private:
    BettiSubject subject_;
    int i_max_;
    std::map<std::pair<int, int>, BigInt> entries_;
};

/// beta_{i,i+t}(I) = sum_{u in G(I)_t} binom(m(u)+i-1, m(u)-1). Strongly stable
/// input only; FormulaInapplicable otherwise.
BettiTable ahh_betti(const MonomialIdeal& ideal, int i_max);

/// The same closed form without the stability check, for callers that have
/// already established it.
BettiTable ahh_betti_unchecked(const MonomialIdeal& ideal, int i_max);

enum class ComparisonMode { LowerBoundAllChecked, UpperBoundAllChecked, EqualAllChecked, Incomparable };

const char* to_string(ComparisonMode mode);

/// Compares total Betti numbers of the left ideal I against the right ideal J:
/// "lower bound" means beta_i(J) <= beta_i(I) for every checked i.
struct ComparisonVerdict {
    ComparisonMode mode;
    std::vector<int> strict_indices;
    std::vector<int> equal_indices;
    int i_max;
    /// True when combined sorted m-multiset domination certifies the lower bound for all i.
    bool domination;
};

ComparisonVerdict compare_totals(const BettiTable& left, const BettiTable& right, int i_max);

/// Left is I, right is J. Both must be strongly stable.
ComparisonVerdict compare_betti(const MonomialIdeal& left, const MonomialIdeal& right, int i_max);

/// Sorted {m(v) : v in G(J)} pointwise <= sorted {m(u) : u in G(I)}. Sizes must match.
bool m_multiset_domination(const MonomialIdeal& I, const MonomialIdeal& J);
bool m_multiset_domination(std::vector<int> i_values, std::vector<int> j_values);

}  // namespace excolex
