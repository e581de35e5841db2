#include "excolex/betti.hpp"

#include "excolex/error.hpp"

#include <algorithm>
#include <limits>

namespace excolex {

BigInt big_binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

const char* to_string(BettiSubject subject)
{
    return subject == BettiSubject::Ideal ? "ideal" : "quotient";
}

BigInt BettiTable::at(int i, int j) const
{
    auto it = entries_.find({i, j});
    return it == entries_.end() ? BigInt(0) : it->second;
}

void BettiTable::set(int i, int j, BigInt value)
{
    if (value < 0)
        throw Error(ErrorKind::ContractViolation, "Betti numbers are nonnegative");
    if (value == 0)
        entries_.erase({i, j});
    else
        entries_[{i, j}] = std::move(value);
}

void BettiTable::add(int i, int j, const BigInt& value)
{
    set(i, j, at(i, j) + value);
}

BigInt BettiTable::total(int i) const
{
    BigInt s = 0;
    for (auto it = entries_.lower_bound({i, std::numeric_limits<int>::min()});
         it != entries_.end() && it->first.first == i; ++it)
        s += it->second;
    return s;
}

std::vector<BigInt> BettiTable::totals() const
{
    std::vector<BigInt> out;
    for (int i = 0; i <= i_max_; ++i)
        out.push_back(total(i));
    return out;
}

std::vector<std::pair<int, BigInt>> BettiTable::row(int i) const
{
    std::vector<std::pair<int, BigInt>> out;
    for (auto it = entries_.lower_bound({i, std::numeric_limits<int>::min()});
         it != entries_.end() && it->first.first == i; ++it)
        out.emplace_back(it->first.second, it->second);
    return out;
}

BettiTable ahh_betti_unchecked(const MonomialIdeal& ideal, int i_max)
{
    if (i_max < 0)
        throw Error(ErrorKind::ContractViolation, "negative homological cutoff");
    BettiTable table(BettiSubject::Ideal, i_max);
    for (Monomial u : ideal.generators()) {
        const int m = u.max_index();
        const int t = u.degree();
        for (int i = 0; i <= i_max; ++i)
            table.add(i, i + t, big_binomial(m + i - 1, m - 1));
    }
    return table;
}

BettiTable ahh_betti(const MonomialIdeal& ideal, int i_max)
{
    if (!is_strongly_stable_ideal(ideal))
        throw Error(ErrorKind::FormulaInapplicable, "closed form requires a strongly stable ideal");
    return ahh_betti_unchecked(ideal, i_max);
}

const char* to_string(ComparisonMode mode)
{
    switch (mode) {
    case ComparisonMode::LowerBoundAllChecked: return "LowerBoundAllChecked";
    case ComparisonMode::UpperBoundAllChecked: return "UpperBoundAllChecked";
    case ComparisonMode::EqualAllChecked: return "EqualAllChecked";
    case ComparisonMode::Incomparable: return "Incomparable";
    }
    return "Unknown";
}

ComparisonVerdict compare_totals(const BettiTable& left, const BettiTable& right, int i_max)
{
    if (i_max < 0)
        throw Error(ErrorKind::ContractViolation, "negative homological cutoff");
    ComparisonVerdict v{ComparisonMode::EqualAllChecked, {}, {}, i_max, false};
    bool some_less = false;
    bool some_greater = false;
    for (int i = 0; i <= i_max; ++i) {
        const BigInt bi = left.total(i);
        const BigInt bj = right.total(i);
        if (bi == bj) {
            v.equal_indices.push_back(i);
        } else {
            v.strict_indices.push_back(i);
            (bj < bi ? some_less : some_greater) = true;
        }
    }
    if (some_less && some_greater)
        v.mode = ComparisonMode::Incomparable;
    else if (some_less)
        v.mode = ComparisonMode::LowerBoundAllChecked;
    else if (some_greater)
        v.mode = ComparisonMode::UpperBoundAllChecked;
    return v;
}

ComparisonVerdict compare_betti(const MonomialIdeal& left, const MonomialIdeal& right, int i_max)
{
    auto v = compare_totals(ahh_betti(left, i_max), ahh_betti(right, i_max), i_max);
    v.domination = left.generators().size() == right.generators().size() && m_multiset_domination(left, right);
    return v;
}

bool m_multiset_domination(std::vector<int> i_values, std::vector<int> j_values)
{
    if (i_values.size() != j_values.size())
        throw Error(ErrorKind::ProfileMismatch, "generator counts differ");
    std::sort(i_values.begin(), i_values.end());
    std::sort(j_values.begin(), j_values.end());
    for (std::size_t k = 0; k < i_values.size(); ++k)
        if (j_values[k] > i_values[k])
            return false;
    return true;
}

bool m_multiset_domination(const MonomialIdeal& I, const MonomialIdeal& J)
{
    std::vector<int> a;
    std::vector<int> b;
    for (Monomial u : I.generators())
        a.push_back(u.max_index());
    for (Monomial v : J.generators())
        b.push_back(v.max_index());
    return m_multiset_domination(std::move(a), std::move(b));
}

}  // namespace excolex
