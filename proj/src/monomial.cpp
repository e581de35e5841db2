#include "excolex/monomial.hpp"

#include "excolex/error.hpp"

#include <algorithm>
#include <limits>

namespace excolex {

Monomial Monomial::from_indices(std::span<const int> indices)
{
    std::uint64_t mask = 0;
    int prev = 0;
    for (int k : indices) {
        if (k <= prev || k > kMaxVariables)
            throw Error(ErrorKind::ContractViolation, "monomial indices must be strictly increasing in [1, 64]");
        mask |= std::uint64_t{1} << (k - 1);
        prev = k;
    }
    return Monomial(mask);
}

std::vector<int> Monomial::indices() const
{
    std::vector<int> out;
    out.reserve(degree());
    for (std::uint64_t m = mask_; m != 0; m &= m - 1)
        out.push_back(std::countr_zero(m) + 1);
    return out;
}

std::string Monomial::to_text() const
{
    if (mask_ == 0)
        return "1";
    std::string s;
    for (int k : indices())
        s += "e" + std::to_string(k);
    return s;
}

Ambient::Ambient(int vars) : n(vars)
{
    if (vars < 1 || vars > kMaxVariables)
        throw Error(ErrorKind::ContractViolation, "ambient size must lie in [1, 64], got " + std::to_string(vars));
}

std::strong_ordering revlex_cmp(Monomial u, Monomial v)
{
    if (u.degree() != v.degree())
        throw Error(ErrorKind::ContractViolation, "revlex comparison of monomials of different degrees");
    // Smaller mask means the top differing index lies in v.
    return v.mask() <=> u.mask();
}

std::uint64_t binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (r > kMax)
            return kMax;
    }
    return static_cast<std::uint64_t>(r);
}

std::vector<Monomial> all_monomials(const Ambient& amb, int d)
{
    std::vector<Monomial> out;
    if (d < 0 || d > amb.n)
        return out;
    if (d == 0)
        return {Monomial()};
    const std::uint64_t full = amb.full_mask();
    std::uint64_t x = d == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << d) - 1;
    while (true) {
        out.emplace_back(x);
        // Gosper's hack: next mask with the same popcount, in increasing order.
        const std::uint64_t c = x & (~x + 1);
        const std::uint64_t r = x + c;
        if (r == 0 || (r & ~full))
            break;
        x = (((r ^ x) >> 2) / c) | r;
    }
    return out;
}

MonomialSet::MonomialSet(int degree, std::vector<Monomial> elems) : degree_(degree), elems_(std::move(elems))
{
    for (Monomial u : elems_)
        if (u.degree() != degree_)
            throw Error(ErrorKind::ContractViolation, "monomial set is not degree-homogeneous");
    std::sort(elems_.begin(), elems_.end(), MaskLess{});
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

bool MonomialSet::contains(Monomial u) const
{
    return std::binary_search(elems_.begin(), elems_.end(), u, MaskLess{});
}

Monomial MonomialSet::revlex_min() const
{
    if (elems_.empty())
        throw Error(ErrorKind::ContractViolation, "revlex minimum of an empty set");
    return elems_.back();
}

void MonomialSet::insert(Monomial u)
{
    if (u.degree() != degree_)
        throw Error(ErrorKind::ContractViolation, "inserting a monomial of the wrong degree");
    auto it = std::lower_bound(elems_.begin(), elems_.end(), u, MaskLess{});
    if (it == elems_.end() || *it != u)
        elems_.insert(it, u);
}

MonomialSet MonomialSet::without(Monomial u) const
{
    MonomialSet out(degree_);
    for (Monomial v : elems_)
        if (v != u)
            out.elems_.push_back(v);
    return out;
}

std::vector<Monomial> revlex_segment(const Ambient& amb, int d, std::uint64_t len)
{
    if (d < 1 || d > amb.n)
        throw Error(ErrorKind::ContractViolation, "segment degree must lie in [1, n]");
    if (len > binomial(amb.n, d))
        throw Error(ErrorKind::InsufficientMonomials,
                    "requested " + std::to_string(len) + " monomials of degree " + std::to_string(d) +
                        " but only " + std::to_string(binomial(amb.n, d)) + " exist");
    auto all = all_monomials(amb, d);
    all.resize(len);
    return all;
}

MonomialSet bold_e_mul(const MonomialSet& set, int i, const Ambient& amb)
{
    if (i < 1 || i > amb.n)
        throw Error(ErrorKind::ContractViolation, "variable bound out of range");
    std::vector<Monomial> out;
    for (Monomial u : set) {
        if (!amb.hosts(u))
            throw Error(ErrorKind::ContractViolation, "monomial " + u.to_text() + " lies outside the ambient");
        for (int j = 1; j <= i; ++j)
            if (!u.contains(j))
                out.push_back(u.with(j));
    }
    return MonomialSet(set.degree() + 1, std::move(out));
}

MonomialSet shadow(const MonomialSet& set, const Ambient& amb)
{
    if (set.degree() > amb.n)
        throw Error(ErrorKind::EmptyShadowDomain, "shadow of degree " + std::to_string(set.degree()) + " > n");
    if (set.degree() == amb.n)
        return MonomialSet(set.degree() + 1);
    return bold_e_mul(set, amb.n, amb);
}

MonomialSet times_variable(const MonomialSet& set, int i)
{
    std::vector<Monomial> out;
    for (Monomial u : set)
        if (!u.contains(i))
            out.push_back(u.with(i));
    return MonomialSet(set.degree() + 1, std::move(out));
}

MonomialSet restrict_le(const MonomialSet& set, int p)
{
    std::vector<Monomial> out;
    for (Monomial u : set)
        if (u.max_index() <= p)
            out.push_back(u);
    return MonomialSet(set.degree(), std::move(out));
}

std::size_t m_le(const MonomialSet& set, int p)
{
    return static_cast<std::size_t>(
        std::count_if(set.begin(), set.end(), [p](Monomial u) { return u.max_index() <= p; }));
}

std::vector<Monomial> borel_moves(Monomial u)
{
    std::vector<Monomial> out;
    for (int j : u.indices())
        for (int i = 1; i < j; ++i)
            if (!u.contains(i))
                out.push_back(u.without(j).with(i));
    return out;
}

bool is_strongly_stable(const MonomialSet& set)
{
    for (Monomial u : set)
        for (Monomial v : borel_moves(u))
            if (!set.contains(v))
                return false;
    return true;
}

bool is_stable(const MonomialSet& set)
{
    for (Monomial u : set) {
        const int top = u.max_index();
        for (int i = 1; i < top; ++i)
            if (!u.contains(i) && !set.contains(u.without(top).with(i)))
                return false;
    }
    return true;
}

std::size_t MStats::at(int i) const
{
    auto it = by_max.find(i);
    return it == by_max.end() ? 0 : it->second;
}

std::size_t MStats::le(int i) const
{
    std::size_t s = 0;
    for (auto [k, c] : by_max)
        if (k <= i)
            s += c;
    return s;
}

std::size_t MStats::total() const
{
    std::size_t s = 0;
    for (auto [k, c] : by_max)
        s += c;
    return s;
}

MStats m_stats(std::span<const Monomial> monomials)
{
    MStats stats;
    for (Monomial u : monomials)
        ++stats.by_max[u.max_index()];
    return stats;
}

MStats m_stats(const MonomialSet& set)
{
    return m_stats(std::span<const Monomial>(set.elements()));
}

}  // namespace excolex
