#pragma once

// Squarefree monomials of an exterior algebra, stored as bitmasks over [n].
//
// Bit k-1 of the mask is set iff e_k divides the monomial. With this encoding
// the revlex order on monomials of a fixed degree is the reverse of the
// integer order on masks: u >revlex v  <=>  mask(u) < mask(v).

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace excolex {

inline constexpr int kMaxVariables = 64;

class Monomial {
public:
    constexpr Monomial() = default;
    constexpr explicit Monomial(std::uint64_t mask) : mask_(mask) {}

    /// Builds e_sigma from 1-based indices; they must be strictly increasing.
    static Monomial from_indices(std::span<const int> indices);
    static Monomial from_indices(std::initializer_list<int> indices)
    {
        return from_indices(std::span<const int>(indices.begin(), indices.size()));
    }

    constexpr std::uint64_t mask() const { return mask_; }
    constexpr int degree() const { return std::popcount(mask_); }
    constexpr bool is_unit() const { return mask_ == 0; }
    constexpr bool contains(int index) const { return (mask_ >> (index - 1)) & 1u; }

    /// m(u): the largest index, 0 for the unit monomial.
    constexpr int max_index() const { return mask_ == 0 ? 0 : 64 - std::countl_zero(mask_); }
    /// min(u): the smallest index, 0 for the unit monomial.
    constexpr int min_index() const { return mask_ == 0 ? 0 : std::countr_zero(mask_) + 1; }

    constexpr bool divides(Monomial other) const { return (mask_ & ~other.mask_) == 0; }

    constexpr Monomial with(int index) const { return Monomial(mask_ | (std::uint64_t{1} << (index - 1))); }
    constexpr Monomial without(int index) const { return Monomial(mask_ & ~(std::uint64_t{1} << (index - 1))); }

    std::vector<int> indices() const;
    /// "e1e3e4"; the unit monomial prints as "1".
    std::string to_text() const;

    friend constexpr bool operator==(Monomial, Monomial) = default;

private:
    std::uint64_t mask_ = 0;
};

/// Structural order on masks, used for containers. Within one degree this is
/// the revlex order reversed (revlex-largest first).
struct MaskLess {
    constexpr bool operator()(Monomial a, Monomial b) const { return a.mask() < b.mask(); }
};

struct Ambient {
    int n = 1;

    explicit Ambient(int vars);
    std::uint64_t full_mask() const { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }
    bool hosts(Monomial u) const { return (u.mask() & ~full_mask()) == 0; }
};

/// Three-way revlex comparison of equal-degree monomials; "greater" means
/// revlex-larger. Throws ContractViolation on a degree mismatch.
std::strong_ordering revlex_cmp(Monomial u, Monomial v);

/// alpha(sigma, j) = #{ r in sigma : r < j }.
constexpr int sign_exponent(Monomial sigma, int j)
{
    return std::popcount(sigma.mask() & ((std::uint64_t{1} << (j - 1)) - 1));
}

/// Exact binomial coefficient; saturates at UINT64_MAX on overflow.
std::uint64_t binomial(int n, int k);

/// All of Mon_d over [n] in decreasing revlex order.
std::vector<Monomial> all_monomials(const Ambient& amb, int d);

/// A degree-homogeneous set of monomials kept sorted revlex-decreasing.
class MonomialSet {
public:
    explicit MonomialSet(int degree) : degree_(degree) {}
    MonomialSet(int degree, std::vector<Monomial> elems);

    int degree() const { return degree_; }
    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    bool contains(Monomial u) const;

    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }
    const std::vector<Monomial>& elements() const { return elems_; }

    /// Revlex-smallest element; the set must be nonempty.
    Monomial revlex_min() const;

    /// Inserts u if absent. Throws on a degree mismatch.
    void insert(Monomial u);
    MonomialSet without(Monomial u) const;

    friend bool operator==(const MonomialSet&, const MonomialSet&) = default;

private:
    int degree_;
    std::vector<Monomial> elems_;
};

/// The len revlex-largest monomials of degree d, in decreasing order.
std::vector<Monomial> revlex_segment(const Ambient& amb, int d, std::uint64_t len);

/// Shad(M) with signs dropped. Degree n input yields the empty set.
MonomialSet shadow(const MonomialSet& set, const Ambient& amb);

/// The set e_i M: multiply by e_j, 1 <= j <= i, j not in the support.
MonomialSet bold_e_mul(const MonomialSet& set, int i, const Ambient& amb);

/// e_i M for a single variable: { u * e_i : u in M, i not in supp(u) }.
MonomialSet times_variable(const MonomialSet& set, int i);

/// M_{<=p}.
MonomialSet restrict_le(const MonomialSet& set, int p);
std::size_t m_le(const MonomialSet& set, int p);

/// Empty sets count as strongly stable (vacuous closure).
bool is_strongly_stable(const MonomialSet& set);
bool is_stable(const MonomialSet& set);

/// All sets obtained from u by one Borel move j -> i with i < j, i not in supp(u).
std::vector<Monomial> borel_moves(Monomial u);

/// m_i counts, keyed by max index. Absent keys are zero.
struct MStats {
    std::map<int, std::size_t> by_max;

    std::size_t at(int i) const;
    std::size_t le(int i) const;
    std::size_t total() const;
};
MStats m_stats(const MonomialSet& set);
MStats m_stats(std::span<const Monomial> monomials);

}  // namespace excolex
