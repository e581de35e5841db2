#include "excolex/cartan.hpp"

#include "excolex/error.hpp"
#include "excolex/rank.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace excolex {

int CartanBasisElement::homological_degree() const
{
    return std::accumulate(powers.begin(), powers.end(), 0);
}

namespace {

// All a in N^n with |a| = total, lexicographically increasing.
void compositions(int n, int total, std::vector<int>& current, std::vector<std::vector<int>>& out)
{
    const int pos = static_cast<int>(current.size());
    if (pos == n - 1) {
        current.push_back(total);
        out.push_back(current);
        current.pop_back();
        return;
    }
    for (int a = 0; a <= total; ++a) {
        current.push_back(a);
        compositions(n, total - a, current, out);
        current.pop_back();
    }
}

std::vector<Monomial> survivors(const MonomialIdeal& ideal, int degree)
{
    std::vector<Monomial> out;
    for (Monomial u : all_monomials(ideal.ambient(), degree))
        if (!ideal.contains(u))
            out.push_back(u);
    return out;
}

int resolved_j_max(const MonomialIdeal& ideal, const CartanOptions& options)
{
    return options.j_max.value_or(ideal.n() + options.i_max + 1);
}

int rank_in(const IntMatrix& m, const FieldSpec& field)
{
    return field.is_rational() ? rank_rational(m) : rank_mod_p(m, field.prime);
}

void check_options(const CartanOptions& options)
{
    if (options.i_max < 0)
        throw Error(ErrorKind::ContractViolation, "negative homological cutoff");
    if (!options.field.is_rational() && options.field.prime < 2)
        throw Error(ErrorKind::ContractViolation, "field characteristic must be a prime");
}

void guard_dimension(const MonomialIdeal& ideal, const CartanOptions& options, int i, int j)
{
    const BigInt dim = chain_dimension(ideal, i, j);
    if (dim > options.max_chain_dim)
        throw Error(ErrorKind::OracleTooLarge, "chain space (i=" + std::to_string(i) + ", j=" + std::to_string(j) +
                                                   ") has dimension " + dim.str());
}

// Quotient and shifted tables from chain dimensions and differential ranks.
// rank[i][j] is the rank of d: C_{i,j} -> C_{i-1,j}; rank[0][*] = 0.
CartanTables assemble(const MonomialIdeal& ideal, const CartanOptions& options,
                      const std::vector<std::vector<BigInt>>& rank)
{
    const int top = options.i_max + 1;
    const int j_max = resolved_j_max(ideal, options);
    CartanTables tables{BettiTable(BettiSubject::Quotient, top), BettiTable(BettiSubject::Ideal, options.i_max)};
    for (int i = 0; i <= top; ++i)
        for (int j = 0; j <= j_max; ++j) {
            const BigInt beta = chain_dimension(ideal, i, j) - rank[i][j] - rank[i + 1][j];
            tables.quotient.set(i, j, beta);
            if (i >= 1)
                tables.ideal.set(i - 1, j, beta);
        }
    return tables;
}

}  // namespace

std::vector<CartanBasisElement> chain_space(const MonomialIdeal& ideal, int i, int j)
{
    std::vector<CartanBasisElement> out;
    const int s = j - i;
    if (i < 0 || s < 0 || s > ideal.n())
        return out;
    std::vector<std::vector<int>> powers;
    std::vector<int> scratch;
    compositions(ideal.n(), i, scratch, powers);
    for (Monomial sigma : survivors(ideal, s))
        for (const auto& a : powers)
            out.push_back({sigma, a});
    return out;
}

BigInt chain_dimension(const MonomialIdeal& ideal, int i, int j)
{
    const int s = j - i;
    if (i < 0 || s < 0 || s > ideal.n())
        return 0;
    return BigInt(survivors(ideal, s).size()) * big_binomial(i + ideal.n() - 1, ideal.n() - 1);
}

std::vector<CartanTerm> differential(const CartanBasisElement& element, const MonomialIdeal& ideal)
{
    std::vector<CartanTerm> out;
    for (int k = 1; k <= static_cast<int>(element.powers.size()); ++k) {
        if (element.powers[k - 1] == 0 || element.mono.contains(k))
            continue;
        const Monomial target = element.mono.with(k);
        if (ideal.contains(target))
            continue;
        CartanBasisElement next{target, element.powers};
        --next.powers[k - 1];
        out.push_back({sign_exponent(element.mono, k) % 2 == 0 ? 1 : -1, std::move(next)});
    }
    return out;
}

CartanTables cartan_betti(const MonomialIdeal& ideal, const CartanOptions& options)
{
    check_options(options);
    const int n = ideal.n();
    if (n > 16)
        throw Error(ErrorKind::OracleTooLarge, "multigraded kernel supports at most 16 variables");
    const int top = options.i_max + 1;
    const int j_max = resolved_j_max(ideal, options);
    for (int i = 0; i <= top + 1; ++i)
        for (int j = 0; j <= j_max; ++j)
            guard_dimension(ideal, options, i, j);

    const std::uint64_t subsets = std::uint64_t{1} << n;
    std::vector<char> in_ideal(subsets);
    for (std::uint64_t mask = 0; mask < subsets; ++mask)
        in_ideal[mask] = ideal.contains(Monomial(mask));

    // Block rank r(S, s): e_sigma -> sum_k +-e_{sigma+k} over sigma, sigma+k in S \ I.
    struct Task {
        std::uint64_t support;
        int s;
    };
    std::vector<Task> tasks;
    for (std::uint64_t S = 1; S < subsets; ++S)
        for (int s = 0; s < std::popcount(S); ++s)
            tasks.push_back({S, s});
    std::vector<int> block_rank(tasks.size(), 0);

    for_each_index(tasks.size(), options.policy, [&](std::size_t t) {
        const auto [S, s] = tasks[t];
        std::vector<std::uint64_t> cols;
        std::vector<std::uint64_t> rows;
        for (std::uint64_t sub = S;; sub = (sub - 1) & S) {
            const int deg = std::popcount(sub);
            if (!in_ideal[sub]) {
                if (deg == s)
                    cols.push_back(sub);
                else if (deg == s + 1)
                    rows.push_back(sub);
            }
            if (sub == 0)
                break;
        }
        if (cols.empty() || rows.empty())
            return;
        std::sort(rows.begin(), rows.end());
        IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
        for (int c = 0; c < m.cols; ++c) {
            const Monomial sigma(cols[c]);
            for (std::uint64_t rest = S & ~cols[c]; rest != 0; rest &= rest - 1) {
                const int k = std::countr_zero(rest) + 1;
                const std::uint64_t target = sigma.with(k).mask();
                auto it = std::lower_bound(rows.begin(), rows.end(), target);
                if (it == rows.end() || *it != target)
                    continue;
                m(static_cast<int>(it - rows.begin()), c) = sign_exponent(sigma, k) % 2 == 0 ? 1 : -1;
            }
        }
        block_rank[t] = rank_in(m, options.field);
    });

    // rank(i, j) = sum_S #{v : supp v = S, |v| = j} * r(S, j - i).
    std::vector<std::vector<BigInt>> rank(top + 2, std::vector<BigInt>(j_max + 1, 0));
    for (std::size_t t = 0; t < tasks.size(); ++t) {
        if (block_rank[t] == 0)
            continue;
        const auto [S, s] = tasks[t];
        const int size = std::popcount(S);
        for (int i = 1; i <= top + 1; ++i) {
            const int j = s + i;
            if (j > j_max || j < size)
                continue;
            rank[i][j] += big_binomial(j - 1, size - 1) * block_rank[t];
        }
    }
    return assemble(ideal, options, rank);
}

CartanTables cartan_betti_reference(const MonomialIdeal& ideal, const CartanOptions& options)
{
    check_options(options);
    const int top = options.i_max + 1;
    const int j_max = resolved_j_max(ideal, options);
    std::vector<std::vector<BigInt>> rank(top + 2, std::vector<BigInt>(j_max + 1, 0));

    for (int i = 1; i <= top + 1; ++i)
        for (int j = i; j <= j_max; ++j) {
            guard_dimension(ideal, options, i, j);
            guard_dimension(ideal, options, i - 1, j);
            const auto domain = chain_space(ideal, i, j);
            const auto codomain = chain_space(ideal, i - 1, j);
            if (domain.empty() || codomain.empty())
                continue;
            std::map<CartanBasisElement, int> row_of;
            for (std::size_t r = 0; r < codomain.size(); ++r)
                row_of.emplace(codomain[r], static_cast<int>(r));

            // Columns as sparse (row, coefficient) lists.
            std::vector<std::vector<std::pair<int, int>>> columns(domain.size());
            for (std::size_t c = 0; c < domain.size(); ++c)
                for (const auto& term : differential(domain[c], ideal))
                    columns[c].emplace_back(row_of.at(term.element), term.coefficient);

            // Connected components of the row/column incidence graph.
            const int rows = static_cast<int>(codomain.size());
            std::vector<int> parent(rows);
            std::iota(parent.begin(), parent.end(), 0);
            auto find = [&](int x) {
                while (parent[x] != x)
                    x = parent[x] = parent[parent[x]];
                return x;
            };
            for (const auto& col : columns)
                for (std::size_t k = 1; k < col.size(); ++k)
                    parent[find(col[k].first)] = find(col[0].first);

            std::map<int, std::vector<int>> cols_of_component;
            for (std::size_t c = 0; c < columns.size(); ++c)
                if (!columns[c].empty())
                    cols_of_component[find(columns[c][0].first)].push_back(static_cast<int>(c));
            std::map<int, std::vector<int>> rows_of_component;
            for (int r = 0; r < rows; ++r)
                rows_of_component[find(r)].push_back(r);

            BigInt total = 0;
            for (const auto& [root, cols] : cols_of_component) {
                const auto& comp_rows = rows_of_component[root];
                std::map<int, int> local;
                for (std::size_t k = 0; k < comp_rows.size(); ++k)
                    local[comp_rows[k]] = static_cast<int>(k);
                IntMatrix m(static_cast<int>(comp_rows.size()), static_cast<int>(cols.size()));
                for (std::size_t c = 0; c < cols.size(); ++c)
                    for (auto [r, coeff] : columns[cols[c]])
                        m(local[r], static_cast<int>(c)) = coeff;
                total += rank_in(m, options.field);
            }
            rank[i][j] = total;
        }
    return assemble(ideal, options, rank);
}

}  // namespace excolex
