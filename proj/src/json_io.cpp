#include "excolex/json_io.hpp"

#include "excolex/error.hpp"

#include <cctype>

namespace excolex {

json to_json(Monomial u)
{
    return json(u.indices());
}

Monomial monomial_from_text(const std::string& text)
{
    std::vector<int> idx;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == '*'))
            ++pos;
    };
    skip();
    if (text.substr(pos) == "1")
        return Monomial();
    while (pos < text.size()) {
        if (text[pos] != 'e')
            throw Error(ErrorKind::Parse, "expected 'e' in monomial text \"" + text + "\"");
        ++pos;
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (start == pos)
            throw Error(ErrorKind::Parse, "missing index in monomial text \"" + text + "\"");
        idx.push_back(std::stoi(text.substr(start, pos - start)));
        skip();
    }
    if (idx.empty())
        throw Error(ErrorKind::Parse, "empty monomial text");
    return Monomial::from_indices(idx);
}

Monomial monomial_from_json(const json& j, bool allow_text)
{
    if (j.is_string()) {
        if (!allow_text)
            throw Error(ErrorKind::Parse, "text monomials need --text");
        return monomial_from_text(j.get<std::string>());
    }
    if (!j.is_array())
        throw Error(ErrorKind::Parse, "a monomial must be an array of indices");
    std::vector<int> idx;
    for (const auto& x : j) {
        if (!x.is_number_integer())
            throw Error(ErrorKind::Parse, "monomial indices must be integers");
        idx.push_back(x.get<int>());
    }
    return Monomial::from_indices(idx);
}

json to_json(const MonomialIdeal& ideal)
{
    json gens = json::array();
    for (Monomial g : ideal.generators())
        gens.push_back(to_json(g));
    return {{"n", ideal.n()}, {"generators", gens}};
}

MonomialIdeal ideal_from_json(const json& j, bool allow_text)
{
    if (!j.is_object() || !j.contains("n") || !j.contains("generators"))
        throw Error(ErrorKind::Parse, "an ideal needs \"n\" and \"generators\"");
    if (!j["n"].is_number_integer())
        throw Error(ErrorKind::Parse, "\"n\" must be an integer");
    const Ambient amb(j["n"].get<int>());
    if (!j["generators"].is_array() || j["generators"].empty())
        throw Error(ErrorKind::Parse, "\"generators\" must be a nonempty array");
    std::vector<Monomial> raw;
    for (const auto& g : j["generators"])
        raw.push_back(monomial_from_json(g, allow_text));
    return minimalize(amb, std::move(raw));
}

json to_json(const ColexResult& result)
{
    json steps = json::array();
    for (const auto& step : result.steps) {
        json chosen = json::array();
        for (Monomial u : step.chosen)
            chosen.push_back(to_json(u));
        steps.push_back({{"degree", step.degree}, {"chosen", chosen}});
    }
    return {{"m", result.m}, {"J", to_json(result.J)}, {"steps", steps}};
}

json to_json(const BigInt& value)
{
    if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max())
        return json(static_cast<std::uint64_t>(value));
    return json(value.str());
}

json to_json(const BettiTable& table)
{
    json rows = json::array();
    for (int i = 0; i <= table.i_max(); ++i) {
        json by_j = json::object();
        for (const auto& [j, v] : table.row(i))
            by_j[std::to_string(j)] = to_json(v);
        rows.push_back({{"i", i}, {"by_j", by_j}, {"total", to_json(table.total(i))}});
    }
    return {{"subject", to_string(table.subject())}, {"i_max", table.i_max()}, {"rows", rows}};
}

json to_json(const ComparisonVerdict& verdict)
{
    return {{"mode", to_string(verdict.mode)},
            {"strict_indices", verdict.strict_indices},
            {"equal_indices", verdict.equal_indices},
            {"i_max", verdict.i_max},
            {"domination", verdict.domination}};
}

json to_json(const RevlexConditionReport& r)
{
    return {{"d1", r.d1},
            {"d2", r.d2},
            {"m", r.m},
            {"dim_d1", r.dim_d1},
            {"threshold_i", r.threshold_i},
            {"A_size", r.A_size},
            {"c", r.c},
            {"w", to_json(r.w)},
            {"z", to_json(r.z)},
            {"dim_d2_ideal", r.dim_d2_ideal},
            {"dim_d2_colex", r.dim_d2_colex},
            {"holds_i", r.holds_i},
            {"holds_ii", r.holds_ii},
            {"holds_ii_literal", r.holds_ii_literal},
            {"is_revlex", r.is_revlex}};
}

}  // namespace excolex
