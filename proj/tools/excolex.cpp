// excolex: colexsegment ideals, Betti tables and verification campaigns.
//
// Exit codes: 0 success / verified, 1 counterexample found,
// 2 usage or contract error, 3 resource cap exceeded.

#include "excolex/cartan.hpp"
#include "excolex/enumerate.hpp"
#include "excolex/error.hpp"
#include "excolex/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

using namespace excolex;

namespace {

constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

json read_json(const std::string& path)
{
    try {
        if (path == "-")
            return json::parse(std::cin);
        std::ifstream in(path);
        if (!in)
            throw Error(ErrorKind::Parse, "cannot open " + path);
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::Parse, path + ": " + e.what());
    }
}

struct VerifyArgs {
    std::string claim;
    std::optional<int> n_max;
    std::optional<int> i_max;
    std::string json_out;
    bool serial = false;
};

VerificationReport run_claim(const VerifyArgs& args)
{
    const ExecPolicy policy = args.serial ? ExecPolicy::Serial : ExecPolicy::Parallel;
    const auto& c = args.claim;
    if (c == "green")
        return verify_green(args.n_max.value_or(5), policy);
    if (c == "colex-bound")
        return verify_colex_lower_bound(args.n_max.value_or(6), args.i_max.value_or(8), policy);
    if (c == "prop42")
        return verify_prop42(args.n_max.value_or(6), policy);
    if (c == "lemma41")
        return verify_lemma41(args.n_max.value_or(6), policy);
    if (c == "cor43")
        return verify_cor43(args.n_max.value_or(5), policy);
    if (c == "example51")
        return reproduce_example_51(args.i_max.value_or(10));
    if (c == "section6")
        return verify_section6(8, args.n_max.value_or(7), policy);
    if (c == "ambient-stability")
        return verify_ambient_stability(100, policy);
    if (c == "oracle-agreement") {
        const int n_max = args.n_max.value_or(5);
        const int i_max = args.i_max.value_or(4);
        return merge_reports("OracleAgreement",
                             {verify_oracle_agreement(n_max, i_max, policy),
                              verify_oracle_generators(std::min(n_max, 4), 50, policy),
                              verify_dd_zero(std::min(n_max, 4), i_max, policy)});
    }
    throw Error(ErrorKind::ContractViolation, "unknown claim '" + c + "'");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Colexsegment ideals and Betti numbers in the exterior algebra"};
    app.require_subcommand(1);

    std::string input;
    bool text = false;
    int m_cap = kDefaultAmbientCap;
    auto* colex_cmd = app.add_subcommand("colex", "Build the colexsegment ideal of an ideal");
    colex_cmd->add_option("--input", input, "Ideal JSON file ('-' for stdin)")->required();
    colex_cmd->add_option("--m-cap", m_cap, "Largest ambient size to try");
    colex_cmd->add_flag("--text", text, "Generators are given as \"e1e3e4\" strings");

    int i_max = 10;
    bool oracle = false;
    std::uint32_t field = 0;
    auto* betti_cmd = app.add_subcommand("betti", "Graded Betti table of a strongly stable ideal");
    betti_cmd->add_option("--input", input, "Ideal JSON file ('-' for stdin)")->required();
    betti_cmd->add_option("--i-max", i_max, "Homological cutoff");
    betti_cmd->add_flag("--oracle", oracle, "Also compute the table from Cartan homology");
    betti_cmd->add_option("--field", field, "Oracle characteristic: 0 for the rationals, else a prime");
    betti_cmd->add_flag("--text", text, "Generators are given as \"e1e3e4\" strings");

    std::string left;
    std::string right;
    auto* compare_cmd = app.add_subcommand("compare", "Compare total Betti numbers of I (left) and J (right)");
    compare_cmd->add_option("--left", left, "Ideal I")->required();
    compare_cmd->add_option("--right", right, "Ideal J")->required();
    compare_cmd->add_option("--i-max", i_max, "Homological cutoff");
    compare_cmd->add_flag("--text", text, "Generators are given as \"e1e3e4\" strings");

    VerifyArgs vargs;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification campaign");
    verify_cmd
        ->add_option("--claim", vargs.claim,
                     "green | colex-bound | prop42 | lemma41 | cor43 | example51 | section6 | oracle-agreement | "
                     "ambient-stability")
        ->required();
    verify_cmd->add_option("--n-max", vargs.n_max, "Largest ambient size");
    verify_cmd->add_option("--i-max", vargs.i_max, "Homological cutoff");
    verify_cmd->add_option("--json", vargs.json_out, "Also write the report to this file");
    verify_cmd->add_flag("--serial", vargs.serial, "Check instances on one thread");

    int en = 0;
    int ed = 0;
    bool ideals = false;
    int max_degrees = 2;
    auto* enum_cmd = app.add_subcommand("enumerate", "Stream strongly stable sets or ideals as JSON lines");
    enum_cmd->add_option("--n", en, "Ambient size")->required();
    enum_cmd->add_option("--d", ed, "Degree (sets) or smallest generator degree (ideals)");
    enum_cmd->add_flag("--ideals", ideals, "Enumerate ideals instead of sets");
    enum_cmd->add_option("--max-degrees", max_degrees, "Generator degrees per ideal (1 or 2)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*colex_cmd) {
            const MonomialIdeal I = ideal_from_json(read_json(input), text);
            std::cout << to_json(colex_ideal(I, m_cap)).dump() << "\n";
        } else if (*betti_cmd) {
            const MonomialIdeal I = ideal_from_json(read_json(input), text);
            if (!oracle) {
                std::cout << to_json(ahh_betti(I, i_max)).dump() << "\n";
                return 0;
            }
            CartanOptions options;
            options.i_max = i_max;
            options.field = FieldSpec{field};
            const CartanTables tables = cartan_betti(I, options);
            json out = {{"oracle", {{"quotient", to_json(tables.quotient)}, {"ideal", to_json(tables.ideal)}}}};
            if (is_strongly_stable_ideal(I)) {
                const BettiTable formula = ahh_betti(I, i_max);
                out["formula"] = to_json(formula);
                out["agree"] = formula == tables.ideal;
            } else {
                out["formula"] = nullptr;
                out["agree"] = nullptr;
            }
            std::cout << out.dump() << "\n";
        } else if (*compare_cmd) {
            const MonomialIdeal I = ideal_from_json(read_json(left), text);
            const MonomialIdeal J = ideal_from_json(read_json(right), text);
            std::cout << to_json(compare_betti(I, J, i_max)).dump() << "\n";
        } else if (*verify_cmd) {
            const VerificationReport report = run_claim(vargs);
            const json out = report.to_json();
            std::cout << out.dump(2) << "\n";
            if (!vargs.json_out.empty()) {
                std::ofstream file(vargs.json_out);
                file << out.dump(2) << "\n";
            }
            return report.status() == ReportStatus::Counterexample ? kExitCounterexample : 0;
        } else if (*enum_cmd) {
            const Ambient amb(en);
            if (ideals) {
                IdealBounds bounds;
                bounds.max_degrees = max_degrees;
                if (ed > 0)
                    bounds.min_degree = ed;
                for_each_strongly_stable_ideal(amb, bounds,
                                               [](const MonomialIdeal& I) { std::cout << to_json(I).dump() << "\n"; });
            } else {
                for_each_strongly_stable_set(amb, ed, [](const MonomialSet& s) {
                    json out = json::array();
                    for (Monomial u : s)
                        out.push_back(to_json(u));
                    std::cout << out.dump() << "\n";
                });
            }
        }
    } catch (const Error& e) {
        std::cerr << "excolex: " << e.what() << "\n";
        return e.is_resource_cap() ? kExitResource : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "excolex: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
