#pragma once

// Exhaustive verification campaigns. Each campaign enumerates its universe
// serially, checks instances under the requested policy, and reduces the
// per-instance results in enumeration order, so reports do not depend on
// the thread count.

#include "excolex/exec.hpp"
#include "excolex/json_io.hpp"

#include <string>
#include <vector>

namespace excolex {

enum class ReportStatus { Verified, Counterexample, Skipped };

const char* to_string(ReportStatus status);

struct VerificationReport {
    std::string claim;
    json universe = json::object();
    std::size_t instances = 0;
    std::vector<json> failures;
    json observations = json::object();

    /// Verified iff no failures and at least one instance.
    ReportStatus status() const;
    json to_json() const;
};

/// |Shad(M)| = sum_{u in M} (n - m(u)), and the pieces {u e_k : k > m(u)} are disjoint.
VerificationReport verify_prop42(int n_max, ExecPolicy policy = ExecPolicy::Parallel);

/// With tau = revlex-min(M): tau e_i in Shad(M \ tau) iff i < m(tau), for i not in supp(tau).
VerificationReport verify_lemma41(int n_max, ExecPolicy policy = ExecPolicy::Parallel);

/// e_p M_{<=p} = union_{i=t+1}^{p} e_i M_{<=i} for strongly stable M of degree t.
VerificationReport verify_cor43(int n_max, ExecPolicy policy = ExecPolicy::Parallel);

/// m_{<=p}(Mon(I_t)) <= m_{<=p}(Mon(J_t)) for strongly stable I with at most two generator degrees.
VerificationReport verify_green(int n_max, ExecPolicy policy = ExecPolicy::Parallel);

/// Single-degree strongly stable I: beta_i(J) <= beta_i(I) for i <= i_max and sorted m-domination.
VerificationReport verify_colex_lower_bound(int n_max, int i_max, ExecPolicy policy = ExecPolicy::Parallel);

/// The eleven (I, J) pairs over n = 5 from the two comparison tables.
VerificationReport reproduce_example_51(int i_max = 10);

/// Revlex-ideal characterizations: the two worked examples, the segment-shadow
/// equivalence for n <= n_max_segments, and the two-degree / one-degree
/// criteria against a direct check for enumerated ideals with n <= n_max_ideals.
VerificationReport verify_section6(int n_max_segments = 8, int n_max_ideals = 7,
                                   ExecPolicy policy = ExecPolicy::Parallel);

/// Cartan oracle (shifted) equals the closed form on every strongly stable
/// ideal with at most two generator degrees and n <= n_max, for i <= i_max.
VerificationReport verify_oracle_agreement(int n_max, int i_max, ExecPolicy policy = ExecPolicy::Parallel);

/// beta_{1,j}(E/I) = |G(I)_j| for every monomial ideal with n <= n_max
/// (exhaustive), plus every stride-th ideal at n = n_max + 1 when extra_stride > 0.
VerificationReport verify_oracle_generators(int n_max, std::size_t extra_stride = 0,
                                            ExecPolicy policy = ExecPolicy::Parallel);

/// d o d = 0 on every chain space with i <= i_max for every monomial ideal with n <= n_max.
VerificationReport verify_dd_zero(int n_max, int i_max, ExecPolicy policy = ExecPolicy::Parallel);

/// Rerunning the greedy at m+1 and m+2 reproduces the generators found at m.
VerificationReport verify_ambient_stability(std::size_t count = 100, ExecPolicy policy = ExecPolicy::Parallel);

/// Concatenates sub-reports under one claim id; instances add up.
VerificationReport merge_reports(const std::string& claim, const std::vector<VerificationReport>& parts);

/// Parses the textual ideal notation used in the example tables, e.g. "e1e2,e1e3e4".
MonomialIdeal ideal_from_text(int n, const std::string& generators);

}  // namespace excolex
