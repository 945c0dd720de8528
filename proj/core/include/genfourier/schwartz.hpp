#pragma once

#include <string>
#include <vector>

#include "genfourier/atoms.hpp"
#include "genfourier/measure.hpp"

namespace genfourier {

// P_{alpha,beta}(f) = sup_{x != 0} |(n|x|^{2/n})^alpha (n|x|^{2-2/n}Delta_k)^beta f|,
// operators exact on atoms, sup by dense scan plus an analytic tail certificate.
// Returns +infinity when the operator image is singular at the origin.
double seminorm_P(int alpha, int beta, const AtomSum& f, const Params& params);

// Q_beta(f) = sup (1 + |x|^{2/n})^beta |f| (true sup; the binomial expansion is
// only the upper-bound chain used in embedding_constants).
double seminorm_Q(int beta, const AtomSum& f, const Params& params);

struct SeminormEntry {
    int alpha = 0;
    int beta = 0;
    int ell = 0;
    double value = 0.0;
    std::string method;  // "exact-atom" or "grid-estimate" (+ decay flag)
};

struct SeminormReport {
    Params params;
    std::vector<SeminormEntry> entries;
};

struct MembershipRanges {
    int alpha_max = 3;
    int beta_max = 3;
    int ell_max = 3;
};

// The Definition 1.1 table: P_{alpha,beta}(x^l f^(l)) over the requested ranges.
SeminormReport membership_report(const AtomSum& f, const Params& params,
                                 const MembershipRanges& ranges);
// Grid-function variant: operators by finite differences on a uniform grid;
// entries are grid suprema only and are flagged as such.
SeminormReport membership_report(const GridFunction& f, const MembershipRanges& ranges);

// Both sides of the Theorem 1.5(i) chain
//   ||f||_p <= ||g_m||_p <= ||(1+|.|^{2/n})^{-beta}||_p Q_beta(g_m)
struct EmbeddingChain {
    double norm_f = 0.0;
    double norm_gm = 0.0;
    double weight_norm = 0.0;
    double q_seminorm = 0.0;
    double bound = 0.0;  // weight_norm * q_seminorm
};
EmbeddingChain embedding_constants(const AtomSum& f, double p, int beta, int m,
                                   const Params& params, GridPtr grid);

}  // namespace genfourier
