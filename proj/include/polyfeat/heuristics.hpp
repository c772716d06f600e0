#pragma once

#include <map>
#include <string>
#include <vector>

#include "polyfeat/orderings.hpp"
#include "polyfeat/polynomial.hpp"

namespace polyfeat {

/// One or more tied variable orderings proposed by a heuristic, with
/// optional per-ordering diagnostic scores (sotd: projection degree sum).
struct PredictionSet {
    std::vector<Ordering> orderings;  // ascending, all distinct, non-empty
    std::map<Ordering, double> scores;
};

/// Brown's heuristic. Variables are ranked by
///   (1) overall degree max_{m,p} d_v,
///   (2) max total degree of monomials containing the variable,
///   (3) number of monomials containing the variable,
/// all computed once on the input; the lowest-ranked variable is eliminated
/// first. Variables still tied after (3) expand into every consistent
/// ordering.
PredictionSet brown(const ProblemInstance& pr);

/// Per-variable Brown criteria (overall degree, max total degree of
/// containing terms, containing-term count), exposed for testing.
struct BrownMeasures {
    int overall_degree;
    int max_total_degree;
    int term_count;

    auto operator<=>(const BrownMeasures&) const = default;
};
std::vector<BrownMeasures> brown_measures(const ProblemInstance& pr);

/// One CAD projection step for sotd: coefficients of each input w.r.t. v,
/// discriminants of inputs of degree >= 2 in v, and pairwise resultants of
/// inputs with positive degree in v. Constants and zero polynomials are
/// dropped; with dedup=true the result is also deduplicated up to sign.
std::vector<Polynomial> projection_set(const std::vector<Polynomial>& polys, int v,
                                       bool dedup = true);

struct SotdOptions {
    bool dedup = true;   // count repeated projection polynomials once
    int max_vars = 6;    // n! orderings; refuse beyond this
};

/// sotd: for each ordering, sums the total degrees of every monomial of
/// every polynomial in the union of the input set and all successive
/// projection sets, and returns the orderings attaining the minimum.
PredictionSet sotd(const ProblemInstance& pr, const SotdOptions& opts = {});

/// Degree sum for a single ordering (diagnostic / oracle hook).
long sotd_score(const ProblemInstance& pr, const Ordering& o, bool dedup = true);

}  // namespace polyfeat
