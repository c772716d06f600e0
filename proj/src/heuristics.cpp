#include "polyfeat/heuristics.hpp"

#include <algorithm>
#include <set>

#include "polyfeat/errors.hpp"
#include "polyfeat/resultant.hpp"

namespace polyfeat {

std::vector<BrownMeasures> brown_measures(const ProblemInstance& pr) {
    int n = pr.nvars();
    std::vector<BrownMeasures> out(n, BrownMeasures{0, 0, 0});
    for (const Polynomial& p : pr.polynomials()) {
        for (const Monomial& m : p.monomials()) {
            int total = m.total_degree();
            for (int v = 0; v < n; ++v) {
                int d = m.exponents[v];
                if (d == 0) continue;
                out[v].overall_degree = std::max(out[v].overall_degree, d);
                out[v].max_total_degree = std::max(out[v].max_total_degree, total);
                out[v].term_count += 1;
            }
        }
    }
    return out;
}

PredictionSet brown(const ProblemInstance& pr) {
    int n = pr.nvars();
    std::vector<BrownMeasures> measures = brown_measures(pr);

    // Group variables by their criteria triple; groups sorted ascending so
    // the cheapest variables are eliminated first.
    std::map<BrownMeasures, std::vector<int>> groups;
    for (int v = 0; v < n; ++v) groups[measures[v]].push_back(v);

    std::vector<std::vector<int>> tie_groups;
    for (auto& [key, vars] : groups) tie_groups.push_back(vars);

    // All orderings consistent with the ranking: the cartesian product of
    // the permutations of each tie group.
    std::vector<Ordering> result{Ordering{}};
    for (auto& group : tie_groups) {
        std::vector<Ordering> next;
        std::sort(group.begin(), group.end());
        std::vector<int> perm = group;
        do {
            for (const Ordering& prefix : result) {
                Ordering o = prefix;
                o.elim.insert(o.elim.end(), perm.begin(), perm.end());
                next.push_back(std::move(o));
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        result = std::move(next);
    }
    std::sort(result.begin(), result.end());

    PredictionSet ps;
    ps.orderings = std::move(result);
    return ps;
}

namespace {

void insert_candidate(std::vector<Polynomial>& out, const Polynomial& cand, bool dedup) {
    if (cand.is_zero() || cand.is_constant()) return;
    Polynomial norm = cand.sign_normalized();
    if (dedup) {
        for (const auto& existing : out)
            if (existing == norm) return;
    }
    out.push_back(std::move(norm));
}

}  // namespace

std::vector<Polynomial> projection_set(const std::vector<Polynomial>& polys, int v,
                                       bool dedup) {
    std::vector<Polynomial> out;
    for (const Polynomial& p : polys) {
        for (const Polynomial& c : p.coefficients_wrt(v)) insert_candidate(out, c, dedup);
        if (p.degree_in(v) >= 2) insert_candidate(out, discriminant(p, v), dedup);
    }
    for (std::size_t i = 0; i < polys.size(); ++i) {
        for (std::size_t j = i + 1; j < polys.size(); ++j) {
            if (polys[i].degree_in(v) >= 1 && polys[j].degree_in(v) >= 1)
                insert_candidate(out, resultant(polys[i], polys[j], v), dedup);
        }
    }
    return out;
}

long sotd_score(const ProblemInstance& pr, const Ordering& o, bool dedup) {
    // Union of the input set and all successive projection sets, down to
    // polynomials in a single variable.
    std::vector<Polynomial> level;
    for (const Polynomial& p : pr.polynomials())
        insert_candidate(level, p, dedup);

    std::vector<Polynomial> all = level;
    int n = pr.nvars();
    for (int step = 0; step + 1 < n; ++step) {
        level = projection_set(level, o.elim[step], dedup);
        all.insert(all.end(), level.begin(), level.end());
    }
    if (dedup) {
        std::vector<Polynomial> unique;
        for (const Polynomial& p : all) insert_candidate(unique, p, true);
        all = std::move(unique);
    }
    long total = 0;
    for (const Polynomial& p : all)
        for (const Monomial& m : p.monomials()) total += m.total_degree();
    return total;
}

PredictionSet sotd(const ProblemInstance& pr, const SotdOptions& opts) {
    if (pr.nvars() > opts.max_vars)
        throw InputError("sotd: variable count exceeds the configured bound of " +
                         std::to_string(opts.max_vars));
    PredictionSet ps;
    long best = -1;
    for (const Ordering& o : all_orderings(pr.nvars())) {
        long score = sotd_score(pr, o, opts.dedup);
        ps.scores[o] = static_cast<double>(score);
        if (best < 0 || score < best) best = score;
    }
    for (const auto& [o, score] : ps.scores)
        if (static_cast<long>(score) == best) ps.orderings.push_back(o);
    std::sort(ps.orderings.begin(), ps.orderings.end());
    return ps;
}

}  // namespace polyfeat
