#include "polyfeat/features.hpp"

#include <algorithm>

#include "polyfeat/errors.hpp"

namespace polyfeat {

namespace {

constexpr ChainIndex N0 = ChainIndex::None;
constexpr ChainIndex IP = ChainIndex::P;
constexpr ChainIndex IM = ChainIndex::M;
constexpr ChainIndex PM = ChainIndex::PM;
constexpr ChainIndex AP = ChainIndex::Applied;

const char* class_name(ChainClass c) {
    switch (c) {
        case ChainClass::Max: return "max";
        case ChainClass::Av: return "av";
        case ChainClass::Sum: return "sum";
        case ChainClass::Sgn: return "sgn";
    }
    return "?";
}

}  // namespace

const std::vector<IndexDistribution>& distribution_table() {
    // Columns in class order (max, av, sum, sgn); rows in table order.
    static const std::vector<IndexDistribution> table = {
        {{PM, N0, N0, N0}},
        {{IP, IM, N0, N0}},
        {{IP, N0, IM, N0}},
        {{N0, PM, N0, N0}},
        {{N0, IP, IM, N0}},
        {{N0, N0, PM, N0}},
        {{PM, N0, N0, AP}},
        {{IP, IM, N0, AP}},
        {{IP, N0, N0, AP}},
        {{N0, PM, N0, AP}},
        {{N0, IP, IM, AP}},
        {{N0, N0, PM, AP}},
    };
    return table;
}

std::vector<FeatureDescriptor> enumerate_descriptors(int n_vars) {
    if (n_vars < 1) throw InputError("need at least one variable");

    // Permutations of the four classes over chain positions g1..g4, in
    // lexicographic order of (class at g1, ..., class at g4).
    std::array<ChainClass, 4> classes = {ChainClass::Max, ChainClass::Av, ChainClass::Sum,
                                         ChainClass::Sgn};
    std::array<int, 4> perm = {0, 1, 2, 3};
    std::vector<std::array<ChainClass, 4>> perms;
    do {
        perms.push_back({classes[perm[0]], classes[perm[1]], classes[perm[2]],
                         classes[perm[3]]});
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<BaseMap> bases;
    for (int v = 0; v < n_vars; ++v) {
        bases.push_back({BaseKind::VariableDegree, v});
        bases.push_back({BaseKind::SignWeightedTotalDegree, v});
    }

    std::vector<FeatureDescriptor> out;
    out.reserve(distribution_table().size() * perms.size() * bases.size());
    long serial = 1;
    for (const IndexDistribution& row : distribution_table()) {
        for (const auto& placed : perms) {
            for (const BaseMap& base : bases) {
                FeatureDescriptor d;
                d.serial = serial++;
                d.base = base;
                for (int i = 0; i < 4; ++i) {
                    ChainClass cls = placed[i];
                    d.chain[i] = {cls, row.index_for_class[static_cast<int>(cls)]};
                }
                out.push_back(std::move(d));
            }
        }
    }
    return out;
}

std::vector<FeatureDescriptor> builtin_extra_descriptors(int n_vars) {
    long first = static_cast<long>(distribution_table().size()) * 24 * (2L * n_vars) + 1;
    FeatureDescriptor poly_count;
    poly_count.serial = first;
    poly_count.builtin = true;
    poly_count.builtin_id = 1;
    FeatureDescriptor max_total;
    max_total.serial = first + 1;
    max_total.builtin = true;
    max_total.builtin_id = 2;
    return {poly_count, max_total};
}

CanonicalForm canonicalize(const FeatureDescriptor& d) {
    if (d.builtin) throw InputError("builtin features have no canonical chain form");
    CanonicalForm cf;
    cf.base = d.base;

    // Positions of aggregating chain functions, inner first.
    std::vector<int> agg_positions;
    for (int i = 0; i < 4; ++i) {
        ChainIndex idx = d.chain[i].index;
        if (idx == ChainIndex::P || idx == ChainIndex::M || idx == ChainIndex::PM)
            agg_positions.push_back(i);
    }

    for (int i = 0; i < 4; ++i) {
        const ChainFunction& g = d.chain[i];
        if (g.cls == ChainClass::Sgn) {
            if (g.index == ChainIndex::Applied)
                cf.steps.push_back({CanonicalStep::Kind::SgnApplied, ChainClass::Sgn});
            continue;
        }
        if (g.index == ChainIndex::None) continue;
        CanonicalStep step;
        step.cls = g.cls;
        if (agg_positions.size() == 1) {
            // A lone aggregator covers both labels (this also makes the
            // table's p-only row well defined).
            step.kind = CanonicalStep::Kind::AggMP;
        } else if (g.index == ChainIndex::PM) {
            step.kind = CanonicalStep::Kind::AggMP;
        } else {
            // Indices are re-bound by position: the inner aggregation runs
            // over m, the outer over p, whatever the raw labels say.
            step.kind = (i == agg_positions.front()) ? CanonicalStep::Kind::AggM
                                                     : CanonicalStep::Kind::AggP;
        }
        cf.steps.push_back(step);
    }
    return cf;
}

Rational evaluate_base(const BaseMap& base, const ProblemInstance& pr, int p, int m,
                       BaseReading reading) {
    if (p < 0 || p >= pr.poly_count()) throw InputError("polynomial index out of range");
    const Polynomial& poly = pr.polynomials()[p];
    if (m < 0 || m >= poly.monomial_count()) throw InputError("monomial index out of range");
    if (base.v < 0 || base.v >= pr.nvars()) throw InputError("variable index out of range");
    const Monomial& mono = poly.monomials()[m];
    int d = mono.exponents[base.v];
    if (base.kind == BaseKind::VariableDegree) return Rational(d);
    int total = mono.total_degree();
    if (reading == BaseReading::ExampleDegreeWeighted) return Rational(d) * total;
    return Rational(d > 0 ? 1 : 0) * total;
}

namespace {

Rational reduce(ChainClass cls, const std::vector<Rational>& values) {
    switch (cls) {
        case ChainClass::Max: {
            Rational best = values.front();
            for (const Rational& v : values)
                if (v > best) best = v;
            return best;
        }
        case ChainClass::Sum:
        case ChainClass::Av: {
            Rational total = 0;
            for (const Rational& v : values) total += v;
            if (cls == ChainClass::Av) total /= static_cast<long>(values.size());
            return total;
        }
        case ChainClass::Sgn: break;
    }
    throw std::logic_error("sgn is not an aggregator");
}

Rational rational_sgn(const Rational& v) { return Rational(sgn(v)); }

}  // namespace

Rational evaluate_feature(const FeatureDescriptor& d, const ProblemInstance& pr,
                          BaseReading reading) {
    if (d.builtin) {
        if (d.builtin_id == 1) return Rational(pr.poly_count());
        int best = 0;
        for (const Polynomial& p : pr.polynomials())
            best = std::max(best, p.total_degree());
        return Rational(best);
    }

    CanonicalForm cf = canonicalize(d);

    // State: per-(p,m) grid, then per-p vector, then scalar.
    std::vector<std::vector<Rational>> grid(pr.poly_count());
    for (int p = 0; p < pr.poly_count(); ++p) {
        int mp = pr.polynomials()[p].monomial_count();
        grid[p].reserve(mp);
        for (int m = 0; m < mp; ++m)
            grid[p].push_back(evaluate_base(d.base, pr, p, m, reading));
    }

    enum class Stage { Grid, PerPoly, Scalar };
    Stage stage = Stage::Grid;
    std::vector<Rational> per_poly;
    Rational scalar = 0;

    for (const CanonicalStep& step : cf.steps) {
        switch (step.kind) {
            case CanonicalStep::Kind::SgnApplied:
                if (stage == Stage::Grid) {
                    for (auto& row : grid)
                        for (auto& v : row) v = rational_sgn(v);
                } else if (stage == Stage::PerPoly) {
                    for (auto& v : per_poly) v = rational_sgn(v);
                } else {
                    scalar = rational_sgn(scalar);
                }
                break;
            case CanonicalStep::Kind::AggM:
                if (stage != Stage::Grid) throw std::logic_error("m-aggregation out of order");
                per_poly.clear();
                for (const auto& row : grid) per_poly.push_back(reduce(step.cls, row));
                stage = Stage::PerPoly;
                break;
            case CanonicalStep::Kind::AggP:
                if (stage != Stage::PerPoly)
                    throw std::logic_error("p-aggregation out of order");
                scalar = reduce(step.cls, per_poly);
                stage = Stage::Scalar;
                break;
            case CanonicalStep::Kind::AggMP:
                if (stage != Stage::Grid)
                    throw std::logic_error("joint aggregation out of order");
                if (step.cls == ChainClass::Av) {
                    // av_{m,p} = (1/P) sum_p (1/M_p) sum_m
                    Rational total = 0;
                    for (const auto& row : grid) total += reduce(ChainClass::Av, row);
                    scalar = total / pr.poly_count();
                } else {
                    std::vector<Rational> flat;
                    for (const auto& row : grid)
                        flat.insert(flat.end(), row.begin(), row.end());
                    scalar = reduce(step.cls, flat);
                }
                stage = Stage::Scalar;
                break;
        }
    }
    if (stage != Stage::Scalar) throw std::logic_error("feature did not reduce to a scalar");
    return scalar;
}

std::string formula_string(const FeatureDescriptor& d) {
    if (d.builtin) return d.builtin_id == 1 ? "P" : "max_p max_m totdeg";

    CanonicalForm cf = canonicalize(d);
    std::string s;
    if (cf.base.kind == BaseKind::VariableDegree) {
        s = "d_" + std::to_string(cf.base.v + 1);
    } else {
        s = "sgn(d_" + std::to_string(cf.base.v + 1) + ")*totdeg";
    }
    for (const CanonicalStep& step : cf.steps) {
        switch (step.kind) {
            case CanonicalStep::Kind::SgnApplied:
                s = "sgn(" + s + ")";
                break;
            case CanonicalStep::Kind::AggM:
                s = std::string(class_name(step.cls)) + "_m " + s;
                break;
            case CanonicalStep::Kind::AggP:
                s = std::string(class_name(step.cls)) + "_p " + s;
                break;
            case CanonicalStep::Kind::AggMP:
                // av_{m,p} etc. composes as the p-step after the m-step.
                s = std::string(class_name(step.cls)) + "_p " +
                    std::string(class_name(step.cls)) + "_m " + s;
                break;
        }
    }
    return s;
}

namespace {

std::string var_name(int v) { return "x" + std::to_string(v + 1); }

std::string recognized_gloss(const CanonicalForm& cf) {
    using K = CanonicalStep::Kind;
    const auto& st = cf.steps;
    int v = cf.base.v;
    bool vardeg = cf.base.kind == BaseKind::VariableDegree;

    if (vardeg && st.size() == 2 && st[0].kind == K::SgnApplied &&
        st[1].kind == K::AggMP && st[1].cls == ChainClass::Av)
        return "the proportion of monomials containing variable " + var_name(v) +
               ", averaged across all polynomials";
    if (vardeg && st.size() == 2 && st[0].kind == K::SgnApplied &&
        st[1].kind == K::AggMP && st[1].cls == ChainClass::Sum)
        return "the number of monomials containing variable " + var_name(v);
    if (vardeg && st.size() == 1 && st[0].kind == K::AggMP && st[0].cls == ChainClass::Max)
        return "the maximum degree of " + var_name(v) + " among all polynomials";
    if (!vardeg && st.size() == 1 && st[0].kind == K::AggMP && st[0].cls == ChainClass::Max)
        return "the maximum total degree of monomials containing " + var_name(v);
    if (vardeg && st.size() == 3 && st[0].kind == K::AggM && st[0].cls == ChainClass::Sum &&
        st[1].kind == K::SgnApplied && st[2].kind == K::AggP && st[2].cls == ChainClass::Av)
        return "the proportion of polynomials containing variable " + var_name(v);
    if (!vardeg && st.size() == 2 && st[0].kind == K::AggM && st[0].cls == ChainClass::Av &&
        st[1].kind == K::AggP && st[1].cls == ChainClass::Sum)
        return "the total degree of monomials containing " + var_name(v) +
               ", averaged across monomials and summed across polynomials";
    if (!vardeg && st.size() == 2 && st[0].kind == K::AggM && st[0].cls == ChainClass::Max &&
        st[1].kind == K::AggP && st[1].cls == ChainClass::Sum)
        return "the maximum total degree of monomials containing " + var_name(v) +
               ", summed across polynomials";
    return "";
}

}  // namespace

Description describe(const FeatureDescriptor& d) {
    Description out;
    out.formula = formula_string(d);
    if (d.builtin) {
        out.gloss = d.builtin_id == 1 ? "the number of polynomials"
                                      : "the maximum total degree of any monomial";
        return out;
    }
    out.gloss = recognized_gloss(canonicalize(d));
    return out;
}

std::optional<FeatureDescriptor> find_by_canonical_form(
    const std::vector<FeatureDescriptor>& descriptors, const CanonicalForm& target) {
    for (const FeatureDescriptor& d : descriptors) {
        if (d.builtin) continue;
        if (canonicalize(d) == target) return d;
    }
    return std::nullopt;
}

}  // namespace polyfeat
