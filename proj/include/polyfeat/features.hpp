#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "polyfeat/polynomial.hpp"
#include "polyfeat/rational.hpp"

namespace polyfeat {

/// The monomial-level measurement h^{m,p}: either the degree of one
/// variable, or sgn(d_v) times the monomial's total degree.
enum class BaseKind { VariableDegree, SignWeightedTotalDegree };

struct BaseMap {
    BaseKind kind;
    int v;  // 0-based variable index

    bool operator==(const BaseMap&) const = default;
};

/// How the sign-weighted base map reads: the displayed formula
/// sgn(d_v)*(sum of degrees), or the paper's worked-example variant
/// d_v*(sum of degrees). Selectable for comparison; Formula is the default.
enum class BaseReading { Formula, ExampleDegreeWeighted };

enum class ChainClass { Max, Av, Sum, Sgn };

/// Index carried by a chain function. Max/Av/Sum take None (identity), P, M
/// or PM; Sgn takes None (identity) or Applied (pointwise sign).
enum class ChainIndex { None, P, M, PM, Applied };

struct ChainFunction {
    ChainClass cls;
    ChainIndex index;

    bool operator==(const ChainFunction&) const = default;
};

/// Row of the index-distribution table: the index assigned to each of the
/// four function classes, in class order (Max, Av, Sum, Sgn).
struct IndexDistribution {
    std::array<ChainIndex, 4> index_for_class;

    bool operator==(const IndexDistribution&) const = default;
};

/// The 12 index distributions, hard-coded in row order. Row 9 assigns only
/// a p-index; its single aggregation is evaluated over both m and p (the
/// only scalar-valued reading), which duplicates row 7 exactly.
const std::vector<IndexDistribution>& distribution_table();

/// One feature recipe: a base map plus an ordered chain (g1..g4), where g1
/// is applied first. Identifies a feature of the enumerated framework.
struct FeatureDescriptor {
    long serial = 0;
    BaseMap base{BaseKind::VariableDegree, 0};
    std::array<ChainFunction, 4> chain{};  // chain[0] = g1 (innermost)
    bool builtin = false;                  // extra feature outside the framework
    int builtin_id = 0;                    // 1 = polynomial count, 2 = max total degree
};

/// Canonicalized evaluation plan. Aggregation indices are re-bound by
/// position: with two aggregating chain functions the inner one runs over
/// m and the outer over p; a lone aggregator runs over both. Identity
/// steps vanish; applied sgn keeps its position relative to aggregations.
struct CanonicalStep {
    enum class Kind { SgnApplied, AggM, AggP, AggMP } kind;
    ChainClass cls = ChainClass::Sgn;  // aggregator class; unused for SgnApplied

    bool operator==(const CanonicalStep&) const = default;
};

struct CanonicalForm {
    BaseMap base;
    std::vector<CanonicalStep> steps;  // innermost first

    bool operator==(const CanonicalForm&) const = default;
};

CanonicalForm canonicalize(const FeatureDescriptor& d);

/// Every descriptor of the framework for n variables, in the fixed order
/// (distribution row, class-to-position permutation, base map), serials
/// 1..(12 * 24 * 2n). Stable across runs.
std::vector<FeatureDescriptor> enumerate_descriptors(int n_vars);

/// The two features outside the framework: number of polynomials and
/// maximum monomial total degree. Serials continue after the enumeration.
std::vector<FeatureDescriptor> builtin_extra_descriptors(int n_vars);

/// h^{m,p} for one monomial (1-based m, p handled by the caller).
Rational evaluate_base(const BaseMap& base, const ProblemInstance& pr, int p, int m,
                       BaseReading reading = BaseReading::Formula);

Rational evaluate_feature(const FeatureDescriptor& d, const ProblemInstance& pr,
                          BaseReading reading = BaseReading::Formula);

/// Formula rendering of the canonical form, e.g. "av_p av_m sgn(d_2)".
std::string formula_string(const FeatureDescriptor& d);

/// Formula plus, for recognized shapes, a natural-language gloss.
struct Description {
    std::string formula;
    std::string gloss;  // empty when the shape has no stock phrasing
};
Description describe(const FeatureDescriptor& d);

/// First enumerated descriptor whose canonical form matches, if any.
std::optional<FeatureDescriptor> find_by_canonical_form(
    const std::vector<FeatureDescriptor>& descriptors, const CanonicalForm& target);

}  // namespace polyfeat
