#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "polyfeat/matrix.hpp"
#include "polyfeat/rational.hpp"

namespace polyfeat {

/// Feature matrix with one class label per problem and the class-index to
/// ordering-string bijection for the labels that occur.
struct LabelledCorpus {
    FeatureMatrix matrix;
    std::vector<int> labels;  // 1-based class per row
    std::map<int, std::string> class_map;
};

struct MergeGroup {
    long representative;        // lowest serial in the group
    std::vector<long> members;  // ascending, includes the representative
};

/// Records what simplify removed or merged; together with the simplified
/// matrix this reconstructs the original matrix exactly.
struct MergeReport {
    std::vector<std::pair<long, Rational>> removed_constant;  // (serial, value)
    std::vector<MergeGroup> merge_groups;  // partition of surviving serials
};

/// Drops constant columns and merges exactly-equal columns, keeping the
/// lowest serial of each group. Requires at least two rows.
std::pair<FeatureMatrix, MergeReport> simplify(const FeatureMatrix& m);

/// Inverse of simplify given its report; used to verify losslessness.
FeatureMatrix reconstruct(const FeatureMatrix& simplified, const MergeReport& report);

std::string merge_report_to_json(const MergeReport& report);

/// ANOVA F-value of one column: between-class over within-class
/// variability. Infinite when the within-class variability vanishes but
/// the between-class does not; zero when the numerator vanishes.
struct FValue {
    bool infinite = false;
    Rational value = 0;  // meaningful only when !infinite
};
FValue f_value(const std::vector<Rational>& column, const std::vector<int>& labels);

/// Columns ranked by descending F (infinities first), ties by ascending
/// serial.
std::vector<std::pair<long, FValue>> rank_features(const LabelledCorpus& corpus);

/// Column-wise z-scoring. Means and standard deviations (population form,
/// dividing by N) are fitted on a training matrix and applied elsewhere.
struct StandardizationStats {
    std::vector<long> serials;
    std::vector<double> means;
    std::vector<double> sds;
};
StandardizationStats fit_standardizer(const FeatureMatrix& train);
FeatureMatrix apply_standardizer(const StandardizationStats& stats, const FeatureMatrix& m);
/// Fits on train, returns apply_to transformed with the train statistics.
FeatureMatrix standardize(const FeatureMatrix& train, const FeatureMatrix& apply_to);

/// Reproducible row split: round(n * train_fraction) rows to train (at
/// least 1, at most n-1 when n >= 2), the rest to test.
std::pair<LabelledCorpus, LabelledCorpus> split(const LabelledCorpus& corpus,
                                                double train_fraction, std::uint64_t seed);

/// Labels CSV: header problem_id,class,ordering.
std::string labels_to_csv(const std::vector<std::string>& problem_ids,
                          const std::vector<int>& labels,
                          const std::map<int, std::string>& class_map);
/// Returns ids/classes plus the class map; validates consistency.
struct LabelsFile {
    std::vector<std::string> problem_ids;
    std::vector<int> labels;
    std::map<int, std::string> class_map;
};
LabelsFile labels_from_csv(const std::string& text);

/// Joins a feature matrix with a labels file by problem id (every matrix
/// row must be labelled).
LabelledCorpus join_labels(const FeatureMatrix& matrix, const LabelsFile& labels);

}  // namespace polyfeat
