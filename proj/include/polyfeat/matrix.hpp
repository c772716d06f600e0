#pragma once

#include <string>
#include <vector>

#include "polyfeat/features.hpp"
#include "polyfeat/polynomial.hpp"
#include "polyfeat/rational.hpp"

namespace polyfeat {

/// Rows are problems, columns are feature descriptors (identified by
/// serial). Values are exact rationals; CSV export renders decimals with
/// at most 17 significant digits.
struct FeatureMatrix {
    std::vector<std::string> problem_ids;
    std::vector<long> serials;
    std::vector<std::vector<Rational>> values;  // [row][col]

    int rows() const { return static_cast<int>(problem_ids.size()); }
    int cols() const { return static_cast<int>(serials.size()); }
    int column_of(long serial) const;  // -1 when absent
};

struct NamedProblem {
    std::string id;
    ProblemInstance instance;
};

/// Evaluates every descriptor on every problem. All problems must share
/// the same variable count; the corpus must be non-empty. Rows may be
/// computed in parallel; the result does not depend on the job count.
FeatureMatrix evaluate_matrix(const std::vector<FeatureDescriptor>& descriptors,
                              const std::vector<NamedProblem>& corpus,
                              BaseReading reading = BaseReading::Formula, int jobs = 1);

std::string matrix_to_csv(const FeatureMatrix& m);
FeatureMatrix matrix_from_csv(const std::string& text);

/// Restriction to the given serial columns, in the given order.
FeatureMatrix select_columns(const FeatureMatrix& m, const std::vector<long>& serials);

}  // namespace polyfeat
