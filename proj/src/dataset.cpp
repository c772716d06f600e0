#include "polyfeat/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

#include "polyfeat/csv.hpp"
#include "polyfeat/errors.hpp"
#include "polyfeat/rng.hpp"

using nlohmann::json;

namespace polyfeat {

std::pair<FeatureMatrix, MergeReport> simplify(const FeatureMatrix& m) {
    if (m.rows() < 2) throw InputError("simplify requires at least two problems");
    MergeReport report;

    std::vector<int> surviving;
    for (int j = 0; j < m.cols(); ++j) {
        bool constant = true;
        for (int i = 1; i < m.rows(); ++i) {
            if (m.values[i][j] != m.values[0][j]) {
                constant = false;
                break;
            }
        }
        if (constant)
            report.removed_constant.emplace_back(m.serials[j], m.values[0][j]);
        else
            surviving.push_back(j);
    }

    // Group identical surviving columns. Columns are keyed by their full
    // value vector; the map keeps groups deterministic.
    std::map<std::vector<Rational>, std::vector<int>, std::less<>> groups_by_value;
    auto column = [&](int j) {
        std::vector<Rational> col;
        col.reserve(m.rows());
        for (int i = 0; i < m.rows(); ++i) col.push_back(m.values[i][j]);
        return col;
    };
    for (int j : surviving) groups_by_value[column(j)].push_back(j);

    std::vector<MergeGroup> groups;
    for (const auto& [vals, cols] : groups_by_value) {
        MergeGroup g;
        for (int j : cols) g.members.push_back(m.serials[j]);
        std::sort(g.members.begin(), g.members.end());
        g.representative = g.members.front();
        groups.push_back(std::move(g));
    }
    std::sort(groups.begin(), groups.end(),
              [](const MergeGroup& a, const MergeGroup& b) {
                  return a.representative < b.representative;
              });
    report.merge_groups = std::move(groups);

    FeatureMatrix out;
    out.problem_ids = m.problem_ids;
    std::vector<int> keep_cols;
    for (const MergeGroup& g : report.merge_groups) {
        out.serials.push_back(g.representative);
        keep_cols.push_back(m.column_of(g.representative));
    }
    out.values.reserve(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        std::vector<Rational> row;
        row.reserve(keep_cols.size());
        for (int j : keep_cols) row.push_back(m.values[i][j]);
        out.values.push_back(std::move(row));
    }
    return {std::move(out), std::move(report)};
}

FeatureMatrix reconstruct(const FeatureMatrix& simplified, const MergeReport& report) {
    // Rebuild every original column, then order by serial.
    std::map<long, std::vector<Rational>> columns;
    for (const auto& [serial, value] : report.removed_constant)
        columns[serial] = std::vector<Rational>(simplified.rows(), value);
    for (const MergeGroup& g : report.merge_groups) {
        int j = simplified.column_of(g.representative);
        if (j < 0)
            throw InputError("merge report references missing representative " +
                             std::to_string(g.representative));
        std::vector<Rational> col;
        col.reserve(simplified.rows());
        for (int i = 0; i < simplified.rows(); ++i) col.push_back(simplified.values[i][j]);
        for (long s : g.members) columns[s] = col;
    }
    FeatureMatrix out;
    out.problem_ids = simplified.problem_ids;
    for (const auto& [serial, col] : columns) out.serials.push_back(serial);
    out.values.assign(simplified.rows(), {});
    for (int i = 0; i < simplified.rows(); ++i) {
        out.values[i].reserve(columns.size());
        for (const auto& [serial, col] : columns) out.values[i].push_back(col[i]);
    }
    return out;
}

std::string merge_report_to_json(const MergeReport& report) {
    json j;
    j["removed_constant"] = json::array();
    for (const auto& [serial, value] : report.removed_constant)
        j["removed_constant"].push_back(
            {{"serial", serial}, {"value", to_decimal_string(value)}});
    j["merge_groups"] = json::array();
    for (const MergeGroup& g : report.merge_groups)
        j["merge_groups"].push_back(
            {{"representative", g.representative}, {"members", g.members}});
    return j.dump(2) + "\n";
}

FValue f_value(const std::vector<Rational>& column, const std::vector<int>& labels) {
    if (column.size() != labels.size())
        throw InputError("column and label sizes differ");
    long n = static_cast<long>(column.size());

    std::map<int, std::vector<const Rational*>> classes;
    for (std::size_t i = 0; i < column.size(); ++i)
        classes[labels[i]].push_back(&column[i]);
    long c = static_cast<long>(classes.size());
    if (c < 2) throw InputError("F-value needs at least two classes");
    if (n < c) throw InputError("fewer samples than classes");

    Rational grand_mean = 0;
    for (const Rational& v : column) grand_mean += v;
    grand_mean /= n;

    Rational between = 0;
    Rational within = 0;
    for (const auto& [cls, members] : classes) {
        long nc = static_cast<long>(members.size());
        Rational class_mean = 0;
        for (const Rational* v : members) class_mean += *v;
        class_mean /= nc;
        Rational diff = class_mean - grand_mean;
        between += nc * diff * diff;
        for (const Rational* v : members) {
            Rational e = *v - class_mean;
            within += e * e;
        }
    }
    // F = [between / (C-1)] / [within / (N-C)]
    Rational numerator = between / (c - 1);

    FValue out;
    if (within == 0 || n == c) {
        if (numerator > 0) {
            out.infinite = true;
        } else {
            out.value = 0;
        }
        return out;
    }
    Rational denominator = within / (n - c);
    out.value = numerator / denominator;
    return out;
}

std::vector<std::pair<long, FValue>> rank_features(const LabelledCorpus& corpus) {
    const FeatureMatrix& m = corpus.matrix;
    std::vector<std::pair<long, FValue>> ranked;
    ranked.reserve(m.cols());
    for (int j = 0; j < m.cols(); ++j) {
        std::vector<Rational> col;
        col.reserve(m.rows());
        for (int i = 0; i < m.rows(); ++i) col.push_back(m.values[i][j]);
        ranked.emplace_back(m.serials[j], f_value(col, corpus.labels));
    }
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second.infinite != b.second.infinite) return a.second.infinite;
        if (!a.second.infinite && a.second.value != b.second.value)
            return a.second.value > b.second.value;
        return a.first < b.first;
    });
    return ranked;
}

StandardizationStats fit_standardizer(const FeatureMatrix& train) {
    if (train.rows() == 0) throw InputError("cannot standardize an empty matrix");
    StandardizationStats stats;
    stats.serials = train.serials;
    for (int j = 0; j < train.cols(); ++j) {
        Rational mean = 0;
        for (int i = 0; i < train.rows(); ++i) mean += train.values[i][j];
        mean /= train.rows();
        Rational var = 0;
        for (int i = 0; i < train.rows(); ++i) {
            Rational d = train.values[i][j] - mean;
            var += d * d;
        }
        var /= train.rows();
        if (var == 0)
            throw InputError("zero-variance column (serial " +
                             std::to_string(train.serials[j]) +
                             "); run simplify before standardizing");
        stats.means.push_back(mean.get_d());
        stats.sds.push_back(std::sqrt(var.get_d()));
    }
    return stats;
}

FeatureMatrix apply_standardizer(const StandardizationStats& stats, const FeatureMatrix& m) {
    FeatureMatrix aligned = select_columns(m, stats.serials);
    for (int i = 0; i < aligned.rows(); ++i) {
        for (int j = 0; j < aligned.cols(); ++j) {
            double z = (aligned.values[i][j].get_d() - stats.means[j]) / stats.sds[j];
            aligned.values[i][j] = Rational(z);  // exact binary value of z
        }
    }
    return aligned;
}

FeatureMatrix standardize(const FeatureMatrix& train, const FeatureMatrix& apply_to) {
    return apply_standardizer(fit_standardizer(train), apply_to);
}

std::pair<LabelledCorpus, LabelledCorpus> split(const LabelledCorpus& corpus,
                                                double train_fraction, std::uint64_t seed) {
    if (!(train_fraction > 0.0 && train_fraction < 1.0))
        throw InputError("train fraction must be strictly between 0 and 1");
    std::size_t n = corpus.matrix.rows();
    if (n < 2) throw InputError("need at least two problems to split");

    long long k = std::llround(static_cast<double>(n) * train_fraction);
    k = std::max<long long>(1, std::min<long long>(k, static_cast<long long>(n) - 1));

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    Rng rng(seed);
    rng.shuffle(order);

    auto take = [&](std::size_t begin, std::size_t end) {
        LabelledCorpus part;
        part.matrix.serials = corpus.matrix.serials;
        std::vector<std::size_t> rows(order.begin() + begin, order.begin() + end);
        std::sort(rows.begin(), rows.end());  // keep original row order
        for (std::size_t i : rows) {
            part.matrix.problem_ids.push_back(corpus.matrix.problem_ids[i]);
            part.matrix.values.push_back(corpus.matrix.values[i]);
            part.labels.push_back(corpus.labels[i]);
        }
        part.class_map = corpus.class_map;
        return part;
    };
    return {take(0, static_cast<std::size_t>(k)), take(static_cast<std::size_t>(k), n)};
}

std::string labels_to_csv(const std::vector<std::string>& problem_ids,
                          const std::vector<int>& labels,
                          const std::map<int, std::string>& class_map) {
    if (problem_ids.size() != labels.size())
        throw InputError("id and label counts differ");
    std::string out = csv::format_row({"problem_id", "class", "ordering"});
    for (std::size_t i = 0; i < problem_ids.size(); ++i) {
        auto it = class_map.find(labels[i]);
        if (it == class_map.end())
            throw InputError("class " + std::to_string(labels[i]) + " missing from class map");
        out += csv::format_row({problem_ids[i], std::to_string(labels[i]), it->second});
    }
    return out;
}

LabelsFile labels_from_csv(const std::string& text) {
    auto rows = csv::parse(text);
    if (rows.empty() || rows[0] != std::vector<std::string>{"problem_id", "class", "ordering"})
        throw InputError("labels CSV must have header problem_id,class,ordering");
    LabelsFile out;
    std::set<std::string> seen;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& r = rows[i];
        if (r.size() != 3)
            throw InputError("labels CSV row " + std::to_string(i + 1) +
                             " must have 3 fields");
        if (!seen.insert(r[0]).second)
            throw InputError("duplicate problem id '" + r[0] + "' in labels CSV");
        int cls;
        try {
            cls = std::stoi(r[1]);
        } catch (const std::exception&) {
            throw InputError("bad class '" + r[1] + "' in labels CSV");
        }
        auto [it, inserted] = out.class_map.emplace(cls, r[2]);
        if (!inserted && it->second != r[2])
            throw InputError("class " + r[1] + " maps to both '" + it->second + "' and '" +
                             r[2] + "'");
        out.problem_ids.push_back(r[0]);
        out.labels.push_back(cls);
    }
    if (out.problem_ids.empty()) throw InputError("labels CSV has no data rows");
    return out;
}

LabelledCorpus join_labels(const FeatureMatrix& matrix, const LabelsFile& labels) {
    std::map<std::string, int> by_id;
    for (std::size_t i = 0; i < labels.problem_ids.size(); ++i)
        by_id[labels.problem_ids[i]] = labels.labels[i];
    LabelledCorpus corpus;
    corpus.matrix = matrix;
    corpus.class_map = labels.class_map;
    for (const std::string& id : matrix.problem_ids) {
        auto it = by_id.find(id);
        if (it == by_id.end()) throw InputError("no label for problem '" + id + "'");
        corpus.labels.push_back(it->second);
    }
    return corpus;
}

}  // namespace polyfeat
