#include "polyfeat/matrix.hpp"

#include "polyfeat/csv.hpp"
#include "polyfeat/errors.hpp"
#include "polyfeat/parallel.hpp"

namespace polyfeat {

int FeatureMatrix::column_of(long serial) const {
    for (int j = 0; j < cols(); ++j)
        if (serials[j] == serial) return j;
    return -1;
}

FeatureMatrix evaluate_matrix(const std::vector<FeatureDescriptor>& descriptors,
                              const std::vector<NamedProblem>& corpus, BaseReading reading,
                              int jobs) {
    if (corpus.empty()) throw InputError("corpus is empty");
    int n = corpus.front().instance.nvars();
    for (const auto& np : corpus)
        if (np.instance.nvars() != n)
            throw InputError("mixed variable counts in corpus (problem '" + np.id + "')");

    FeatureMatrix m;
    m.problem_ids.reserve(corpus.size());
    for (const auto& np : corpus) m.problem_ids.push_back(np.id);
    m.serials.reserve(descriptors.size());
    for (const auto& d : descriptors) m.serials.push_back(d.serial);
    m.values.assign(corpus.size(), {});

    parallel_for(jobs, corpus.size(), [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            std::vector<Rational> row;
            row.reserve(descriptors.size());
            for (const auto& d : descriptors)
                row.push_back(evaluate_feature(d, corpus[i].instance, reading));
            m.values[i] = std::move(row);
        }
    });
    return m;
}

std::string matrix_to_csv(const FeatureMatrix& m) {
    std::string out;
    std::vector<std::string> header;
    header.reserve(m.cols() + 1);
    header.push_back("problem_id");
    for (long s : m.serials) header.push_back(std::to_string(s));
    out += csv::format_row(header);
    for (int i = 0; i < m.rows(); ++i) {
        std::vector<std::string> row;
        row.reserve(m.cols() + 1);
        row.push_back(m.problem_ids[i]);
        for (const Rational& v : m.values[i]) row.push_back(to_decimal_string(v));
        out += csv::format_row(row);
    }
    return out;
}

FeatureMatrix matrix_from_csv(const std::string& text) {
    auto rows = csv::parse(text);
    if (rows.empty()) throw InputError("feature matrix CSV is empty");
    const auto& header = rows.front();
    if (header.empty() || header[0] != "problem_id")
        throw InputError("feature matrix CSV must start with a problem_id column");
    FeatureMatrix m;
    for (std::size_t j = 1; j < header.size(); ++j) {
        try {
            m.serials.push_back(std::stol(header[j]));
        } catch (const std::exception&) {
            throw InputError("bad descriptor serial in CSV header: '" + header[j] + "'");
        }
    }
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& r = rows[i];
        if (r.size() != header.size())
            throw InputError("CSV row " + std::to_string(i + 1) + " has " +
                             std::to_string(r.size()) + " fields, expected " +
                             std::to_string(header.size()));
        m.problem_ids.push_back(r[0]);
        std::vector<Rational> vals;
        vals.reserve(r.size() - 1);
        for (std::size_t j = 1; j < r.size(); ++j) vals.push_back(rational_from_string(r[j]));
        m.values.push_back(std::move(vals));
    }
    if (m.rows() == 0) throw InputError("feature matrix CSV has no data rows");
    return m;
}

FeatureMatrix select_columns(const FeatureMatrix& m, const std::vector<long>& serials) {
    FeatureMatrix out;
    out.problem_ids = m.problem_ids;
    std::vector<int> idx;
    for (long s : serials) {
        int j = m.column_of(s);
        if (j < 0)
            throw InputError("feature matrix is missing column with serial " +
                             std::to_string(s));
        idx.push_back(j);
        out.serials.push_back(s);
    }
    out.values.reserve(m.rows());
    for (const auto& row : m.values) {
        std::vector<Rational> r;
        r.reserve(idx.size());
        for (int j : idx) r.push_back(row[j]);
        out.values.push_back(std::move(r));
    }
    return out;
}

}  // namespace polyfeat
