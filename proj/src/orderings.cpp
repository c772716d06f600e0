#include "polyfeat/orderings.hpp"

#include <algorithm>
#include <numeric>

#include "polyfeat/errors.hpp"

namespace polyfeat {

std::vector<Ordering> all_orderings(int nvars) {
    if (nvars < 1) throw InputError("need at least one variable");
    std::vector<int> perm(nvars);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Ordering> out;
    do {
        out.push_back(Ordering{perm});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

int ordering_class_index(const Ordering& o) {
    int n = static_cast<int>(o.elim.size());
    // Lehmer code -> 1-based lexicographic rank.
    long rank = 0;
    long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    std::vector<bool> used(n, false);
    for (int i = 0; i < n; ++i) {
        fact /= (n - i);
        int smaller = 0;
        int v = o.elim[i];
        if (v < 0 || v >= n || used[v]) throw InputError("not a permutation");
        for (int j = 0; j < v; ++j)
            if (!used[j]) ++smaller;
        used[v] = true;
        rank += smaller * fact;
    }
    return static_cast<int>(rank) + 1;
}

Ordering ordering_from_class_index(int nvars, int class_index) {
    long fact = 1;
    for (int i = 2; i <= nvars; ++i) fact *= i;
    if (class_index < 1 || class_index > fact)
        throw InputError("class index out of range");
    long rank = class_index - 1;
    std::vector<int> avail(nvars);
    std::iota(avail.begin(), avail.end(), 0);
    Ordering o;
    for (int i = 0; i < nvars; ++i) {
        fact /= (nvars - i);
        long idx = rank / fact;
        rank %= fact;
        o.elim.push_back(avail[idx]);
        avail.erase(avail.begin() + idx);
    }
    return o;
}

std::string format_ordering(const Ordering& o, const VariableSet& vars) {
    std::string out;
    for (std::size_t i = 0; i < o.elim.size(); ++i) {
        if (i) out += ">";
        out += vars.name(o.elim[i]);
    }
    return out;
}

std::vector<std::string> split_ordering_names(const std::string& text) {
    std::vector<std::string> names;
    std::string cur;
    for (char c : text) {
        if (c == '>') {
            names.push_back(cur);
            cur.clear();
        } else if (c != ' ' && c != '\t') {
            cur += c;
        }
    }
    names.push_back(cur);
    for (const auto& n : names)
        if (n.empty()) throw InputError("malformed ordering '" + text + "'");
    return names;
}

Ordering parse_ordering(const std::string& text, const VariableSet& vars) {
    std::vector<std::string> names = split_ordering_names(text);
    if (static_cast<int>(names.size()) != vars.size())
        throw InputError("ordering '" + text + "' does not cover all variables");
    Ordering o;
    std::vector<bool> used(vars.size(), false);
    for (const auto& n : names) {
        auto idx = vars.index_of(n);
        if (!idx) throw InputError("unknown variable '" + n + "' in ordering");
        if (used[*idx]) throw InputError("repeated variable '" + n + "' in ordering");
        used[*idx] = true;
        o.elim.push_back(*idx);
    }
    return o;
}

}  // namespace polyfeat
