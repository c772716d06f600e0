#pragma once

#include <map>
#include <string>
#include <vector>

#include "polyfeat/polynomial.hpp"

namespace polyfeat {

/// A CAD variable ordering as an elimination sequence: elim[0] is the
/// variable (0-based index) eliminated first. Rendered "x1>x3>x2" with the
/// first-eliminated variable leftmost.
struct Ordering {
    std::vector<int> elim;

    bool operator==(const Ordering&) const = default;
    auto operator<=>(const Ordering&) const = default;
};

/// All n! orderings in lexicographic order of their index sequences.
std::vector<Ordering> all_orderings(int nvars);

/// 1-based lexicographic rank of an ordering among all_orderings(n).
int ordering_class_index(const Ordering& o);

/// Inverse of ordering_class_index for a given n.
Ordering ordering_from_class_index(int nvars, int class_index);

std::string format_ordering(const Ordering& o, const VariableSet& vars);
Ordering parse_ordering(const std::string& text, const VariableSet& vars);

/// Splits "a>b>c" into names without needing a VariableSet.
std::vector<std::string> split_ordering_names(const std::string& text);

}  // namespace polyfeat
