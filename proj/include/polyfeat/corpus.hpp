#pragma once

#include <string>
#include <vector>

#include "polyfeat/matrix.hpp"

namespace polyfeat {

/// Loads problems from:
///   - a directory: *.txt / *.poly native files and *.smt2 scripts, sorted
///     by filename, id = filename stem (other entries are ignored);
///   - a .jsonl file: one {"id", "vars", "polys"} object per line;
///   - a single problem file (native or .smt2), id = stem.
std::vector<NamedProblem> load_corpus(const std::string& path);

}  // namespace polyfeat
