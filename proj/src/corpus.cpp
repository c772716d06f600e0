#include "polyfeat/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "polyfeat/csv.hpp"
#include "polyfeat/errors.hpp"
#include "polyfeat/parse.hpp"
#include "polyfeat/smt.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace polyfeat {

namespace {

NamedProblem load_problem_file(const fs::path& path) {
    std::string text = read_file(path.string());
    std::string id = path.stem().string();
    try {
        if (path.extension() == ".smt2")
            return {id, parse_problem_smt(text)};
        return {id, parse_problem_native(text)};
    } catch (const InputError& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

std::vector<NamedProblem> load_jsonl(const std::string& path) {
    std::istringstream in(read_file(path));
    std::vector<NamedProblem> out;
    std::string line;
    int lineno = 0;
    std::set<std::string> seen;
    while (std::getline(in, line)) {
        ++lineno;
        std::string trimmed = line;
        trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
        if (trimmed.empty()) continue;
        json obj;
        try {
            obj = json::parse(line);
        } catch (const json::exception& e) {
            throw InputError(path + " line " + std::to_string(lineno) + ": " + e.what());
        }
        if (!obj.is_object() || !obj.contains("id") || !obj.contains("vars") ||
            !obj.contains("polys"))
            throw InputError(path + " line " + std::to_string(lineno) +
                             ": expected {id, vars, polys}");
        std::string id = obj["id"].get<std::string>();
        if (!seen.insert(id).second)
            throw InputError(path + " line " + std::to_string(lineno) + ": duplicate id '" +
                             id + "'");
        std::vector<std::string> names;
        for (const auto& v : obj["vars"]) names.push_back(v.get<std::string>());
        try {
            VariableSet vars(names);
            std::vector<Polynomial> polys;
            for (const auto& s : obj["polys"]) {
                Polynomial p = parse_polynomial(s.get<std::string>(), vars);
                if (p.is_zero())
                    throw InputError("polynomial '" + s.get<std::string>() +
                                     "' is identically zero");
                polys.push_back(std::move(p));
            }
            out.push_back({id, ProblemInstance(std::move(vars), std::move(polys))});
        } catch (const InputError& e) {
            throw InputError(path + " line " + std::to_string(lineno) + " (id '" + id +
                             "'): " + e.what());
        }
    }
    if (out.empty()) throw InputError(path + ": no problems found");
    return out;
}

}  // namespace

std::vector<NamedProblem> load_corpus(const std::string& path) {
    fs::path p(path);
    if (fs::is_directory(p)) {
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(p)) {
            if (!entry.is_regular_file()) continue;
            auto ext = entry.path().extension();
            if (ext == ".txt" || ext == ".poly" || ext == ".smt2")
                files.push_back(entry.path());
        }
        std::sort(files.begin(), files.end());
        if (files.empty())
            throw InputError(path + ": no .txt/.poly/.smt2 problem files found");
        std::vector<NamedProblem> out;
        std::set<std::string> seen;
        for (const auto& f : files) {
            NamedProblem np = load_problem_file(f);
            if (!seen.insert(np.id).second)
                throw InputError("duplicate problem id '" + np.id + "' in " + path);
            out.push_back(std::move(np));
        }
        return out;
    }
    if (!fs::exists(p)) throw InputError("no such file or directory: " + path);
    if (p.extension() == ".jsonl") return load_jsonl(path);
    return {load_problem_file(p)};
}

}  // namespace polyfeat
