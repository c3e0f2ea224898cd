#pragma once

#include "treecolor/counting.hpp"
#include "treecolor/equivalence.hpp"
#include "treecolor/matrix.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace treecolor {

inline constexpr const char* kToolVersion = "0.1.0";

// ---- catalog persistence ----

// Nested view of a classification: tree classes hold strong classes hold
// canonical matrices.  All sequence entries are decimal strings so arbitrary
// precision survives serialization.
struct CatalogFile {
    struct StrongClass {
        std::vector<std::string> per_color;  // sorted per-color rows, "a1,a2,..."
        std::vector<std::string> matrices;   // canonical forms, ascending, ";" text
        bool operator==(const StrongClass&) const = default;
    };
    struct TreeClass {
        std::vector<std::string> total;  // t(1..depth) as decimal strings
        std::vector<StrongClass> strong_classes;
        bool operator==(const TreeClass&) const = default;
    };
    int m = 0;
    int depth = 0;
    std::string version;
    int iso_count = 0;
    int strong_count = 0;
    std::vector<TreeClass> tree_classes;
    bool operator==(const CatalogFile&) const = default;
};

namespace detail {

inline std::string joined_decimal(const std::vector<Int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s.push_back(',');
        s += v[i].str();
    }
    return s;
}

}  // namespace detail

inline CatalogFile make_catalog_file(const ClassificationCatalog& cat) {
    CatalogFile f;
    f.m = cat.m;
    f.depth = cat.depth;
    f.version = kToolVersion;
    f.iso_count = int(cat.iso_classes.size());
    f.strong_count = int(cat.strong_classes.size());
    for (size_t t = 0; t < cat.tree_classes.size(); ++t) {
        CatalogFile::TreeClass tc;
        for (const auto& v : cat.sequence_fingerprints[t]) tc.total.push_back(v.str());
        for (int s : cat.tree_classes[t]) {
            CatalogFile::StrongClass sc;
            const auto& members = cat.strong_classes[size_t(s)];
            SequenceTable table = count_by_root(cat.iso_classes[size_t(members.front())], cat.depth);
            for (int c = 1; c <= cat.m; ++c)
                sc.per_color.push_back(detail::joined_decimal(std::vector<Int>(
                    table.per_color[size_t(c - 1)].begin() + 1, table.per_color[size_t(c - 1)].end())));
            std::sort(sc.per_color.begin(), sc.per_color.end());
            for (int i : members) sc.matrices.push_back(to_text(cat.iso_classes[size_t(i)]));
            tc.strong_classes.push_back(std::move(sc));
        }
        f.tree_classes.push_back(std::move(tc));
    }
    return f;
}

inline std::string save_catalog(const CatalogFile& f) {
    nlohmann::ordered_json j;
    j["m"] = f.m;
    j["depth"] = f.depth;
    j["version"] = f.version;
    j["iso_count"] = f.iso_count;
    j["strong_count"] = f.strong_count;
    j["tree_classes"] = nlohmann::ordered_json::array();
    for (const auto& tc : f.tree_classes) {
        nlohmann::ordered_json jt;
        jt["total"] = tc.total;
        jt["strong_classes"] = nlohmann::ordered_json::array();
        for (const auto& sc : tc.strong_classes) {
            nlohmann::ordered_json js;
            js["per_color"] = sc.per_color;
            js["matrices"] = sc.matrices;
            jt["strong_classes"].push_back(std::move(js));
        }
        j["tree_classes"].push_back(std::move(jt));
    }
    return j.dump(2) + "\n";
}

inline CatalogFile load_catalog(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    CatalogFile f;
    f.m = j.at("m").get<int>();
    f.depth = j.at("depth").get<int>();
    f.version = j.at("version").get<std::string>();
    f.iso_count = j.at("iso_count").get<int>();
    f.strong_count = j.at("strong_count").get<int>();
    int iso_seen = 0, strong_seen = 0;
    for (const auto& jt : j.at("tree_classes")) {
        CatalogFile::TreeClass tc;
        tc.total = jt.at("total").get<std::vector<std::string>>();
        if (int(tc.total.size()) != f.depth)
            throw std::runtime_error("catalog: fingerprint length does not match depth");
        for (const auto& js : jt.at("strong_classes")) {
            CatalogFile::StrongClass sc;
            sc.per_color = js.at("per_color").get<std::vector<std::string>>();
            sc.matrices = js.at("matrices").get<std::vector<std::string>>();
            if (sc.matrices.empty()) throw std::runtime_error("catalog: empty strong class");
            for (const auto& mtext : sc.matrices) {
                Matrix A = parse_matrix(mtext);  // validates shape
                if (A.m != f.m) throw std::runtime_error("catalog: matrix size mismatch");
            }
            iso_seen += int(sc.matrices.size());
            ++strong_seen;
            tc.strong_classes.push_back(std::move(sc));
        }
        f.tree_classes.push_back(std::move(tc));
    }
    if (iso_seen != f.iso_count || strong_seen != f.strong_count)
        throw std::runtime_error("catalog: header counts do not match body");
    return f;
}

inline void write_catalog_file(const std::string& path, const CatalogFile& f) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << save_catalog(f);
}

inline CatalogFile read_catalog_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_catalog(ss.str());
}

// Cache file name for a classification sweep.
inline std::string catalog_cache_name(int m, int N) {
    std::string tag = kToolVersion;
    for (auto& c : tag)
        if (c == '.') c = '_';
    return "catalog-m" + std::to_string(m) + "-N" + std::to_string(N) + "-v" + tag + ".json";
}

}  // namespace treecolor
