#include "treecolor/analysis.hpp"
#include "treecolor/catalog.hpp"
#include "treecolor/counting.hpp"
#include "treecolor/equivalence.hpp"
#include "treecolor/matrix.hpp"
#include "treecolor/oeis.hpp"
#include "treecolor/polynomial.hpp"
#include "treecolor/series.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace treecolor;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;
constexpr int kExitResource = 3;

std::string env_or(const char* name, const std::string& fallback) {
    const char* v = std::getenv(name);
    return (v && *v) ? std::string(v) : fallback;
}

// ---- count ----

struct CountOptions {
    std::string matrix_text;
    int n = 10;
    bool json = false;
    bool bfile = false;
    bool csv = false;
};

int cmd_count(const CountOptions& opt) {
    Matrix A = parse_matrix(opt.matrix_text);
    SequenceTable table = count_by_root(A, opt.n);
    if (opt.bfile) {
        for (int n = 1; n <= opt.n; ++n)
            std::cout << n << " " << table.total[size_t(n)].str() << "\n";
        return kExitOk;
    }
    if (opt.csv) {
        std::cout << "n,t";
        for (int c = 1; c <= A.m; ++c) std::cout << ",t^(" << c << ")";
        std::cout << "\n";
        for (int n = 1; n <= opt.n; ++n) {
            std::cout << n << "," << table.total[size_t(n)].str();
            for (int c = 1; c <= A.m; ++c) std::cout << "," << table.t(c, n).str();
            std::cout << "\n";
        }
        return kExitOk;
    }
    if (opt.json) {
        nlohmann::ordered_json j;
        j["matrix"] = to_text(A);
        j["m"] = A.m;
        j["n"] = opt.n;
        std::vector<std::string> total;
        for (int n = 1; n <= opt.n; ++n) total.push_back(table.total[size_t(n)].str());
        j["total"] = total;
        j["per_color"] = nlohmann::ordered_json::array();
        for (int c = 1; c <= A.m; ++c) {
            std::vector<std::string> row;
            for (int n = 1; n <= opt.n; ++n) row.push_back(table.t(c, n).str());
            j["per_color"].push_back(row);
        }
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    for (int c = 1; c <= A.m; ++c) {
        std::cout << "t^(" << c << ")";
        for (int n = 1; n <= opt.n; ++n) std::cout << " " << table.t(c, n).str();
        std::cout << "\n";
    }
    std::cout << "t";
    for (int n = 1; n <= opt.n; ++n) std::cout << " " << table.total[size_t(n)].str();
    std::cout << "\n";
    return kExitOk;
}

// ---- classify ----

struct ClassifyOptions {
    int m = 0;
    int n = 0;  // 0: depth default by m
    unsigned jobs = 0;
    std::string cache_dir;
    std::string output;
    bool no_cache = false;
};

int cmd_classify(const ClassifyOptions& opt) {
    int depth = opt.n ? opt.n : (opt.m <= 3 ? 16 : 14);
    std::string cache_dir =
        !opt.cache_dir.empty() ? opt.cache_dir : env_or("TREECOLOR_CACHE_DIR", ".treecolor-cache");
    std::filesystem::path cache_path =
        std::filesystem::path(cache_dir) / catalog_cache_name(opt.m, depth);

    CatalogFile file;
    bool have = false;
    if (!opt.no_cache && std::filesystem::exists(cache_path)) {
        try {
            file = read_catalog_file(cache_path.string());
            if (file.m != opt.m || file.depth != depth || file.version != kToolVersion)
                throw std::runtime_error("catalog: key mismatch");
            have = true;
        } catch (const std::exception& e) {
            std::cerr << "warning: discarding corrupt cache " << cache_path.string() << ": "
                      << e.what() << "\n";
        }
    }
    if (!have) {
        ClassificationCatalog cat = classify_all(opt.m, depth, opt.jobs);
        file = make_catalog_file(cat);
        try {
            std::filesystem::create_directories(cache_path.parent_path());
            write_catalog_file(cache_path.string(), file);
        } catch (const std::exception& e) {
            std::cerr << "error: cannot write catalog: " << e.what() << "\n";
            return kExitResource;
        }
    }
    if (!opt.output.empty()) {
        try {
            write_catalog_file(opt.output, file);
        } catch (const std::exception& e) {
            std::cerr << "error: cannot write catalog: " << e.what() << "\n";
            return kExitResource;
        }
    }

    int splits = 0, triples = 0;
    for (const auto& tc : file.tree_classes) {
        if (tc.strong_classes.size() >= 2) ++splits;
        if (tc.strong_classes.size() >= 3) ++triples;
    }
    std::cout << file.iso_count << " iso, " << file.strong_count << " strong, "
              << file.tree_classes.size() << " sequences\n";
    std::cout << "split classes: " << splits << " (" << triples << " triple)\n";
    std::cout << "catalog: " << cache_path.string() << "\n";
    return kExitOk;
}

// ---- verify ----

struct VerifyOptions {
    std::string matrix_text;
    std::string equation;
    int color = 0;  // 0 selects the total series
    int order = 30;
};

int cmd_verify(const VerifyOptions& opt) {
    Matrix A = parse_matrix(opt.matrix_text);
    if (opt.color < 0 || opt.color > A.m) {
        std::cerr << "error: color must be 0 (total) or 1.." << A.m << "\n";
        return kExitUsage;
    }
    BivariatePolynomial poly = parse_polynomial(opt.equation);
    SequenceTable table = count_by_root(A, opt.order);
    TruncatedSeries series = series_from_counts(table, opt.color);
    EquationVerdict v = verify_functional_equation(poly, series);
    if (v.annihilated) {
        std::cout << "annihilated to order " << opt.order << "\n";
        return kExitOk;
    }
    TruncatedSeries img = poly.eval(series);
    std::cout << "fails at order " << v.first_failing_order << " (coefficient "
              << img.c[size_t(v.first_failing_order)].str() << ")\n";
    return kExitVerification;
}

// ---- oeis ----

struct OeisOptions {
    std::string matrix_text;
    std::string terms;
    int n = 8;
    bool skip_first = false;
    bool offline = false;
    std::string fixtures;
};

int cmd_oeis(const OeisOptions& opt) {
    if (opt.matrix_text.empty() == opt.terms.empty()) {
        std::cerr << "error: give either a matrix or --terms\n";
        return kExitUsage;
    }
    std::string query;
    if (!opt.terms.empty()) {
        if (opt.skip_first) {
            std::cerr << "error: --skip-first requires a matrix\n";
            return kExitUsage;
        }
        query = opt.terms;
    } else {
        Matrix A = parse_matrix(opt.matrix_text);
        SequenceTable table = count_by_root(A, opt.n);
        std::vector<Int> terms(table.total.begin() + 1, table.total.end());
        if (opt.skip_first && !terms.empty() && terms.front() == A.m)
            terms.erase(terms.begin());
        query = oeis_query_string(terms);
    }

    bool fixture_mode = opt.offline || !opt.fixtures.empty() ||
                        !env_or("TREECOLOR_OFFLINE", "").empty();
    OeisResult result;
    if (fixture_mode) {
        std::string dir = !opt.fixtures.empty()
                              ? opt.fixtures
                              : env_or("TREECOLOR_CACHE_DIR", ".treecolor-cache") + "/oeis";
        result = oeis_lookup_fixture(query, dir);
    } else {
        try {
            result = oeis_lookup_live(query);
        } catch (const OeisNetworkError& e) {
            std::cerr << "network error: " << e.what() << "\n";
            return kExitResource;
        }
    }
    std::cout << "query: " << result.query << "\n";
    std::cout << "source: " << result.source << "\n";
    if (result.ids.empty()) {
        std::cout << "no matches\n";
    } else {
        std::cout << "matches:";
        for (const auto& id : result.ids) std::cout << " " << id;
        std::cout << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact counting and classification of colored plane trees"};
    app.require_subcommand(1);

    CountOptions count_opt;
    auto* count = app.add_subcommand("count", "print counting sequences for a coloring matrix");
    count->add_option("matrix", count_opt.matrix_text, "matrix text, e.g. \"11;10\"")->required();
    count->add_option("--n", count_opt.n, "number of terms")->check(CLI::PositiveNumber);
    auto* fmt_json = count->add_flag("--json", count_opt.json, "JSON output");
    auto* fmt_bfile = count->add_flag("--bfile", count_opt.bfile, "b-file output (totals)");
    auto* fmt_csv = count->add_flag("--csv", count_opt.csv, "CSV output");
    fmt_json->excludes(fmt_bfile, fmt_csv);
    fmt_bfile->excludes(fmt_csv);

    ClassifyOptions cls_opt;
    auto* cls = app.add_subcommand("classify", "classify all m-color matrices");
    cls->add_option("m", cls_opt.m, "number of colors")->required()->check(CLI::Range(1, 5));
    cls->add_option("--n", cls_opt.n, "comparison depth (default 16, or 14 at m=4)")
        ->check(CLI::PositiveNumber);
    cls->add_option("--jobs", cls_opt.jobs, "worker threads (default: all cores)");
    cls->add_option("--cache-dir", cls_opt.cache_dir, "catalog cache directory");
    cls->add_option("--output", cls_opt.output, "also write the catalog to this path");
    cls->add_flag("--no-cache", cls_opt.no_cache, "ignore any cached catalog");

    VerifyOptions ver_opt;
    auto* ver = app.add_subcommand("verify", "check a functional equation against a series");
    ver->add_option("matrix", ver_opt.matrix_text, "matrix text")->required();
    ver->add_option("equation", ver_opt.equation, "polynomial in F and x, e.g. \"F^2-F+x\"")
        ->required();
    ver->add_option("--color", ver_opt.color, "root color (0 = total)");
    ver->add_option("--order", ver_opt.order, "check order")->check(CLI::PositiveNumber);

    OeisOptions oeis_opt;
    auto* oeis = app.add_subcommand("oeis", "look terms up in the sequence index");
    oeis->add_option("matrix", oeis_opt.matrix_text, "matrix text (query its totals)");
    oeis->add_option("--terms", oeis_opt.terms, "comma-joined terms to query");
    oeis->add_option("--n", oeis_opt.n, "terms to take from the matrix")
        ->check(CLI::PositiveNumber);
    oeis->add_flag("--skip-first", oeis_opt.skip_first,
                   "drop the first term when it equals the color count");
    oeis->add_flag("--offline", oeis_opt.offline, "force fixture mode");
    oeis->add_option("--fixtures", oeis_opt.fixtures, "fixture directory (implies fixture mode)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (count->parsed()) return cmd_count(count_opt);
        if (cls->parsed()) return cmd_classify(cls_opt);
        if (ver->parsed()) return cmd_verify(ver_opt);
        if (oeis->parsed()) return cmd_oeis(oeis_opt);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    }
    return kExitUsage;
}
