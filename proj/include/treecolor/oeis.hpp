#pragma once

#include "treecolor/numeric.hpp"

#include <httplib.h>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace treecolor {

// ---- sequence lookup against the public index ----

struct OeisResult {
    std::string query;             // comma-joined terms
    std::vector<std::string> ids;  // matched ids, e.g. "A006318"
    std::string source;            // "live" or "fixture"
};

struct OeisNetworkError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// FNV-1a, 64-bit, lowercase hex; keys fixture files by query text.
inline std::string fnv1a64_hex(const std::string& s) {
    uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[size_t(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

inline std::string oeis_query_string(const std::vector<Int>& terms) {
    std::string q;
    for (size_t i = 0; i < terms.size(); ++i) {
        if (i) q.push_back(',');
        q += terms[i].str();
    }
    return q;
}

// Accepts both response shapes: {"results": [...]} and a bare array; null
// results mean no matches.
inline std::vector<std::string> parse_oeis_ids(const std::string& body) {
    nlohmann::json j = nlohmann::json::parse(body);
    const nlohmann::json* results = nullptr;
    if (j.is_object() && j.contains("results"))
        results = &j.at("results");
    else if (j.is_array())
        results = &j;
    std::vector<std::string> ids;
    if (!results || results->is_null()) return ids;
    for (const auto& entry : *results) {
        if (!entry.contains("number")) continue;
        long num = entry.at("number").get<long>();
        char buf[16];
        std::snprintf(buf, sizeof buf, "A%06ld", num);
        if (std::find(ids.begin(), ids.end(), buf) == ids.end()) ids.emplace_back(buf);
    }
    return ids;
}

inline OeisResult oeis_lookup_fixture(const std::string& query, const std::string& fixture_dir) {
    OeisResult r;
    r.query = query;
    r.source = "fixture";
    std::string path = fixture_dir + "/" + fnv1a64_hex(query) + ".json";
    std::ifstream in(path, std::ios::binary);
    if (!in) return r;  // no recording: report no matches
    std::ostringstream ss;
    ss << in.rdbuf();
    r.ids = parse_oeis_ids(ss.str());
    return r;
}

inline OeisResult oeis_lookup_live(const std::string& query) {
    OeisResult r;
    r.query = query;
    r.source = "live";
    httplib::Client client("http://oeis.org");
    client.set_connection_timeout(10);
    client.set_read_timeout(15);
    client.set_follow_location(true);
    httplib::Headers headers = {{"User-Agent", "treecolor/0.1 sequence lookup"}};
    auto res = client.Get("/search?q=" + query + "&fmt=json", headers);
    if (!res) throw OeisNetworkError("request failed: " + httplib::to_string(res.error()));
    if (res->status != 200)
        throw OeisNetworkError("server returned status " + std::to_string(res->status));
    try {
        r.ids = parse_oeis_ids(res->body);
    } catch (const std::exception& e) {
        throw OeisNetworkError(std::string("unreadable response: ") + e.what());
    }
    return r;
}

}  // namespace treecolor
