#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace treecolor {

// ---- plane trees ----

// Rooted ordered tree; child order is significant.
struct PlaneTree {
    std::vector<PlaneTree> children;

    bool operator==(const PlaneTree& o) const { return children == o.children; }
};

inline int vertex_count(const PlaneTree& t) {
    int n = 1;
    for (auto& c : t.children) n += vertex_count(c);
    return n;
}

inline int leaf_count(const PlaneTree& t) {
    if (t.children.empty()) return 1;
    int n = 0;
    for (auto& c : t.children) n += leaf_count(c);
    return n;
}

// Parent-array view in preorder; parent[0] = -1 for the root.
struct FlatTree {
    int n = 0;
    std::vector<int> parent;
};

namespace detail {
inline void flatten_rec(const PlaneTree& t, int parent, FlatTree& out) {
    int self = out.n++;
    out.parent.push_back(parent);
    for (auto& c : t.children) flatten_rec(c, self, out);
}
}  // namespace detail

inline FlatTree flatten(const PlaneTree& t) {
    FlatTree f;
    detail::flatten_rec(t, -1, f);
    return f;
}

// Nested parentheses, "(...)" per vertex.
inline std::string to_parens(const PlaneTree& t) {
    std::string s = "(";
    for (auto& c : t.children) s += to_parens(c);
    s += ")";
    return s;
}

inline PlaneTree from_parens(const std::string& s) {
    size_t pos = 0;
    struct P {
        const std::string& s;
        size_t& pos;
        PlaneTree parse() {
            if (pos >= s.size() || s[pos] != '(')
                throw std::invalid_argument("from_parens: expected '('");
            ++pos;
            PlaneTree t;
            while (pos < s.size() && s[pos] == '(') t.children.push_back(parse());
            if (pos >= s.size() || s[pos] != ')')
                throw std::invalid_argument("from_parens: expected ')'");
            ++pos;
            return t;
        }
    } p{s, pos};
    PlaneTree t = p.parse();
    if (pos != s.size()) throw std::invalid_argument("from_parens: trailing input");
    return t;
}

// ---- colored trees ----

// Shape plus one color in {1..m} per vertex, in preorder.
struct ColoredTree {
    PlaneTree shape;
    std::vector<int> colors;
};

// Parenthesis serialization with the color digit after each '(' .
inline std::string to_colored_parens(const ColoredTree& t) {
    std::string out;
    size_t idx = 0;
    struct R {
        const std::vector<int>& colors;
        std::string& out;
        size_t& idx;
        void walk(const PlaneTree& v) {
            out += "(" + std::to_string(colors[idx++]);
            for (auto& c : v.children) walk(c);
            out += ")";
        }
    } r{t.colors, out, idx};
    r.walk(t.shape);
    return out;
}

}  // namespace treecolor
