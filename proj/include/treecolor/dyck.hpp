#pragma once

#include "treecolor/trees.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace treecolor {

// ---- Dyck words ----

// Words over {U, D}, balanced, every prefix has #U >= #D.

inline bool is_dyck_word(const std::string& w) {
    int h = 0;
    for (char c : w) {
        if (c == 'U') ++h;
        else if (c == 'D') --h;
        else return false;
        if (h < 0) return false;
    }
    return h == 0;
}

// All Dyck words of semilength k, in lexicographic order (D < U).
inline std::vector<std::string> enumerate_dyck_words(int k) {
    std::vector<std::string> out;
    std::string cur;
    // At each position choose 'D' before 'U' to emit in lexicographic order.
    struct G {
        int k;
        std::string& cur;
        std::vector<std::string>& out;
        void step(int ups, int downs) {
            if (int(cur.size()) == 2 * k) {
                out.push_back(cur);
                return;
            }
            if (downs < ups) {
                cur.push_back('D');
                step(ups, downs + 1);
                cur.pop_back();
            }
            if (ups < k) {
                cur.push_back('U');
                step(ups + 1, downs);
                cur.pop_back();
            }
        }
    } g{k, cur, out};
    g.step(0, 0);
    return out;
}

// ---- tree <-> word ----

// Preorder edge walk: U entering an edge, D leaving it.  A tree with n
// vertices maps to a Dyck word of semilength n-1.
inline std::string glove(const PlaneTree& t) {
    std::string w;
    struct R {
        std::string& w;
        void walk(const PlaneTree& v) {
            for (auto& c : v.children) {
                w.push_back('U');
                walk(c);
                w.push_back('D');
            }
        }
    } r{w};
    r.walk(t);
    return w;
}

inline PlaneTree unglove(const std::string& w) {
    if (!is_dyck_word(w)) throw std::invalid_argument("unglove: not a Dyck word");
    std::vector<PlaneTree> stack(1);
    for (char c : w) {
        if (c == 'U') {
            stack.emplace_back();
        } else {
            PlaneTree done = std::move(stack.back());
            stack.pop_back();
            stack.back().children.push_back(std::move(done));
        }
    }
    return std::move(stack.front());
}

// Ascent lengths: maximal runs of U, in order of appearance.
inline std::vector<int> ascent_lengths(const std::string& w) {
    std::vector<int> runs;
    int cur = 0;
    for (char c : w) {
        if (c == 'U') {
            ++cur;
        } else {
            if (cur > 0) runs.push_back(cur);
            cur = 0;
        }
    }
    if (cur > 0) runs.push_back(cur);
    return runs;
}

// A valley at height h: a D step followed by a U step, meeting at height h.
inline bool has_valley_at_height(const std::string& w, int h) {
    int height = 0;
    for (size_t i = 0; i + 1 < w.size(); ++i) {
        height += (w[i] == 'U') ? 1 : -1;
        if (w[i] == 'D' && w[i + 1] == 'U' && height == h) return true;
    }
    return false;
}

}  // namespace treecolor
