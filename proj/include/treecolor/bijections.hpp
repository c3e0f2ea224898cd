#pragma once

#include "treecolor/counting.hpp"
#include "treecolor/dyck.hpp"
#include "treecolor/matrix.hpp"
#include "treecolor/trees.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace treecolor {

// ---- downward paths ----

// From a vertex with >= 2 children: one step to a non-leftmost child, then
// leftmost descent to a leaf.  Edge-length multiset, sorted.
inline std::vector<int> downward_path_lengths(const PlaneTree& t) {
    std::vector<int> out;
    struct R {
        std::vector<int>& out;
        static int leftmost_depth(const PlaneTree* v) {
            int d = 0;
            while (!v->children.empty()) {
                v = &v->children.front();
                ++d;
            }
            return d;
        }
        void walk(const PlaneTree& v) {
            for (size_t i = 1; i < v.children.size(); ++i)
                out.push_back(1 + leftmost_depth(&v.children[i]));
            for (auto& c : v.children) walk(c);
        }
    } r{out};
    r.walk(t);
    std::sort(out.begin(), out.end());
    return out;
}

inline bool all_downward_paths_even(const PlaneTree& t) {
    for (int len : downward_path_lengths(t))
        if (len % 2 != 0) return false;
    return true;
}

// Trees on k vertices all of whose downward paths have even length,
// enumerated by streaming over Dyck words of semilength k-1.
inline std::vector<PlaneTree> enumerate_even_downward_trees(int k) {
    if (k < 1) throw std::invalid_argument("enumerate_even_downward_trees: k must be >= 1");
    std::vector<PlaneTree> out;
    for (auto& w : enumerate_dyck_words(k - 1)) {
        PlaneTree t = unglove(w);
        if (all_downward_paths_even(t)) out.push_back(std::move(t));
    }
    return out;
}

// All ascents of even length except possibly the first.
inline bool even_ascents_except_first(const std::string& w) {
    std::vector<int> runs = ascent_lengths(w);
    for (size_t i = 1; i < runs.size(); ++i)
        if (runs[i] % 2 != 0) return false;
    return true;
}

// ---- the two-color bijection (1 = blue, 2 = white; rule [[1,1],[1,0]]) ----

namespace detail {

struct TauColored {
    int color;
    std::vector<TauColored*> children;
};

struct TauPlain {
    std::vector<TauPlain*> children;
    TauColored* vertex = nullptr;  // which colored vertex this node belongs to
    bool is_first = false;         // true for the pair's upper node
};

struct TauArena {
    std::deque<TauColored> colored;
    std::deque<TauPlain> plain;
    TauColored* make_colored(int color) {
        colored.push_back({color, {}});
        return &colored.back();
    }
    TauPlain* make_plain() {
        plain.emplace_back();
        return &plain.back();
    }
};

inline TauColored* build_colored(const PlaneTree& shape, const std::vector<int>& colors,
                                 size_t& idx, TauArena& A) {
    if (idx >= colors.size()) throw std::invalid_argument("colored tree: missing colors");
    TauColored* v = A.make_colored(colors[idx++]);
    for (auto& c : shape.children) v->children.push_back(build_colored(c, colors, idx, A));
    return v;
}

inline PlaneTree colored_shape(const TauColored* v, std::vector<int>& colors) {
    colors.push_back(v->color);
    PlaneTree t;
    for (auto* c : v->children) t.children.push_back(colored_shape(c, colors));
    return t;
}

inline PlaneTree plain_to_tree(const TauPlain* v) {
    PlaneTree t;
    for (auto* c : v->children) t.children.push_back(plain_to_tree(c));
    return t;
}

inline TauPlain* tree_to_plain(const PlaneTree& t, TauArena& A) {
    TauPlain* v = A.make_plain();
    for (auto& c : t.children) v->children.push_back(tree_to_plain(c, A));
    return v;
}

struct TauImage {
    TauPlain* root = nullptr;
    // vertex -> (upper node or null for a white root, lower node)
    std::map<const TauColored*, std::pair<TauPlain*, TauPlain*>> pairs;
};

// Each vertex v of T becomes an edge v1 -> v2 of the image.  v1 attaches
// under the parent pair by the three case rules; a white root contributes its
// v2 alone.
inline TauImage tau_core(TauColored* T, TauArena& A) {
    std::vector<TauColored*> order;
    std::map<const TauColored*, TauColored*> parent;
    struct W {
        std::vector<TauColored*>& order;
        std::map<const TauColored*, TauColored*>& parent;
        void walk(TauColored* v, TauColored* par) {
            order.push_back(v);
            parent[v] = par;
            for (auto* c : v->children) walk(c, v);
        }
    } w{order, parent};
    w.walk(T, nullptr);

    TauImage out;
    TauColored* root = order.front();
    if (root->color == 1) {
        TauPlain* r1 = A.make_plain();
        TauPlain* r2 = A.make_plain();
        r1->vertex = r2->vertex = root;
        r1->is_first = true;
        r1->children.push_back(r2);
        out.pairs[root] = {r1, r2};
        out.root = r1;
    } else {
        TauPlain* r2 = A.make_plain();
        r2->vertex = root;
        out.pairs[root] = {nullptr, r2};
        out.root = r2;
    }
    for (size_t k = 1; k < order.size(); ++k) {
        TauColored* v = order[k];
        TauColored* x = parent[v];
        TauPlain* v1 = A.make_plain();
        TauPlain* v2 = A.make_plain();
        v1->vertex = v2->vertex = v;
        v1->is_first = true;
        v1->children.push_back(v2);
        out.pairs[v] = {v1, v2};
        auto [x1, x2] = out.pairs[x];
        if ((v->color == 2) != (x->color == 2)) {
            x2->children.push_back(v1);
        } else {
            if (v->color == 2)
                throw std::invalid_argument("tau: adjacent white vertices");
            auto& sibs = x->children;
            size_t idx = size_t(std::find(sibs.begin(), sibs.end(), v) - sibs.begin());
            TauColored* nearest_white = nullptr;
            for (size_t s = idx; s-- > 0;)
                if (sibs[s]->color == 2) {
                    nearest_white = sibs[s];
                    break;
                }
            if (nearest_white)
                out.pairs[nearest_white].first->children.push_back(v1);
            else
                x1->children.push_back(v1);
        }
    }
    return out;
}

inline bool same_shape(const TauPlain* a, const TauPlain* b) {
    if (a->children.size() != b->children.size()) return false;
    for (size_t i = 0; i < a->children.size(); ++i)
        if (!same_shape(a->children[i], b->children[i])) return false;
    return true;
}

inline int plain_size(const TauPlain* v) {
    int n = 1;
    for (auto* c : v->children) n += plain_size(c);
    return n;
}

inline TauPlain* clone_without(const TauPlain* v, const TauPlain* drop, TauArena& A) {
    TauPlain* n = A.make_plain();
    for (auto* c : v->children) {
        if (c == drop) continue;
        n->children.push_back(clone_without(c, drop, A));
    }
    return n;
}

inline bool node_position(const TauPlain* v, const TauPlain* target, std::vector<int>& path) {
    if (v == target) return true;
    for (size_t i = 0; i < v->children.size(); ++i) {
        path.push_back(int(i));
        if (node_position(v->children[i], target, path)) return true;
        path.pop_back();
    }
    return false;
}

inline TauPlain* node_at_position(TauPlain* v, const std::vector<int>& path) {
    for (int i : path) v = v->children.at(size_t(i));
    return v;
}

inline TauColored* find_parent(TauColored* root, const TauColored* x) {
    std::vector<TauColored*> stack{root};
    while (!stack.empty()) {
        TauColored* v = stack.back();
        stack.pop_back();
        for (auto* c : v->children) {
            if (c == x) return v;
            stack.push_back(c);
        }
    }
    return nullptr;
}

// Inverse construction: delete the rightmost pair, recurse, and re-attach one
// vertex according to which pair member the deleted pair hung from.
inline TauColored* tau_inv_core(TauPlain* U, TauArena& A) {
    if (U->children.empty()) return A.make_colored(2);
    if (U->children.size() == 1 && plain_size(U) == 2) return A.make_colored(1);

    std::vector<TauPlain*> spine{U};
    while (!spine.back()->children.empty()) spine.push_back(spine.back()->children.back());
    if (spine.size() < 3) throw std::invalid_argument("tau_inv: input is not an image tree");
    TauPlain* v1 = spine[spine.size() - 2];
    TauPlain* y = spine[spine.size() - 3];
    if (v1->children.size() != 1)
        throw std::invalid_argument("tau_inv: input is not an image tree");

    TauPlain* smaller = clone_without(U, v1, A);
    TauColored* T = tau_inv_core(smaller, A);
    TauImage img = tau_core(T, A);
    if (!same_shape(img.root, smaller))
        throw std::logic_error("tau_inv: reconstruction mismatch");

    std::vector<int> pos;
    node_position(U, y, pos);
    TauPlain* ynode = node_at_position(img.root, pos);
    TauColored* x = ynode->vertex;
    if (!ynode->is_first) {
        x->children.push_back(A.make_colored(x->color == 1 ? 2 : 1));
    } else if (x->color == 1) {
        size_t at = x->children.size();
        for (size_t i = 0; i < x->children.size(); ++i)
            if (x->children[i]->color == 2) {
                at = i;
                break;
            }
        x->children.insert(x->children.begin() + long(at), A.make_colored(1));
    } else {
        TauColored* px = find_parent(T, x);
        if (!px) throw std::logic_error("tau_inv: detached white vertex");
        px->children.push_back(A.make_colored(1));
    }
    return T;
}

}  // namespace detail

inline PlaneTree tau(const ColoredTree& T) {
    detail::TauArena A;
    size_t idx = 0;
    detail::TauColored* root = detail::build_colored(T.shape, T.colors, idx, A);
    if (idx != T.colors.size()) throw std::invalid_argument("tau: too many colors");
    detail::TauImage img = detail::tau_core(root, A);
    return detail::plain_to_tree(img.root);
}

inline ColoredTree tau_inv(const PlaneTree& U) {
    if (!all_downward_paths_even(U))
        throw std::invalid_argument("tau_inv: a downward path has odd length");
    detail::TauArena A;
    detail::TauPlain* root = detail::tree_to_plain(U, A);
    detail::TauColored* T = detail::tau_inv_core(root, A);
    ColoredTree out;
    out.shape = detail::colored_shape(T, out.colors);
    return out;
}

// ---- the three-color composite ----

inline const Matrix& entry42_rule() {
    static const Matrix A = parse_matrix("110;100;010");
    return A;
}

// Recolor the root to 1, apply tau, delete the image root, read off the glove
// word of what remains.
inline std::string entry42_path(const ColoredTree& T) {
    if (T.colors.empty() || T.colors.front() != 3)
        throw std::invalid_argument("entry42_path: root color must be 3");
    FlatTree f = flatten(T.shape);
    if (!coloring_is_valid(entry42_rule(), f, T.colors))
        throw std::invalid_argument("entry42_path: coloring violates the rule");
    detail::TauArena A;
    std::vector<int> colors = T.colors;
    colors.front() = 1;
    size_t idx = 0;
    detail::TauColored* root = detail::build_colored(T.shape, colors, idx, A);
    detail::TauImage img = detail::tau_core(root, A);
    // The root's children are all white under this rule, so nothing attaches
    // beside the root's own lower node.
    if (img.root->children.size() != 1)
        throw std::logic_error("entry42_path: unexpected attachment at the image root");
    return glove(detail::plain_to_tree(img.root->children.front()));
}

inline ColoredTree entry42_inv(const std::string& word, int n) {
    detail::TauArena A;
    PlaneTree sub = unglove(word);
    detail::TauPlain* root = A.make_plain();
    root->children.push_back(detail::tree_to_plain(sub, A));
    detail::TauColored* T = detail::tau_inv_core(root, A);
    if (T->color != 1) throw std::invalid_argument("entry42_inv: word is not in the image");
    T->color = 3;
    ColoredTree out;
    out.shape = detail::colored_shape(T, out.colors);
    if (int(out.colors.size()) != n)
        throw std::invalid_argument("entry42_inv: vertex count mismatch");
    return out;
}

}  // namespace treecolor
