#include "penner/plumbing.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "penner/errors.hpp"

namespace penner {

Tree::Tree(std::vector<std::string> vertices, const std::vector<Edge>& edges) : names_(std::move(vertices)) {
    std::sort(names_.begin(), names_.end());
    if (names_.empty()) throw Error(ErrorCode::NotATree, "a tree needs at least one vertex");
    if (std::adjacent_find(names_.begin(), names_.end()) != names_.end()) {
        throw Error(ErrorCode::NotATree, "duplicate vertex identifier");
    }
    adjacency_.resize(names_.size());
    std::set<std::pair<VertexIndex, VertexIndex>> seen;
    for (const auto& e : edges) {
        auto a = find(e.first);
        auto b = find(e.second);
        if (!a || !b) {
            throw Error(ErrorCode::NotATree, "edge {" + e.first + "," + e.second + "} uses an undeclared vertex");
        }
        if (*a == *b) throw Error(ErrorCode::NotATree, "self-loop at " + e.first);
        auto key = std::minmax(*a, *b);
        if (!seen.insert(key).second) {
            throw Error(ErrorCode::NotATree, "duplicate edge {" + e.first + "," + e.second + "}");
        }
        adjacency_[*a].push_back(*b);
        adjacency_[*b].push_back(*a);
    }
    for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());

    if (edges.size() + 1 != names_.size()) {
        throw Error(ErrorCode::NotATree, "expected " + std::to_string(names_.size() - 1) + " edges, got " +
                                             std::to_string(edges.size()));
    }
    std::vector<bool> reached(names_.size(), false);
    std::deque<VertexIndex> queue{0};
    reached[0] = true;
    std::size_t count = 1;
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        for (auto w : adjacency_[v]) {
            if (!reached[w]) {
                reached[w] = true;
                ++count;
                queue.push_back(w);
            }
        }
    }
    if (count != names_.size()) throw Error(ErrorCode::NotATree, "graph is disconnected");
}

std::optional<VertexIndex> Tree::find(const std::string& name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name) return std::nullopt;
    return static_cast<VertexIndex>(it - names_.begin());
}

VertexIndex Tree::index_of(const std::string& name) const {
    if (auto v = find(name)) return *v;
    throw Error(ErrorCode::UnknownVertex, "no vertex named '" + name + "'");
}

bool Tree::adjacent(VertexIndex v, VertexIndex w) const {
    const auto& nb = adjacency_.at(v);
    return std::binary_search(nb.begin(), nb.end(), w);
}

std::vector<std::pair<VertexIndex, VertexIndex>> Tree::edges() const {
    std::vector<std::pair<VertexIndex, VertexIndex>> out;
    for (VertexIndex v = 0; v < adjacency_.size(); ++v) {
        for (auto w : adjacency_[v]) {
            if (v < w) out.emplace_back(v, w);
        }
    }
    return out;
}

Bipartition bipartition(const Tree& tree) {
    Bipartition parts;
    parts.sign.assign(tree.size(), 0);
    std::deque<VertexIndex> queue{0};
    parts.sign[0] = 1;
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        for (auto w : tree.neighbors(v)) {
            if (parts.sign[w] == 0) {
                parts.sign[w] = -parts.sign[v];
                queue.push_back(w);
            }
        }
    }
    for (VertexIndex v = 0; v < tree.size(); ++v) {
        (parts.sign[v] > 0 ? parts.plus : parts.minus).push_back(v);
    }
    return parts;
}

GradingAssignment::GradingAssignment(const Tree& tree, long n) : n_(n), adjacency_(tree.size()) {
    for (VertexIndex v = 0; v < tree.size(); ++v) {
        for (auto w : tree.neighbors(v)) {
            // default: s(smaller, larger) = 1, s(larger, smaller) = n - 1
            ShiftExpr s = v < w ? ShiftExpr::constant(1) : ShiftExpr{-1, 1};
            adjacency_[v].push_back({w, s});
        }
    }
}

ShiftExpr GradingAssignment::s(VertexIndex v, VertexIndex w) const {
    for (const auto& nb : adjacency_.at(v)) {
        if (nb.vertex == w) return nb.s_out;
    }
    throw Error(ErrorCode::BadGrading, "no edge between vertices " + std::to_string(v) + " and " + std::to_string(w));
}

void GradingAssignment::set(VertexIndex v, VertexIndex w, long value) {
    if (value < 1 || value > n_ - 1) {
        throw Error(ErrorCode::BadGrading,
                    "grading value " + std::to_string(value) + " outside {1,...," + std::to_string(n_ - 1) + "}");
    }
    bool found = false;
    for (auto& nb : adjacency_.at(v)) {
        if (nb.vertex == w) {
            nb.s_out = ShiftExpr::constant(value);
            found = true;
        }
    }
    for (auto& nb : adjacency_.at(w)) {
        if (nb.vertex == v) nb.s_out = ShiftExpr{-value, 1};
    }
    if (!found) throw Error(ErrorCode::BadGrading, "grading override on a non-edge");
}

namespace {

void check_dimension(long n) {
    if (n < 3) throw Error(ErrorCode::DimensionTooSmall, "n = " + std::to_string(n) + " but n >= 3 is required");
}

void check_grading_range(const GradingAssignment& g, long n) {
    for (const auto& row : g.adjacency()) {
        for (const auto& nb : row) {
            auto value = nb.s_out.eval(n);
            if (value < 1 || value > n - 1) {
                throw Error(ErrorCode::BadGrading, "grading value " + std::to_string(value) + " invalid at n = " +
                                                       std::to_string(n));
            }
        }
    }
}

}  // namespace

PlumbingSpec PlumbingSpec::with_dimension(long n) const {
    check_dimension(n);
    check_grading_range(grading_, n);
    return PlumbingSpec(tree_, n, parts_, grading_.at_dimension(n));
}

PlumbingSpec build_plumbing(std::vector<std::string> vertices, const std::vector<Edge>& edges, long n,
                            const std::vector<GradingOverride>& overrides) {
    check_dimension(n);
    Tree tree(std::move(vertices), edges);
    GradingAssignment grading(tree, n);
    for (const auto& o : overrides) {
        auto a = tree.find(o.edge.first);
        auto b = tree.find(o.edge.second);
        if (!a || !b || !tree.adjacent(*a, *b)) {
            throw Error(ErrorCode::BadGrading,
                        "grading override on non-edge {" + o.edge.first + "," + o.edge.second + "}");
        }
        grading.set(*a, *b, o.s);
    }
    auto parts = bipartition(tree);
    return PlumbingSpec(std::move(tree), n, std::move(parts), std::move(grading));
}

std::vector<VertexIndex> geometric_path(const PlumbingSpec& spec, VertexIndex v, VertexIndex w) {
    const auto& tree = spec.tree();
    if (v >= tree.size() || w >= tree.size()) throw Error(ErrorCode::UnknownVertex, "vertex index out of range");
    std::vector<VertexIndex> parent(tree.size(), tree.size());
    std::deque<VertexIndex> queue{w};
    parent[w] = w;
    while (!queue.empty()) {
        auto x = queue.front();
        queue.pop_front();
        if (x == v) break;
        for (auto y : tree.neighbors(x)) {
            if (parent[y] == tree.size()) {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    std::vector<VertexIndex> path{v};
    while (path.back() != w) path.push_back(parent[path.back()]);
    return path;
}

std::vector<VertexIndex> geometric_path(const PlumbingSpec& spec, const std::string& v, const std::string& w) {
    return geometric_path(spec, spec.index_of(v), spec.index_of(w));
}

}  // namespace penner
