#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "penner/shift.hpp"

namespace penner {

/// Index of a vertex in the lexicographically sorted vertex list of a tree.
using VertexIndex = std::size_t;

struct Edge {
    std::string first;
    std::string second;
};

/// A grading override: s(first, second) = s, hence s(second, first) = n - s.
struct GradingOverride {
    Edge edge;
    long s = 1;
};

struct Neighbor {
    VertexIndex vertex;
    ShiftExpr s_out;  // s(v, vertex)
};

class Tree {
public:
    Tree(std::vector<std::string> vertices, const std::vector<Edge>& edges);

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(VertexIndex v) const { return names_.at(v); }
    std::optional<VertexIndex> find(const std::string& name) const;
    VertexIndex index_of(const std::string& name) const;  // throws UnknownVertex

    /// Sorted neighbor indices of v.
    const std::vector<VertexIndex>& neighbors(VertexIndex v) const { return adjacency_.at(v); }
    bool adjacent(VertexIndex v, VertexIndex w) const;
    std::size_t degree(VertexIndex v) const { return adjacency_.at(v).size(); }

    /// Edges as (smaller index, larger index), sorted.
    std::vector<std::pair<VertexIndex, VertexIndex>> edges() const;

private:
    std::vector<std::string> names_;
    std::vector<std::vector<VertexIndex>> adjacency_;
};

struct Bipartition {
    std::vector<VertexIndex> plus;
    std::vector<VertexIndex> minus;
    std::vector<int> sign;  // +1 / -1 per vertex

    bool is_plus(VertexIndex v) const { return sign.at(v) > 0; }
};

/// Proper 2-coloring with the lexicographically smallest vertex in plus.
Bipartition bipartition(const Tree& tree);

class GradingAssignment {
public:
    GradingAssignment(const Tree& tree, long n);

    long n() const { return n_; }
    ShiftExpr s(VertexIndex v, VertexIndex w) const;  // throws BadGrading on non-edges
    void set(VertexIndex v, VertexIndex w, long value);
    GradingAssignment at_dimension(long n) const {
        GradingAssignment g = *this;
        g.n_ = n;
        return g;
    }

    const std::vector<std::vector<Neighbor>>& adjacency() const { return adjacency_; }

private:
    long n_;
    std::vector<std::vector<Neighbor>> adjacency_;
};

/// The plumbing P_n(T): tree, dimension, bipartition and grading. Immutable.
class PlumbingSpec {
public:
    PlumbingSpec(Tree tree, long n, Bipartition parts, GradingAssignment grading)
        : tree_(std::move(tree)), n_(n), parts_(std::move(parts)), grading_(std::move(grading)) {}

    const Tree& tree() const { return tree_; }
    long n() const { return n_; }
    const Bipartition& parts() const { return parts_; }
    const GradingAssignment& grading() const { return grading_; }

    std::size_t size() const { return tree_.size(); }
    const std::vector<Neighbor>& neighbors(VertexIndex v) const { return grading_.adjacency().at(v); }
    ShiftExpr s(VertexIndex v, VertexIndex w) const { return grading_.s(v, w); }
    const std::string& name(VertexIndex v) const { return tree_.name(v); }
    VertexIndex index_of(const std::string& name) const { return tree_.index_of(name); }

    /// Same tree and grading constants, different dimension. Rechecks the grading range.
    PlumbingSpec with_dimension(long n) const;

private:
    Tree tree_;
    long n_;
    Bipartition parts_;
    GradingAssignment grading_;
};

PlumbingSpec build_plumbing(std::vector<std::string> vertices, const std::vector<Edge>& edges, long n,
                            const std::vector<GradingOverride>& overrides = {});

/// The unique simple path from v to w, endpoints included.
std::vector<VertexIndex> geometric_path(const PlumbingSpec& spec, VertexIndex v, VertexIndex w);
std::vector<VertexIndex> geometric_path(const PlumbingSpec& spec, const std::string& v, const std::string& w);

}  // namespace penner
