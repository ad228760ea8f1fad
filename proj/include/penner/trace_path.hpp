#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "penner/plumbing.hpp"

namespace penner {

/// Provenance of a cocore component. vertices are in creation order
/// (vertices[0] is the source cocore); indices[i] is the 1-based position in
/// the expanded word at which vertices[i+1] was spawned from vertices[i].
struct TracePath {
    std::vector<VertexIndex> vertices;
    std::vector<std::size_t> indices;

    VertexIndex source() const { return vertices.front(); }
    VertexIndex terminal() const { return vertices.back(); }

    auto operator<=>(const TracePath&) const = default;
    bool operator==(const TracePath&) const = default;
};

/// Display form, terminal vertex first: "[1,1,2,3]".
std::string format_trace(const TracePath& trace, const PlumbingSpec& spec);

}  // namespace penner
