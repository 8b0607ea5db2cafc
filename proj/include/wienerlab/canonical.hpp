#pragma once

#include <string>

#include "wienerlab/graph.hpp"

namespace wienerlab {

/// Relabeling-invariant identification of an isomorphism class.
///
/// Two graphs on at most 32 vertices have equal byte strings exactly when
/// they are isomorphic; the automorphism group order falls out of the same
/// search.
struct CanonForm {
    std::string bytes;
    uindex_t aut_order = 1;

    bool operator==(const CanonForm& o) const { return bytes == o.bytes; }
};

/// Canonical form via iterative refinement by (degree, distance multiset)
/// with backtracking over the remaining non-singleton cells. n <= 32.
CanonForm canonical_form(const Graph& g);

/// Just the byte string, when the automorphism order is not needed.
std::string canonical_bytes(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

} // namespace wienerlab
