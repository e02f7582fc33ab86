#pragma once

#include <set>
#include <string>

#include "fvslab/plane_digraph.hpp"

namespace fvslab {

// Tutte-style straight-line drawing of the embedding: the outer face pinned
// on a circle, interior vertices iteratively averaged. Cosmetic and
// deterministic (fixed iteration count, fixed formatting). Arcs listed in
// `highlight` get a distinct stroke class.
std::string dump_svg(const PlaneDigraph& g, const std::set<int>& highlight = {});

}  // namespace fvslab
