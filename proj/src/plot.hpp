#pragma once

#include <string>

#include "document.hpp"

namespace hudg {

// Renders any document as a self-contained SVG 1.1 image: arrangements and
// euclidean realizations in the plane, hyperbolic realizations in the Klein
// disk (hyperbolic circles sampled at 64 boundary points), graphs on a
// circular layout, descriptions as a sign-vector table.  Read-only: never
// alters or re-judges the payload.
std::string plot_document(const Document& doc);

}  // namespace hudg
