#pragma once

#include <string>

#include "a22/dyck.hpp"
#include "a22/nondec.hpp"

namespace a22::render {

// ASCII: one character per edge. Path edges draw as '_' and '|'; selected
// S1 edges as '=' and S2 edges as '!'. Rows print top to bottom.
std::string pair_ascii(const dyck::CompatiblePair& sel);

// SVG: lattice grid, diagonal, path, with S1/S2 edges highlighted.
std::string pair_svg(const dyck::CompatiblePair& sel);

// ASCII: the step word, one character per step ('/' up, '\' down).
std::string path_ascii(const nondec::NonDecPath& p);

// SVG: grid, step polyline, valley markers.
std::string path_svg(const nondec::NonDecPath& p);

}  // namespace a22::render
