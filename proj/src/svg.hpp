#ifndef TDA_SVG_HPP
#define TDA_SVG_HPP

#include <string>

#include "persistence.hpp"

namespace tda {

// Horizontal bars stacked by dimension; H_0 black, H_1 red, H_2 blue.
// Infinite bars run to 1.05 * epsilon_max and end in an arrow head.
std::string barcode_to_svg(const Barcode& bc);

// Scatter of (birth, death) above the diagonal; infinite deaths are drawn
// at 1.05 * epsilon_max with a triangle marker.
std::string diagram_to_svg(const Barcode& bc);

} // namespace tda

#endif
