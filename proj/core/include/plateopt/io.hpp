#pragma once

#include "plateopt/field.hpp"

#include <iosfwd>
#include <string>

namespace plateopt {

/**
 * Flat CSV format for grid functions. One header line identifying the grid,
 *   radial,<R>,<N>
 *   cartesian,<Lx>,<Ly>,<nx>,<ny>
 * followed by one node value per line. Numbers are written as shortest
 * round-trip decimals, so save/load is bit-exact.
 */
void save_csv(const GridFunction& f, std::ostream& out);
void save_csv(const GridFunction& f, const std::string& path);

GridFunction load_csv(std::istream& in);
GridFunction load_csv(const std::string& path);

/// Shortest round-trip decimal representation of a double.
std::string format_double(double v);

} // namespace plateopt
