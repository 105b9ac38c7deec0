#ifndef NPSPREAD_TEXT_IO_HPP
#define NPSPREAD_TEXT_IO_HPP

#include <ostream>
#include <string>

#include "npspread/monomial.hpp"
#include "npspread/polyhedral.hpp"

namespace npspread {

/// Exponent coordinate names: u, v, w for up to three variables, u1..un above.
std::string coordinate_name(std::size_t n, std::size_t i);

std::string format_linear(const QVector& normal, std::size_t n);

/// One constraint per line. Inequalities print as stored (<=) or negated (>=),
/// the usual orientation for Newton polyhedra.
std::string format_hrep(const HRep& h, bool ge_inequalities);
std::string format_vrep(const VRep& v);
std::string format_qvector(const QVector& v);

/// OFF mesh of the Newton polyhedron truncated to a bounding cube, with the
/// Newton polytope's 2-faces appended. Three variables only. Coordinates are
/// printed as decimals; this is figure output, not exact data.
void write_newton_off(std::ostream& out, const MonomialIdeal& ideal);

} // namespace npspread

#endif
