#pragma once

#include "muhs/grid.hpp"
#include "muhs/solvers.hpp"

#include <iosfwd>
#include <string>

namespace muhs {

// Shell-safe complex literal: "RE" when the imaginary part is zero,
// otherwise "RE+IMi" / "RE-IMi" with no spaces.
std::string format_complex(cplx z);
cplx parse_complex(const std::string& text);

// CSV with header `x,re,im`, 17 significant digits per field.
void write_gridfn_csv(std::ostream& os, const GridFn& fn);
void write_gridfn_csv(const std::string& path, const GridFn& fn);

// Half-plane samples as a pair of matrices (row = tangential index,
// column = normal index), one file for the real part and one for the
// imaginary part.
void write_halfplane_csv(const std::string& path_re, const std::string& path_im,
                         const HalfPlaneField& field);

} // namespace muhs
