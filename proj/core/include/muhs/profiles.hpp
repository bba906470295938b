#pragma once

#include "muhs/grid.hpp"

#include <string>

namespace muhs {

// Right-hand-side / boundary-data profiles named by a compact text form:
//   exp:c         e^{-c x}
//   gaussian:c,x0 e^{-c (x - x0)^2}
//   const:v       v
//   poly:k        x^k e^{-x}
struct Profile {
    enum class Kind { exponential, gaussian, constant, power_exp };

    Kind kind = Kind::constant;
    double c = 0.0;
    double x0 = 0.0;
    double v = 0.0;
    double k = 0.0;

    static Profile parse(const std::string& text);
    double operator()(double x) const;
    std::string text() const;
};

// Samples a profile on the positive nodes of a grid.
GridFn sample_profile(const Profile& p, const HalfLineGrid& grid);

} // namespace muhs
