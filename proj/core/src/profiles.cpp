#include "muhs/profiles.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace muhs {

namespace {

double parse_number(const std::string& s, const std::string& whole) {
    try {
        size_t pos = 0;
        double val = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("trailing characters");
        return val;
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed profile '" + whole + "'");
    }
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

} // namespace

Profile Profile::parse(const std::string& text) {
    auto colon = text.find(':');
    std::string name = text.substr(0, colon);
    std::string args = colon == std::string::npos ? "" : text.substr(colon + 1);

    Profile p;
    if (name == "exp") {
        p.kind = Kind::exponential;
        p.c = parse_number(args, text);
    } else if (name == "gaussian") {
        auto comma = args.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("malformed profile '" + text + "'");
        p.kind = Kind::gaussian;
        p.c = parse_number(args.substr(0, comma), text);
        p.x0 = parse_number(args.substr(comma + 1), text);
    } else if (name == "const") {
        p.kind = Kind::constant;
        p.v = parse_number(args, text);
    } else if (name == "poly") {
        p.kind = Kind::power_exp;
        p.k = parse_number(args, text);
        if (p.k < 0.0)
            throw std::invalid_argument("malformed profile '" + text + "': power must be >= 0");
    } else {
        throw std::invalid_argument("unknown profile '" + text + "'");
    }
    return p;
}

double Profile::operator()(double x) const {
    switch (kind) {
    case Kind::exponential: return std::exp(-c * x);
    case Kind::gaussian: return std::exp(-c * (x - x0) * (x - x0));
    case Kind::constant: return v;
    case Kind::power_exp:
        if (x <= 0.0) return k == 0.0 ? std::exp(-x) : 0.0;
        return std::pow(x, k) * std::exp(-x);
    }
    return 0.0;
}

std::string Profile::text() const {
    switch (kind) {
    case Kind::exponential: return "exp:" + fmt(c);
    case Kind::gaussian: return "gaussian:" + fmt(c) + "," + fmt(x0);
    case Kind::constant: return "const:" + fmt(v);
    case Kind::power_exp: return "poly:" + fmt(k);
    }
    return "";
}

GridFn sample_profile(const Profile& p, const HalfLineGrid& grid) {
    std::vector<cplx> vals(grid.n);
    for (int i = 0; i < grid.n; ++i) vals[i] = cplx(p(grid.x(i)), 0.0);
    return GridFn(grid, GridFn::Support::plus, std::move(vals));
}

} // namespace muhs
