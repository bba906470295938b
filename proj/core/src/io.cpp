#include "muhs/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

namespace muhs {

std::string format_complex(cplx z) {
    char buf[80];
    if (z.imag() == 0.0) {
        std::snprintf(buf, sizeof(buf), "%.15g", z.real());
    } else {
        std::snprintf(buf, sizeof(buf), "%.15g%+.15gi", z.real(), z.imag());
    }
    return buf;
}

cplx parse_complex(const std::string& text) {
    auto fail = [&]() -> cplx {
        throw std::invalid_argument("malformed complex literal '" + text + "'");
    };
    if (text.empty()) return fail();

    auto to_double = [&](const std::string& s) {
        size_t pos = 0;
        double v;
        try {
            v = std::stod(s, &pos);
        } catch (const std::exception&) {
            fail();
            return 0.0;
        }
        if (pos != s.size()) fail();
        return v;
    };

    std::string body = text;
    bool has_i = body.back() == 'i' || body.back() == 'I';
    if (has_i) body.pop_back();

    // split at the last +/- that is not an exponent sign and not leading
    size_t split = std::string::npos;
    for (size_t i = body.size(); i-- > 1;) {
        char c = body[i];
        if ((c == '+' || c == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    }

    if (!has_i) {
        if (split != std::string::npos) {
            // something like "1+2" without the i suffix
            return fail();
        }
        return cplx(to_double(body), 0.0);
    }
    if (split == std::string::npos) {
        // pure imaginary "0.5i" / "i" / "-i"
        if (body.empty() || body == "+" || body == "-")
            return cplx(0.0, body == "-" ? -1.0 : 1.0);
        return cplx(0.0, to_double(body));
    }
    std::string re = body.substr(0, split);
    std::string im = body.substr(split);
    if (im == "+" || im == "-") return cplx(to_double(re), im == "-" ? -1.0 : 1.0);
    return cplx(to_double(re), to_double(im));
}

namespace {
void write_rows(std::ostream& os, const GridFn& fn) {
    os << "x,re,im\n";
    char buf[128];
    for (size_t i = 0; i < fn.values.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n",
                      fn.x(static_cast<int>(i)), fn.values[i].real(),
                      fn.values[i].imag());
        os << buf;
    }
}
} // namespace

void write_gridfn_csv(std::ostream& os, const GridFn& fn) { write_rows(os, fn); }

void write_gridfn_csv(const std::string& path, const GridFn& fn) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
    write_rows(os, fn);
}

void write_halfplane_csv(const std::string& path_re, const std::string& path_im,
                         const HalfPlaneField& field) {
    std::ofstream re(path_re), im(path_im);
    if (!re || !im)
        throw std::runtime_error("cannot open half-plane output files for writing");
    char buf[64];
    const int m = field.grid.m, n = field.grid.normal.n;
    for (int i = 0; i < m; ++i) {
        for (int k = 0; k < n; ++k) {
            const cplx& v = field.at(i, k);
            std::snprintf(buf, sizeof(buf), "%.17g", v.real());
            re << buf << (k + 1 < n ? "," : "\n");
            std::snprintf(buf, sizeof(buf), "%.17g", v.imag());
            im << buf << (k + 1 < n ? "," : "\n");
        }
    }
}

} // namespace muhs
