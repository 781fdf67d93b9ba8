#pragma once

#include <gmpxx.h>

#include <string>

namespace ncs4 {

/// Exact arbitrary-precision rational.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

/// Gaussian rational re + im*i. The coefficient field of the engine;
/// i is needed because X^2 = (Z - Z*)/2i.
struct GRat {
    Rat re, im;

    GRat() : re(0), im(0) {}
    GRat(const Rat& r) : re(r), im(0) {}
    GRat(const Rat& r, const Rat& i) : re(r), im(i) {}
    GRat(long r) : re(r), im(0) {}
    GRat(long num, long den) : re(rat(num, den)), im(0) {}

    static GRat i() { return GRat(Rat(0), Rat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GRat conj() const { return GRat(re, Rat(-im)); }

    GRat operator-() const { return GRat(Rat(-re), Rat(-im)); }

    GRat operator+(const GRat& o) const { return GRat(Rat(re + o.re), Rat(im + o.im)); }
    GRat operator-(const GRat& o) const { return GRat(Rat(re - o.re), Rat(im - o.im)); }
    GRat operator*(const GRat& o) const {
        return GRat(Rat(re * o.re - im * o.im), Rat(re * o.im + im * o.re));
    }

    GRat& operator+=(const GRat& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GRat& operator-=(const GRat& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GRat& operator*=(const GRat& o) {
        *this = *this * o;
        return *this;
    }

    /// Multiplicative inverse; requires a nonzero value.
    GRat inv() const {
        Rat n(re * re + im * im);
        return GRat(Rat(re / n), Rat(-im / n));
    }

    bool operator==(const GRat& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GRat& o) const { return !(*this == o); }
};

inline std::string to_string(const GRat& c) {
    if (c.im == 0) return c.re.get_str();
    if (c.re == 0) {
        if (c.im == 1) return "i";
        if (c.im == -1) return "-i";
        return c.im.get_str() + "i";
    }
    std::string s = c.re.get_str();
    if (c.im > 0) s += "+";
    if (c.im == 1)
        s += "i";
    else if (c.im == -1)
        s += "-i";
    else
        s += c.im.get_str() + "i";
    return s;
}

} // namespace ncs4
