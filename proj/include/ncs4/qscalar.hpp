#pragma once

#include <complex>
#include <map>
#include <sstream>
#include <string>

#include "errors.hpp"
#include "rational.hpp"

namespace ncs4 {

/// Finite Laurent sum sum_n c_n q^n with Gaussian rational coefficients.
///
/// q is the formal deformation phase: generic-q semantics means q^n = 1
/// only for n = 0, which models an irrational deformation parameter.
/// Conjugation maps q^n -> q^-n and i -> -i because |q| = 1.
class QScalar {
public:
    QScalar() = default;
    QScalar(long n) { set(0, GRat(n)); }
    QScalar(const GRat& c) { set(0, c); }
    QScalar(const Rat& c) { set(0, GRat(c)); }

    /// c * q^n
    static QScalar q_power(int n, const GRat& c = GRat(1)) {
        QScalar s;
        s.set(n, c);
        return s;
    }

    static QScalar i() { return QScalar(GRat::i()); }

    const std::map<int, GRat>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == GRat(1); }

    /// True when the value is c*q^0 with c real rational.
    bool is_rational() const {
        if (terms_.empty()) return true;
        return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second.is_real();
    }

    /// The q^0 real part; exact only when is_rational().
    Rat rational_part() const {
        auto it = terms_.find(0);
        return it == terms_.end() ? Rat(0) : it->second.re;
    }

    GRat constant_part() const {
        auto it = terms_.find(0);
        return it == terms_.end() ? GRat() : it->second;
    }

    QScalar conj() const {
        QScalar r;
        for (const auto& [n, c] : terms_) r.terms_.emplace(-n, c.conj());
        return r;
    }

    bool is_real() const { return *this == conj(); }

    QScalar operator-() const {
        QScalar r;
        for (const auto& [n, c] : terms_) r.terms_.emplace(n, -c);
        return r;
    }

    QScalar operator+(const QScalar& o) const {
        QScalar r = *this;
        for (const auto& [n, c] : o.terms_) r.add(n, c);
        return r;
    }

    QScalar operator-(const QScalar& o) const {
        QScalar r = *this;
        for (const auto& [n, c] : o.terms_) r.add(n, -c);
        return r;
    }

    QScalar operator*(const QScalar& o) const {
        QScalar r;
        for (const auto& [n1, c1] : terms_)
            for (const auto& [n2, c2] : o.terms_) r.add(n1 + n2, c1 * c2);
        return r;
    }

    QScalar& operator+=(const QScalar& o) {
        for (const auto& [n, c] : o.terms_) add(n, c);
        return *this;
    }
    QScalar& operator-=(const QScalar& o) {
        for (const auto& [n, c] : o.terms_) add(n, -c);
        return *this;
    }
    QScalar& operator*=(const QScalar& o) {
        *this = *this * o;
        return *this;
    }

    /// Inverse of a single-term scalar c*q^n (the units of the Laurent ring).
    QScalar inv() const {
        if (terms_.size() != 1) throw NotAUnit("scalar is not a q-monomial");
        const auto& [n, c] = *terms_.begin();
        return q_power(-n, c.inv());
    }

    bool operator==(const QScalar& o) const { return terms_ == o.terms_; }
    bool operator!=(const QScalar& o) const { return !(*this == o); }

    /// Numeric specialization of the phase.
    std::complex<double> eval(std::complex<double> q_value) const {
        std::complex<double> acc = 0.0;
        for (const auto& [n, c] : terms_)
            acc += std::complex<double>(c.re.get_d(), c.im.get_d()) * std::pow(q_value, n);
        return acc;
    }

    void add(int n, const GRat& c) {
        auto it = terms_.find(n);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_.emplace(n, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [n, c] : terms_) {
            std::string cs = to_string(c);
            bool composite = cs.find('+') != std::string::npos ||
                             cs.find('-', 1) != std::string::npos;
            if (!first) os << " + ";
            if (n == 0) {
                os << cs;
            } else {
                if (composite)
                    os << "(" << cs << ")";
                else if (cs == "1")
                    ;
                else if (cs == "-1")
                    os << "-";
                else
                    os << cs << " ";
                os << "q^" << n;
            }
            first = false;
        }
        return os.str();
    }

private:
    void set(int n, const GRat& c) {
        if (!c.is_zero()) terms_[n] = c;
    }

    std::map<int, GRat> terms_; // no stored zero coefficients
};

inline QScalar operator*(const GRat& c, const QScalar& s) { return QScalar(c) * s; }
inline QScalar operator*(const Rat& c, const QScalar& s) { return QScalar(c) * s; }

} // namespace ncs4
