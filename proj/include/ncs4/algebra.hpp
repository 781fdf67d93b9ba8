#pragma once

#include <algorithm>
#include <compare>
#include <complex>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "errors.hpp"
#include "qscalar.hpp"

namespace ncs4 {

/// Exponent tuple of a normal-form basis monomial Z^j (Z*)^k W^l (W*)^m T^eps.
/// eps is 0 or 1: T^2 is always reduced via T^2 = 1 - ZZ* - WW*.
struct MultiIndex {
    int j = 0, k = 0, l = 0, m = 0, eps = 0;

    auto operator<=>(const MultiIndex&) const = default;

    int degree() const { return j + k + l + m; }
    bool is_central() const { return j == k && l == m; }
    bool is_valid() const { return j >= 0 && k >= 0 && l >= 0 && m >= 0 && (eps == 0 || eps == 1); }
};

inline std::string to_string(const MultiIndex& I) {
    std::ostringstream os;
    os << "(" << I.j << "," << I.k << "," << I.l << "," << I.m << "," << I.eps << ")";
    return os.str();
}

/// Coordinates on the chart U0 (all ranges open).
struct ChartPoint {
    double xi1 = 1.0;  // (0, 2*pi)
    double xi2 = 1.0;  // (0, 2*pi)
    double phi = 0.7;  // (0, pi/2)
    double psi = 0.2;  // (-pi/2, pi/2)
};

/// The central factors with formal inverses in the localization.
enum class CentralFactor { AbsZ2, AbsW2, OneMinusT2, OnePlusT2 };

class AlgebraElement;
inline AlgebraElement basis_product(const MultiIndex& i1, const MultiIndex& i2);

/// Element of the deformed 4-sphere algebra in the unique normal form
/// a = sum_I a_I e^I over the basis e^I = Z^j (Z*)^k W^l (W*)^m T^eps.
class AlgebraElement {
public:
    AlgebraElement() = default;

    static AlgebraElement zero() { return AlgebraElement(); }
    static AlgebraElement one() { return monomial({0, 0, 0, 0, 0}); }

    static AlgebraElement monomial(const MultiIndex& I, const QScalar& c = QScalar(1)) {
        AlgebraElement a;
        a.add_term(I, c);
        return a;
    }

    static AlgebraElement scalar(const QScalar& c) { return monomial({0, 0, 0, 0, 0}, c); }

    // Generators and derived elements.
    static AlgebraElement Z() { return monomial({1, 0, 0, 0, 0}); }
    static AlgebraElement Zs() { return monomial({0, 1, 0, 0, 0}); }
    static AlgebraElement W() { return monomial({0, 0, 1, 0, 0}); }
    static AlgebraElement Ws() { return monomial({0, 0, 0, 1, 0}); }
    static AlgebraElement T() { return monomial({0, 0, 0, 0, 1}); }
    static AlgebraElement absZ2() { return monomial({1, 1, 0, 0, 0}); }
    static AlgebraElement absW2() { return monomial({0, 0, 1, 1, 0}); }
    static AlgebraElement one_minus_T2() { return absZ2() + absW2(); }
    static AlgebraElement one_plus_T2() { return scalar(QScalar(2)) - absZ2() - absW2(); }

    /// The hermitian coordinates X^1..X^5 with sum of squares equal to 1.
    static AlgebraElement X(int i) {
        const GRat half(1, 2);
        const GRat half_over_i = GRat(Rat(0), rat(-1, 2)); // 1/(2i) = -i/2
        switch (i) {
            case 1: return half * (Z() + Zs());
            case 2: return half_over_i * (Z() - Zs());
            case 3: return half * (W() + Ws());
            case 4: return half_over_i * (W() - Ws());
            case 5: return T();
        }
        throw Error("X index out of range");
    }

    static AlgebraElement factor(CentralFactor f) {
        switch (f) {
            case CentralFactor::AbsZ2: return absZ2();
            case CentralFactor::AbsW2: return absW2();
            case CentralFactor::OneMinusT2: return one_minus_T2();
            case CentralFactor::OnePlusT2: return one_plus_T2();
        }
        throw Error("bad central factor");
    }

    const std::map<MultiIndex, QScalar>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    QScalar coeff(const MultiIndex& I) const {
        auto it = terms_.find(I);
        return it == terms_.end() ? QScalar() : it->second;
    }

    int degree() const {
        int d = 0;
        for (const auto& [I, c] : terms_) d = std::max(d, I.degree());
        return d;
    }

    AlgebraElement operator-() const {
        AlgebraElement r;
        for (const auto& [I, c] : terms_) r.terms_.emplace(I, -c);
        return r;
    }

    AlgebraElement operator+(const AlgebraElement& o) const {
        AlgebraElement r = *this;
        for (const auto& [I, c] : o.terms_) r.add_term(I, c);
        return r;
    }

    AlgebraElement operator-(const AlgebraElement& o) const {
        AlgebraElement r = *this;
        for (const auto& [I, c] : o.terms_) r.add_term(I, -c);
        return r;
    }

    AlgebraElement& operator+=(const AlgebraElement& o) {
        for (const auto& [I, c] : o.terms_) add_term(I, c);
        return *this;
    }

    AlgebraElement& operator-=(const AlgebraElement& o) {
        for (const auto& [I, c] : o.terms_) add_term(I, -c);
        return *this;
    }

    /// Distributive bilinear extension of the basis product.
    AlgebraElement operator*(const AlgebraElement& o) const {
        AlgebraElement r;
        for (const auto& [I1, c1] : terms_)
            for (const auto& [I2, c2] : o.terms_) {
                QScalar c = c1 * c2;
                for (const auto& [J, cq] : basis_product(I1, I2).terms()) r.add_term(J, c * cq);
            }
        return r;
    }

    AlgebraElement& operator*=(const AlgebraElement& o) {
        *this = *this * o;
        return *this;
    }

    friend AlgebraElement operator*(const QScalar& c, const AlgebraElement& a) {
        AlgebraElement r;
        for (const auto& [I, ci] : a.terms_) r.add_term(I, c * ci);
        return r;
    }
    friend AlgebraElement operator*(const GRat& c, const AlgebraElement& a) { return QScalar(c) * a; }
    friend AlgebraElement operator*(const Rat& c, const AlgebraElement& a) { return QScalar(c) * a; }

    bool operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

    /// The star involution: (e^{(j,k,l,m,eps)})* = q^{(j-k)(l-m)} e^{(k,j,m,l,eps)}.
    AlgebraElement star() const {
        AlgebraElement r;
        for (const auto& [I, c] : terms_) {
            MultiIndex J{I.k, I.j, I.m, I.l, I.eps};
            r.add_term(J, QScalar::q_power((I.j - I.k) * (I.l - I.m)) * c.conj());
        }
        return r;
    }

    bool is_hermitian() const { return *this == star(); }

    /// Under generic q, a is central iff every term has j = k and l = m.
    bool is_central() const {
        return std::all_of(terms_.begin(), terms_.end(),
                           [](const auto& t) { return t.first.is_central(); });
    }

    /// Coefficients a_{i1,i2,eps} of a = sum a (|Z|^2)^{i1} (|W|^2)^{i2} T^eps.
    std::map<std::tuple<int, int, int>, QScalar> center_decompose() const {
        std::map<std::tuple<int, int, int>, QScalar> out;
        for (const auto& [I, c] : terms_) {
            if (!I.is_central()) throw NotCentral("center_decompose: term " + to_string(I));
            out[{I.j, I.l, I.eps}] = c;
        }
        return out;
    }

    AlgebraElement pow(int n) const {
        if (n < 0) throw Error("AlgebraElement::pow: negative exponent");
        AlgebraElement r = one();
        AlgebraElement base = *this;
        while (n > 0) {
            if (n & 1) r *= base;
            base *= base;
            n >>= 1;
        }
        return r;
    }

    /// Term-by-term evaluation of the chart representation with the
    /// deformation phase specialized to q_value.
    std::complex<double> classical_eval(const ChartPoint& p,
                                        std::complex<double> q_value = 1.0) const {
        using cd = std::complex<double>;
        const double cphi = std::cos(p.phi), sphi = std::sin(p.phi);
        const double cpsi = std::cos(p.psi), spsi = std::sin(p.psi);
        cd acc = 0.0;
        for (const auto& [I, c] : terms_) {
            cd v = std::exp(cd(0, (I.j - I.k) * p.xi1)) * std::pow(cphi * cpsi, I.j + I.k) *
                   std::exp(cd(0, (I.l - I.m) * p.xi2)) * std::pow(sphi * cpsi, I.l + I.m);
            if (I.eps) v *= spsi;
            acc += c.eval(q_value) * v;
        }
        return acc;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [I, c] : terms_) {
            if (!first) os << " + ";
            std::string cs = c.str();
            std::string ms = monomial_str(I);
            if (ms.empty()) {
                os << cs;
            } else if (cs == "1") {
                os << ms;
            } else if (cs == "-1") {
                os << "-" << ms;
            } else {
                bool composite = cs.find('+') != std::string::npos ||
                                 cs.find('-', 1) != std::string::npos || cs.find("q^") != std::string::npos;
                if (composite)
                    os << "(" << cs << ")";
                else
                    os << cs;
                os << " " << ms;
            }
            first = false;
        }
        return os.str();
    }

    void add_term(const MultiIndex& I, const QScalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(I);
        if (it == terms_.end()) {
            terms_.emplace(I, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

private:
    static std::string monomial_str(const MultiIndex& I) {
        std::ostringstream os;
        auto put = [&os](const char* g, int e) {
            if (e == 0) return;
            os << g;
            if (e > 1) os << "^" << e;
            os << " ";
        };
        put("Z", I.j);
        put("Z*", I.k);
        put("W", I.l);
        put("W*", I.m);
        put("T", I.eps);
        std::string s = os.str();
        if (!s.empty() && s.back() == ' ') s.pop_back();
        return s;
    }

    std::map<MultiIndex, QScalar> terms_; // no stored zero coefficients
};

/// Product of two basis monomials. For eps1 + eps2 = 2 the excess power of T
/// is reduced with T^2 = 1 - |Z|^2 - |W|^2.
inline AlgebraElement basis_product(const MultiIndex& i1, const MultiIndex& i2) {
    const QScalar phase = QScalar::q_power((i1.l - i1.m) * (i2.j - i2.k));
    const int j = i1.j + i2.j, k = i1.k + i2.k, l = i1.l + i2.l, m = i1.m + i2.m;
    const int e = i1.eps + i2.eps;
    AlgebraElement r;
    if (e <= 1) {
        r.add_term({j, k, l, m, e}, phase);
    } else {
        r.add_term({j, k, l, m, 0}, phase);
        r.add_term({j + 1, k + 1, l, m, 0}, -phase);
        r.add_term({j, k, l + 1, m + 1, 0}, -phase);
    }
    return r;
}

inline AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b) {
    return a * b - b * a;
}

namespace detail {

/// Exact division by |Z|^2 (resp. |W|^2): a pure index shift, possible iff
/// every term has j,k >= 1 (resp. l,m >= 1).
inline std::optional<AlgebraElement> divide_shift(const AlgebraElement& a, bool z_factor) {
    AlgebraElement x;
    for (const auto& [I, c] : a.terms()) {
        MultiIndex J = I;
        if (z_factor) {
            if (I.j < 1 || I.k < 1) return std::nullopt;
            --J.j;
            --J.k;
        } else {
            if (I.l < 1 || I.m < 1) return std::nullopt;
            --J.l;
            --J.m;
        }
        x.add_term(J, c);
    }
    return x;
}

/// Exact division by 1 - T^2 = |Z|^2 + |W|^2. The candidate quotient is given
/// termwise by the alternating diagonal sum
///   x_I = sum_{i=0}^{min(l,m)} (-1)^i a_{(j+1+i, k+1+i, l-i, m-i, eps)}
/// and is certified by multiplying back.
inline std::optional<AlgebraElement> divide_one_minus_T2(const AlgebraElement& a) {
    if (a.is_zero()) return AlgebraElement::zero();
    std::set<MultiIndex> candidates;
    for (const auto& [J, c] : a.terms()) {
        if (J.j >= 1 && J.k >= 1) candidates.insert({J.j - 1, J.k - 1, J.l, J.m, J.eps});
        if (J.l >= 1 && J.m >= 1) candidates.insert({J.j, J.k, J.l - 1, J.m - 1, J.eps});
    }
    AlgebraElement x;
    for (const MultiIndex& I : candidates) {
        QScalar v;
        const int n = std::min(I.l, I.m);
        for (int i = 0; i <= n; ++i) {
            QScalar t = a.coeff({I.j + 1 + i, I.k + 1 + i, I.l - i, I.m - i, I.eps});
            v += (i % 2 == 0) ? t : -t;
        }
        x.add_term(I, v);
    }
    if (AlgebraElement::one_minus_T2() * x != a) return std::nullopt;
    return x;
}

/// Exact division by 1 + T^2 = 2 - |Z|^2 - |W|^2 via the degree-induction
/// recurrence x_I = (a_I + x_{I-1_Z} + x_{I-1_W}) / 2, certified by
/// multiplying back. The same recurrence with a = 0 forces x = 0, which
/// establishes regularity of 1 + T^2.
inline std::optional<AlgebraElement> divide_one_plus_T2(const AlgebraElement& a) {
    if (a.is_zero()) return AlgebraElement::zero();
    const int max_deg = a.degree() - 2;
    // Upward closure of supp(a) under +1_Z / +1_W, capped at max_deg.
    std::set<MultiIndex> candidates;
    std::vector<MultiIndex> frontier;
    for (const auto& [I, c] : a.terms())
        if (I.degree() <= max_deg && candidates.insert(I).second) frontier.push_back(I);
    while (!frontier.empty()) {
        MultiIndex I = frontier.back();
        frontier.pop_back();
        if (I.degree() + 2 > max_deg) continue;
        MultiIndex up_z{I.j + 1, I.k + 1, I.l, I.m, I.eps};
        MultiIndex up_w{I.j, I.k, I.l + 1, I.m + 1, I.eps};
        if (candidates.insert(up_z).second) frontier.push_back(up_z);
        if (candidates.insert(up_w).second) frontier.push_back(up_w);
    }
    std::vector<MultiIndex> order(candidates.begin(), candidates.end());
    std::sort(order.begin(), order.end(),
              [](const MultiIndex& x, const MultiIndex& y) { return x.degree() < y.degree(); });
    const GRat half(1, 2);
    AlgebraElement x;
    for (const MultiIndex& I : order) {
        QScalar v = a.coeff(I);
        if (I.j >= 1 && I.k >= 1) v += x.coeff({I.j - 1, I.k - 1, I.l, I.m, I.eps});
        if (I.l >= 1 && I.m >= 1) v += x.coeff({I.j, I.k, I.l - 1, I.m - 1, I.eps});
        x.add_term(I, QScalar(half) * v);
    }
    if (AlgebraElement::one_plus_T2() * x != a) return std::nullopt;
    return x;
}

} // namespace detail

/// Exact division of a by a central factor; nullopt when not divisible.
/// The result x always satisfies factor * x = a.
inline std::optional<AlgebraElement> try_divide_central(const AlgebraElement& a, CentralFactor f) {
    switch (f) {
        case CentralFactor::AbsZ2: return detail::divide_shift(a, true);
        case CentralFactor::AbsW2: return detail::divide_shift(a, false);
        case CentralFactor::OneMinusT2: return detail::divide_one_minus_T2(a);
        case CentralFactor::OnePlusT2: return detail::divide_one_plus_T2(a);
    }
    throw Error("bad central factor");
}

/// Throwing variant of try_divide_central.
inline AlgebraElement divide_central(const AlgebraElement& a, CentralFactor f) {
    auto x = try_divide_central(a, f);
    if (!x) throw NotDivisible();
    return *x;
}

} // namespace ncs4
