#include "weiercount/qseries.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace weiercount {

QSeries::QSeries(long lowest_exponent, std::vector<Rational> coeffs)
    : low_(lowest_exponent), coeffs_(std::move(coeffs)) {}

QSeries QSeries::zero(long truncation_order) {
    return QSeries(truncation_order, {});
}

QSeries QSeries::constant(const Rational& c, long truncation_order) {
    return monomial(c, 0, truncation_order);
}

QSeries QSeries::monomial(const Rational& c, long exponent, long truncation_order) {
    if (exponent >= truncation_order)
        throw std::invalid_argument("QSeries::monomial: exponent beyond truncation order");
    std::vector<Rational> v(static_cast<size_t>(truncation_order - exponent), Rational(0));
    v[0] = c;
    return QSeries(exponent, std::move(v));
}

const Rational& QSeries::coeff(long n) const {
    if (n < low_ || n >= truncation_order())
        throw std::out_of_range("QSeries::coeff: exponent outside the valid range");
    return coeffs_[static_cast<size_t>(n - low_)];
}

QSeries QSeries::truncate(long order) const {
    if (order > truncation_order())
        throw std::invalid_argument("QSeries::truncate: cannot extend past truncation order");
    if (order <= low_) return QSeries(order, {});
    std::vector<Rational> v(coeffs_.begin(), coeffs_.begin() + (order - low_));
    return QSeries(low_, std::move(v));
}

QSeries QSeries::shift(long e) const {
    return QSeries(low_ + e, coeffs_);
}

QSeries QSeries::operator+(const QSeries& o) const {
    long trunc = std::min(truncation_order(), o.truncation_order());
    long low = std::min(low_, o.low_);
    if (trunc <= low) return QSeries(trunc, {});
    std::vector<Rational> v(static_cast<size_t>(trunc - low), Rational(0));
    for (long n = low_; n < std::min(truncation_order(), trunc); ++n)
        v[static_cast<size_t>(n - low)] += coeffs_[static_cast<size_t>(n - low_)];
    for (long n = o.low_; n < std::min(o.truncation_order(), trunc); ++n)
        v[static_cast<size_t>(n - low)] += o.coeffs_[static_cast<size_t>(n - o.low_)];
    return QSeries(low, std::move(v));
}

QSeries QSeries::operator-() const {
    std::vector<Rational> v(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = -coeffs_[i];
    return QSeries(low_, std::move(v));
}

QSeries QSeries::operator-(const QSeries& o) const {
    return *this + (-o);
}

QSeries QSeries::operator*(const QSeries& o) const {
    long low = low_ + o.low_;
    long trunc = std::min(truncation_order() + o.low_, o.truncation_order() + low_);
    if (coeffs_.empty() || o.coeffs_.empty() || trunc <= low)
        return QSeries(trunc, {});
    std::vector<Rational> v(static_cast<size_t>(trunc - low), Rational(0));
    Rational tmp;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        long ei = low_ + static_cast<long>(i);
        for (size_t j = 0; j < o.coeffs_.size(); ++j) {
            long e = ei + o.low_ + static_cast<long>(j);
            if (e >= trunc) break;
            tmp = coeffs_[i] * o.coeffs_[j];
            v[static_cast<size_t>(e - low)] += tmp;
        }
    }
    return QSeries(low, std::move(v));
}

QSeries QSeries::operator*(const Rational& c) const {
    std::vector<Rational> v(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i] * c;
    return QSeries(low_, std::move(v));
}

QSeries QSeries::pow(unsigned long e) const {
    QSeries r = QSeries::constant(1, truncation_order());
    QSeries base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

QSeries QSeries::inverse() const {
    // locate the true valuation
    size_t v0 = 0;
    while (v0 < coeffs_.size() && coeffs_[v0] == 0) ++v0;
    if (v0 == coeffs_.size() || low_ + static_cast<long>(v0) != 0)
        throw std::domain_error("QSeries::inverse: series is not a unit at exponent 0");
    long trunc = truncation_order();
    std::vector<Rational> b(static_cast<size_t>(trunc), Rational(0));
    const Rational& a0 = coeffs_[v0];
    b[0] = Rational(1) / a0;
    for (long n = 1; n < trunc; ++n) {
        Rational s(0);
        for (long i = 1; i <= n; ++i) {
            long ai = i - low_;
            if (ai < 0 || ai >= static_cast<long>(coeffs_.size())) continue;
            s += coeffs_[static_cast<size_t>(ai)] * b[static_cast<size_t>(n - i)];
        }
        b[static_cast<size_t>(n)] = -s / a0;
    }
    return QSeries(0, std::move(b));
}

bool QSeries::operator==(const QSeries& o) const {
    if (truncation_order() != o.truncation_order()) return false;
    long low = std::min(low_, o.low_);
    for (long n = low; n < truncation_order(); ++n) {
        Rational a = (n >= low_) ? coeffs_[static_cast<size_t>(n - low_)] : Rational(0);
        Rational b = (n >= o.low_) ? o.coeffs_[static_cast<size_t>(n - o.low_)] : Rational(0);
        if (a != b) return false;
    }
    return true;
}

std::string rational_str(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rational_from_str(const std::string& s) {
    Rational r(s);
    r.canonicalize();
    return r;
}

std::string QSeries::str(const std::string& var) const {
    std::ostringstream out;
    bool first = true;
    for (long n = low_; n < truncation_order(); ++n) {
        const Rational& c = coeffs_[static_cast<size_t>(n - low_)];
        if (c == 0) continue;
        Rational a = c;
        if (first) {
            if (a < 0) { out << "-"; a = -a; }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        bool unit = (a == 1 && n != 0);
        if (!unit) out << rational_str(a);
        if (n != 0) {
            if (!unit) out << "*";
            out << var;
            if (n != 1) out << "^" << n;
        }
        first = false;
    }
    if (first) out << "0";
    out << " + O(" << var << "^" << truncation_order() << ")";
    return out.str();
}

}  // namespace weiercount
