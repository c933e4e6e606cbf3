#ifndef WEIERCOUNT_QSERIES_HPP
#define WEIERCOUNT_QSERIES_HPP

#include <gmpxx.h>
#include <string>
#include <vector>

namespace weiercount {

using Integer = mpz_class;
using Rational = mpq_class;

/// Truncated Laurent series in q with exact rational coefficients.
///
/// Coefficients are stored for exponents in [lowest_exponent, truncation_order);
/// the series vanishes identically below lowest_exponent.  Reading a coefficient
/// at or beyond the truncation order is an error, never a silent zero.
class QSeries {
public:
    QSeries(long lowest_exponent, std::vector<Rational> coeffs);

    static QSeries zero(long truncation_order);
    static QSeries constant(const Rational& c, long truncation_order);
    static QSeries monomial(const Rational& c, long exponent, long truncation_order);

    long lowest_exponent() const { return low_; }
    long truncation_order() const { return low_ + static_cast<long>(coeffs_.size()); }

    /// Coefficient of q^n; throws std::out_of_range unless lowest_exponent <= n < truncation_order.
    const Rational& coeff(long n) const;

    /// Restrict to a smaller truncation order.
    QSeries truncate(long order) const;
    /// Multiply by q^e.
    QSeries shift(long e) const;

    QSeries operator+(const QSeries& o) const;
    QSeries operator-(const QSeries& o) const;
    QSeries operator-() const;
    /// Cauchy product, truncated to the shorter valid range.
    QSeries operator*(const QSeries& o) const;
    QSeries operator*(const Rational& c) const;
    QSeries pow(unsigned long e) const;

    /// Multiplicative inverse of a unit series (nonzero constant term at exponent 0).
    QSeries inverse() const;

    /// Mathematical equality on the common representation: same truncation
    /// order and coefficients, treating exponents below lowest_exponent as 0.
    bool operator==(const QSeries& o) const;
    bool operator!=(const QSeries& o) const { return !(*this == o); }

    std::string str(const std::string& var = "q") const;

private:
    long low_;
    std::vector<Rational> coeffs_;
};

std::string rational_str(const Rational& r);
Rational rational_from_str(const std::string& s);

}  // namespace weiercount

#endif
