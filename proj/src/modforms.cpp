#include "weiercount/modforms.hpp"

#include <stdexcept>

namespace weiercount {

namespace {

// sum of e-th powers of the divisors of n, by trial division
Integer divisor_power_sum(long n, int e) {
    Integer s = 0;
    for (long d = 1; d <= n; ++d) {
        if (n % d == 0) {
            Integer p;
            mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d),
                          static_cast<unsigned long>(e));
            s += p;
        }
    }
    return s;
}

// exact Gaussian elimination; throws on a singular matrix
std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> a,
                                   std::vector<Rational> rhs) {
    size_t n = rhs.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw std::domain_error("solve_linear: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(rhs[piv], rhs[col]);
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col] / a[col][col];
            for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<Rational> x(n);
    for (size_t i = 0; i < n; ++i) x[i] = rhs[i] / a[i][i];
    return x;
}

}  // namespace

QSeries eisenstein(int weight, long order) {
    if (weight != 4 && weight != 6)
        throw std::invalid_argument("eisenstein: weight must be 4 or 6");
    if (order < 1) throw std::invalid_argument("eisenstein: order must be >= 1");
    int e = (weight == 4) ? 3 : 5;
    Integer factor = (weight == 4) ? Integer(240) : Integer(-504);
    std::vector<Rational> v(static_cast<size_t>(order), Rational(0));
    v[0] = 1;
    for (long n = 1; n < order; ++n)
        v[static_cast<size_t>(n)] = Rational(factor * divisor_power_sum(n, e));
    return QSeries(0, std::move(v));
}

ModFormBasis mod_basis(int weight) {
    if (weight % 2 != 0 || weight < 4)
        throw std::invalid_argument("mod_basis: weight must be even and >= 4");
    ModFormBasis basis{weight, {}};
    for (int a = weight / 4; a >= 0; --a) {
        int rem = weight - 4 * a;
        if (rem % 6 == 0) basis.monomials.emplace_back(a, rem / 6);
    }
    return basis;
}

long mod_dimension(int weight) {
    return static_cast<long>(mod_basis(weight).monomials.size());
}

QSeries basis_monomial_expansion(int a, int b, long order) {
    QSeries r = QSeries::constant(1, order);
    if (a > 0) r = r * eisenstein(4, order).pow(static_cast<unsigned long>(a));
    if (b > 0) r = r * eisenstein(6, order).pow(static_cast<unsigned long>(b));
    return r;
}

QSeries ModForm::expansion(long order) const {
    ModFormBasis basis = mod_basis(weight);
    if (coeffs.size() != basis.monomials.size())
        throw std::invalid_argument("ModForm::expansion: coefficient count mismatch");
    QSeries r = QSeries::zero(order);
    for (size_t i = 0; i < coeffs.size(); ++i) {
        auto [a, b] = basis.monomials[i];
        r = r + basis_monomial_expansion(a, b, order) * coeffs[i];
    }
    return r;
}

ModForm solve_in_weight(int weight, const std::vector<std::pair<long, Rational>>& constraints) {
    ModFormBasis basis = mod_basis(weight);
    size_t dim = basis.monomials.size();
    if (constraints.size() != dim)
        throw std::invalid_argument("solve_in_weight: constraint count must equal the dimension");
    long order = 1;
    for (auto& [e, v] : constraints) {
        if (e < 0) throw std::invalid_argument("solve_in_weight: negative constraint exponent");
        order = std::max(order, e + 1);
    }
    std::vector<std::vector<Rational>> m(dim, std::vector<Rational>(dim));
    std::vector<Rational> rhs(dim);
    for (size_t j = 0; j < dim; ++j) {
        auto [a, b] = basis.monomials[j];
        QSeries exp = basis_monomial_expansion(a, b, order);
        for (size_t i = 0; i < dim; ++i) m[i][j] = exp.coeff(constraints[i].first);
    }
    for (size_t i = 0; i < dim; ++i) rhs[i] = constraints[i].second;
    return ModForm{weight, solve_linear(std::move(m), std::move(rhs))};
}

QSeries eta_inverse_power(int k, long order) {
    if (k % 2 != 0)
        throw std::invalid_argument(
            "eta_inverse_power: odd k gives the half-integral prefactor q^{-k/2}; "
            "only even k is supported");
    if (k <= 0) throw std::invalid_argument("eta_inverse_power: k must be positive");
    long unit_order = order + k / 2;
    if (unit_order < 1) throw std::invalid_argument("eta_inverse_power: order too small");
    // prod_{n>=1} (1-q^n), then the -12k power via invert-and-power
    QSeries p = QSeries::constant(1, unit_order);
    for (long n = 1; n < unit_order; ++n) {
        std::vector<Rational> f(static_cast<size_t>(unit_order), Rational(0));
        f[0] = 1;
        f[static_cast<size_t>(n)] = -1;
        p = p * QSeries(0, std::move(f));
    }
    QSeries unit = p.inverse().pow(static_cast<unsigned long>(12 * k));
    return unit.shift(-k / 2);
}

}  // namespace weiercount
