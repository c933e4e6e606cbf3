#include "weiercount/lattice.hpp"

#include <array>
#include <numeric>
#include <stdexcept>

namespace weiercount {

namespace {

struct LDL {
    std::vector<Rational> d;               // pivots
    std::vector<std::vector<Rational>> l;  // unit lower triangular
};

LDL ldl_decompose(const LatticeGram& g) {
    int n = g.rank();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = g.entry(i, j);
    LDL out;
    out.d.resize(n);
    out.l.assign(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i) {
        out.d[i] = a[i][i];
        if (out.d[i] <= 0) throw std::invalid_argument("lattice: Gram matrix is not positive definite");
        out.l[i][i] = 1;
        for (int j = i + 1; j < n; ++j) out.l[j][i] = a[j][i] / out.d[i];
        for (int r = i + 1; r < n; ++r)
            for (int c = i + 1; c < n; ++c) a[r][c] -= out.l[r][i] * out.d[i] * out.l[c][i];
    }
    return out;
}

}  // namespace

LatticeGram::LatticeGram(std::vector<std::vector<long>> gram) : gram_(std::move(gram)) {
    size_t n = gram_.size();
    for (size_t i = 0; i < n; ++i) {
        if (gram_[i].size() != n) throw std::invalid_argument("LatticeGram: matrix not square");
        if (gram_[i][i] % 2 != 0) throw std::invalid_argument("LatticeGram: diagonal must be even");
        for (size_t j = 0; j < n; ++j)
            if (gram_[i][j] != gram_[j][i]) throw std::invalid_argument("LatticeGram: matrix not symmetric");
    }
    ldl_decompose(*this);  // positive definiteness
}

LatticeGram LatticeGram::direct_sum(const LatticeGram& o) const {
    int n = rank(), m = o.rank();
    std::vector<std::vector<long>> g(n + m, std::vector<long>(n + m, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g[i][j] = entry(i, j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) g[n + i][n + j] = o.entry(i, j);
    return LatticeGram(std::move(g));
}

RootLattice root_lattice_from_name(const std::string& name) {
    if (name == "A1") return RootLattice::A1;
    if (name == "A2") return RootLattice::A2;
    if (name == "A3") return RootLattice::A3;
    if (name == "E8") return RootLattice::E8;
    throw std::invalid_argument("unsupported lattice name: " + name);
}

LatticeGram root_gram(RootLattice l) {
    switch (l) {
        case RootLattice::A1:
            return LatticeGram(std::vector<std::vector<long>>{{2}});
        case RootLattice::A2:
            return LatticeGram({{2, -1}, {-1, 2}});
        case RootLattice::A3:
            return LatticeGram({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
        case RootLattice::E8:
            // simple-root Gram: A7 chain with the eighth node attached to the fifth
            return LatticeGram({{2, -1, 0, 0, 0, 0, 0, 0},
                                {-1, 2, -1, 0, 0, 0, 0, 0},
                                {0, -1, 2, -1, 0, 0, 0, 0},
                                {0, 0, -1, 2, -1, 0, 0, 0},
                                {0, 0, 0, -1, 2, -1, 0, -1},
                                {0, 0, 0, 0, -1, 2, -1, 0},
                                {0, 0, 0, 0, 0, -1, 2, 0},
                                {0, 0, 0, 0, -1, 0, 0, 2}});
    }
    throw std::invalid_argument("unsupported lattice");
}

namespace {

// Fincke-Pohst style enumeration against the exact LDL decomposition.  All
// arithmetic is integral after clearing the common denominator Q of the
// decomposition, so no rounding enters the bounds.
struct ThetaEnum {
    int n;
    long order;
    __int128 q;                               // common denominator
    __int128 budget;                          // 2*(order-1) * q^3
    std::vector<__int128> dn;                 // q * d_i
    std::vector<std::vector<__int128>> ln;    // q * l[j][i]
    std::vector<long> v;
    std::vector<Integer> counts;              // counts[m] = #{v : (v,v) = 2m}

    void run(const LatticeGram& g, long ord) {
        order = ord;
        n = g.rank();
        LDL ldl = ldl_decompose(g);
        Integer lc = 1;
        for (int i = 0; i < n; ++i) {
            mpz_lcm(lc.get_mpz_t(), lc.get_mpz_t(), ldl.d[i].get_den().get_mpz_t());
            for (int j = i + 1; j < n; ++j)
                mpz_lcm(lc.get_mpz_t(), lc.get_mpz_t(), ldl.l[j][i].get_den().get_mpz_t());
        }
        if (!lc.fits_slong_p())
            throw std::overflow_error("theta_series: denominator too large for scaled enumeration");
        q = lc.get_si();
        budget = 2 * static_cast<__int128>(order - 1) * q * q * q;
        dn.resize(n);
        ln.assign(n, std::vector<__int128>(n, 0));
        for (int i = 0; i < n; ++i) {
            Rational s = ldl.d[i] * Rational(static_cast<long>(q));
            dn[i] = s.get_num().get_si();
            for (int j = i + 1; j < n; ++j) {
                Rational t = ldl.l[j][i] * Rational(static_cast<long>(q));
                ln[j][i] = t.get_num().get_si();
            }
        }
        counts.assign(static_cast<size_t>(order), Integer(0));
        v.assign(n, 0);
        descend(n - 1, 0, true);
    }

    // partial = q^3 * sum_{j>i} d_j (v_j + c_j)^2, an exact integer.
    // Only vectors whose outermost nonzero coordinate is positive are visited;
    // each stands for a +/- pair, and the zero vector counts once.
    void descend(int i, __int128 partial, bool all_zero) {
        if (i < 0) {
            long norm = static_cast<long>(partial / (q * q * q));
            counts[static_cast<size_t>(norm / 2)] += all_zero ? 1 : 2;
            return;
        }
        __int128 c = 0;
        for (int j = i + 1; j < n; ++j)
            if (v[j] != 0) c += ln[j][i] * v[j];
        // scaled term at v_i = x is dn[i]*(q x + c)^2; convex with real minimum at -c/q
        __int128 f = -c >= 0 ? (-c) / q : -(((c) + q - 1) / q);  // floor(-c/q)
        auto term = [&](long x) {
            __int128 w = q * x + c;
            return dn[i] * w * w;
        };
        long x0 = static_cast<long>(f);
        long xmin = (term(x0) <= term(x0 + 1)) ? x0 : x0 + 1;
        for (long x = xmin;; ++x) {
            if (all_zero && x < 0) break;
            __int128 t = term(x);
            if (partial + t > budget) break;
            v[i] = x;
            descend(i - 1, partial + t, all_zero && x == 0);
        }
        for (long x = xmin - 1;; --x) {
            if (all_zero && x < 0) break;
            __int128 t = term(x);
            if (partial + t > budget) break;
            v[i] = x;
            descend(i - 1, partial + t, all_zero && x == 0);
        }
        v[i] = 0;
    }
};

}  // namespace

QSeries theta_series(const LatticeGram& lattice, long order) {
    if (order < 1) throw std::invalid_argument("theta_series: order must be >= 1");
    ThetaEnum e;
    e.run(lattice, order);
    std::vector<Rational> v(static_cast<size_t>(order));
    for (long m = 0; m < order; ++m) v[static_cast<size_t>(m)] = Rational(e.counts[static_cast<size_t>(m)]);
    return QSeries(0, std::move(v));
}

QSeries theta_root(RootLattice l, long order) {
    return theta_series(root_gram(l), order);
}

SurfaceInvariants surface_invariants(long k) {
    if (k < 1) throw std::invalid_argument("surface_invariants: k must be >= 1");
    return SurfaceInvariants{k - 1, k, 12 * k, 10 * k, 12 * k - 2, {2 * k - 2, 10 * k - 2}};
}

Integer NSClass::dot(const NSClass& o) const {
    if (k != o.k || z_dot_sigma != o.z_dot_sigma)
        throw std::invalid_argument("NSClass::dot: mismatched lattice parameters");
    // intersection matrix [[0,1,1],[1,-k,zs],[1,zs,-k]] in the basis (f, z, sigma)
    Integer f1 = c_f, z1 = c_z, s1 = c_sigma;
    Integer f2 = o.c_f, z2 = o.c_z, s2 = o.c_sigma;
    Integer zs = z_dot_sigma;
    return f1 * (z2 + s2) + z1 * (f2 - k * z2 + zs * s2) + s1 * (f2 + zs * z2 - k * s2);
}

NSClass mw_power_class(long z_dot_sigma, long k, long m) {
    if (k < 1) throw std::invalid_argument("mw_power_class: k must be >= 1");
    return NSClass{(z_dot_sigma + k) * m * (m - 1), -(m - 1), m, k, z_dot_sigma};
}

SectionShift section_shift(long z_dot_sigma, long k) {
    if (k < 1) throw std::invalid_argument("section_shift: k must be >= 1");
    // pairings against the basis (f, z, sigma)
    // explicit return type: auto would deduce a gmp expression template
    // referencing dead temporaries
    auto pair3 = [&](const std::array<Rational, 3>& u, const std::array<Rational, 3>& w) -> Rational {
        Rational kk(k), zs(z_dot_sigma);
        return u[0] * (w[1] + w[2]) + u[1] * (w[0] - kk * w[1] + zs * w[2]) +
               u[2] * (w[0] + zs * w[1] - kk * w[2]);
    };
    std::array<Rational, 3> f{1, 0, 0}, z{0, 1, 0}, sigma{0, 0, 1};
    // solve for proj = a f + b z with (sigma - proj) orthogonal to f and z
    Rational m00 = pair3(f, f), m01 = pair3(f, z), m11 = pair3(z, z);
    Rational r0 = pair3(f, sigma), r1 = pair3(z, sigma);
    Rational det = m00 * m11 - m01 * m01;
    if (det == 0) throw std::domain_error("section_shift: degenerate polarization Gram matrix");
    Rational a = (r0 * m11 - r1 * m01) / det;
    Rational b = (m00 * r1 - m01 * r0) / det;
    std::array<Rational, 3> res{-a, -b, 1};
    return SectionShift{pair3(res, res), z_dot_sigma + k};
}

bool has_nontrivial_isotropic(const std::vector<long>& rho_list) {
    for (long r : rho_list)
        if (r < 1) throw std::invalid_argument("has_nontrivial_isotropic: each rho must be >= 1");
    size_t n = rho_list.size();
    std::vector<long> ord(n);
    for (size_t i = 0; i < n; ++i) ord[i] = rho_list[i] + 1;
    auto qval = [&](const std::vector<long>& x) {
        // q(x) = sum rho_j x_j^2 / (rho_j + 1), as a residue mod 2
        Rational s(0);
        for (size_t j = 0; j < n; ++j) {
            long xj = x[j] % ord[j];
            Rational term(rho_list[j] * xj * xj, ord[j]);
            term.canonicalize();  // gmp requires reduced operands
            s += term;
        }
        s.canonicalize();
        // reduce mod 2
        Integer num = s.get_num(), den = s.get_den();
        Integer two_den = 2 * den;
        Integer rem = num % two_den;
        return rem == 0;
    };
    std::vector<long> x(n, 0);
    while (true) {
        // advance mixed-radix counter
        size_t i = 0;
        while (i < n && ++x[i] == ord[i]) x[i++] = 0;
        if (i == n) break;
        // the cyclic subgroup <x> is totally isotropic iff q vanishes on every multiple
        bool iso = true;
        std::vector<long> y(n, 0);
        long order_x = 1;
        {
            // order of x in the product group
            for (size_t j = 0; j < n; ++j) {
                long g = std::gcd(x[j], ord[j]);
                long oj = ord[j] / (g == 0 ? ord[j] : g);
                order_x = order_x / std::gcd(order_x, oj) * oj;
            }
        }
        for (long t = 1; t <= order_x && iso; ++t) {
            for (size_t j = 0; j < n; ++j) y[j] = (x[j] * t) % ord[j];
            if (!qval(y)) iso = false;
        }
        if (iso) return true;
    }
    return false;
}

}  // namespace weiercount
