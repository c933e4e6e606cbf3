#include "weiercount/tangency.hpp"

#include <numeric>
#include <stdexcept>

namespace weiercount {

PluckerData plucker(long d, long c) {
    if (d < 3 || c < 0) throw std::invalid_argument("plucker: need d >= 3, c >= 0");
    Integer dd(d), cc(c);
    Integer d_star = dd * (dd - 1) - 3 * cc;
    Integer c_star = 3 * dd * (dd - 2) - 8 * cc;
    Integer num = d_star * (d_star - 1) - dd - 3 * c_star;
    if (num % 2 != 0)
        throw std::invalid_argument("plucker: inconsistent input, bitangent count not integral");
    return PluckerData{d, c, d_star, c_star, num / 2};
}

TangencyRecord tangency_class(int k, const std::vector<int>& mu, int ambient_m) {
    if (k < 1 || k > 4) throw std::invalid_argument("tangency_class: k must be in 1..4");
    Integer kk(k);
    if (mu == std::vector<int>{2}) {
        SchubertClass cls = SchubertClass::sigma(ambient_m, 1, 0, 12 * kk * (6 * kk - 1));
        return TangencyRecord{k, mu, cls, 2};
    }
    if (mu == std::vector<int>{3}) {
        SchubertClass cls = SchubertClass::sigma(ambient_m, 1, 1, 24 * kk * (10 * kk - 3)) +
                            SchubertClass::sigma(ambient_m, 2, 0,
                                                 24 * kk * (6 * kk - 1) * (4 * kk - 1));
        return TangencyRecord{k, mu, cls, 6};
    }
    if (mu == std::vector<int>{2, 2}) {
        SchubertClass cls =
            SchubertClass::sigma(ambient_m, 1, 1, 108 * kk * (3 * kk - 1) * (8 * kk * kk - 1)) +
            SchubertClass::sigma(ambient_m, 2, 0,
                                 36 * kk * (6 * kk - 1) * (4 * kk - 1) * (3 * kk - 1));
        return TangencyRecord{k, mu, cls, 4};
    }
    throw std::invalid_argument("tangency_class: no class available for this tangency pattern");
}

Integer t_number(int m, int d, const std::vector<int>& mu) {
    int k = 2 * m - d;
    if (k < 1 || k > 3) throw std::invalid_argument("t_number: k = 2m-d must be in 1..3");
    int codim = 0;
    for (int mj : mu) codim += mj - 1;
    if (codim != k - 1)
        throw std::invalid_argument("t_number: tangency codimension must equal k - 1");
    TangencyRecord rec = tangency_class(k, mu, m);
    return (rec.cls * fano_class(m, d)).integrate();
}

Integer t3_sigma2_via_principal_parts(int k) {
    if (k < 1 || k > 4) throw std::invalid_argument("k must be in 1..4");
    Integer kk(k);
    // c3 of the principal-parts bundle, paired with sigma_2
    Integer chern = 96 * kk * (6 * kk - 1) * (3 * kk - 1) + 48 * kk * (9 * kk - 2) + 24 * kk;
    // lines through (A) cap (B) tangent to (B): multiplicity 8 each
    Integer cusp_correction = 8 * (24 * kk * kk * (6 * kk - 1));
    return chern - cusp_correction;
}

Integer t22_sigma2_via_genus(int k) {
    if (k < 1 || k > 4) throw std::invalid_argument("k must be in 1..4");
    Integer kk(k);
    // intersection numbers on the normalized projection surface
    Integer HH = 12 * kk;
    Integer HR = 24 * kk * kk;
    Integer RR = 48 * kk * kk * kk;
    // K = (12k-4)H - 2R', R'' = (12k-1)H - 3R'
    Integer h2 = 12 * kk - 1, r2 = -3;      // R'' coefficients in (H, R')
    Integer hk = 24 * kk - 5, rk = -5;      // K + R'' coefficients
    Integer pairing = hk * h2 * HH + (hk * r2 + rk * h2) * HR + rk * r2 * RR;
    Integer g = (pairing + 2) / 2;          // 2g - 2 = (K + R'') . R''
    Integer deg = 12 * kk * (6 * kk - 1);   // branch curve degree
    Integer pa = (deg - 1) * (deg - 2) / 2;
    Integer delta = pa - g;                 // nodes + cusps of the branch curve
    Integer flexes = 24 * kk * (6 * kk - 1) * (4 * kk - 1);
    return delta - flexes;
}

}  // namespace weiercount
