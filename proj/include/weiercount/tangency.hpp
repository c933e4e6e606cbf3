#ifndef WEIERCOUNT_TANGENCY_HPP
#define WEIERCOUNT_TANGENCY_HPP

#include <vector>

#include "weiercount/schubert.hpp"

namespace weiercount {

/// Classical Plucker invariants of a plane curve of degree d with c cusps
/// (and no other singularities): dual degree, flex count, bitangent count.
struct PluckerData {
    long d, c;
    Integer d_star;      // d(d-1) - 3c
    Integer c_star;      // 3d(d-2) - 8c
    Integer delta_star;  // (d*(d*-1) - d - 3c*) / 2
};

PluckerData plucker(long d, long c);

/// Class of the tangency locus T_mu(Delta) with its stack isotropy order.
struct TangencyRecord {
    int k;
    std::vector<int> mu;  // trailing 1's suppressed
    SchubertClass cls;
    long isotropy_order;  // prod mu_j!
};

/// Closed-form classes for mu in {(2), (3), (2,2)}; other patterns are not
/// available and are rejected.
TangencyRecord tangency_class(int k, const std::vector<int>& mu, int ambient_m);

/// t_mu = [T_mu(Delta)] . [F(Y)] for k = 2m-d, defined when the intersection is
/// 0-dimensional, i.e. sum (mu_j - 1) = k - 1.
Integer t_number(int m, int d, const std::vector<int>& mu);

/// sigma_2 coefficient of [T_3(Delta)] re-derived through the bundle of
/// principal parts with the multiplicity-8 cuspidal correction.
Integer t3_sigma2_via_principal_parts(int k);

/// sigma_2 coefficient of [T_2,2(Delta)] re-derived through the genus of the
/// ramification curve of a general projection.
Integer t22_sigma2_via_genus(int k);

}  // namespace weiercount

#endif
