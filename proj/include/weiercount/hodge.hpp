#ifndef WEIERCOUNT_HODGE_HPP
#define WEIERCOUNT_HODGE_HPP

#include "weiercount/qseries.hpp"

namespace weiercount {

/// Constant term of phi(q): integral of the top Chern class of the dual Hodge
/// bundle over the Fano class, with the k-dependent normalization shown
/// explicitly in the record.
struct ConstantTermRecord {
    int m, d, k;
    Rational raw_integral;   // (-1)^{k-1} * integral of c_{k-1}(lambda) . [F(Y)]
    Rational normalization;  // eps_k: 1/2 for k = 2, 1 for k = 3
    Rational c0;             // normalization * raw_integral
};

ConstantTermRecord constant_term(int m, int d);

}  // namespace weiercount

#endif
