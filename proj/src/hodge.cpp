#include "weiercount/hodge.hpp"

#include <stdexcept>

#include "weiercount/schubert.hpp"

namespace weiercount {

ConstantTermRecord constant_term(int m, int d) {
    int k = 2 * m - d;
    if (k != 2 && k != 3)
        throw std::invalid_argument(
            "constant_term: k = 2m-d must be 2 or 3 "
            "(k = 1 needs no constant term; the k = 4 normalization is unknown)");
    Integer pairing = (hodge_bundle_chern(k, m) * fano_class(m, d)).integrate();
    // dualizing the rank k-1 Hodge bundle flips the sign of its top Chern class
    Rational raw(pairing);
    if ((k - 1) % 2 != 0) raw = -raw;
    Rational eps = (k == 2) ? Rational(1, 2) : Rational(1);
    return ConstantTermRecord{m, d, k, raw, eps, eps * raw};
}

}  // namespace weiercount
