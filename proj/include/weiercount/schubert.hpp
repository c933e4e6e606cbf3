#ifndef WEIERCOUNT_SCHUBERT_HPP
#define WEIERCOUNT_SCHUBERT_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "weiercount/qseries.hpp"

namespace weiercount {

/// Two-row partition (a, b) with a >= b >= 0, indexing sigma_{a,b}.
struct TwoRowPartition {
    int a, b;
    auto operator<=>(const TwoRowPartition&) const = default;
};

/// Symmetric polynomial in two Chern roots x1, x2 with integer coefficients,
/// stored in the monomial-symmetric basis m_{i,j} = x1^i x2^j + x1^j x2^i
/// (i > j; m_{i,i} = x1^i x2^i).
class ChernRootPoly {
public:
    ChernRootPoly() = default;

    /// Product of linear forms c1*x1 + c2*x2, one per Chern root of the bundle.
    static ChernRootPoly product_of_roots(const std::vector<std::pair<Integer, Integer>>& roots);
    /// The Schur polynomial s_{a,b}(x1, x2).
    static ChernRootPoly schur(TwoRowPartition p);

    const std::map<std::pair<int, int>, Integer>& monomials() const { return coeffs_; }
    bool empty() const { return coeffs_.empty(); }

    ChernRootPoly operator*(const ChernRootPoly& o) const;
    ChernRootPoly operator+(const ChernRootPoly& o) const;
    ChernRootPoly operator-(const ChernRootPoly& o) const;

    bool operator==(const ChernRootPoly&) const = default;

private:
    void add_monomial(int i, int j, const Integer& c);  // (i, j) unordered
    std::map<std::pair<int, int>, Integer> coeffs_;     // keyed by i >= j

    friend class SchubertClass;
};

/// Integer combination of Schubert classes sigma_{a,b} on the Grassmannian of
/// lines G(1, m+1); partitions with a > m vanish and are discarded.
class SchubertClass {
public:
    explicit SchubertClass(int ambient_m);
    static SchubertClass sigma(int ambient_m, int a, int b, Integer coeff = 1);
    /// Re-expand a symmetric root polynomial in the Schubert basis, truncating a > m.
    static SchubertClass from_roots(int ambient_m, const ChernRootPoly& poly);

    int ambient_m() const { return m_; }
    const std::map<TwoRowPartition, Integer>& terms() const { return terms_; }
    Integer coeff(TwoRowPartition p) const;

    SchubertClass operator+(const SchubertClass& o) const;
    SchubertClass operator-(const SchubertClass& o) const;
    SchubertClass operator*(const SchubertClass& o) const;
    SchubertClass operator*(const Integer& c) const;

    /// Degree against the fundamental class: the coefficient of the point class
    /// sigma_{m,m} (zero when absent).
    Integer integrate() const;

    /// True when every term has |a| + |b| equal to the given codimension.
    bool homogeneous_of_codim(int codim) const;

    bool operator==(const SchubertClass&) const = default;
    std::string str() const;

private:
    int m_;
    std::map<TwoRowPartition, Integer> terms_;
};

/// Class of the Fano scheme of lines on a degree-d hypersurface in P^{m+1}:
/// the top Chern class of Sym^d of the dual tautological bundle.
SchubertClass fano_class(int m, int d);

/// Top Chern class c_{k-1} of the Hodge bundle Sym^{k-2}(S^v) (x) O(sigma_1),
/// for 2 <= k <= 4.
SchubertClass hodge_bundle_chern(int k, int m);

}  // namespace weiercount

#endif
