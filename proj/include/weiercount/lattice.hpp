#ifndef WEIERCOUNT_LATTICE_HPP
#define WEIERCOUNT_LATTICE_HPP

#include <string>
#include <utility>
#include <vector>

#include "weiercount/qseries.hpp"

namespace weiercount {

enum class RootLattice { A1, A2, A3, E8 };

RootLattice root_lattice_from_name(const std::string& name);

/// Positive definite even Gram matrix; validated on construction
/// (symmetry, even diagonal, positive leading principal minors).
class LatticeGram {
public:
    explicit LatticeGram(std::vector<std::vector<long>> gram);

    int rank() const { return static_cast<int>(gram_.size()); }
    const std::vector<std::vector<long>>& gram() const { return gram_; }
    long entry(int i, int j) const { return gram_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }

    LatticeGram direct_sum(const LatticeGram& o) const;

private:
    std::vector<std::vector<long>> gram_;
};

LatticeGram root_gram(RootLattice l);

/// theta_A(q) = sum_{v in A} q^{(v,v)/2}, truncated at the given order,
/// by exact bounded enumeration of lattice vectors.
QSeries theta_series(const LatticeGram& lattice, long order);
QSeries theta_root(RootLattice l, long order);

/// Numerical invariants of a smooth Weierstrass surface over P^1 built from O(k).
struct SurfaceInvariants {
    long p_g;
    long chi;
    long euler;
    long h11;
    long lattice_rank;              // rank of <f,z>^perp in H^2
    std::pair<long, long> signature;
};

SurfaceInvariants surface_invariants(long k);

/// Integer class in the rank-3 sublattice <f, z, sigma> of NS(S), with
/// intersection matrix [[0,1,1],[1,-k,z.sigma],[1,z.sigma,-k]].
struct NSClass {
    long c_f, c_z, c_sigma;
    long k;
    long z_dot_sigma;

    Integer dot(const NSClass& o) const;
    Integer self_intersection() const { return dot(*this); }
};

/// Class of the m-th Mordell-Weil power of a section:
/// m sigma - (m-1) z + (z.sigma + k) m (m-1) f.
NSClass mw_power_class(long z_dot_sigma, long k, long m);

struct SectionShift {
    Rational projection_norm;  // self-intersection of the projection to <f,z>^perp
    long fiber_degree;         // n with iota_*(sigma) = l + n f
};

/// Orthogonal projection of a section class away from <f, z>, computed by an
/// exact 2x2 solve against the polarization Gram matrix.
SectionShift section_shift(long z_dot_sigma, long k);

/// Whether the discriminant form of (+)_j A_{rho_j} contains a nonzero element
/// generating a totally isotropic cyclic subgroup, by exhaustive enumeration.
bool has_nontrivial_isotropic(const std::vector<long>& rho_list);

}  // namespace weiercount

#endif
