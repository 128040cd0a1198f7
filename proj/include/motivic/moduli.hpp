#ifndef MOTIVIC_MODULI_HPP
#define MOTIVIC_MODULI_HPP

#include "motivic/hilb.hpp"
#include "motivic/lpoly.hpp"

#include <optional>
#include <vector>

namespace motivic {

/// Derived parameters for the moduli space M(d, chi) of one-dimensional
/// semistable sheaves on the plane with first Chern class d and Euler
/// characteristic chi.
struct ModuliParams {
    int d = 0;
    long chi = 0;
    long chi0 = 0;              // unique rep of +-chi mod d in [-3d/2, -d]
    int rho = 0;                // congruence depth: d-1 if d = p or 2p, else 7
    long dbar = 0;              // d(d-3)/2 - chi0, colength of matched ideals
    long shift = 0;             // 3d + 1 + 2*chi0
    long dim_m = 0;             // d^2 + 1
    long level_scheme = 0;      // d^2 - rho + 1; nothing asserted at or below
    long stable_threshold = 0;  // 1 + 2(d^2 + 1 - rho), first determined Betti index
    bool coprime = false;
};

/// Top coefficients of the motivic class of M(d, chi): the shifted Hilbert
/// class truncated to degrees strictly above `level`.
struct MotivicTail {
    ModuliParams params;
    long level = 0;
    LPoly tail;
    bool semistable_only = false;  // gcd(d, chi) > 1: class of M^ss
    bool vacuous = false;          // level >= dim, no degree is determined
};

/// Stable-range Betti numbers b_i and diagonal Hodge numbers h^{p,p}.
struct BettiTail {
    ModuliParams params;
    std::vector<std::pair<long, mpz_class>> entries;     // (i, b_i)
    std::vector<std::pair<long, mpz_class>> hodge_diag;  // (p, h^{p,p})
    bool vacuous = false;  // no index is determined (d = 1)
};

struct ChiIndependenceReport {
    int d = 0;
    long level = 0;                // compare degrees > level
    std::vector<long> chi0_values; // extended window, ascending
    bool passed = false;
    bool vacuous = false;          // empty compared degree range
    std::optional<long> first_discrepant_degree;
};

/// The unique chi0 with chi0 = +-chi mod d and -3d/2 <= chi0 <= -d.
/// Throws std::logic_error if the scan finds zero or multiple matches
/// (would contradict uniqueness; cannot happen).
long chi0(int d, long chi);

/// All chi0 with chi0 = +-chi mod d in the extended window
/// [-2d-1, -d+1], ascending.
std::vector<long> chi0_extended(int d, long chi);

/// d-1 when d is prime or twice a prime, 7 otherwise.
int rho(int d);

ModuliParams params(int d, long chi);

/// Scheme-level congruence: the class of M(d, chi) agrees with
/// L^{3d+1+2*chi0} * hilb_class(dbar) in every degree > d^2 - rho + 1.
/// For gcd(d, chi) > 1 the same tail holds for the semistable space and
/// semistable_only is set.
MotivicTail motivic_tail(int d, long chi, HilbCache& cache);

/// Betti numbers b_i for stable_threshold <= i <= 2(d^2+1): zero for odd i,
/// b_{2p} = coefficient of L^{p - shift} in hilb_class(dbar); the diagonal
/// Hodge numbers equal the even Betti numbers. Requires gcd(d, chi) = 1
/// (the moduli space must be smooth); throws std::invalid_argument
/// otherwise.
BettiTail betti_tail(int d, long chi, HilbCache& cache);

/// Checks that the shifted Hilbert classes over the whole extended chi0
/// window agree pairwise in every degree > d^2 - rho + 1, the chi-independence
/// of the stable range. Requires d >= 3. A failure is reported, not thrown.
ChiIndependenceReport verify_chi_independence(int d, HilbCache& cache);

/// chi and -chi determine the same (chi0, rho, dbar, shift): dualizing a
/// sheaf negates chi and preserves the moduli space parameters.
bool duality_symmetry(int d, long chi);

}  // namespace motivic

#endif
