#ifndef MOTIVIC_LPOLY_HPP
#define MOTIVIC_LPOLY_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

namespace motivic {

/// Laurent polynomial in the Lefschetz class L with exact integer
/// coefficients. This is the value type of a motivic measure of a cellular
/// variety: the affine line maps to L, a point to 1.
///
/// Congruence model: the dimension-filtration subgroup generated by classes
/// of spaces of dimension <= m is represented as the span of {L^j : j <= m},
/// so "equal mod A_m" becomes coefficient agreement in all degrees > m
/// (see eq_mod). This is the single modeling assumption of the library and
/// is valid for any measure refining the dimension filtration, e.g. the
/// E-polynomial or the virtual Poincare polynomial.
class LPoly {
public:
    using Coeffs = std::map<long, mpz_class>;

    LPoly() = default;

    static LPoly zero() { return LPoly{}; }
    static LPoly one() { return monomial(0, 1); }
    /// c * L^degree
    static LPoly monomial(long degree, mpz_class c);

    bool is_zero() const { return coeffs_.empty(); }
    long min_degree() const;  // requires nonzero
    long max_degree() const;  // requires nonzero

    /// Coefficient of L^j, zero if absent.
    const mpz_class& coefficient(long j) const;

    LPoly operator+(const LPoly& rhs) const;
    LPoly operator-(const LPoly& rhs) const;
    LPoly operator*(const LPoly& rhs) const;
    bool operator==(const LPoly& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const LPoly& rhs) const { return !(*this == rhs); }

    /// Multiply by L^s; s may be negative.
    LPoly shifted(long s) const;

    /// True iff *this - rhs has no nonzero coefficient in degree > m.
    /// Models congruence modulo the dimension filtration at level m.
    bool eq_mod(const LPoly& rhs, long m) const;

    /// Drop every coefficient in degree <= m, keeping only the part the
    /// congruence actually determines.
    LPoly truncate_below(long m) const;

    /// Specialization L -> 1 (topological Euler characteristic).
    mpz_class eval_at_one() const;

    /// Coefficient symmetry c(low+j) = c(high-j) with support inside
    /// [low, high]; Poincare duality for smooth projective classes.
    bool is_palindromic(long low, long high) const;

    const Coeffs& coeffs() const { return coeffs_; }

    /// Human-readable form, low degree first: "1 + 2L + 3L^2".
    std::string to_string() const;

    /// JSON object {"degree": "coefficient-as-decimal-string"}; keys in
    /// ascending numeric degree order. Exact round-trip with from_json_text.
    std::string to_json_text() const;

private:
    void insert_nonzero(long degree, mpz_class c);

    Coeffs coeffs_;  // canonical: no zero values stored

    friend LPoly lpoly_from_coeffs(LPoly::Coeffs raw);
};

/// Builds an LPoly from a raw map, dropping explicit zeros.
LPoly lpoly_from_coeffs(LPoly::Coeffs raw);

/// Inverse of LPoly::to_json_text. Throws std::invalid_argument on
/// malformed input (non-integer key, non-numeric coefficient string).
LPoly lpoly_from_json_text(const std::string& text);

}  // namespace motivic

#endif
