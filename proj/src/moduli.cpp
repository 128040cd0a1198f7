#include "motivic/moduli.hpp"

#include <numeric>
#include <stdexcept>

namespace motivic {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int i = 2; i * i <= n; ++i)
        if (n % i == 0) return false;
    return true;
}

// Nonnegative remainder of x mod d.
long mod_pos(long x, int d) {
    long r = x % d;
    return r < 0 ? r + d : r;
}

bool matches_pm(long candidate, long chi, int d) {
    long r = mod_pos(chi, d);
    long c = mod_pos(candidate, d);
    return c == r || c == mod_pos(-chi, d);
}

}  // namespace

long chi0(int d, long chi) {
    if (d < 1) throw std::invalid_argument("chi0 requires d >= 1");
    // Integer window [-3d/2, -d]; for odd d the lower bound rounds up.
    long lo = -(3L * d) / 2;  // C++ division truncates toward zero: ceil for negatives
    long hi = -d;
    std::vector<long> found;
    for (long c = lo; c <= hi; ++c)
        if (matches_pm(c, chi, d)) found.push_back(c);
    if (found.size() != 1)
        throw std::logic_error("chi0 uniqueness violated for d=" + std::to_string(d) +
                               " chi=" + std::to_string(chi));
    return found.front();
}

std::vector<long> chi0_extended(int d, long chi) {
    if (d < 1) throw std::invalid_argument("chi0_extended requires d >= 1");
    std::vector<long> out;
    for (long c = -2L * d - 1; c <= -d + 1; ++c)
        if (matches_pm(c, chi, d)) out.push_back(c);
    return out;
}

int rho(int d) {
    if (d < 1) throw std::invalid_argument("rho requires d >= 1");
    if (is_prime(d) || (d % 2 == 0 && is_prime(d / 2))) return d - 1;
    return 7;
}

ModuliParams params(int d, long chi) {
    ModuliParams p;
    p.d = d;
    p.chi = chi;
    p.chi0 = chi0(d, chi);
    p.rho = rho(d);
    p.dbar = static_cast<long>(d) * (d - 3) / 2 - p.chi0;
    p.shift = 3L * d + 1 + 2 * p.chi0;
    p.dim_m = static_cast<long>(d) * d + 1;
    p.level_scheme = static_cast<long>(d) * d - p.rho + 1;
    p.stable_threshold = 1 + 2 * (p.dim_m - p.rho);
    p.coprime = std::gcd(static_cast<long>(d), chi < 0 ? -chi : chi) == 1;
    return p;
}

namespace {

// The codimension estimates behind the congruence give depth d-1; a rho
// exceeding that (only d = 1) asserts degrees the theorem cannot support.
bool range_is_vacuous(const ModuliParams& p) {
    return p.level_scheme >= p.dim_m || p.rho > p.d - 1;
}

}  // namespace

MotivicTail motivic_tail(int d, long chi, HilbCache& cache) {
    MotivicTail t;
    t.params = params(d, chi);
    t.level = t.params.level_scheme;
    t.semistable_only = !t.params.coprime;
    if (range_is_vacuous(t.params)) {
        t.vacuous = true;  // congruence determines no degree at all
        return t;
    }
    LPoly h = cache.get(static_cast<int>(t.params.dbar));
    t.tail = h.shifted(t.params.shift).truncate_below(t.level);
    return t;
}

BettiTail betti_tail(int d, long chi, HilbCache& cache) {
    ModuliParams p = params(d, chi);
    if (!p.coprime)
        throw std::invalid_argument(
            "betti_tail requires gcd(d, chi) = 1: the Betti/Hodge statement "
            "needs the fine moduli space to be smooth");
    BettiTail out;
    out.params = p;
    if (range_is_vacuous(p)) {
        out.vacuous = true;
        return out;
    }
    LPoly h = cache.get(static_cast<int>(p.dbar));
    for (long i = p.stable_threshold; i <= 2 * p.dim_m; ++i) {
        mpz_class b = 0;
        if (i % 2 == 0) b = h.coefficient(i / 2 - p.shift);
        out.entries.emplace_back(i, b);
        if (i % 2 == 0) out.hodge_diag.emplace_back(i / 2, b);
    }
    return out;
}

ChiIndependenceReport verify_chi_independence(int d, HilbCache& cache) {
    if (d < 3) throw std::invalid_argument("verify_chi_independence requires d >= 3");
    ChiIndependenceReport rep;
    rep.d = d;
    const int r = rho(d);
    rep.level = static_cast<long>(d) * d - r + 1;
    const long dim_m = static_cast<long>(d) * d + 1;
    for (long c = -2L * d - 1; c <= -d + 1; ++c) rep.chi0_values.push_back(c);

    if (rep.level >= dim_m) {
        rep.vacuous = true;
        rep.passed = true;
        return rep;
    }

    // Largest colength occurs at the bottom of the window.
    long max_dbar = static_cast<long>(d) * (d - 3) / 2 + 2L * d + 1;
    cache.fill_up_to(static_cast<int>(max_dbar));

    std::vector<LPoly> tails;
    tails.reserve(rep.chi0_values.size());
    for (long c : rep.chi0_values) {
        long dbar = static_cast<long>(d) * (d - 3) / 2 - c;
        long shift = 3L * d + 1 + 2 * c;
        tails.push_back(cache.get(static_cast<int>(dbar)).shifted(shift));
    }

    rep.passed = true;
    for (size_t i = 0; i + 1 < tails.size() && rep.passed; ++i) {
        if (tails[i].eq_mod(tails[i + 1], rep.level)) continue;
        rep.passed = false;
        LPoly diff = (tails[i] - tails[i + 1]).truncate_below(rep.level);
        rep.first_discrepant_degree = diff.min_degree();
    }
    return rep;
}

bool duality_symmetry(int d, long chi) {
    ModuliParams a = params(d, chi);
    ModuliParams b = params(d, -chi);
    return a.chi0 == b.chi0 && a.rho == b.rho && a.dbar == b.dbar && a.shift == b.shift;
}

}  // namespace motivic
