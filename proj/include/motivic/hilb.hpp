#ifndef MOTIVIC_HILB_HPP
#define MOTIVIC_HILB_HPP

#include "motivic/lpoly.hpp"

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace motivic {

/// Motivic class of the Hilbert scheme of n points on the projective plane,
/// computed as the coefficient of q^n in the product over k >= 1 of
///
///   1 / ((1 - L^{k-1} q^k) (1 - L^k q^k) (1 - L^{k+1} q^k)),
///
/// the surface product formula specialized to class 1 + L + L^2. The class
/// is a palindromic polynomial supported in [0, 2n] with constant term 1.
/// Throws std::invalid_argument for n < 0.
LPoly hilb_class(int n);

/// Classes for all 0 <= n <= max_n extracted from a single expansion.
std::vector<LPoly> hilb_classes_up_to(int max_n);

/// Number of ordered triples of partitions with total size n, i.e. the
/// topological Euler number of the Hilbert scheme of n plane points
/// (torus fixed points are triples of monomial ideals). Implemented by
/// the pentagonal-number recurrence for p(n) followed by a triple
/// convolution over plain integer vectors; shares no code with the
/// q-series expansion, so the two paths check each other.
mpz_class euler_oracle(int n);

/// i-th Betti number of the Hilbert scheme of n points: the coefficient
/// of L^{i/2} in hilb_class(n) for even i, zero for odd or out-of-range i.
mpz_class betti_hilb(int n, long i);

/// Bump when the on-disk layout or the formula changes.
inline constexpr const char* kHilbCacheVersion = "1";

/// Read-mostly persistent store of Hilbert classes. The cache file is JSON
/// {"version": string, "classes": {"n": LPoly-json}}; a version mismatch
/// discards the file. Writes go through a temp file plus rename so that
/// concurrent invocations never observe a torn file.
class HilbCache {
public:
    explicit HilbCache(std::filesystem::path dir);

    /// Cached class if present.
    std::optional<LPoly> lookup(int n) const;

    /// Returns the class for n, computing and persisting classes up to n
    /// on a miss.
    LPoly get(int n);

    /// Computes and persists everything up to max_n in one expansion.
    void fill_up_to(int max_n);

    int max_cached() const;
    void clear();

    const std::filesystem::path& file_path() const { return file_; }

private:
    void load();
    void save() const;

    std::filesystem::path file_;
    std::vector<LPoly> classes_;  // contiguous from n = 0
    mutable std::mutex mu_;
};

/// Cache directory resolution: explicit flag value wins, then the
/// MOTIVIC_CACHE_DIR environment variable, then a default under the
/// user cache directory.
std::filesystem::path resolve_cache_dir(const std::string& flag_value);

}  // namespace motivic

#endif
