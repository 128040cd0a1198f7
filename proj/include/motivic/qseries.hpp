#ifndef MOTIVIC_QSERIES_HPP
#define MOTIVIC_QSERIES_HPP

#include "motivic/lpoly.hpp"

#include <utility>
#include <vector>

namespace motivic {

/// Power series in q truncated at a fixed order, with LPoly coefficients.
/// All arithmetic respects the truncation: the coefficient of q^n in a
/// product depends only on the inputs' coefficients of q^j, j <= n.
class QSeries {
public:
    /// The constant series 1 tracked to order N (N >= 0).
    static QSeries one(int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const LPoly& coefficient(int n) const { return coeffs_.at(n); }
    void set_coefficient(int n, LPoly value) { coeffs_.at(n) = std::move(value); }

    /// Cauchy product truncated at the common order.
    /// Throws std::invalid_argument if the orders differ.
    QSeries operator*(const QSeries& rhs) const;

    bool operator==(const QSeries& rhs) const { return coeffs_ == rhs.coeffs_; }

private:
    explicit QSeries(std::vector<LPoly> coeffs) : coeffs_(std::move(coeffs)) {}

    std::vector<LPoly> coeffs_;  // exactly order+1 entries

    friend QSeries geometric_factor(long a, int k, int order);
};

/// Expansion of 1/(1 - L^a q^k) to the given order: the coefficient of
/// q^{km} is L^{am}, everything else is zero. Requires k >= 1.
QSeries geometric_factor(long a, int k, int order);

/// Truncated product of geometric_factor(a, k, order) over the list,
/// folded in ascending (k, a) order. Factors with k > order contribute
/// only the constant 1 and are skipped.
QSeries product(std::vector<std::pair<long, int>> factors, int order);

}  // namespace motivic

#endif
