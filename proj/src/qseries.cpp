#include "motivic/qseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace motivic {

QSeries QSeries::one(int order) {
    if (order < 0) throw std::invalid_argument("QSeries order must be >= 0");
    std::vector<LPoly> c(order + 1);
    c[0] = LPoly::one();
    return QSeries(std::move(c));
}

QSeries QSeries::operator*(const QSeries& rhs) const {
    if (order() != rhs.order())
        throw std::invalid_argument("QSeries order mismatch in product");
    const int n = order();
    std::vector<LPoly> out(n + 1);
    for (int i = 0; i <= n; ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (rhs.coeffs_[j].is_zero()) continue;
            out[i + j] = out[i + j] + coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return QSeries(std::move(out));
}

QSeries geometric_factor(long a, int k, int order) {
    if (k < 1) throw std::invalid_argument("geometric_factor requires k >= 1");
    QSeries s = QSeries::one(order);
    for (int m = 1; m * k <= order; ++m)
        s.set_coefficient(m * k, LPoly::monomial(a * m, 1));
    return s;
}

QSeries product(std::vector<std::pair<long, int>> factors, int order) {
    std::sort(factors.begin(), factors.end(),
              [](const auto& x, const auto& y) {
                  return std::tie(x.second, x.first) < std::tie(y.second, y.first);
              });
    QSeries acc = QSeries::one(order);
    for (const auto& [a, k] : factors) {
        if (k < 1) throw std::invalid_argument("product requires all k >= 1");
        if (k > order) continue;  // contributes only the constant 1
        acc = acc * geometric_factor(a, k, order);
    }
    return acc;
}

}  // namespace motivic
