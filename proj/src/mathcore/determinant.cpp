#include "gknn/mathcore/determinant.hpp"

#include <cmath>

namespace gknn::mathcore {

double determinant(const SmallMatrix& m) {
    if (m.rows != m.cols) throw invalid_input_error("determinant: matrix must be square");
    if (m.cols > 8) throw invalid_input_error("determinant: cols must be <= 8");
    if (!m.all_finite()) throw invalid_input_error("determinant: non-finite entries");

    const std::size_t d = m.rows;
    SmallMatrix a = m;
    double det = 1.0;
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < d; ++r)
            if (std::abs(a.at(r, col)) > std::abs(a.at(pivot, col))) pivot = r;
        if (a.at(pivot, col) == 0.0) return 0.0;
        if (pivot != col) {
            for (std::size_t c = 0; c < d; ++c) std::swap(a.at(pivot, c), a.at(col, c));
            det = -det;
        }
        det *= a.at(col, col);
        for (std::size_t r = col + 1; r < d; ++r) {
            const double f = a.at(r, col) / a.at(col, col);
            for (std::size_t c = col + 1; c < d; ++c) a.at(r, c) -= f * a.at(col, c);
        }
    }
    return det;
}

} // namespace gknn::mathcore
