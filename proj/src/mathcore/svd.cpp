#include "gknn/mathcore/svd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gknn::mathcore {

SmallMatrix::SmallMatrix(std::size_t r, std::size_t c, double fill)
    : rows(r), cols(c), entries(r * c, fill) {
    if (r < 1 || c < 1) throw invalid_input_error("SmallMatrix: rows and cols must be >= 1");
}

SmallMatrix::SmallMatrix(std::size_t r, std::size_t c, std::vector<double> data)
    : rows(r), cols(c), entries(std::move(data)) {
    if (r < 1 || c < 1) throw invalid_input_error("SmallMatrix: rows and cols must be >= 1");
    if (entries.size() != r * c)
        throw invalid_input_error("SmallMatrix: entry count does not match rows*cols");
}

bool SmallMatrix::all_finite() const {
    for (double v : entries)
        if (!std::isfinite(v)) return false;
    return true;
}

SmallMatrix SmallMatrix::identity(std::size_t d) {
    SmallMatrix m(d, d, 0.0);
    for (std::size_t i = 0; i < d; ++i) m.at(i, i) = 1.0;
    return m;
}

namespace {

double off_diagonal_frobenius(const SmallMatrix& a) {
    double s = 0.0;
    for (std::size_t p = 0; p < a.rows; ++p)
        for (std::size_t q = 0; q < a.cols; ++q)
            if (p != q) s += a.at(p, q) * a.at(p, q);
    return std::sqrt(s);
}

double frobenius(const SmallMatrix& a) {
    double s = 0.0;
    for (double v : a.entries) s += v * v;
    return std::sqrt(s);
}

} // namespace

EigenResult symmetric_jacobi_eigen(const SmallMatrix& sym) {
    if (sym.rows != sym.cols)
        throw invalid_input_error("symmetric_jacobi_eigen: matrix must be square");
    if (!sym.all_finite())
        throw invalid_input_error("symmetric_jacobi_eigen: non-finite entries");
    const std::size_t d = sym.rows;

    SmallMatrix a = sym;
    SmallMatrix v = SmallMatrix::identity(d);
    const double norm = frobenius(a);
    const double stop = 1e-14 * std::max(norm, 1e-300);
    constexpr int max_sweeps = 64;

    for (int sweep = 0; sweep < max_sweeps && off_diagonal_frobenius(a) > stop; ++sweep) {
        for (std::size_t p = 0; p + 1 < d; ++p) {
            for (std::size_t q = p + 1; q < d; ++q) {
                const double apq = a.at(p, q);
                if (apq == 0.0) continue;
                const double tau = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                const double app = a.at(p, p);
                const double aqq = a.at(q, q);
                a.at(p, p) = app - t * apq;
                a.at(q, q) = aqq + t * apq;
                a.at(p, q) = 0.0;
                a.at(q, p) = 0.0;
                for (std::size_t r = 0; r < d; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = a.at(r, p);
                    const double arq = a.at(r, q);
                    a.at(r, p) = c * arp - s * arq;
                    a.at(p, r) = a.at(r, p);
                    a.at(r, q) = s * arp + c * arq;
                    a.at(q, r) = a.at(r, q);
                }
                for (std::size_t r = 0; r < d; ++r) {
                    const double vrp = v.at(r, p);
                    const double vrq = v.at(r, q);
                    v.at(r, p) = c * vrp - s * vrq;
                    v.at(r, q) = s * vrp + c * vrq;
                }
            }
        }
    }

    // Sort eigenpairs nonincreasing; ties keep the lower original column.
    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a.at(i, i) > a.at(j, j);
    });

    EigenResult out{std::vector<double>(d), SmallMatrix(d, d, 0.0)};
    for (std::size_t l = 0; l < d; ++l) {
        out.values[l] = a.at(order[l], order[l]);
        for (std::size_t r = 0; r < d; ++r) out.vectors.at(r, l) = v.at(r, order[l]);
    }
    return out;
}

std::vector<double> SvdResult::singular_vector(std::size_t l) const {
    const std::size_t d = right_singular_vectors.rows;
    std::vector<double> out(d);
    for (std::size_t r = 0; r < d; ++r) out[r] = right_singular_vectors.at(r, l);
    return out;
}

SvdResult svd_thin(const SmallMatrix& m) {
    if (m.cols > 64) throw invalid_input_error("svd_thin: cols must be <= 64");
    if (!m.all_finite()) throw invalid_input_error("svd_thin: non-finite entries");
    const std::size_t d = m.cols;

    SmallMatrix gram(d, d, 0.0);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i; j < d; ++j) {
            double s = 0.0;
            for (std::size_t r = 0; r < m.rows; ++r) s += m.at(r, i) * m.at(r, j);
            gram.at(i, j) = s;
            gram.at(j, i) = s;
        }
    }

    EigenResult eig = symmetric_jacobi_eigen(gram);
    SvdResult out{std::vector<double>(d), std::move(eig.vectors)};
    for (std::size_t l = 0; l < d; ++l) {
        const double lambda = std::max(eig.values[l], 0.0);
        double sigma = std::sqrt(lambda);
        if (sigma < 1e-300) sigma = 0.0;
        out.singular_values[l] = sigma;
    }
    return out;
}

} // namespace gknn::mathcore
