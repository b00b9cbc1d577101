#include "semican/geom.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <random>
#include <stdexcept>

namespace semican::geom {

namespace {

struct LieElement {
    RatMatrix h1;  // gl(d1)
    RatMatrix h2;  // gl(d2)
};

LieElement basis_element(DimVector dim, std::size_t k) {
    const auto d1 = static_cast<std::size_t>(dim.d1), d2 = static_cast<std::size_t>(dim.d2);
    LieElement e{RatMatrix(d1, d1), RatMatrix(d2, d2)};
    if (k < d1 * d1)
        e.h1(k / d1, k % d1) = 1;
    else {
        k -= d1 * d1;
        e.h2(k / d2, k % d2) = 1;
    }
    return e;
}

RatMatrix act_x(const LieElement& h, const RatMatrix& x) { return h.h2 * x - x * h.h1; }
RatMatrix act_y(const LieElement& h, const RatMatrix& y) { return h.h1 * y - y * h.h2; }

Rational trace_pairing(const RatMatrix& a, const RatMatrix& b) {
    Rational tr = 0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) tr += a(i, k) * b(k, i);
    return tr;
}

std::vector<LieElement> lie_basis(DimVector dim) {
    std::vector<LieElement> out;
    for (std::size_t k = 0; k < lie_dim(dim); ++k) out.push_back(basis_element(dim, k));
    return out;
}

// --- floating point part ---------------------------------------------------

using Eigen::MatrixXd;

MatrixXd gaussian(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
    std::normal_distribution<double> nd;
    MatrixXd m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = nd(rng);
    return m;
}

MatrixXd random_rank(int rows, int cols, int r, std::mt19937_64& rng) {
    if (r == 0) return MatrixXd::Zero(rows, cols);
    return gaussian(rows, r, rng) * gaussian(r, cols, rng);
}

// Orthonormal basis of the orbit tangent space {h2 x - x h1}, of known dimension.
MatrixXd tangent_basis(const MatrixXd& x, int dimension) {
    const auto d2 = x.rows(), d1 = x.cols();
    MatrixXd map(d2 * d1, d1 * d1 + d2 * d2);
    Eigen::Index col = 0;
    auto put = [&](const MatrixXd& img) {
        for (Eigen::Index i = 0; i < d2; ++i)
            for (Eigen::Index j = 0; j < d1; ++j) map(i * d1 + j, col) = img(i, j);
        ++col;
    };
    for (Eigen::Index a = 0; a < d1; ++a)
        for (Eigen::Index b = 0; b < d1; ++b) put(-x.col(a) * Eigen::RowVectorXd::Unit(d1, b));
    for (Eigen::Index a = 0; a < d2; ++a)
        for (Eigen::Index b = 0; b < d2; ++b) put(Eigen::VectorXd::Unit(d2, a) * x.row(b));
    if (dimension == 0) return MatrixXd(d2 * d1, 0);
    Eigen::JacobiSVD<MatrixXd> svd(map, Eigen::ComputeThinU);
    return svd.matrixU().leftCols(dimension);
}

// Largest principal-angle sine of V against W.
double subspace_distance(const MatrixXd& qv, const MatrixXd& qw) {
    if (qv.cols() == 0) return 0.0;
    const MatrixXd residual = qv - qw * (qw.transpose() * qv);
    Eigen::JacobiSVD<MatrixXd> svd(residual);
    return svd.singularValues()(0);
}

bool has_rank(const MatrixXd& m, int r, double scale) {
    Eigen::JacobiSVD<MatrixXd> svd(m);
    const auto& sv = svd.singularValues();
    if (r > 0 && sv(r - 1) < 1e-3 * scale) return false;
    return r >= sv.size() || sv(r) < 1e-8;
}

}  // namespace

bool PairPoint::valid() const {
    if (y.rows() != x.cols() || y.cols() != x.rows()) return false;
    return (x * y).is_zero() && (y * x).is_zero();
}

PairPoint from_class(const core::PiModClass& c) {
    auto p = core::representative_pair(c);
    return {std::move(p.x), std::move(p.y)};
}

std::size_t lie_dim(DimVector dim) {
    return static_cast<std::size_t>(dim.d1 * dim.d1 + dim.d2 * dim.d2);
}

RatMatrix bilinear_form_B(const PairPoint& p) {
    if (!p.valid()) throw std::invalid_argument("bilinear_form_B: not a nilpotent pair");
    const auto basis = lie_basis(p.dim());
    std::vector<RatMatrix> hx, hy;
    for (const auto& e : basis) {
        hx.push_back(act_x(e, p.x));
        hy.push_back(act_y(e, p.y));
    }
    RatMatrix b(basis.size(), basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k)
        for (std::size_t l = 0; l < basis.size(); ++l) b(k, l) = trace_pairing(hx[k], hy[l]);
    return b;
}

RatMatrix hessian(const PairPoint& p) {
    const RatMatrix b = bilinear_form_B(p);
    const auto basis = lie_basis(p.dim());
    const std::size_t n = basis.size();
    std::vector<RatMatrix> hx, hy;
    for (const auto& e : basis) {
        hx.push_back(act_x(e, p.x));
        hy.push_back(act_y(e, p.y));
    }
    RatMatrix h(2 * n, 2 * n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
            h(k, l) = (trace_pairing(act_x(basis[k], hx[l]), p.y) + trace_pairing(act_x(basis[l], hx[k]), p.y)) / 2;
            h(n + k, n + l) =
                (trace_pairing(p.x, act_y(basis[k], hy[l])) + trace_pairing(p.x, act_y(basis[l], hy[k]))) / 2;
            h(k, n + l) = b(k, l);
            h(n + l, k) = b(k, l);
        }
    return h;
}

HessianCheck hessian_check(const PairPoint& p) {
    const auto dim = p.dim();
    HessianCheck out;
    out.rank_B = rank(bilinear_form_B(p));
    out.rank_H = rank(hessian(p));
    const int r = static_cast<int>(rank(p.x)), s = static_cast<int>(rank(p.y));
    out.expected = core::orbit_dim(Orbit{dim, r}) + core::orbit_dim(Orbit{DimVector{dim.d2, dim.d1}, s}) -
                   dim.lambda_dim();
    out.tangent_dim = conormal_tangent(p).size();
    out.generic = out.tangent_dim == static_cast<std::size_t>(dim.lambda_dim());
    return out;
}

bool hessian_rank_check(const PairPoint& p) { return hessian_check(p).ok(); }

std::vector<RatVector> conormal_tangent(const PairPoint& p) {
    if (!p.valid()) throw std::invalid_argument("conormal_tangent: not a nilpotent pair");
    const auto d1 = p.x.cols(), d2 = p.x.rows();
    const std::size_t nu = d2 * d1;
    // rows: y u + v x (d1 x d1) then u y + x v (d2 x d2)
    RatMatrix sys(d1 * d1 + d2 * d2, 2 * nu);
    auto u_col = [&](std::size_t i, std::size_t j) { return i * d1 + j; };       // u(i, j), i < d2
    auto v_col = [&](std::size_t i, std::size_t j) { return nu + i * d2 + j; };  // v(i, j), i < d1
    for (std::size_t a = 0; a < d1; ++a)
        for (std::size_t b = 0; b < d1; ++b) {
            const std::size_t row = a * d1 + b;
            for (std::size_t k = 0; k < d2; ++k) {
                sys(row, u_col(k, b)) += p.y(a, k);
                sys(row, v_col(a, k)) += p.x(k, b);
            }
        }
    for (std::size_t a = 0; a < d2; ++a)
        for (std::size_t b = 0; b < d2; ++b) {
            const std::size_t row = d1 * d1 + a * d2 + b;
            for (std::size_t k = 0; k < d1; ++k) {
                sys(row, u_col(a, k)) += p.y(k, b);
                sys(row, v_col(k, b)) += p.x(a, k);
            }
        }
    return nullspace(sys);
}

WRegReport w_regularity_sample(const Orbit& inner, const Orbit& outer, const WRegOptions& opts) {
    core::validate(inner);
    core::validate(outer);
    if (inner.dim != outer.dim) throw std::invalid_argument("w_regularity_sample: orbits of different spaces");
    if (inner.r >= outer.r) throw std::invalid_argument("w_regularity_sample: need inner.r < outer.r");

    const int d1 = inner.dim.d1, d2 = inner.dim.d2;
    const int dim_in = core::orbit_dim(inner), dim_out = core::orbit_dim(outer);
    WRegReport rep{inner, outer, opts.seed, {}, {}, 0, false};
    for (int k = 0; k <= opts.halvings; ++k) rep.distances.push_back(opts.base_distance / double(1 << k));
    rep.max_ratio.assign(rep.distances.size(), 0.0);

    std::mt19937_64 rng(opts.seed);
    for (int sample = 0; sample < opts.n_samples; ++sample) {
        for (int attempt = 0;; ++attempt) {
            if (attempt == 20) throw std::runtime_error("w_regularity_sample: could not draw a generic perturbation");
            // x' = a b; x'' = (a + e p)(b + e q) + e c, so neither image nor kernel is nested
            const MatrixXd a = gaussian(d2, inner.r, rng), b = gaussian(inner.r, d1, rng);
            const MatrixXd p = gaussian(d2, inner.r, rng), q = gaussian(inner.r, d1, rng);
            const MatrixXd c = random_rank(d2, d1, outer.r - inner.r, rng);
            const MatrixXd x_in = a * b;
            std::vector<double> ratios;
            bool degenerate = !has_rank(x_in, inner.r, 1.0);
            const MatrixXd q_in = tangent_basis(x_in, dim_in);
            for (double eps : rep.distances) {
                if (degenerate) break;
                const MatrixXd x_out = (a + eps * p) * (b + eps * q) + eps * c;
                if (!has_rank(x_out, outer.r, eps)) {
                    degenerate = true;
                    break;
                }
                ratios.push_back(subspace_distance(q_in, tangent_basis(x_out, dim_out)) / (x_out - x_in).norm());
            }
            if (degenerate) {
                ++rep.resampled;
                continue;
            }
            for (std::size_t k = 0; k < ratios.size(); ++k) rep.max_ratio[k] = std::max(rep.max_ratio[k], ratios[k]);
            break;
        }
    }

    const double peak = *std::max_element(rep.max_ratio.begin(), rep.max_ratio.end());
    rep.pass = peak < opts.tiny || peak <= opts.threshold * std::max(rep.max_ratio.front(), opts.tiny);
    return rep;
}

}  // namespace semican::geom
