#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "pathalg/geometry.hpp"

namespace pathalg::geom {

namespace {

using std::numbers::pi;
using Cx = std::complex<double>;

// Real orthonormal basis of the real-linear space {w : <p, w> = 0}.
std::vector<Vec> horizontal_frame(const Vec& p)
{
    const auto dim = p.size();
    Eigen::MatrixXcd m(dim, dim);
    m.col(0) = p;
    m.rightCols(dim - 1) = Eigen::MatrixXcd::Identity(dim, dim).leftCols(dim - 1);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(m);
    Eigen::MatrixXcd q = qr.householderQ();
    std::vector<Vec> frame;
    for (Eigen::Index j = 1; j < dim; ++j) {
        Vec f = q.col(j);
        f -= p.dot(f) * p;
        f.normalize();
        frame.push_back(f);
        frame.push_back(Cx{0, 1} * f);
    }
    return frame;
}

std::vector<Vec> real_frame(const RealVec& x)
{
    const auto dim = x.size();
    Eigen::MatrixXd m(dim, dim);
    m.col(0) = x;
    m.rightCols(dim - 1) = Eigen::MatrixXd::Identity(dim, dim).leftCols(dim - 1);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
    Eigen::MatrixXd q = qr.householderQ();
    std::vector<Vec> frame;
    for (Eigen::Index j = 1; j < dim; ++j) {
        RealVec f = q.col(j);
        f -= x.dot(f) * x;
        frame.push_back((f / f.norm()).cast<Cx>());
    }
    return frame;
}

Eigen::MatrixXd random_rotation(Eigen::Index dim, std::mt19937_64& rng)
{
    std::normal_distribution<double> g;
    Eigen::MatrixXd a(dim, dim);
    for (Eigen::Index i = 0; i < a.size(); ++i)
        a.data()[i] = g(rng);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
    return qr.householderQ();
}

std::vector<Vec> rotate(const std::vector<Vec>& frame, const Eigen::MatrixXd& r)
{
    std::vector<Vec> out(frame.size(), Vec::Zero(frame.front().size()));
    for (std::size_t i = 0; i < frame.size(); ++i)
        for (std::size_t j = 0; j < frame.size(); ++j)
            out[i] += r(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) * frame[j];
    return out;
}

struct Chart {
    Vec base;
    std::vector<Vec> frame;
};

// Energy N * sum d(x_i, x_{i+1})^2 as a function of the stacked chart
// coordinates of x_0 .. x_N.
class DiscreteEnergy {
public:
    DiscreteEnergy(std::vector<Chart> charts, int segments) : charts_(std::move(charts)), segments_(segments)
    {
        for (const Chart& c : charts_) {
            offsets_.push_back(dim_);
            dim_ += static_cast<int>(c.frame.size());
        }
    }

    int dim() const { return dim_; }

    double operator()(const RealVec& xi) const
    {
        std::vector<ProjPoint> pts;
        pts.reserve(charts_.size());
        for (std::size_t i = 0; i < charts_.size(); ++i) {
            Vec p = charts_[i].base;
            for (std::size_t j = 0; j < charts_[i].frame.size(); ++j)
                p += xi[offsets_[i] + static_cast<Eigen::Index>(j)] * charts_[i].frame[j];
            pts.emplace_back(std::move(p));
        }
        double e = 0;
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            double d = fs_distance(pts[i], pts[i + 1]);
            e += d * d;
        }
        return segments_ * e;
    }

private:
    std::vector<Chart> charts_;
    std::vector<Eigen::Index> offsets_;
    int dim_ = 0;
    int segments_;
};

}  // namespace

IndexResult critical_index(int n, int k, int N, const IndexTolerances& tol, std::uint64_t chart_seed)
{
    if (n < 1 || n > 3)
        throw GeometryError(fmt::format("critical_index supports 1 <= n <= 3, got n={}", n));
    if (k < 0 || k > 3)
        throw GeometryError(fmt::format("critical_index supports 0 <= k <= 3, got k={}", k));
    if (N < 1 || N < 4 * k)
        throw GeometryError(fmt::format("need N >= 4k segments, got N={} for k={}", N, k));
    if (!(tol.fd_step > 0) || !(tol.zero_tol > 0))
        throw GeometryError("tolerances must be positive");
    const double segment = k * (pi / 2) / N;
    if (segment > pi / 8 + 1e-15)
        throw GeometryError(fmt::format("segment length {} exceeds pi/8", segment));

    // Evenly spaced samples on gamma_{x, i u} over [0, k pi/2].
    RealVec x = RealVec::Unit(n + 1, 0);
    RealVec u = RealVec::Unit(n + 1, 1);
    TangentVector v = normal_vector(x, u);

    std::mt19937_64 rng(chart_seed);
    std::vector<Chart> charts;
    for (int i = 0; i <= N; ++i) {
        ProjPoint p = geodesic(v, segment * i);
        bool endpoint = i == 0 || i == N;
        Chart c;
        if (endpoint) {
            RealVec r = p.real_rep();
            c.base = r.cast<Cx>();
            c.frame = real_frame(r);
        } else {
            c.base = p.rep();
            c.frame = horizontal_frame(c.base);
        }
        if (chart_seed != 0)
            c.frame = rotate(c.frame, random_rotation(static_cast<Eigen::Index>(c.frame.size()), rng));
        charts.push_back(std::move(c));
    }
    DiscreteEnergy energy(std::move(charts), N);
    const int dim = energy.dim();
    const double h = tol.fd_step;
    RealVec zero = RealVec::Zero(dim);
    const double e0 = energy(zero);

    // Five-point stencil: refuse anything that is not a critical point.
    RealVec grad(dim);
    for (int j = 0; j < dim; ++j) {
        auto at = [&](double s) {
            RealVec xi = zero;
            xi[j] = s;
            return energy(xi);
        };
        grad[j] = (-at(2 * h) + 8 * at(h) - 8 * at(-h) + at(-2 * h)) / (12 * h);
    }
    IndexResult result;
    result.dimension = dim;
    result.gradient_norm = grad.norm();
    if (!(result.gradient_norm < tol.grad_tol))
        throw GradientCheckFailed(
            fmt::format("gradient norm {:.3e} at the candidate critical point exceeds {:.1e}", result.gradient_norm, tol.grad_tol));

    Eigen::MatrixXd hess(dim, dim);
    for (int a = 0; a < dim; ++a) {
        RealVec xp = zero, xm = zero;
        xp[a] = h;
        xm[a] = -h;
        hess(a, a) = (energy(xp) - 2 * e0 + energy(xm)) / (h * h);
        for (int b = a + 1; b < dim; ++b) {
            RealVec pp = zero, pm = zero, mp = zero, mm = zero;
            pp[a] = h, pp[b] = h;
            pm[a] = h, pm[b] = -h;
            mp[a] = -h, mp[b] = h;
            mm[a] = -h, mm[b] = -h;
            hess(a, b) = hess(b, a) = (energy(pp) - energy(pm) - energy(mp) + energy(mm)) / (4 * h * h);
        }
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hess, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("symmetric eigensolve did not converge");
    const RealVec& ev = solver.eigenvalues();
    double scale = ev.cwiseAbs().maxCoeff();
    double cut = tol.zero_tol * scale;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        result.eigenvalues.push_back(ev[i]);
        if (ev[i] < -cut)
            ++result.index;
        else if (std::abs(ev[i]) <= cut)
            ++result.nullity;
    }
    return result;
}

}  // namespace pathalg::geom
