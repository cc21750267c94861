#include "pathalg/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

namespace pathalg::geom {

namespace {

using std::numbers::pi;
constexpr std::complex<double> kI{0.0, 1.0};

std::complex<double> inner(const Vec& a, const Vec& b) { return a.dot(b); }  // conjugate-linear in a

}  // namespace

ProjPoint::ProjPoint(Vec rep) : rep_(std::move(rep))
{
    double norm = rep_.norm();
    if (!(norm > 1e-300) || !std::isfinite(norm))
        throw GeometryError("projective point needs a nonzero finite representative");
    rep_ /= norm;
}

ProjPoint ProjPoint::real(const RealVec& x) { return ProjPoint(x.cast<std::complex<double>>()); }

namespace {

// Representative rotated so its largest coordinate is real positive.
Vec dephased(const Vec& v)
{
    Eigen::Index idx = 0;
    v.cwiseAbs().maxCoeff(&idx);
    std::complex<double> c = v[idx];
    return v * (std::conj(c) / std::abs(c));
}

}  // namespace

bool ProjPoint::is_real(double tol) const { return dephased(rep_).imag().cwiseAbs().maxCoeff() <= tol; }

RealVec ProjPoint::real_rep() const
{
    if (!is_real())
        throw GeometryError("point is not in RP^n");
    RealVec x = dephased(rep_).real();
    return x / x.norm();
}

bool ProjPoint::same(const ProjPoint& other, double tol) const
{
    return rep_.size() == other.rep_.size() && std::abs(inner(rep_, other.rep_)) > 1.0 - tol;
}

TangentVector make_tangent(const ProjPoint& base, Vec vec)
{
    if (vec.size() != base.rep().size())
        throw GeometryError("tangent vector has the wrong dimension");
    if (std::abs(inner(base.rep(), vec)) > 1e-10 * std::max(1.0, vec.norm()))
        throw GeometryError("tangent vector is not horizontal");
    return {base, std::move(vec)};
}

double fs_distance(const ProjPoint& p, const ProjPoint& q)
{
    // atan2 keeps precision near 0 and pi/2, where arccos does not.
    std::complex<double> c = inner(p.rep(), q.rep());
    double perp = (q.rep() - c * p.rep()).norm();
    return std::atan2(perp, std::abs(c));
}

ProjPoint geodesic(const TangentVector& v, double s)
{
    if (std::abs(v.vec.norm() - 1.0) > 1e-10)
        throw GeometryError("geodesic needs a unit tangent vector");
    if (std::abs(inner(v.base.rep(), v.vec)) > 1e-10)
        throw GeometryError("geodesic needs a horizontal tangent vector");
    return ProjPoint(std::cos(s) * v.base.rep() + std::sin(s) * v.vec);
}

DiscretePath::DiscretePath(std::vector<ProjPoint> samples, std::vector<double> params)
    : samples_(std::move(samples)), params_(std::move(params))
{
    if (samples_.size() < 2)
        throw GeometryError("a path needs at least two samples");
    if (samples_.size() != params_.size())
        throw GeometryError("one parameter per sample");
    if (std::abs(params_.front()) > 1e-12 || std::abs(params_.back() - 1.0) > 1e-12)
        throw GeometryError("parameters must run from 0 to 1");
    params_.front() = 0.0;
    params_.back() = 1.0;
    for (std::size_t i = 1; i < params_.size(); ++i)
        if (!(params_[i] > params_[i - 1]))
            throw GeometryError("parameters must be strictly increasing");
}

DiscretePath DiscretePath::constant(const ProjPoint& p) { return DiscretePath({p, p}, {0.0, 1.0}); }

bool DiscretePath::endpoints_real(double tol) const { return front().is_real(tol) && back().is_real(tol); }

DiscretePath DiscretePath::reversed() const
{
    std::vector<ProjPoint> s(samples_.rbegin(), samples_.rend());
    std::vector<double> t;
    t.reserve(params_.size());
    for (auto it = params_.rbegin(); it != params_.rend(); ++it)
        t.push_back(1.0 - *it);
    return DiscretePath(std::move(s), std::move(t));
}

double path_energy(const DiscretePath& p)
{
    const auto& s = p.samples();
    const auto& t = p.params();
    double e = 0;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        double d = fs_distance(s[i], s[i + 1]);
        e += d * d / (t[i + 1] - t[i]);
    }
    return e;
}

double path_norm(const DiscretePath& p) { return std::sqrt(path_energy(p)); }

double path_length(const DiscretePath& p)
{
    double l = 0;
    for (std::size_t i = 0; i + 1 < p.samples().size(); ++i)
        l += fs_distance(p.samples()[i], p.samples()[i + 1]);
    return l;
}

double s_min(const DiscretePath& a, const DiscretePath& b)
{
    double fa = path_norm(a);
    double fb = path_norm(b);
    if (fa + fb == 0.0)
        return 0.5;
    return fa / (fa + fb);
}

DiscretePath concat_min(const DiscretePath& a, const DiscretePath& b)
{
    if (fs_distance(a.back(), b.front()) > kEndpointTol)
        throw GeometryError("concatenation needs gamma(1) = delta(0)");
    double fa = path_norm(a);
    double fb = path_norm(b);
    if (fa == 0.0 && fb == 0.0) {
        // s_min undefined; take the midpoint and say so.
        DiscretePath out({a.front(), a.back(), b.back()}, {0.0, 0.5, 1.0});
        out.degenerate_junction = true;
        return out;
    }
    // A constant factor occupies a zero-length interval.
    if (fa == 0.0)
        return b;
    if (fb == 0.0)
        return a;
    double s = fa / (fa + fb);
    std::vector<ProjPoint> samples = a.samples();
    std::vector<double> params;
    params.reserve(a.params().size() + b.params().size());
    for (double t : a.params())
        params.push_back(s * t);
    for (std::size_t i = 1; i < b.samples().size(); ++i) {
        samples.push_back(b.samples()[i]);
        params.push_back(s + (1.0 - s) * b.params()[i]);
    }
    return DiscretePath(std::move(samples), std::move(params));
}

DiscretePath geodesic_path(const TangentVector& v, double span, int segments)
{
    if (segments < 1)
        throw GeometryError("need at least one segment");
    std::vector<ProjPoint> s;
    std::vector<double> t;
    for (int i = 0; i <= segments; ++i) {
        double f = static_cast<double>(i) / segments;
        s.push_back(geodesic(v, f * span));
        t.push_back(f);
    }
    return DiscretePath(std::move(s), std::move(t));
}

namespace {

void require_real_frame(const RealVec& x, const RealVec& u)
{
    if (x.size() != u.size())
        throw GeometryError("x and u differ in dimension");
    if (std::abs(x.norm() - 1.0) > 1e-10 || std::abs(u.norm() - 1.0) > 1e-10 || std::abs(x.dot(u)) > 1e-10)
        throw GeometryError("x and u must be orthonormal real vectors");
}

}  // namespace

TangentVector normal_vector(const RealVec& x, const RealVec& u)
{
    require_real_frame(x, u);
    return {ProjPoint::real(x), kI * u.cast<std::complex<double>>()};
}

namespace {

struct LineFrame {
    RealVec x;
    RealVec u;
};

LineFrame line_frame(const TangentVector& v)
{
    if (!v.base.is_real())
        throw GeometryError("half circles start on RP^n");
    RealVec x = v.base.real_rep();
    // Align the phase of vec with the chosen real representative of x.
    std::complex<double> phase = inner(x.cast<std::complex<double>>(), v.base.rep());
    Vec vec = v.vec * std::conj(phase / std::abs(phase));
    Vec u = -kI * vec;  // v = i u
    if (u.imag().cwiseAbs().maxCoeff() > 1e-9)
        throw GeometryError("half circles need a normal vector i*u with u real");
    RealVec ur = u.real();
    require_real_frame(x, ur);
    return {x, ur};
}

double normalize_theta(double theta)
{
    if (!std::isfinite(theta))
        throw GeometryError("theta must be finite");
    double t = std::fmod(theta, pi);
    if (t < 0)
        t += pi;
    if (t >= pi)
        t = 0;
    return t;
}

}  // namespace

ProjPoint half_circle_end(const TangentVector& v, double theta)
{
    // -I v with v = i u is u itself.
    LineFrame f = line_frame(v);
    TangentVector w{ProjPoint::real(f.x), f.u.cast<std::complex<double>>()};
    return geodesic(w, theta);
}

HalfCircle half_circle(const TangentVector& v, double theta, int samples)
{
    if (samples < 1)
        throw GeometryError("need at least one segment");
    LineFrame f = line_frame(v);
    double th = normalize_theta(theta);
    ProjPoint x = ProjPoint::real(f.x);
    if (th == 0.0)
        return {DiscretePath::constant(x), x, 0.0};

    // The line through x, u is a round sphere of radius 1/2; a x + b u maps to
    // ((|a|^2 - |b|^2)/2, Re(conj(a) b), Im(conj(a) b)), x to (1/2, 0, 0), and
    // the real points to the equator. The direction i u points to X3 > 0.
    using V3 = Eigen::Vector3d;
    V3 p0(0.5, 0, 0);
    V3 p1(0.5 * std::cos(2 * th), 0.5 * std::sin(2 * th), 0);
    V3 mid = 0.5 * (p0 + p1);
    double r = 0.5 * std::sin(th);
    V3 e = (p1 - p0).normalized();
    V3 up(0, 0, 1);

    Vec xc = f.x.cast<std::complex<double>>();
    Vec uc = f.u.cast<std::complex<double>>();
    std::vector<ProjPoint> pts;
    std::vector<double> params;
    for (int i = 0; i <= samples; ++i) {
        double t = static_cast<double>(i) / samples;
        V3 X = mid - r * std::cos(pi * t) * e + r * std::sin(pi * t) * up;
        std::complex<double> w(X[1], X[2]);  // conj(a) b
        std::complex<double> a, b;
        if (X[0] >= 0) {
            a = std::sqrt(std::max(0.0, 0.5 + X[0]));
            b = w / a;
        } else {
            b = std::sqrt(std::max(0.0, 0.5 - X[0]));
            a = std::conj(w) / b;
        }
        pts.emplace_back(a * xc + b * uc);
        params.push_back(t);
    }
    ProjPoint end = ProjPoint::real(std::cos(th) * f.x + std::sin(th) * f.u);
    return {DiscretePath(std::move(pts), std::move(params)), end, th};
}

RealVec hopf_vector(const RealVec& x, Hopf which)
{
    const auto size = x.size();
    const int n = static_cast<int>(size) - 1;
    if (which == Hopf::J && n % 2 == 0)
        throw GeometryError(fmt::format("J needs n odd, got n={}", n));
    if (which != Hopf::J && n % 4 != 3)
        throw GeometryError(fmt::format("J1, J2, J3 need n = 3 mod 4, got n={}", n));
    RealVec out(size);
    if (which == Hopf::J || which == Hopf::J1) {
        for (Eigen::Index i = 0; i < size; i += 2) {
            out[i] = -x[i + 1];
            out[i + 1] = x[i];
        }
    } else {
        for (Eigen::Index i = 0; i < size; i += 4) {
            if (which == Hopf::J2) {
                out[i] = -x[i + 2];
                out[i + 1] = x[i + 3];
                out[i + 2] = x[i];
                out[i + 3] = -x[i + 1];
            } else {
                out[i] = -x[i + 3];
                out[i + 1] = -x[i + 2];
                out[i + 2] = x[i + 1];
                out[i + 3] = x[i];
            }
        }
    }
    return out;
}

RealVec random_real_unit(int n, std::mt19937_64& rng)
{
    std::normal_distribution<double> g;
    RealVec x(n + 1);
    do {
        for (auto& c : x)
            c = g(rng);
    } while (x.norm() < 1e-6);
    return x / x.norm();
}

RealVec random_real_orthogonal(const RealVec& x, std::mt19937_64& rng)
{
    RealVec u;
    do {
        u = random_real_unit(static_cast<int>(x.size()) - 1, rng);
        u -= u.dot(x) * x;
    } while (u.norm() < 1e-6);
    return u / u.norm();
}

ProjPoint random_point(int n, std::mt19937_64& rng)
{
    std::normal_distribution<double> g;
    Vec z(n + 1);
    for (auto& c : z)
        c = {g(rng), g(rng)};
    return ProjPoint(z);
}

DiscretePath random_path_from(const ProjPoint& start, std::mt19937_64& rng, int pieces)
{
    if (pieces < 1)
        throw GeometryError("need at least one piece");
    const int n = start.n();
    std::vector<ProjPoint> s{start};
    for (int i = 1; i < pieces; ++i)
        s.push_back(random_point(n, rng));
    s.push_back(ProjPoint::real(random_real_unit(n, rng)));

    std::uniform_real_distribution<double> u(0.05, 1.0);
    std::vector<double> t{0.0};
    double acc = 0;
    std::vector<double> steps;
    for (int i = 0; i < pieces; ++i)
        steps.push_back(u(rng));
    double total = 0;
    for (double d : steps)
        total += d;
    for (int i = 0; i + 1 < pieces; ++i) {
        acc += steps[static_cast<std::size_t>(i)] / total;
        t.push_back(acc);
    }
    t.push_back(1.0);
    return DiscretePath(std::move(s), std::move(t));
}

DiscretePath random_path(int n, std::mt19937_64& rng, int pieces)
{
    return random_path_from(ProjPoint::real(random_real_unit(n, rng)), rng, pieces);
}

YkSample sample_yk(int n, int k, std::mt19937_64& rng, int samples_per_arc)
{
    if (n < 1 || k < 1)
        throw GeometryError("sample_yk needs n >= 1 and k >= 1");
    std::uniform_real_distribution<double> angle(0.0, pi);
    RealVec x = random_real_unit(n, rng);
    YkSample out{DiscretePath::constant(ProjPoint::real(x)), {}, (k + 1) * n};
    bool first = true;
    for (int j = 0; j < k; ++j) {
        RealVec u = random_real_orthogonal(x, rng);
        double theta = angle(rng);
        HalfCircle c = half_circle(normal_vector(x, u), theta, samples_per_arc);
        out.thetas.push_back(c.theta);
        out.path = first ? c.path : concat_min(out.path, c.path);
        first = false;
        x = c.end.real_rep();
    }
    return out;
}

YkSample critical_yk(int n, int k, int samples_per_arc)
{
    if (n < 1 || k < 1)
        throw GeometryError("critical_yk needs n >= 1 and k >= 1");
    RealVec x = RealVec::Unit(n + 1, 0);
    RealVec u = RealVec::Unit(n + 1, 1);
    YkSample out{DiscretePath::constant(ProjPoint::real(x)), {}, (k + 1) * n};
    for (int j = 0; j < k; ++j) {
        HalfCircle c = half_circle(normal_vector(x, u), pi / 2, samples_per_arc);
        out.thetas.push_back(pi / 2);
        out.path = j == 0 ? c.path : concat_min(out.path, c.path);
        std::swap(x, u);
    }
    return out;
}

}  // namespace pathalg::geom
