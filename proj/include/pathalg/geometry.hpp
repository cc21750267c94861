#pragma once

// Fubini-Study geometry of CP^n around RP^n: geodesics, vertical half
// circles, piecewise-geodesic paths and their norm, min-energy concatenation.

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace pathalg::geom {

using Vec = Eigen::VectorXcd;
using RealVec = Eigen::VectorXd;

inline constexpr double kUnitTol = 1e-12;
inline constexpr double kEndpointTol = 1e-9;

class GeometryError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Point of CP^n; the representative is a unit vector, equality is up to phase.
class ProjPoint {
public:
    ProjPoint() = default;
    explicit ProjPoint(Vec rep);  // normalizes; throws on zero
    static ProjPoint real(const RealVec& x);

    const Vec& rep() const { return rep_; }
    int n() const { return static_cast<int>(rep_.size()) - 1; }
    bool is_real(double tol = 1e-9) const;
    RealVec real_rep() const;  // unit real representative; throws if not real
    bool same(const ProjPoint& other, double tol = kUnitTol) const;

private:
    Vec rep_;
};

// Horizontal lift at base.rep(): <rep, vec> = 0.
struct TangentVector {
    ProjPoint base;
    Vec vec;
};

TangentVector make_tangent(const ProjPoint& base, Vec vec);  // checks orthogonality

double fs_distance(const ProjPoint& p, const ProjPoint& q);

// exp_x(s v) for unit horizontal v.
ProjPoint geodesic(const TangentVector& v, double s);

class DiscretePath {
public:
    DiscretePath(std::vector<ProjPoint> samples, std::vector<double> params);
    static DiscretePath constant(const ProjPoint& p);

    const std::vector<ProjPoint>& samples() const { return samples_; }
    const std::vector<double>& params() const { return params_; }
    const ProjPoint& front() const { return samples_.front(); }
    const ProjPoint& back() const { return samples_.back(); }
    bool endpoints_real(double tol = 1e-9) const;
    DiscretePath reversed() const;

    // Set when the path came out of concatenating two constant paths.
    bool degenerate_junction = false;

private:
    std::vector<ProjPoint> samples_;
    std::vector<double> params_;
};

double path_energy(const DiscretePath& p);
double path_norm(const DiscretePath& p);
double path_length(const DiscretePath& p);

DiscretePath concat_min(const DiscretePath& a, const DiscretePath& b);
// Junction parameter used by concat_min.
double s_min(const DiscretePath& a, const DiscretePath& b);

// Geodesic arc of x in direction v over [0, span], `segments` equal pieces.
DiscretePath geodesic_path(const TangentVector& v, double span, int segments);

// Normal vector i*u at a real point, u real unit orthogonal to x.
TangentVector normal_vector(const RealVec& x, const RealVec& u);

struct HalfCircle {
    DiscretePath path;
    ProjPoint end;  // x' = exp_x(-theta I v)
    double theta;   // normalized into [0, pi)
};

// Vertical half circle C_{x,v,theta}; v = i u must be a unit normal at the real
// point x. theta is taken mod pi.
HalfCircle half_circle(const TangentVector& v, double theta, int samples);
// x' computed directly from the geodesic through x with initial velocity -Iv.
ProjPoint half_circle_end(const TangentVector& v, double theta);

enum class Hopf { J, J1, J2, J3 };
// Unit tangent to S^n at x; the normal section is i * result.
RealVec hopf_vector(const RealVec& x, Hopf which);

struct YkSample {
    DiscretePath path;
    std::vector<double> thetas;
    int parameter_count;  // (k+1) n
};

YkSample sample_yk(int n, int k, std::mt19937_64& rng, int samples_per_arc = 16);
// All thetas pi/2 on one line: the critical geodesic of length k pi/2.
YkSample critical_yk(int n, int k, int samples_per_arc = 16);

RealVec random_real_unit(int n, std::mt19937_64& rng);
// Random real unit vector orthogonal to x.
RealVec random_real_orthogonal(const RealVec& x, std::mt19937_64& rng);
ProjPoint random_point(int n, std::mt19937_64& rng);

// Random path with real endpoints, `pieces` random geodesic pieces and random
// (increasing) parameters.
DiscretePath random_path(int n, std::mt19937_64& rng, int pieces);
DiscretePath random_path_from(const ProjPoint& start, std::mt19937_64& rng, int pieces);

struct IndexTolerances {
    double fd_step = 1e-4;
    double zero_tol = 1e-3;
    double grad_tol = 1e-8;
};

struct IndexResult {
    int index = 0;
    int nullity = 0;
    double gradient_norm = 0;
    std::vector<double> eigenvalues;  // ascending
    int dimension = 0;
};

class GradientCheckFailed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Index and nullity of the discrete energy at the critical broken geodesic of
// level k (k = 0: constant paths) with N segments. A nonzero chart_seed rotates
// the chart frames randomly.
IndexResult critical_index(int n, int k, int N, const IndexTolerances& tol = {}, std::uint64_t chart_seed = 0);

inline int expected_index(int n, int k) { return k == 0 ? 0 : 1 + (k - 1) * n; }
inline int expected_nullity(int n, int k) { return k == 0 ? n : 2 * n - 1; }

}  // namespace pathalg::geom
