#include "pathalg/geom_checks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "pathalg/geometry.hpp"

namespace pathalg::geom {

namespace {

using std::numbers::pi;

constexpr double kAdditivityTol = 1e-9;
constexpr double kInvariantTol = 1e-9;
constexpr double kGramTol = 1e-10;

int dim_for(const TrialConfig& cfg, int trial)
{
    if (cfg.dims.empty())
        throw std::invalid_argument("no dimensions to sample");
    return cfg.dims[static_cast<std::size_t>(trial) % cfg.dims.size()];
}

void require_trials(const TrialConfig& cfg)
{
    if (cfg.trials < 1)
        throw std::invalid_argument("need at least one trial");
}

// Distance of z from the complex span of orthonormal real x, u.
double off_line(const Vec& z, const RealVec& x, const RealVec& u)
{
    Vec xc = x.cast<std::complex<double>>();
    Vec uc = u.cast<std::complex<double>>();
    Vec r = z - xc.dot(z) * xc - uc.dot(z) * uc;
    return r.norm();
}

struct Maxima {
    std::vector<double> v;
    void take(std::size_t i, double x)
    {
        if (v.size() <= i)
            v.resize(i + 1, 0.0);
        v[i] = std::max(v[i], x);
    }
};

Maxima merge(const std::vector<Maxima>& parts)
{
    Maxima m;
    for (const auto& p : parts)
        for (std::size_t i = 0; i < p.v.size(); ++i)
            m.take(i, p.v[i]);
    return m;
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t root, int trial)
{
    std::seed_seq seq{static_cast<std::uint32_t>(root), static_cast<std::uint32_t>(root >> 32),
                      static_cast<std::uint32_t>(trial)};
    std::uint32_t words[2];
    seq.generate(words, words + 2);
    return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

CheckReport concat_check(const TrialConfig& cfg)
{
    require_trials(cfg);
    enum { Additivity, Associativity, Reversal, TripleAdditivity };
    auto parts = run_trials(cfg.trials, cfg.jobs, [&](int t) {
        std::mt19937_64 rng(trial_seed(cfg.seed, t));
        int n = dim_for(cfg, t);
        std::uniform_int_distribution<int> pieces(1, 4);
        DiscretePath a = random_path(n, rng, pieces(rng));
        DiscretePath b = random_path_from(a.back(), rng, pieces(rng));
        DiscretePath c = random_path_from(b.back(), rng, pieces(rng));
        Maxima m;
        double fa = path_norm(a), fb = path_norm(b), fc = path_norm(c);
        m.take(Additivity, std::abs(path_norm(concat_min(a, b)) - fa - fb));
        DiscretePath left = concat_min(concat_min(a, b), c);
        DiscretePath right = concat_min(a, concat_min(b, c));
        double gap = left.params().size() == right.params().size() ? 0.0 : 1.0;
        for (std::size_t i = 0; gap < 1.0 && i < left.params().size(); ++i)
            gap = std::max(gap, std::abs(left.params()[i] - right.params()[i]));
        m.take(Associativity, gap);
        m.take(Reversal, std::abs(path_norm(a.reversed()) - fa));
        m.take(TripleAdditivity, std::abs(path_norm(left) - fa - fb - fc));
        return m;
    });
    Maxima m = merge(parts);
    m.take(TripleAdditivity, 0);

    CheckReport r{fmt::format("concatenation ({} trials, seed {})", cfg.trials, cfg.seed), {}};
    r.add("F(c_min(g,d)) = F(g) + F(d)", m.v[Additivity] < kAdditivityTol,
          fmt::format("max error {:.3e}", m.v[Additivity]));
    r.add("c_min associative (breakpoints)", m.v[Associativity] < kAdditivityTol,
          fmt::format("max breakpoint gap {:.3e}", m.v[Associativity]));
    r.add("F additive over triples", m.v[TripleAdditivity] < kAdditivityTol,
          fmt::format("max error {:.3e}", m.v[TripleAdditivity]));
    r.add("F invariant under time reversal", m.v[Reversal] < kAdditivityTol,
          fmt::format("max error {:.3e}", m.v[Reversal]));

    DiscretePath constant = DiscretePath::constant(ProjPoint::real(RealVec::Unit(2, 0)));
    DiscretePath both = concat_min(constant, constant);
    r.add("constant + constant uses s = 1/2, flagged", both.degenerate_junction && both.params()[1] == 0.5);
    return r;
}

CheckReport halfcircle_check(const TrialConfig& cfg)
{
    require_trials(cfg);
    enum { Period, Antipode, EndAgreement, StartAgreement, NormBound, OnLine, CriticalNorm };
    constexpr int kSamples = 32;
    auto parts = run_trials(cfg.trials, cfg.jobs, [&](int t) {
        std::mt19937_64 rng(trial_seed(cfg.seed, t));
        int n = dim_for(cfg, t);
        RealVec x = random_real_unit(n, rng);
        RealVec u = random_real_orthogonal(x, rng);
        TangentVector v = normal_vector(x, u);
        Maxima m;

        std::uniform_real_distribution<double> s_dist(-4.0, 4.0);
        double s = s_dist(rng);
        m.take(Period, fs_distance(geodesic(v, s), geodesic(v, s + pi)));
        ProjPoint x0 = geodesic(v, 0.0);
        for (int k = 1; k <= 4; ++k) {
            double want = k % 2 == 0 ? 0.0 : pi / 2;
            m.take(Antipode, std::abs(fs_distance(x0, geodesic(v, k * pi / 2)) - want));
        }

        // Angles beyond one period exercise the normalization mod pi.
        std::uniform_real_distribution<double> theta_dist(-2 * pi, 2 * pi);
        double theta = theta_dist(rng);
        HalfCircle c = half_circle(v, theta, kSamples);
        m.take(EndAgreement, fs_distance(c.path.back(), half_circle_end(v, theta)));
        m.take(StartAgreement, fs_distance(c.path.front(), x0));
        m.take(NormBound, std::max(0.0, path_norm(c.path) - pi / 2));
        for (const ProjPoint& p : c.path.samples())
            m.take(OnLine, off_line(p.rep(), x, u));

        HalfCircle crit = half_circle(v, pi / 2, kSamples);
        m.take(CriticalNorm, std::abs(path_norm(crit.path) - pi / 2));
        return m;
    });
    Maxima m = merge(parts);

    CheckReport r{fmt::format("geodesics and half circles ({} trials, seed {})", cfg.trials, cfg.seed), {}};
    r.add("geodesics have period pi", m.v[Period] < kInvariantTol, fmt::format("max d = {:.3e}", m.v[Period]));
    r.add("d(g(0), g(k pi/2)) = 0 / pi/2 for k even / odd", m.v[Antipode] < kInvariantTol,
          fmt::format("max error {:.3e}", m.v[Antipode]));
    r.add("C(1) = exp_x(-theta I v)", m.v[EndAgreement] < kInvariantTol,
          fmt::format("max d = {:.3e}", m.v[EndAgreement]));
    r.add("C(0) = x", m.v[StartAgreement] < kInvariantTol, fmt::format("max d = {:.3e}", m.v[StartAgreement]));
    r.add("F(C) <= pi/2 + 1e-9", m.v[NormBound] <= 1e-9, fmt::format("max excess {:.3e}", m.v[NormBound]));
    r.add("C lies on the line l_{x,v}", m.v[OnLine] < kInvariantTol, fmt::format("max residual {:.3e}", m.v[OnLine]));
    r.add("theta = pi/2 gives F = pi/2", m.v[CriticalNorm] < 1e-6, fmt::format("max error {:.3e}", m.v[CriticalNorm]));

    TangentVector base = normal_vector(RealVec::Unit(2, 0), RealVec::Unit(2, 1));
    HalfCircle flat = half_circle(base, 0.0, kSamples);
    r.add("theta = 0 gives the constant path", path_norm(flat.path) < 1e-12,
          fmt::format("F = {:.3e}", path_norm(flat.path)));

    // Reported only, not asserted: where F(C) peaks on a theta grid.
    constexpr int kGrid = 180;
    double best = -1, best_theta = 0;
    for (int i = 0; i < kGrid; ++i) {
        double th = pi * i / kGrid;
        double f = path_norm(half_circle(base, th, kSamples).path);
        if (f > best)
            best = f, best_theta = th;
    }
    r.add("F(C) peaks at theta = pi/2 (numerical sweep)", std::abs(best_theta - pi / 2) <= pi / kGrid,
          fmt::format("max F = {:.12f} at theta = {:.6f}", best, best_theta));
    return r;
}

CheckReport yk_check(const TrialConfig& cfg, int max_k)
{
    require_trials(cfg);
    if (max_k < 1)
        throw std::invalid_argument("max_k must be >= 1");
    enum { NormBound, RealEnds, ParamCount };
    auto parts = run_trials(cfg.trials, cfg.jobs, [&](int t) {
        std::mt19937_64 rng(trial_seed(cfg.seed, t));
        int n = dim_for(cfg, t);
        int k = 1 + t % max_k;
        YkSample y = sample_yk(n, k, rng);
        Maxima m;
        m.take(NormBound, std::max(0.0, path_norm(y.path) - k * pi / 2));
        m.take(RealEnds, y.path.endpoints_real() ? 0.0 : 1.0);
        m.take(ParamCount, y.parameter_count == (k + 1) * n ? 0.0 : 1.0);
        return m;
    });
    Maxima m = merge(parts);

    CheckReport r{fmt::format("Y_k samples ({} trials, seed {}, k <= {})", cfg.trials, cfg.seed, max_k), {}};
    r.add("F(sample) <= k pi/2 + 1e-9", m.v[NormBound] <= 1e-9, fmt::format("max excess {:.3e}", m.v[NormBound]));
    r.add("sample endpoints lie on RP^n", m.v[RealEnds] == 0.0);
    r.add("sampler has (k+1) n parameters", m.v[ParamCount] == 0.0);

    double worst = 0;
    for (int n : cfg.dims)
        for (int k = 1; k <= max_k; ++k)
            worst = std::max(worst, std::abs(path_norm(critical_yk(n, k).path) - k * pi / 2));
    r.add("critical chain has F = k pi/2", worst < 1e-6, fmt::format("max error {:.3e}", worst));

    std::mt19937_64 rng(cfg.seed);
    RealVec x = random_real_unit(2, rng);
    HalfCircle flat = half_circle(normal_vector(x, random_real_orthogonal(x, rng)), 0.0, 8);
    r.add("k = 1, theta = 0 is the constant path", path_norm(flat.path) < 1e-12,
          fmt::format("F = {:.3e}", path_norm(flat.path)));
    return r;
}

CheckReport hopf_check(const TrialConfig& cfg)
{
    require_trials(cfg);
    enum { Unit, Orthogonal, Gram, NormalSection };
    const std::vector<int> odd{1, 3, 5, 7};
    auto parts = run_trials(cfg.trials, cfg.jobs, [&](int t) {
        std::mt19937_64 rng(trial_seed(cfg.seed, t));
        int n = odd[static_cast<std::size_t>(t) % odd.size()];
        RealVec x = random_real_unit(n, rng);
        RealVec j = hopf_vector(x, Hopf::J);
        Maxima m;
        m.take(Unit, std::abs(j.norm() - 1.0));
        m.take(Orthogonal, std::abs(x.dot(j)));
        // i Jx is a unit normal vector at x.
        TangentVector v = normal_vector(x, j);
        m.take(NormalSection, std::abs(v.vec.norm() - 1.0));
        m.take(Gram, 0.0);
        if (n % 4 == 3) {
            Eigen::MatrixXd frame(n + 1, 3);
            frame.col(0) = hopf_vector(x, Hopf::J1);
            frame.col(1) = hopf_vector(x, Hopf::J2);
            frame.col(2) = hopf_vector(x, Hopf::J3);
            Eigen::Matrix3d gram = frame.transpose() * frame;
            m.take(Gram, (gram - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff());
            m.take(Orthogonal, (frame.transpose() * x).cwiseAbs().maxCoeff());
        }
        return m;
    });
    Maxima m = merge(parts);

    CheckReport r{fmt::format("Hopf sections ({} trials, seed {})", cfg.trials, cfg.seed), {}};
    r.add("|Jx| = 1", m.v[Unit] < 1e-12, fmt::format("max error {:.3e}", m.v[Unit]));
    r.add("<x, J_i x> = 0", m.v[Orthogonal] < 1e-12, fmt::format("max |<x, Jx>| {:.3e}", m.v[Orthogonal]));
    r.add("Gram(J1x, J2x, J3x) = I (n = 3 mod 4)", m.v[Gram] < kGramTol, fmt::format("max deviation {:.3e}", m.v[Gram]));
    r.add("normal section i Jx is a unit normal", m.v[NormalSection] < 1e-12);
    RealVec e0 = RealVec::Unit(2, 0);
    r.add("n = 1: J(1,0) = (0,1)", (hopf_vector(e0, Hopf::J) - RealVec::Unit(2, 1)).norm() == 0.0);
    return r;
}

}  // namespace pathalg::geom
