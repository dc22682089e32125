#include "viransatz/reference_solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace viransatz {

namespace {

struct Discretization {
    std::vector<double> x;     // interior nodes
    std::vector<double> diag;  // 1/h^2 + U(x_i)
    double off;                // -1/(2 h^2)
    double h;
};

Discretization discretize(const EvenPolynomialPotential& p, const GridSpec& grid) {
    Discretization d;
    d.h = grid.spacing();
    d.off = -1.0 / (2.0 * d.h * d.h);
    const int m = grid.points - 2;
    d.x.resize(m);
    d.diag.resize(m);
    for (int i = 0; i < m; ++i) {
        d.x[i] = -grid.half_width + (i + 1) * d.h;
        d.diag[i] = 1.0 / (d.h * d.h) + p.value(d.x[i]);
    }
    return d;
}

// Number of eigenvalues below sigma via the Sturm / LDL^T sign count.
int sturm_count(const std::vector<double>& diag, double b2, double pivmin, double sigma) {
    int count = 0;
    double q = diag[0] - sigma;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
    for (size_t i = 1; i < diag.size(); ++i) {
        q = diag[i] - sigma - b2 / q;
        if (std::abs(q) < pivmin) q = -pivmin;
        if (q < 0.0) ++count;
    }
    return count;
}

double bisect_smallest(const std::vector<double>& diag, double b2, double off_abs) {
    const auto [dmin, dmax] = std::minmax_element(diag.begin(), diag.end());
    double lo = *dmin - 2.0 * off_abs;  // Gershgorin
    double hi = *dmax + 2.0 * off_abs;
    const double pivmin = std::max(b2, 1.0) * 1e-292;

    int iter = 0;
    while (hi - lo > std::max(1e-13, 4.0 * 2.22e-16 * (std::abs(lo) + std::abs(hi)))) {
        if (++iter > 300)
            throw NumericalError(ErrorCode::ConvergenceFailure,
                                 "eigenvalue bisection interval stopped shrinking");
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // interval at rounding resolution
        if (sturm_count(diag, b2, pivmin, mid) >= 1)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

// LU factorization of a symmetric tridiagonal matrix with partial pivoting
// (row interchanges between adjacent rows; U gains a second superdiagonal).
struct TridiagLU {
    std::vector<double> lower;  // multipliers
    std::vector<double> d, u1, u2;
    std::vector<bool> swapped;
};

TridiagLU factor_tridiag(std::vector<double> diag, double off) {
    const size_t m = diag.size();
    TridiagLU lu;
    lu.d = std::move(diag);
    lu.u1.assign(m, 0.0);
    lu.u2.assign(m, 0.0);
    lu.lower.assign(m, 0.0);
    lu.swapped.assign(m, false);
    for (size_t i = 0; i + 1 < m; ++i) lu.u1[i] = off;

    std::vector<double> sub(m, 0.0);
    for (size_t i = 1; i < m; ++i) sub[i] = off;

    for (size_t i = 0; i + 1 < m; ++i) {
        if (std::abs(lu.d[i]) >= std::abs(sub[i + 1])) {
            if (lu.d[i] == 0.0) lu.d[i] = 1e-300;
            const double fact = sub[i + 1] / lu.d[i];
            lu.lower[i] = fact;
            lu.d[i + 1] -= fact * lu.u1[i];
        } else {
            const double fact = lu.d[i] / sub[i + 1];
            lu.lower[i] = fact;
            lu.swapped[i] = true;
            lu.d[i] = sub[i + 1];
            const double tmp = lu.u1[i];
            lu.u1[i] = lu.d[i + 1];
            lu.d[i + 1] = tmp - fact * lu.d[i + 1];
            if (i + 2 < m) {
                lu.u2[i] = lu.u1[i + 1];
                lu.u1[i + 1] = -fact * lu.u1[i + 1];
            }
        }
    }
    if (lu.d[m - 1] == 0.0) lu.d[m - 1] = 1e-300;
    return lu;
}

void solve_tridiag(const TridiagLU& lu, std::vector<double>& b) {
    const size_t m = b.size();
    for (size_t i = 0; i + 1 < m; ++i) {
        if (lu.swapped[i]) std::swap(b[i], b[i + 1]);
        b[i + 1] -= lu.lower[i] * b[i];
    }
    b[m - 1] /= lu.d[m - 1];
    if (m >= 2) b[m - 2] = (b[m - 2] - lu.u1[m - 2] * b[m - 1]) / lu.d[m - 2];
    for (size_t k = m; k-- > 2;) {
        const size_t i = k - 2;
        b[i] = (b[i] - lu.u1[i] * b[i + 1] - lu.u2[i] * b[i + 2]) / lu.d[i];
    }
}

void normalize_l2(std::vector<double>& v) {
    double n2 = 0.0;
    for (double vi : v) n2 += vi * vi;
    const double inv = 1.0 / std::sqrt(n2);
    for (double& vi : v) vi *= inv;
}

}  // namespace

GridSpec::GridSpec(double half_width_, int points_) : half_width(half_width_), points(points_) {
    if (!(half_width > 0.0) || !std::isfinite(half_width))
        throw ValidationError(ErrorCode::BadInput, "grid half_width must be positive");
    if (points < 3 || points % 2 == 0)
        throw ValidationError(ErrorCode::BadInput, "grid points must be odd and >= 3");
}

double choose_domain(const EvenPolynomialPotential& p, double e_hint) {
    if (!(e_hint > 0.0))
        throw ValidationError(ErrorCode::BadInput, "e_hint must be positive");
    const double bound = 10.0 * e_hint + 50.0;
    double L = 1.0;
    if (p.value(L) >= bound) {
        while (L > 0x1p-20 && p.value(0.5 * L) >= bound) L *= 0.5;
    } else {
        while (p.value(L) < bound) L *= 2.0;
    }
    return L;
}

int sturm_count_below(const EvenPolynomialPotential& p, const GridSpec& grid, double sigma) {
    const Discretization d = discretize(p, grid);
    const double b2 = d.off * d.off;
    return sturm_count(d.diag, b2, std::max(b2, 1.0) * 1e-292, sigma);
}

double grid_eigenvalue(const EvenPolynomialPotential& p, const GridSpec& grid) {
    const Discretization d = discretize(p, grid);
    return bisect_smallest(d.diag, d.off * d.off, std::abs(d.off));
}

double ground_state_energy(const EvenPolynomialPotential& p, const GridSpec& grid) {
    GridSpec coarse = grid;
    double e_c = grid_eigenvalue(p, coarse);
    double e_f = grid_eigenvalue(p, GridSpec(coarse.half_width, 2 * coarse.points - 1));
    if (std::abs(e_c - e_f) > 1e-6 && coarse.points < 65537) {
        coarse = GridSpec(coarse.half_width, 65537);
        e_c = grid_eigenvalue(p, coarse);
        e_f = grid_eigenvalue(p, GridSpec(coarse.half_width, 2 * coarse.points - 1));
    }
    return (4.0 * e_f - e_c) / 3.0;
}

SampledWavefunction ground_state_wavefunction(const EvenPolynomialPotential& p,
                                              const GridSpec& grid) {
    const Discretization d = discretize(p, grid);
    const int m = static_cast<int>(d.diag.size());
    const double sigma = bisect_smallest(d.diag, d.off * d.off, std::abs(d.off));

    std::vector<double> shifted(d.diag);
    for (double& v : shifted) v -= sigma;
    const TridiagLU lu = factor_tridiag(std::move(shifted), d.off);

    std::vector<double> v(m);
    for (int i = 0; i < m; ++i) v[i] = std::exp(-0.5 * d.x[i] * d.x[i]);
    normalize_l2(v);
    for (int it = 0; it < 3; ++it) {
        solve_tridiag(lu, v);
        normalize_l2(v);
    }

    SampledWavefunction w;
    w.energy = sigma;
    w.x.resize(grid.points);
    w.psi.assign(grid.points, 0.0);
    w.x[0] = -grid.half_width;
    w.x[grid.points - 1] = grid.half_width;
    const double inv_sqrt_h = 1.0 / std::sqrt(d.h);
    for (int i = 0; i < m; ++i) {
        w.x[i + 1] = d.x[i];
        w.psi[i + 1] = v[i] * inv_sqrt_h;
    }
    if (w.psi[(grid.points - 1) / 2] < 0.0)
        for (double& psi : w.psi) psi = -psi;

    if (std::abs(w.psi[1]) > 1e-12 || std::abs(w.psi[grid.points - 2]) > 1e-12)
        throw NumericalError(ErrorCode::DomainTooSmall,
                             "ground state amplitude at the walls exceeds 1e-12");
    return w;
}

double overlap(const SampledWavefunction& w, const std::function<double(double)>& f) {
    const double h = w.x[1] - w.x[0];
    double dot = 0.0, f2 = 0.0, p2 = 0.0;
    for (size_t i = 0; i < w.x.size(); ++i) {
        const double fi = f(w.x[i]);
        dot += fi * w.psi[i];
        f2 += fi * fi;
        p2 += w.psi[i] * w.psi[i];
    }
    return dot * h / std::sqrt(f2 * h * p2 * h);
}

double reference_energy(const EvenPolynomialPotential& p, double e_hint,
                        const ReferenceOptions& opts) {
    const bool forced = opts.half_width.has_value();
    double L = forced ? *opts.half_width : choose_domain(p, e_hint);
    for (int attempt = 0; attempt < 8; ++attempt) {
        const double e = ground_state_energy(p, GridSpec(L, opts.points));
        if (p.value(L) >= 10.0 * e + 50.0) return e;
        if (forced)
            throw NumericalError(ErrorCode::DomainTooSmall,
                                 "half_width " + std::to_string(L) +
                                     " violates U(L) >= 10 E + 50 for the solved energy");
        L *= 2.0;
    }
    throw NumericalError(ErrorCode::ConvergenceFailure,
                         "domain adequacy recheck failed to stabilize");
}

}  // namespace viransatz
