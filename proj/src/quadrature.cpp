#include "cpn/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numbers>
#include <thread>

#include "cpn/errors.hpp"

namespace cpn {

namespace {

using cdouble = std::complex<double>;

/// Sparse polynomial compiled to machine coefficients for fast node loops.
struct CompiledPoly {
    struct Term {
        cdouble c;
        int dp, dm;
    };
    std::vector<Term> terms;
    int max_dp = 0, max_dm = 0;

    explicit CompiledPoly(const BiPolynomial& p) {
        terms.reserve(p.term_count());
        for (const auto& [m, c] : p.terms()) {
            terms.push_back({c.to_complex(), static_cast<int>(m.dp), static_cast<int>(m.dm)});
            max_dp = std::max(max_dp, static_cast<int>(m.dp));
            max_dm = std::max(max_dm, static_cast<int>(m.dm));
        }
    }

    cdouble eval(const std::vector<cdouble>& zp_pow, const std::vector<cdouble>& zm_pow) const {
        cdouble acc = 0.0;
        for (const auto& t : terms) acc += t.c * zp_pow[t.dp] * zm_pow[t.dm];
        return acc;
    }
};

struct CompiledRational {
    CompiledPoly num, den;
    explicit CompiledRational(const RationalFunction& f) : num(f.num()), den(f.den()) {}

    void powers(cdouble z, std::vector<cdouble>& zp, std::vector<cdouble>& zm) const {
        int np = std::max(num.max_dp, den.max_dp), nm = std::max(num.max_dm, den.max_dm);
        zp.assign(np + 1, 1.0);
        zm.assign(nm + 1, 1.0);
        cdouble zb = std::conj(z);
        for (int k = 1; k <= np; ++k) zp[k] = zp[k - 1] * z;
        for (int k = 1; k <= nm; ++k) zm[k] = zm[k - 1] * zb;
    }
};

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("CPN_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(std::min(hw, 8u));
}

void parallel_for(long count, int threads, const std::function<void(long, long)>& body) {
    if (threads <= 1 || count < 4096) {
        body(0, count);
        return;
    }
    std::vector<std::thread> pool;
    long chunk = (count + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        long lo = t * chunk, hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(body, lo, hi);
    }
    for (auto& th : pool) th.join();
}

/// Deterministic pairwise summation (order independent of thread count).
cdouble pairwise_sum(const std::vector<cdouble>& v, std::size_t lo, std::size_t hi) {
    if (hi - lo <= 8) {
        cdouble s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += v[i];
        return s;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

/// Evaluate the denominator on a polar probe grid over the closed unit disk.
void probe_for_poles(const RationalFunction& f, const char* label) {
    CompiledRational c(f);
    std::vector<cdouble> zp, zm;
    constexpr int kProbe = 128;
    for (int i = 0; i <= kProbe; ++i) {
        double r = static_cast<double>(i) / kProbe;
        for (int j = 0; j < kProbe; ++j) {
            double th = 2.0 * std::numbers::pi * j / kProbe;
            cdouble z = std::polar(r, th);
            c.powers(z, zp, zm);
            if (std::abs(c.den.eval(zp, zm)) < 1e-12)
                throw NumericsError(std::string("integrand pole detected on the ") + label +
                                    " unit disk: non-integrable input");
        }
    }
}

/// Tensor Gauss–Legendre integral of f over the closed unit disk in polar
/// coordinates, at the given order.
cdouble disk_integral(const CompiledRational& f, int order, int threads, long* nodes_out) {
    std::vector<double> gl_x, gl_w;
    gauss_legendre(order, gl_x, gl_w);

    std::vector<double> r(order), wr(order), th(order), wt(order);
    for (int i = 0; i < order; ++i) {
        r[i] = 0.5 * (gl_x[i] + 1.0);               // [0,1]
        wr[i] = 0.5 * gl_w[i];
        th[i] = std::numbers::pi * (gl_x[i] + 1.0);  // [0,2π]
        wt[i] = std::numbers::pi * gl_w[i];
    }

    long count = static_cast<long>(order) * order;
    std::vector<cdouble> vals(count);
    // Worker bodies must not throw; poles surface as NaN and are rejected
    // after the deterministic reduction.
    parallel_for(count, threads, [&](long lo, long hi) {
        std::vector<cdouble> zp, zm;
        for (long idx = lo; idx < hi; ++idx) {
            int i = static_cast<int>(idx / order), j = static_cast<int>(idx % order);
            cdouble z = std::polar(r[i], th[j]);
            f.powers(z, zp, zm);
            cdouble den = f.den.eval(zp, zm);
            if (std::abs(den) < 1e-300) {
                vals[idx] = std::numeric_limits<double>::quiet_NaN();
                continue;
            }
            vals[idx] = (f.num.eval(zp, zm) / den) * (wr[i] * wt[j] * r[i]);
        }
    });
    if (nodes_out) *nodes_out = count;
    cdouble total = pairwise_sum(vals, 0, vals.size());
    if (!std::isfinite(total.real()) || !std::isfinite(total.imag()))
        throw NumericsError("pole hit at a quadrature node");
    return total;
}

}  // namespace

IntegralResult& IntegralResult::with_snap() {
    integer_snap = std::lround(value);
    snap_deviation = std::abs(value - static_cast<double>(*integer_snap));
    return *this;
}

void gauss_legendre(int order, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(order, 0.0);
    weights.assign(order, 0.0);
    for (int i = 0; i < (order + 1) / 2; ++i) {
        // Newton from the Chebyshev-based initial guess.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int k = 0; k < order; ++k) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * k + 1.0) * x * p1 - k * p2) / (k + 1.0);
            }
            pp = order * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[order - 1 - i] = x;
        weights[i] = weights[order - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
}

IntegralResult integrate_plane(const RationalFunction& f, const QuadratureOptions& opts) {
    IntegralResult res;
    if (f.is_zero()) {
        res.node_counts.push_back(0);
        return res;
    }
    if (!(f.dagger() == f))
        throw ValidationError("integrand is not real-valued on the real slice (f† != f)");

    // Exterior of the unit disk, mapped by ξ± = 1/w±:  ∫_{|w|≤1} f̂ /(w₊w₋)².
    BiPolynomial w2 = BiPolynomial::monomial(Coeff(1), 2, 2);
    RationalFunction f_ext = f.invert_variables() / RationalFunction(w2);

    probe_for_poles(f, "interior");
    probe_for_poles(f_ext, "exterior");

    CompiledRational cf(f), cf_ext(f_ext);
    int threads = resolve_threads(opts.threads);

    double prev = 0.0;
    bool have_prev = false;
    for (int order = opts.initial_order; order <= opts.max_order; order *= 2) {
        long n1 = 0, n2 = 0;
        cdouble total = disk_integral(cf, order, threads, &n1) +
                        disk_integral(cf_ext, order, threads, &n2);
        if (std::abs(total.imag()) > 1e-10 * std::max(1.0, std::abs(total.real())))
            throw NumericsError("integral of a real integrand has a non-real part");
        res.node_counts.push_back(n1 + n2);
        res.value = total.real();
        if (have_prev) {
            res.error_estimate = std::abs(res.value - prev);
            double scale = std::max(std::abs(res.value), 1e-30);
            if (res.error_estimate <= opts.rel_tol * scale) return res;
        }
        prev = res.value;
        have_prev = true;
    }
    throw NumericsError("quadrature did not converge within the node budget");
}

IntegralResult action(const Projector& p, const QuadratureOptions& opts) {
    return integrate_plane(lagrangian(p), opts);
}

IntegralResult area(const ProjectorTower& tower, int k, const QuadratureOptions& opts) {
    const Projector& pk = tower.elements.at(k);
    RationalFunction gpm = killing_product(tangent_plus(pk), tangent_minus(pk));
    return integrate_plane(RationalFunction(2) * gpm, opts);
}

IntegralResult charge(const Projector& p, const QuadratureOptions& opts) {
    IntegralResult r = integrate_plane(charge_density(p), opts);
    r.value /= std::numbers::pi;
    r.error_estimate /= std::numbers::pi;
    return r.with_snap();
}

IntegralResult euler_poincare(const Projector& p, const QuadratureOptions& opts) {
    IntegralResult r = integrate_plane(log_lagrangian_mixed_derivative(p), opts);
    r.value /= -std::numbers::pi;
    r.error_estimate /= std::numbers::pi;
    return r.with_snap();
}

IntegralResult willmore(const ProjectorTower& tower, int k, const QuadratureOptions& opts) {
    const Projector& pk = tower.elements.at(k);
    RationalFunction L = lagrangian(pk);
    if (L.is_zero()) throw ValidationError("Willmore functional undefined: L is identically zero");
    RationalFunction q = charge_density(pk);
    IntegralResult s = action(pk, opts);
    IntegralResult w = integrate_plane(q * q / L, opts);
    IntegralResult r;
    r.value = 0.5 * s.value + 1.5 * w.value;
    r.error_estimate = 0.5 * s.error_estimate + 1.5 * w.error_estimate;
    r.node_counts = s.node_counts;
    r.node_counts.insert(r.node_counts.end(), w.node_counts.begin(), w.node_counts.end());
    return r;
}

}  // namespace cpn
