#include "vdt/divisor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vdt {

namespace {

// Best rational approximation with bounded denominator (continued fractions).
std::optional<BigRat> snap_rational(double x, long max_den, double tol) {
    if (!std::isfinite(x)) return std::nullopt;
    double target = x;
    long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double v = x;
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(v);
        if (fl > 1e17 || fl < -1e17) break;
        long a = static_cast<long>(fl);
        long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den || q2 < 0) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double approx = static_cast<double>(p1) / static_cast<double>(q1);
        if (std::abs(approx - target) <= tol * (1.0 + std::abs(target)))
            return BigRat(BigInt(p1), BigInt(q1));
        double frac = v - fl;
        if (frac < 1e-15) break;
        v = 1.0 / frac;
    }
    return std::nullopt;
}

std::complex<double> horner(const std::vector<std::complex<double>>& c, std::complex<double> z) {
    std::complex<double> r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * z + *it;
    return r;
}

}  // namespace

std::vector<std::complex<double>> roots_squarefree(const RatPoly& p) {
    int n = p.degree();
    if (n < 1) return {};
    if (n == 1) {
        GaussianRational r = -(p.coeff(0) / p.coeff(1));
        return {r.to_complex()};
    }
    // Monic double coefficients.
    std::vector<std::complex<double>> c(n + 1);
    GaussianRational lead = p.leading();
    for (int i = 0; i <= n; ++i) c[i] = (p.coeff(i) / lead).to_complex();
    std::vector<std::complex<double>> dc(n);
    for (int i = 1; i <= n; ++i) dc[i - 1] = double(i) * c[i];

    double bound = 0;
    for (int i = 0; i < n; ++i) bound = std::max(bound, std::abs(c[i]));
    double radius = 1.0 + bound;

    std::vector<std::complex<double>> z(n);
    for (int i = 0; i < n; ++i) {
        double ang = 2.0 * M_PI * i / n + 0.4;
        z[i] = std::polar(radius * (0.5 + 0.5 * (i % 2)), ang);
    }

    // Aberth-Ehrlich iteration; roots are simple, so convergence is fast.
    for (int iter = 0; iter < 800; ++iter) {
        double worst = 0;
        for (int i = 0; i < n; ++i) {
            std::complex<double> pv = horner(c, z[i]);
            std::complex<double> dv = horner(dc, z[i]);
            std::complex<double> newton = (dv == 0.0) ? std::complex<double>(1e-12, 1e-12) : pv / dv;
            std::complex<double> s = 0;
            for (int j = 0; j < n; ++j)
                if (j != i) s += 1.0 / (z[i] - z[j]);
            std::complex<double> denom = 1.0 - newton * s;
            std::complex<double> w = (denom == 0.0) ? newton : newton / denom;
            z[i] -= w;
            worst = std::max(worst, std::abs(w) / (1.0 + std::abs(z[i])));
        }
        if (worst < 1e-14) break;
    }
    // Newton polish.
    for (int i = 0; i < n; ++i) {
        for (int it = 0; it < 8; ++it) {
            std::complex<double> dv = horner(dc, z[i]);
            if (dv == 0.0) break;
            z[i] -= horner(c, z[i]) / dv;
        }
    }
    return z;
}

DivisorOnC roots_with_multiplicity(const RatPoly& p) {
    if (p.is_zero()) throw std::domain_error("roots_with_multiplicity: zero polynomial");
    DivisorOnC div;
    for (const auto& [factor, mult] : squarefree_decompose(p)) {
        if (factor.degree() == 1) {
            GaussianRational r = -(factor.coeff(0) / factor.coeff(1));
            div.points.push_back({r.to_complex(), mult, true, r});
            continue;
        }
        for (const auto& z : roots_squarefree(factor)) {
            DivisorPoint pt{z, mult, false, std::nullopt};
            auto re = snap_rational(z.real(), 1000000, 1e-10);
            auto im = snap_rational(z.imag(), 1000000, 1e-10);
            if (re && im) {
                GaussianRational cand(*re, *im);
                if (factor.eval(cand).is_zero()) {
                    pt.exact = true;
                    pt.exact_location = cand;
                    pt.location = cand.to_complex();
                }
            }
            div.points.push_back(pt);
        }
    }
    std::sort(div.points.begin(), div.points.end(), [](const DivisorPoint& a, const DivisorPoint& b) {
        if (a.location.real() != b.location.real()) return a.location.real() < b.location.real();
        return a.location.imag() < b.location.imag();
    });
    return div;
}

}  // namespace vdt
