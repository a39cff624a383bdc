#include <algorithm>
#include <cmath>
#include <complex>
#include <unsupported/Eigen/Polynomials>

#include "ovalis/trigonal.hpp"

namespace ovalis::trigonal {

namespace {

using Poly = std::vector<double>;

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0.0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

long double eval(const Poly& p, long double x) {
    long double r = 0;
    for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
    return r;
}

Poly padded(Poly p, size_t size) {
    if (p.size() > size) {
        for (size_t i = size; i < p.size(); ++i)
            if (p[i] != 0) throw TrigonalError("coefficient above the allowed degree");
        p.resize(size);
    }
    p.resize(size, 0.0);
    return p;
}

}  // namespace

// 4 b2^3 + 27 b3^2: negative exactly where the fibre has three real points
std::vector<double> discriminant(const TrigonalPolynomial& p) {
    if (p.n < 1) throw TrigonalError("degree must be positive");
    Poly b2 = padded(p.b2, 2 * p.n + 1), b3 = padded(p.b3, 3 * p.n + 1);
    Poly a = mul(mul(b2, b2), b2), b = mul(b3, b3);
    Poly d(6 * p.n + 1, 0.0);
    for (size_t i = 0; i < d.size(); ++i) d[i] = 4 * a[i] + 27 * b[i];
    return d;
}

LScheme trace_trigonal_polynomial(const TrigonalPolynomial& p) {
    Poly d = discriminant(p);
    Poly b2 = padded(p.b2, 2 * p.n + 1), b3 = padded(p.b3, 3 * p.n + 1);
    double scale = 0;
    for (double c : d) scale = std::max(scale, std::abs(c));
    if (scale == 0) throw DegenerateDiscriminant("discriminant vanishes identically");
    if (std::abs(d.back()) <= 1e-12 * scale) throw DegenerateDiscriminant("discriminant has a root at infinity");

    Eigen::VectorXd coeffs(static_cast<Eigen::Index>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) coeffs[static_cast<Eigen::Index>(i)] = d[i] / scale;
    Eigen::PolynomialSolver<double, Eigen::Dynamic> solver(coeffs);
    std::vector<std::complex<double>> roots;
    for (Eigen::Index i = 0; i < solver.roots().size(); ++i) roots.push_back(solver.roots()[i]);

    // Newton polish: estimates of a multiple root collapse together, distinct ones sharpen
    for (auto& r : roots) {
        std::complex<long double> z(r.real(), r.imag());
        for (int it = 0; it < 80; ++it) {
            std::complex<long double> v = 0, dv = 0;
            for (size_t i = d.size(); i-- > 0;) {
                dv = dv * z + v;
                v = v * z + static_cast<long double>(d[i]);
            }
            if (std::abs(dv) == 0) break;
            auto step = v / dv;
            z -= step;
            if (std::abs(step) <= 1e-30L * std::max<long double>(1, std::abs(z))) break;
        }
        r = {static_cast<double>(z.real()), static_cast<double>(z.imag())};
    }

    constexpr double sep = 1e-9;
    for (size_t i = 0; i < roots.size(); ++i)
        for (size_t j = i + 1; j < roots.size(); ++j) {
            double tol = sep * std::max(1.0, std::max(std::abs(roots[i]), std::abs(roots[j])));
            if (std::abs(roots[i] - roots[j]) < tol) throw DegenerateDiscriminant("discriminant has a multiple root");
        }
    // a root is real when the sign of the discriminant flips across its bracket
    std::sort(roots.begin(), roots.end(), [](auto a, auto b) { return a.real() < b.real(); });
    // evaluated through b2 and b3: the expanded coefficients lose the cancellation
    auto sgn = [&](long double x) {
        long double u = eval(b2, x), w = eval(b3, x);
        long double v = 4 * u * u * u + 27 * w * w;
        return v < 0 ? -1 : v > 0 ? 1 : 0;
    };
    const int far = d.back() < 0 ? -1 : 1;
    std::vector<double> real;
    for (size_t i = 0; i < roots.size(); ++i) {
        bool lo_inf = i == 0, hi_inf = i + 1 == roots.size();
        long double x = roots[i].real();
        long double lo = lo_inf ? x - 1 - std::abs(x) : 0.5L * (roots[i - 1].real() + x);
        long double hi = hi_inf ? x + 1 + std::abs(x) : 0.5L * (x + roots[i + 1].real());
        int sl = sgn(lo), sh = sgn(hi);
        if (sl == 0 || sh == 0) throw DegenerateDiscriminant("discriminant vanishes at a bracket point");
        if (sl == sh) continue;
        for (int it = 0; it < 200 && hi - lo > 0; ++it) {
            long double mid = 0.5L * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            int sm = sgn(mid);
            if (sm == 0) {
                lo = hi = mid;
                break;
            }
            (sm == sl ? lo : hi) = mid;
        }
        real.push_back(static_cast<double>(0.5L * (lo + hi)));
    }
    if (real.size() % 2) throw DegenerateDiscriminant("odd number of real roots located");

    LScheme ls;
    ls.n = p.n;
    ls.source = "traced";
    Run run = far < 0 ? Run::Three : Run::One;
    ls.word.push_back({false, false, run, 1});
    for (size_t i = 0; i < real.size(); ++i) {
        double x = real[i];
        double q = eval(b3, x), pp = eval(b2, x);
        if (std::abs(pp) < 1e-14 * std::max(1.0, std::abs(q))) throw DegenerateDiscriminant("triple point in a fibre");
        double dbl = -3 * q / (2 * pp), simple = 3 * q / pp;
        run = run == Run::One ? Run::Three : Run::One;
        ls.word.push_back({true, dbl > simple, Run::One, 1});
        ls.word.push_back({false, false, run, 1});
    }
    return ls;
}

}  // namespace ovalis::trigonal
