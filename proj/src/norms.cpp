#include "sqg/norms.hpp"

#include "sqg/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace sqg {

double supNorm(const ScalarField& f)
{
    const auto p = f.physical();
    double m = 0.0;
    for (double v : p) m = std::max(m, std::abs(v));
    return m;
}

double supNorm(const VectorField2& v) { return std::max(supNorm(v.x1), supNorm(v.x2)); }

double supNorm(const SymTensorField2& t)
{
    return std::max({supNorm(t.t11), supNorm(t.t12), supNorm(t.t22)});
}

double cnNorm(const ScalarField& f, int order)
{
    double acc = 0.0;
    for (int total = 0; total <= order; ++total) {
        for (int a1 = 0; a1 <= total; ++a1) {
            const int a2 = total - a1;
            ScalarField d = f;
            for (int i = 0; i < a1; ++i) d = derivative(d, 0);
            for (int i = 0; i < a2; ++i) d = derivative(d, 1);
            acc += supNorm(d);
        }
    }
    return acc;
}

double cnNorm(const VectorField2& v, int order) { return std::max(cnNorm(v.x1, order), cnNorm(v.x2, order)); }

double holderSeminorm(const ScalarField& f, double s)
{
    const auto p = f.physical();
    const int n = f.grid().n;
    const double dx = f.grid().dx();
    double best = 0.0;
    auto probe = [&](int o1, int o2) {
        const double h = std::hypot(o1 * dx, o2 * dx);
        if (h == 0.0) return;
        const double hs = std::pow(h, s);
        double m = 0.0;
        for (int i = 0; i < n; ++i) {
            const int i2 = (i + o1) & (n - 1);
            for (int j = 0; j < n; ++j) {
                const int j2 = (j + o2) & (n - 1);
                m = std::max(m, std::abs(p[static_cast<std::size_t>(i2) * n + j2] - p[static_cast<std::size_t>(i) * n + j]));
            }
        }
        best = std::max(best, m / hs);
    };
    for (int m = 1; m < n; m <<= 1) {
        probe(m, 0);
        probe(0, m);
        probe(m, m);
    }
    return best;
}

double holderNorm(const ScalarField& f, double s)
{
    const int is = static_cast<int>(s);
    if (s == is) return cnNorm(f, is);
    const int whole = is;
    // sum of sup-norms of derivatives up to `whole`, plus seminorm of the top ones
    double acc = cnNorm(f, whole);
    for (int a1 = 0; a1 <= whole; ++a1) {
        const int a2 = whole - a1;
        ScalarField d = f;
        for (int i = 0; i < a1; ++i) d = derivative(d, 0);
        for (int i = 0; i < a2; ++i) d = derivative(d, 1);
        acc += holderSeminorm(d, s - whole);
    }
    return acc;
}

double holderNorm(const VectorField2& v, double s) { return std::max(holderNorm(v.x1, s), holderNorm(v.x2, s)); }

double l2Norm(const ScalarField& f)
{
    double acc = 0.0;
    for (const auto& c : f.data()) acc += std::norm(c);
    return 2.0 * std::numbers::pi * std::sqrt(acc);
}

double l2Norm(const VectorField2& v)
{
    const double a = l2Norm(v.x1), b = l2Norm(v.x2);
    return std::sqrt(a * a + b * b);
}

double hsDotNorm(const ScalarField& f, double s)
{
    double acc = 0.0;
    const int n = f.grid().n;
    for (int i = 0; i < n; ++i) {
        const int k1 = f.grid().freq(i);
        for (int j = 0; j < n; ++j) {
            const int k2 = f.grid().freq(j);
            if (k1 == 0 && k2 == 0) continue;
            const double r2 = static_cast<double>(k1) * k1 + static_cast<double>(k2) * k2;
            acc += std::pow(r2, s) * std::norm(f.hat(static_cast<std::size_t>(i) * n + j));
        }
    }
    return 2.0 * std::numbers::pi * std::sqrt(acc);
}

double hsDotNorm(const VectorField2& v, double s)
{
    const double a = hsDotNorm(v.x1, s), b = hsDotNorm(v.x2, s);
    return std::sqrt(a * a + b * b);
}

} // namespace sqg
