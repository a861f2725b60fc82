#include "sqg/fft.hpp"

#include "sqg/util.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sqg {

std::vector<cdouble> fft_twiddle(int n, int sign)
{
    std::vector<cdouble> tw(n / 2);
    const double base = sign * 2.0 * std::numbers::pi / n;
    for (int i = 0; i < n / 2; ++i) tw[i] = cdouble(std::cos(base * i), std::sin(base * i));
    return tw;
}

void fft_1d(cdouble* data, int n, int stride, int sign, const std::vector<cdouble>& twiddle)
{
    (void)sign;
    // bit-reversal permutation
    for (int i = 1, j = 0; i < n; ++i) {
        int bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i * stride], data[j * stride]);
    }
    for (int len = 2; len <= n; len <<= 1) {
        const int step = n / len;
        for (int i = 0; i < n; i += len) {
            for (int k = 0; k < len / 2; ++k) {
                const cdouble w = twiddle[k * step];
                cdouble& a = data[(i + k) * stride];
                cdouble& b = data[(i + k + len / 2) * stride];
                const cdouble t = w * b;
                b = a - t;
                a = a + t;
            }
        }
    }
}

namespace {

void fft2(std::vector<cdouble>& a, int n, int sign)
{
    if ((n & (n - 1)) != 0 || n < 2) throw std::invalid_argument("fft2: n must be a power of two");
    const auto tw = fft_twiddle(n, sign);
    parallel_for(static_cast<std::size_t>(n), [&](std::size_t b, std::size_t e) {
        for (std::size_t r = b; r < e; ++r) fft_1d(a.data() + r * n, n, 1, sign, tw);
    });
    parallel_for(static_cast<std::size_t>(n), [&](std::size_t b, std::size_t e) {
        for (std::size_t c = b; c < e; ++c) fft_1d(a.data() + c, n, n, sign, tw);
    });
}

} // namespace

void fft2_forward(std::vector<cdouble>& a, int n)
{
    fft2(a, n, -1);
    const double s = 1.0 / (static_cast<double>(n) * n);
    for (auto& v : a) v *= s;
}

void fft2_inverse(std::vector<cdouble>& a, int n) { fft2(a, n, +1); }

} // namespace sqg
