#pragma once

#include "sqg/errors.hpp"

#include <cmath>
#include <numbers>

namespace sqg {

// Doubly periodic [0,2pi)^2 grid, n points per axis, n a power of two.
// Wavevectors are the integer lattice k in {-n/2,...,n/2-1}^2; the Nyquist
// lines k = -n/2 are forced to zero by every operator so the usable band is
// |k_i| <= n/2 - 1.
struct Grid {
    int n = 0;

    Grid() = default;
    explicit Grid(int n_) : n(n_)
    {
        if (n < 4 || (n & (n - 1)) != 0) throw GridError("Grid: n must be a power of two >= 4");
    }

    std::size_t size() const { return static_cast<std::size_t>(n) * n; }
    double dx() const { return 2.0 * std::numbers::pi / n; }
    int kmax() const { return n / 2 - 1; }

    // frequency of storage index i in [0, n)
    int freq(int i) const { return i <= n / 2 - 1 ? i : i - n; }
    // storage index of frequency k in [-n/2, n/2-1]
    int index_of(int k) const { return k >= 0 ? k : k + n; }

    bool operator==(const Grid& o) const { return n == o.n; }
};

} // namespace sqg
