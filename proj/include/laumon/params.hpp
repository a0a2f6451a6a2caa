#pragma once

#include <vector>

#include "laumon/rational.hpp"

namespace laumon {

// Equivariant parameters in hbar-normalized units:
// xi_i = x_i/hbar, eta = hbar'/hbar, and the mass m.
struct EquivParams {
    int n = 1;
    std::vector<Rational> xi;
    Rational eta;
    Rational m;

    // xi_i for any i >= 1 under the affine extension xi_{i+n} = xi_i + eta.
    Rational xi_ext(int i) const {
        int i0 = ((i - 1) % n + n) % n;        // 0-based residue
        Rational shift(( (i - 1) - i0 ) / n);  // floor((i - i0')/n) with i0' = i0+1
        return xi[static_cast<size_t>(i0)] + shift * eta;
    }

    // phi(i) = xi_i + i under the same extension.
    Rational phi(int i) const { return xi_ext(i) + Rational(i); }

    // Central charge of the Verma module: c = -n - eta.
    Rational central_charge() const { return Rational(-n) - eta; }
};

} // namespace laumon
