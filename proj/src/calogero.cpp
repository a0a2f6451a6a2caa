#include "laumon/calogero.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "laumon/errors.hpp"

namespace laumon {

std::string to_string(CalogeroVariant v) {
    switch (v) {
        case CalogeroVariant::Direct: return "direct";
        case CalogeroVariant::CharacterMassive: return "character-massive";
        case CalogeroVariant::CharacterLoopN: return "character-loop-n";
    }
    return "?";
}

std::vector<Rational> b_exponents(const EquivParams& p) {
    int n = p.n;
    Rational xsum(0);
    for (const auto& x : p.xi) xsum += x;
    std::vector<Rational> b;
    Rational partial(0);
    for (int k = 1; k <= n; ++k) {
        partial += p.xi[static_cast<size_t>(k - 1)];
        Rational val = (Rational(k) * xsum - Rational(n) * partial) / Rational(n)
                       - Rational(k * (n - k), 2) * p.eta;
        b.push_back(val);
    }
    return b;
}

Rational eigenvalue_lambda(const EquivParams& p) {
    int n = p.n;
    Rational xsum(0), xsq(0);
    for (const auto& x : p.xi) {
        xsum += x;
        xsq += x * x;
    }
    return Rational(-(n - 1) * n * (n + 1), 24) * p.eta * p.eta - xsum * xsum / Rational(2 * n)
           + xsq / Rational(2);
}

Rational cm_symbol(const EquivParams& p, const std::vector<Rational>& v) {
    int n = p.n;
    Rational q(0);
    for (int k = 0; k < n; ++k) {
        q += v[static_cast<size_t>(k)] * v[static_cast<size_t>(k)];
        q -= v[static_cast<size_t>(k)] * v[static_cast<size_t>((k + 1) % n)];
        q += p.eta * v[static_cast<size_t>(k)];
    }
    return q;
}

namespace {

struct Window {
    int i, j;  // 1 <= i <= n, j >= i
};

std::vector<Window> windows_up_to(int n, int D) {
    std::vector<Window> ws;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j - i + 1 <= D; ++j) ws.push_back({i, j});
    return ws;
}

// Multiplication potential of the Direct variant:
//   loop:    LC * sum_k k z^k/(z^k - 1)   = -LC  * sum_{k,t} k z^{kt(1,..,1)}
//   windows: m(m+1) * sum 1/((z^w-1)(z^{-w}-1)) = -m(m+1) sum_{w,t} t z^{tw}
TruncatedSeries direct_potential(const EquivParams& p, int D) {
    int n = p.n;
    const Rational& m = p.m;
    TruncatedSeries V = TruncatedSeries::zero(n, D);
    Rational loop_coeff = Rational(n) * m * (Rational((long)(n)) * (m + Rational(1)) + p.eta)
                          / (Rational(n) + p.eta);
    for (int k = 1; n * k <= D; ++k)
        for (int t = 1; n * k * t <= D; ++t)
            V.add_term(Exp(static_cast<size_t>(n), k * t), -loop_coeff * Rational(k));
    Rational mm1 = m * (m + Rational(1));
    for (const Window& w : windows_up_to(n, D)) {
        Exp we = window_monomial(n, w.i, w.j);
        int wd = total_degree(we);
        for (int t = 1; t * wd <= D; ++t) {
            Exp e(static_cast<size_t>(n), 0);
            for (int c = 0; c < n; ++c) e[static_cast<size_t>(c)] = t * we[static_cast<size_t>(c)];
            V.add_term(e, -mm1 * Rational(t));
        }
    }
    return V;
}

// The conjugated-family operator acting on an offset series u:
//   Delta + sum_k beta_k z_k d_k + loop + window potentials + the first-order
//   window terms, where beta_k = xi_{k+1} - xi_k with xi_{n+1} = xi_1 + eta.
// `loop_coeff_n` selects the loop coefficient: true -> n, false -> the
// massive m*n + n - (m n)^2 / c.
OffsetSeries apply_tilde(const EquivParams& p, int D, bool loop_coeff_n, const OffsetSeries& f) {
    int n = p.n;
    const Rational& m = p.m;
    const TruncatedSeries& body = f.body;
    TruncatedSeries out = TruncatedSeries::zero(n, D);

    std::vector<Rational> beta;
    for (int k = 1; k <= n; ++k) beta.push_back(p.xi_ext(k + 1) - p.xi_ext(k));

    auto euler = [&](const Exp& e, int k1) {  // offset_k + e_k for 1-based k reduced mod n
        int k0 = ((k1 - 1) % n + n) % n;
        return f.offset[static_cast<size_t>(k0)] + Rational(e[static_cast<size_t>(k0)]);
    };

    // diagonal part: Delta (cyclic) + beta-weighted Euler operators
    for (const auto& [e, c] : body.terms()) {
        Rational diag(0);
        for (int k = 1; k <= n; ++k) {
            Rational vk = euler(e, k);
            diag += vk * vk - vk * euler(e, k + 1) + beta[static_cast<size_t>(k - 1)] * vk;
        }
        out.add_term(e, diag * c);
    }

    // loop potential: +LC * sum_{k,t} k z^{kt(1,..,1)}
    Rational c_charge = p.central_charge();
    Rational LC = loop_coeff_n
                      ? Rational(n)
                      : Rational(n) * m + Rational(n) - m * m * Rational(n) * Rational(n) / c_charge;
    for (const auto& [e, cf] : body.terms()) {
        int deg = total_degree(e);
        for (int k = 1; n * k + deg <= D; ++k) {
            for (int t = 1; n * k * t + deg <= D; ++t) {
                Exp e2(e);
                for (int c2 = 0; c2 < n; ++c2) e2[static_cast<size_t>(c2)] += k * t;
                out.add_term(e2, LC * Rational(k) * cf);
            }
        }
    }

    // window terms: -m(m+1) sum_t t z^{tw}
    //             + (phi(i) - phi(j+1) + d_{j+1} - d_j - d_i + d_{i-1}) sum_t z^{tw}
    Rational mm1 = m * (m + Rational(1));
    for (const Window& w : windows_up_to(n, D)) {
        Exp we = window_monomial(n, w.i, w.j);
        int wd = total_degree(we);
        Rational phi_diff = p.phi(w.i) - p.phi(w.j + 1);
        for (const auto& [e, cf] : body.terms()) {
            int deg = total_degree(e);
            if (deg + wd > D) continue;
            // Euler combination evaluated at the source exponent
            Rational combo = euler(e, w.j + 1) - euler(e, w.j) - euler(e, w.i) + euler(e, w.i - 1 + n);
            Rational first_order = phi_diff + combo;
            for (int t = 1; deg + t * wd <= D; ++t) {
                Exp e2(e);
                for (int c2 = 0; c2 < n; ++c2)
                    e2[static_cast<size_t>(c2)] += t * we[static_cast<size_t>(c2)];
                out.add_term(e2, (first_order - mm1 * Rational(t)) * cf);
            }
        }
    }

    return OffsetSeries(f.offset, out);
}

std::vector<Rational> offset_minus(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> r(a);
    for (size_t k = 0; k < r.size(); ++k) r[k] -= b[k];
    return r;
}

std::vector<Rational> offset_plus(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> r(a);
    for (size_t k = 0; k < r.size(); ++k) r[k] += b[k];
    return r;
}

} // namespace

OffsetSeries hamiltonian_apply(const CMOperatorSpec& spec, const OffsetSeries& f) {
    const EquivParams& p = spec.params;
    int n = p.n;
    int D = spec.D;
    if (static_cast<int>(f.offset.size()) != n || f.body.nvars() != n)
        throw DimensionError("offset series rank mismatch");

    if (spec.variant == CalogeroVariant::Direct) {
        // (Delta + eta D) acts diagonally through Q on offset+exponent.
        TruncatedSeries out = TruncatedSeries::zero(n, D);
        for (const auto& [e, c] : f.body.terms()) {
            std::vector<Rational> v;
            for (int k = 0; k < n; ++k)
                v.push_back(f.offset[static_cast<size_t>(k)] + Rational(e[static_cast<size_t>(k)]));
            out.add_term(e, cm_symbol(p, v) * c);
        }
        out += direct_potential(p, D) * f.body;
        return OffsetSeries(f.offset, out);
    }

    // Conjugated family: H f = F Htilde(F^{-1} f) + lambda f with F = z^b delta.
    bool loop_n = spec.variant == CalogeroVariant::CharacterLoopN;
    std::vector<Rational> b = b_exponents(p);
    TruncatedSeries delta = weyl_delta(n, D);
    OffsetSeries inner(offset_minus(f.offset, b), delta.inverse() * f.body);
    OffsetSeries mid = apply_tilde(p, D, loop_n, inner);
    TruncatedSeries result_body = delta * mid.body;
    result_body += f.body.scaled(eigenvalue_lambda(p));
    return OffsetSeries(f.offset, result_body);
}

EigenData solve_eigenfunction(const CMOperatorSpec& spec) {
    const EquivParams& p = spec.params;
    int n = p.n;
    int D = spec.D;
    std::vector<Rational> b = b_exponents(p);
    Rational lambda = eigenvalue_lambda(p);

    // Order-by-order linear recursion. For each variant the operator splits
    // as (diagonal) + (strictly degree-raising); the recursion denominator at
    // degree d is diag(d) - diag(0).
    bool direct = spec.variant == CalogeroVariant::Direct;
    bool loop_n = spec.variant == CalogeroVariant::CharacterLoopN;

    // Collect the raising terms as (shift exponent, constant coeff, window
    // first-order data). For the conjugated family we solve Htilde K = 0 and
    // set Y = z^b * (delta * K).
    struct RaisingTerm {
        Exp shift;
        Rational mult;       // pure multiplication part
        bool has_combo = false;
        int wi = 0, wj = 0;  // window for the Euler combination part
        Rational combo_scale;
    };
    std::vector<RaisingTerm> raising;

    std::vector<Rational> beta;
    for (int k = 1; k <= n; ++k) beta.push_back(p.xi_ext(k + 1) - p.xi_ext(k));

    const Rational& m = p.m;
    Rational mm1 = m * (m + Rational(1));

    if (direct) {
        TruncatedSeries V = direct_potential(p, D);
        for (const auto& [e, c] : V.terms()) raising.push_back({e, c, false, 0, 0, Rational(0)});
    } else {
        Rational c_charge = p.central_charge();
        Rational LC = loop_n ? Rational(n)
                             : Rational(n) * m + Rational(n)
                                   - m * m * Rational((long)n * n) / c_charge;
        for (int k = 1; n * k <= D; ++k)
            for (int t = 1; n * k * t <= D; ++t)
                raising.push_back(
                    {Exp(static_cast<size_t>(n), k * t), LC * Rational(k), false, 0, 0, Rational(0)});
        for (int i = 1; i <= n; ++i) {
            for (int j = i; j - i + 1 <= D; ++j) {
                Exp we = window_monomial(n, i, j);
                int wd = total_degree(we);
                Rational phi_diff = p.phi(i) - p.phi(j + 1);
                for (int t = 1; t * wd <= D; ++t) {
                    Exp e(static_cast<size_t>(n), 0);
                    for (int c2 = 0; c2 < n; ++c2)
                        e[static_cast<size_t>(c2)] = t * we[static_cast<size_t>(c2)];
                    RaisingTerm rt{e, phi_diff - mm1 * Rational(t), true, i, j, Rational(1)};
                    raising.push_back(rt);
                }
            }
        }
    }

    auto diag_at = [&](const Exp& d) {
        if (direct) {
            std::vector<Rational> v;
            for (int k = 0; k < n; ++k)
                v.push_back(b[static_cast<size_t>(k)] + Rational(d[static_cast<size_t>(k)]));
            return cm_symbol(p, v) - cm_symbol(p, b);
        }
        Rational s(0);
        for (int k = 1; k <= n; ++k) {
            Rational vk = Rational(d[static_cast<size_t>(k - 1)]);
            s += vk * vk - vk * Rational(d[static_cast<size_t>(k % n)])
                 + beta[static_cast<size_t>(k - 1)] * vk;
        }
        return s;
    };

    // coefficients of the solved series (K for the conjugated family, Y-body
    // for the Direct one)
    TruncatedSeries sol = TruncatedSeries::one(n, D);

    std::vector<Exp> targets;
    {
        std::function<void(Exp&, int, int)> rec = [&](Exp& cur, int pos, int rem) {
            if (pos == n - 1) {
                cur[static_cast<size_t>(pos)] = rem;
                targets.push_back(cur);
                return;
            }
            for (int v = 0; v <= rem; ++v) {
                cur[static_cast<size_t>(pos)] = v;
                rec(cur, pos + 1, rem - v);
            }
        };
        for (int s = 1; s <= D; ++s) {
            Exp cur(static_cast<size_t>(n), 0);
            rec(cur, 0, s);
        }
    }

    auto euler_at = [&](const Exp& e, int k1) {
        int k0 = ((k1 - 1) % n + n) % n;
        return Rational(e[static_cast<size_t>(k0)]);
    };

    for (const Exp& d : targets) {
        Rational denom = diag_at(d);
        if (denom.is_zero()) {
            std::ostringstream os;
            os << "resonance: recursion denominator vanishes at degree (";
            for (size_t k = 0; k < d.size(); ++k) os << (k ? "," : "") << d[k];
            os << ")";
            throw ResonanceError(os.str(), d);
        }
        Rational rhs(0);
        for (const RaisingTerm& rt : raising) {
            Exp src(d);
            bool ok = true;
            for (size_t k = 0; k < src.size(); ++k) {
                src[k] -= rt.shift[k];
                if (src[k] < 0) { ok = false; break; }
            }
            if (!ok || src == d) continue;
            Rational c = sol.coeff(src);
            if (c.is_zero()) continue;
            Rational factor = rt.mult;
            if (rt.has_combo) {
                factor += rt.combo_scale
                          * (euler_at(src, rt.wj + 1) - euler_at(src, rt.wj) - euler_at(src, rt.wi)
                             + euler_at(src, rt.wi - 1 + n));
            }
            rhs += factor * c;
        }
        if (!rhs.is_zero()) sol.set_coeff(d, -rhs / denom);
    }

    TruncatedSeries ybody =
        direct ? sol : weyl_delta(n, D) * sol;
    if (ybody.constant_term() != Rational(1))
        throw NormalizationError("eigenfunction body lost its unit constant term");
    return EigenData{b, lambda, OffsetSeries(b, ybody)};
}

TruncatedSeries reference_partition_function(const CMOperatorSpec& spec) {
    EigenData eig = solve_eigenfunction(spec);
    TruncatedSeries delta = weyl_delta(spec.params.n, spec.D);
    return eig.Y.body * delta.pow_rational(-spec.params.m - Rational(1));
}

} // namespace laumon
