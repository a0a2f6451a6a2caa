#include "laumon/gln.hpp"

#include <algorithm>

#include "laumon/errors.hpp"

namespace laumon {

namespace {
int mod1(int x, int n) { return ((x - 1) % n + n) % n + 1; }  // into 1..n
int floordiv(int a, int b) {
    int q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}
} // namespace

AlgebraElement AlgebraElement::unit(int n, int a, int i, int j, const Rational& c) {
    AlgebraElement x(n);
    x.add_unit(LoopUnit{a, i, j}, c);
    return x;
}

AlgebraElement AlgebraElement::central(int n, const Rational& c) {
    AlgebraElement x(n);
    x.central_ = c;
    return x;
}

AlgebraElement AlgebraElement::e_plus(int n, Win w) {
    int a = floordiv(w.j, n) - floordiv(w.i - 1, n);
    return unit(n, a, mod1(w.i, n), mod1(w.j + 1, n));
}

AlgebraElement AlgebraElement::e_minus(int n, Win w) {
    int a = floordiv(w.j, n) - floordiv(w.i - 1, n);
    return unit(n, -a, mod1(w.j + 1, n), mod1(w.i, n));
}

AlgebraElement AlgebraElement::h(int n, int i) { return unit(n, 0, i, i); }

AlgebraElement AlgebraElement::loop_a(int n, int sign, int k) {
    AlgebraElement x(n);
    for (int i = 1; i <= n; ++i) {
        Win w{i, i + n * k - 1};
        x += (sign > 0 ? e_plus(n, w) : e_minus(n, w));
    }
    return x;
}

void AlgebraElement::add_unit(const LoopUnit& u, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = units_.emplace(u, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) units_.erase(it);
    }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    for (const auto& [u, c] : o.units_) add_unit(u, c);
    central_ += o.central_;
    return *this;
}

AlgebraElement AlgebraElement::scaled(const Rational& c) const {
    AlgebraElement r(n_);
    if (c.is_zero()) return r;
    for (const auto& [u, v] : units_) r.units_.emplace(u, v * c);
    r.central_ = central_ * c;
    return r;
}

AlgebraElement lie_bracket(const AlgebraElement& x, const AlgebraElement& y) {
    if (x.n() != y.n()) throw DimensionError("bracket rank mismatch");
    int n = x.n();
    AlgebraElement r(n);
    for (const auto& [u, cu] : x.units()) {
        for (const auto& [v, cv] : y.units()) {
            Rational c = cu * cv;
            if (u.j == v.i) r.add_unit(LoopUnit{u.a + v.a, u.i, v.j}, c);
            if (v.j == u.i) r.add_unit(LoopUnit{u.a + v.a, v.i, u.j}, -c);
            if (u.a + v.a == 0 && u.j == v.i && v.j == u.i) r.add_central(Rational(u.a) * c);
        }
    }
    return r;
}

GroupElement::GroupElement(int n, int bound, int series_vars_bound)
    : n_(n), bound_(bound), sbound_(series_vars_bound) {
    if (n < 1 || bound < 0) throw DimensionError("bad group element shape");
}

GroupElement GroupElement::identity(int n, int bound, int series_bound) {
    return GroupElement(n, bound, series_bound);
}

TruncatedSeries GroupElement::entry(const Win& w) const {
    auto it = entries_.find(w);
    if (it != entries_.end()) return it->second;
    return TruncatedSeries::zero(n_, sbound_);
}

void GroupElement::set_entry(const Win& w, const TruncatedSeries& s) {
    if (w.i < 1 || w.i > n_ || w.j < w.i) throw IndexError("bad window");
    if (w.len() > bound_) return;
    if (s.is_zero())
        entries_.erase(w);
    else
        entries_.insert_or_assign(w, s);
}

namespace {
// reduce a window with arbitrary start into start 1..n
Win reduce_win(int n, int i, int j) {
    int i0 = mod1(i, n);
    int shift = i0 - i;
    return Win{i0, j + shift};
}
} // namespace

GroupElement group_multiply(const GroupElement& g, const GroupElement& h) {
    if (g.n() != h.n() || g.bound() != h.bound() || g.series_bound() != h.series_bound())
        throw DimensionError("group element shape mismatch");
    int n = g.n();
    GroupElement r(n, g.bound(), g.series_bound());
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j - i + 1 <= g.bound(); ++j) {
            TruncatedSeries acc = TruncatedSeries::zero(n, g.series_bound());
            // k = i term: g_{[i;i-1]} = 1
            acc += h.entry(Win{i, j});
            // i < k <= j: proper splittings
            for (int k = i + 1; k <= j; ++k) {
                Win left{i, k - 1};
                Win right = reduce_win(n, k, j);
                acc += g.entry(left) * h.entry(right);
            }
            // k = j+1 term: h_{[j+1;j]} = 1
            acc += g.entry(Win{i, j});
            r.set_entry(Win{i, j}, acc);
        }
    }
    return r;
}

GroupElement group_invert(const GroupElement& g) {
    int n = g.n();
    GroupElement inv(n, g.bound(), g.series_bound());
    // recursion on window length: 0 = sum_{k=i}^{j+1} g_{[i;k-1]} inv_{[k;j]}
    for (int len = 1; len <= g.bound(); ++len) {
        for (int i = 1; i <= n; ++i) {
            int j = i + len - 1;
            TruncatedSeries acc = g.entry(Win{i, j});  // k = j+1 term
            for (int k = i + 1; k <= j; ++k) {
                Win right = reduce_win(n, k, j);
                acc += g.entry(Win{i, k - 1}) * inv.entry(right);
            }
            inv.set_entry(Win{i, j}, -acc);  // k = i term is inv_{[i;j]} itself
        }
    }
    return inv;
}

GroupElement exp_positive(int n, int bound, int series_bound, const std::map<Win, Rational>& x) {
    // exp via powers under window convolution; x^k only reaches length >= k.
    GroupElement result = GroupElement::identity(n, bound, series_bound);
    GroupElement xg(n, bound, series_bound);
    for (const auto& [w, c] : x) {
        if (w.len() > bound) continue;
        xg.set_entry(w, TruncatedSeries::monomial(n, series_bound,
                                                  Exp(static_cast<size_t>(n), 0), c));
    }
    // power = x^k / k!, accumulated into the entry table of result
    GroupElement power = xg;
    Rational factorial(1);
    for (int k = 1; k <= bound; ++k) {
        factorial *= Rational(k);
        for (const auto& [w, s] : power.entries()) {
            TruncatedSeries cur = result.entry(w);
            cur += s.scaled(Rational(1) / factorial);
            result.set_entry(w, cur);
        }
        // next power: convolution without the identity terms
        GroupElement next(n, bound, series_bound);
        for (int i = 1; i <= n; ++i) {
            for (int j = i; j - i + 1 <= bound; ++j) {
                TruncatedSeries acc = TruncatedSeries::zero(n, series_bound);
                for (int split = i + 1; split <= j; ++split) {
                    Win right = reduce_win(n, split, j);
                    acc += power.entry(Win{i, split - 1}) * xg.entry(right);
                }
                next.set_entry(Win{i, j}, acc);
            }
        }
        power = next;
    }
    return result;
}

GroupElement b_element(int n, int bound, int series_bound) {
    std::map<Win, Rational> x;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j - i + 1 <= bound; ++j)
            x[Win{i, j}] = Rational(1, j - i + 1);
    return exp_positive(n, bound, series_bound, x);
}

namespace {
// prod_{j'=i..j} (1 - z^{[i;j']})^{-1}, exact through degree D; this is the
// g entry with its monomial prefactor z^{[i;j]} removed.
TruncatedSeries g_entry_reduced(int n, int D, int i, int j) {
    TruncatedSeries e = TruncatedSeries::one(n, D);
    for (int jp = i; jp <= j; ++jp) {
        TruncatedSeries f = TruncatedSeries::one(n, D);
        f.add_term(window_monomial(n, i, jp), Rational(-1));
        e = e * f.inverse();
    }
    return e;
}
} // namespace

GroupElement g_element(int n, int D) {
    GroupElement g(n, D, D);
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j - i + 1 <= D; ++j) {
            TruncatedSeries mono =
                TruncatedSeries::monomial(n, D, window_monomial(n, i, j), Rational(1));
            g.set_entry(Win{i, j}, mono * g_entry_reduced(n, D, i, j));
        }
    }
    return g;
}

TwistReport check_twist_conjugation(int n, int D) {
    GroupElement g = g_element(n, D);
    GroupElement ginv = group_invert(g);

    // z-conjugation divides the [i;j] entry by its window monomial; for g
    // this cancels the monomial prefactor, leaving the reduced entry.
    GroupElement gtw(n, D, D);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j - i + 1 <= D; ++j)
            gtw.set_entry(Win{i, j}, g_entry_reduced(n, D, i, j));

    GroupElement lhs = group_multiply(ginv, gtw);
    GroupElement b = b_element(n, D, D);

    // B's window entries are the constant series 1; compare up to the degree
    // bound that the twisted product can see: window [i;j] entries of the
    // product are only meaningful through degree D - 0 (all exact here).
    TwistReport rep;
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j - i + 1 <= D; ++j) {
            Win w{i, j};
            if (lhs.entry(w) != b.entry(w)) {
                rep.pass = false;
                rep.failing.push_back(w);
            }
        }
    }
    return rep;
}

} // namespace laumon
