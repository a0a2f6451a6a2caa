#include "laumon/verma.hpp"

#include <algorithm>

#include "laumon/errors.hpp"

namespace laumon {

namespace {
int mod1(int x, int n) { return ((x - 1) % n + n) % n + 1; }
int floordiv(int a, int b) {
    int q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

enum class UnitKind { Raising, Lowering, Cartan };

// Classify z^a E_{ij}: raising and lowering units correspond to unique
// windows, diagonal degree-zero units are Cartan.
struct Classified {
    UnitKind kind;
    Win w;      // for raising/lowering
    int cartan; // for Cartan: the index i
};

Classified classify(int n, const LoopUnit& u) {
    if (u.a == 0 && u.i == u.j) return {UnitKind::Cartan, Win{}, u.i};
    if (u.a > 0 || (u.a == 0 && u.i < u.j)) {
        // e^+_{[i;J]} with J = j - 1 + n a
        int J = u.j - 1 + n * u.a;
        return {UnitKind::Raising, Win{u.i, J}, 0};
    }
    int J = u.i - 1 + n * (-u.a);
    return {UnitKind::Lowering, Win{u.j, J}, 0};
}

LoopUnit lowering_unit(int n, const Win& w) {
    return LoopUnit{-floordiv(w.j, n), mod1(w.j + 1, n), mod1(w.i, n)};
}

} // namespace

Exp PBWMonomial::degree(int n) const {
    Exp d(static_cast<size_t>(n), 0);
    for (const Win& w : windows) {
        Exp m = window_monomial(n, w.i, w.j);
        for (size_t k = 0; k < d.size(); ++k) d[k] += m[k];
    }
    return d;
}

std::vector<PBWMonomial> pbw_basis(int n, const Exp& d) {
    int size = total_degree(d);
    std::vector<Win> windows;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j - i + 1 <= size; ++j) windows.push_back({i, j});
    std::sort(windows.begin(), windows.end());

    std::vector<PBWMonomial> out;
    PBWMonomial cur;
    Exp rem(d);
    std::function<void(size_t)> rec = [&](size_t idx) {
        if (total_degree(rem) == 0) {
            out.push_back(cur);
            return;
        }
        if (idx >= windows.size()) return;
        // skip this window entirely
        rec(idx + 1);
        // or use it one more time (multiset: allow repeats of the same window)
        const Win& w = windows[idx];
        Exp m = window_monomial(n, w.i, w.j);
        bool fits = true;
        for (size_t k = 0; k < rem.size(); ++k)
            if (m[k] > rem[k]) { fits = false; break; }
        if (!fits) return;
        for (size_t k = 0; k < rem.size(); ++k) rem[k] -= m[k];
        cur.windows.push_back(w);
        rec(idx);
        cur.windows.pop_back();
        for (size_t k = 0; k < rem.size(); ++k) rem[k] += m[k];
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

VermaVector VermaVector::vacuum(int n) {
    VermaVector v(n);
    v.terms_.emplace(PBWMonomial{}, Rational(1));
    return v;
}

VermaVector VermaVector::basis(int n, const PBWMonomial& m) {
    VermaVector v(n);
    v.terms_.emplace(m, Rational(1));
    return v;
}

void VermaVector::add(const PBWMonomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

VermaVector& VermaVector::operator+=(const VermaVector& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

VermaVector& VermaVector::operator-=(const VermaVector& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

VermaVector VermaVector::scaled(const Rational& c) const {
    VermaVector r(n_);
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

Rational VermaVector::coeff(const PBWMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

namespace {

// act of a single basis unit on a single PBW monomial, recursive
// normal ordering.
VermaVector act_unit(int n, const LoopUnit& u, const PBWMonomial& mono,
                     const EquivParams& params) {
    VermaVector out(n);
    Classified cls = classify(n, u);

    if (mono.windows.empty()) {
        if (cls.kind == UnitKind::Raising) return out;  // kills the vacuum
        if (cls.kind == UnitKind::Cartan) {
            PBWMonomial vac;
            out.add(vac, params.xi[static_cast<size_t>(cls.cartan - 1)] + Rational(cls.cartan));
            return out;
        }
        PBWMonomial m2;
        m2.windows.push_back(cls.w);
        out.add(m2, Rational(1));
        return out;
    }

    const Win first = mono.windows.front();
    PBWMonomial rest;
    rest.windows.assign(mono.windows.begin() + 1, mono.windows.end());

    if (cls.kind == UnitKind::Lowering && !(first < cls.w)) {
        // already in canonical position: prepend
        PBWMonomial m2;
        m2.windows.reserve(mono.windows.size() + 1);
        m2.windows.push_back(cls.w);
        m2.windows.insert(m2.windows.end(), mono.windows.begin(), mono.windows.end());
        out.add(m2, Rational(1));
        return out;
    }

    // commute past the first lowering generator:
    // x e^-_{first} rest = e^-_{first} (x rest) + [x, e^-_{first}] rest
    AlgebraElement x = AlgebraElement::unit(n, u.a, u.i, u.j);
    AlgebraElement ef = AlgebraElement::unit(n, lowering_unit(n, first).a,
                                             lowering_unit(n, first).i, lowering_unit(n, first).j);
    // first branch: x through, then prepend e^-_{first} in canonical order
    VermaVector inner = act_unit(n, u, rest, params);
    for (const auto& [m, c] : inner.terms()) {
        VermaVector lowered =
            act_unit(n, lowering_unit(n, first), m, params);  // insert canonically
        out += lowered.scaled(c);
    }
    // bracket branch
    AlgebraElement br = lie_bracket(x, ef);
    for (const auto& [bu, bc] : br.units()) {
        VermaVector piece = act_unit(n, bu, rest, params);
        out += piece.scaled(bc);
    }
    if (!br.central_part().is_zero()) {
        VermaVector piece = VermaVector::basis(n, rest);
        out += piece.scaled(br.central_part() * params.central_charge());
    }
    return out;
}

} // namespace

VermaVector act(const AlgebraElement& x, const VermaVector& u, const EquivParams& params) {
    if (x.n() != u.n()) throw DimensionError("act rank mismatch");
    int n = x.n();
    VermaVector out(n);
    for (const auto& [unit, cu] : x.units()) {
        for (const auto& [mono, cm] : u.terms()) {
            out += act_unit(n, unit, mono, params).scaled(cu * cm);
        }
    }
    if (!x.central_part().is_zero())
        out += u.scaled(x.central_part() * params.central_charge());
    return out;
}

VermaVector apply_B(const VermaVector& u, const EquivParams& params) {
    int n = u.n();
    // X = sum over raising windows of e^+_w / len(w); windows longer than the
    // maximal degree of u act by zero.
    int maxdeg = 0;
    for (const auto& [m, c] : u.terms()) maxdeg = std::max(maxdeg, total_degree(m.degree(n)));
    AlgebraElement X(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j - i + 1 <= maxdeg; ++j)
            X += AlgebraElement::e_plus(n, Win{i, j}).scaled(Rational(1, j - i + 1));

    VermaVector result = u;
    VermaVector power = u;
    Rational fact(1);
    for (int k = 1; k <= maxdeg && !power.is_zero(); ++k) {
        power = act(X, power, params);
        fact *= Rational(k);
        result += power.scaled(Rational(1) / fact);
    }
    return result;
}

VermaVector energy_apply(const VermaVector& u, const EquivParams& params) {
    int n = u.n();
    int maxdeg = 0;
    for (const auto& [m, c] : u.terms()) maxdeg = std::max(maxdeg, total_degree(m.degree(n)));

    VermaVector out(n);
    // sum_i h_i^2/2 + c i h_i / n
    for (int i = 1; i <= n; ++i) {
        AlgebraElement hi = AlgebraElement::h(n, i);
        VermaVector hu = act(hi, u, params);
        out += act(hi, hu, params).scaled(Rational(1, 2));
        out += hu.scaled(params.central_charge() * Rational(i) / Rational(n));
    }
    // sum over windows e^-_w e^+_w: e^+_w lowers by len(w), so len <= maxdeg
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j - i + 1 <= maxdeg; ++j) {
            VermaVector up = act(AlgebraElement::e_plus(n, Win{i, j}), u, params);
            if (up.is_zero()) continue;
            out += act(AlgebraElement::e_minus(n, Win{i, j}), up, params);
        }
    }
    // (1/c) sum_k a^-_k a^+_k
    for (int k = 1; n * k <= maxdeg; ++k) {
        VermaVector up = act(AlgebraElement::loop_a(n, +1, k), u, params);
        if (up.is_zero()) continue;
        out += act(AlgebraElement::loop_a(n, -1, k), up, params)
                   .scaled(Rational(1) / params.central_charge());
    }
    return out;
}

TruncatedSeries graded_trace(const std::function<VermaVector(const VermaVector&)>& op, int n,
                             int D) {
    TruncatedSeries tr = TruncatedSeries::zero(n, D);
    std::function<void(Exp&, int, int)> rec = [&](Exp& cur, int pos, int rem) {
        if (pos == n - 1) {
            cur[static_cast<size_t>(pos)] = rem;
            Rational diag(0);
            for (const PBWMonomial& m : pbw_basis(n, cur)) {
                VermaVector image = op(VermaVector::basis(n, m));
                diag += image.coeff(m);
            }
            tr.set_coeff(cur, diag);
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            cur[static_cast<size_t>(pos)] = v;
            rec(cur, pos + 1, rem - v);
        }
    };
    for (int s = 0; s <= D; ++s) {
        Exp cur(static_cast<size_t>(n), 0);
        rec(cur, 0, s);
    }
    return tr;
}

} // namespace laumon
