#include "laumon/smodule.hpp"

#include "laumon/errors.hpp"

namespace laumon {

SModVector SModVector::weight_zero(int n) {
    SModVector s(n);
    s.terms_.emplace(std::vector<int>(static_cast<size_t>(n), 0), Rational(1));
    return s;
}

void SModVector::add(const std::vector<int>& offset, const Rational& c) {
    if (c.is_zero()) return;
    int sum = 0;
    for (int k : offset) sum += k;
    if (sum != 0) throw DimensionError("S^m offsets must sum to zero");
    auto [it, fresh] = terms_.emplace(offset, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SModVector SModVector::scaled(const Rational& c) const {
    SModVector r(n_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
    return r;
}

SModVector& SModVector::operator+=(const SModVector& o) {
    for (const auto& [k, v] : o.terms_) add(k, v);
    return *this;
}

Rational SModVector::coeff(const std::vector<int>& offset) const {
    auto it = terms_.find(offset);
    return it == terms_.end() ? Rational(0) : it->second;
}

SModVector smodule_act(const AlgebraElement& x, const SModVector& s, const EquivParams& params) {
    if (x.n() != s.n()) throw DimensionError("S^m action rank mismatch");
    int n = s.n();
    const Rational& m = params.m;
    SModVector out(n);
    for (const auto& [u, cu] : x.units()) {
        for (const auto& [off, cs] : s.terms()) {
            // -y_j d/dy_i on y^{m+k}: coefficient -(m + k_i), offset shifts
            // by -e_i + e_j (no shift when i = j).
            Rational c = -(m + Rational(off[static_cast<size_t>(u.i - 1)])) * cu * cs;
            std::vector<int> off2(off);
            off2[static_cast<size_t>(u.i - 1)] -= 1;
            off2[static_cast<size_t>(u.j - 1)] += 1;
            out.add(off2, c);
            if (u.i == u.j && u.a == 0) out.add(off, m * cu * cs);
        }
    }
    // central charge is zero on S^m: the central part acts by 0
    return out;
}

Rational smodule_ev(const SModVector& s) {
    Rational total(0);
    for (const auto& [k, c] : s.terms()) total += c;
    return total;
}

TruncatedSeries ev_g_inverse(const SModVector& s, const EquivParams& params, int D) {
    int n = s.n();
    // 1 + sum_{j>=i} g_{[i;j]} telescopes to prod_{j>=i} (1 - z^{[i;j]})^{-1}.
    std::vector<TruncatedSeries> row_factor;
    for (int i = 1; i <= n; ++i) {
        TruncatedSeries f = TruncatedSeries::one(n, D);
        for (int j = i; j - i + 1 <= D; ++j) {
            TruncatedSeries t = TruncatedSeries::one(n, D);
            t.add_term(window_monomial(n, i, j), Rational(-1));
            f = f * t.inverse();
        }
        row_factor.push_back(f);
    }
    TruncatedSeries out = TruncatedSeries::zero(n, D);
    for (const auto& [off, c] : s.terms()) {
        TruncatedSeries term = TruncatedSeries::one(n, D);
        for (int i = 1; i <= n; ++i) {
            Rational alpha = params.m + Rational(off[static_cast<size_t>(i - 1)]);
            term = term * row_factor[static_cast<size_t>(i - 1)].pow_rational(alpha);
        }
        out += term.scaled(c);
    }
    return out;
}

} // namespace laumon
