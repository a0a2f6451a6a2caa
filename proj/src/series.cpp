#include "laumon/series.hpp"

#include <algorithm>
#include <sstream>

#include "laumon/errors.hpp"

namespace laumon {

TruncatedSeries::TruncatedSeries(int nvars, int bound) : nvars_(nvars), bound_(bound) {
    if (nvars < 1) throw DimensionError("series needs at least one variable");
    if (bound < 0) throw DimensionError("negative truncation bound");
}

TruncatedSeries TruncatedSeries::one(int nvars, int bound) {
    TruncatedSeries s(nvars, bound);
    s.terms_.emplace(Exp(static_cast<size_t>(nvars), 0), Rational(1));
    return s;
}

TruncatedSeries TruncatedSeries::monomial(int nvars, int bound, const Exp& e, const Rational& c) {
    TruncatedSeries s(nvars, bound);
    s.add_term(e, c);
    return s;
}

void TruncatedSeries::check_same_shape(const TruncatedSeries& o, const char* op) const {
    if (nvars_ != o.nvars_ || bound_ != o.bound_)
        throw DimensionError(std::string("mismatched series shapes in ") + op);
}

Rational TruncatedSeries::coeff(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void TruncatedSeries::set_coeff(const Exp& e, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars_) throw DimensionError("exponent vector length");
    for (int x : e)
        if (x < 0) throw DimensionError("negative exponent in power series");
    if (total_degree(e) > bound_) return;
    if (c.is_zero())
        terms_.erase(e);
    else
        terms_[e] = c;
}

void TruncatedSeries::add_term(const Exp& e, const Rational& c) {
    if (c.is_zero()) return;
    if (static_cast<int>(e.size()) != nvars_) throw DimensionError("exponent vector length");
    for (int x : e)
        if (x < 0) throw DimensionError("negative exponent in power series");
    if (total_degree(e) > bound_) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    check_same_shape(o, "add");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    check_same_shape(o, "sub");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r(nvars_, bound_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

TruncatedSeries TruncatedSeries::scaled(const Rational& c) const {
    TruncatedSeries r(nvars_, bound_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_same_shape(b, "mul");
    TruncatedSeries r(a.nvars_, a.bound_);
    for (const auto& [ea, ca] : a.terms_) {
        int da = total_degree(ea);
        for (const auto& [eb, cb] : b.terms_) {
            if (da + total_degree(eb) > a.bound_) continue;
            Exp e(ea);
            for (size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

TruncatedSeries TruncatedSeries::inverse() const {
    Rational c0 = constant_term();
    if (c0.is_zero()) throw NotAUnitError("series with zero constant term is not invertible");
    // Order-by-order: b_d = -(sum_{0<w<=d} a_w b_{d-w}) / a_0.
    TruncatedSeries b(nvars_, bound_);
    Exp zero(static_cast<size_t>(nvars_), 0);
    b.terms_.emplace(zero, Rational(1) / c0);
    // Walk target exponents in graded order by collecting them per level.
    // Contributions come only from already-computed lower terms.
    for (int level = 1; level <= bound_; ++level) {
        // candidate targets: sums e = ea + eb are generated from products below
        std::map<Exp, Rational> acc;
        for (const auto& [ea, ca] : terms_) {
            int da = total_degree(ea);
            if (da == 0 || da > level) continue;
            for (const auto& [eb, cb] : b.terms_) {
                if (da + total_degree(eb) != level) continue;
                Exp e(ea);
                for (size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
                auto [it, fresh] = acc.emplace(e, ca * cb);
                if (!fresh) it->second += ca * cb;
            }
        }
        for (const auto& [e, s] : acc) {
            if (!s.is_zero()) b.terms_[e] = -s / c0;
        }
    }
    return b;
}

TruncatedSeries TruncatedSeries::pow_rational(const Rational& alpha) const {
    if (constant_term() != Rational(1))
        throw NormalizationError("rational power requires constant term 1");
    // (1+u)^alpha = sum_k C(alpha,k) u^k; u has positive valuation so the
    // sum stops at k = bound.
    TruncatedSeries u(*this);
    u.add_term(Exp(static_cast<size_t>(nvars_), 0), Rational(-1));
    TruncatedSeries result = TruncatedSeries::one(nvars_, bound_);
    TruncatedSeries upow = TruncatedSeries::one(nvars_, bound_);
    for (int k = 1; k <= bound_; ++k) {
        upow = upow * u;
        if (upow.is_zero()) break;
        result += upow.scaled(binomial(alpha, k));
    }
    return result;
}

TruncatedSeries TruncatedSeries::truncated(int new_bound) const {
    if (new_bound > bound_) throw DimensionError("cannot raise a truncation bound");
    TruncatedSeries r(nvars_, new_bound);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) <= new_bound) r.terms_.emplace(e, c);
    return r;
}

std::string TruncatedSeries::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (size_t k = 0; k < e.size(); ++k)
            if (e[k] != 0) os << "*z" << (k + 1) << "^" << e[k];
    }
    return os.str();
}

Exp window_monomial(int n, int i, int j) {
    if (n < 1) throw IndexError("window_monomial: n < 1");
    if (i < 1 || i > n) throw IndexError("window_monomial: start index out of range");
    if (j < i) throw IndexError("window_monomial: empty window");
    Exp e(static_cast<size_t>(n), 0);
    for (int k = i; k <= j; ++k) e[static_cast<size_t>(((k - 1) % n + n) % n)] += 1;
    return e;
}

TruncatedSeries weyl_delta(int n, int D) {
    TruncatedSeries d = TruncatedSeries::one(n, D);
    // A window of length L only contributes from degree L on.
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j - i + 1 <= D; ++j) {
            TruncatedSeries f = TruncatedSeries::one(n, D);
            f.add_term(window_monomial(n, i, j), Rational(-1));
            d = d * f;
        }
    }
    return d;
}

} // namespace laumon
