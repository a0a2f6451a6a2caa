#pragma once

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "laumon/rational.hpp"

namespace laumon {

// Exponent vector of a monomial z_1^{d_1}...z_n^{d_n}.
using Exp = std::vector<int>;

inline int total_degree(const Exp& e) { return std::accumulate(e.begin(), e.end(), 0); }

// Sparse multivariate power series truncated at a total-degree bound.
// Stored coefficients are never zero and never exceed the bound, so
// equality of term maps is equality of series.
class TruncatedSeries {
public:
    TruncatedSeries(int nvars, int bound);

    static TruncatedSeries zero(int nvars, int bound) { return TruncatedSeries(nvars, bound); }
    static TruncatedSeries one(int nvars, int bound);
    static TruncatedSeries monomial(int nvars, int bound, const Exp& e, const Rational& c);

    int nvars() const { return nvars_; }
    int bound() const { return bound_; }
    const std::map<Exp, Rational>& terms() const { return terms_; }

    Rational coeff(const Exp& e) const;
    Rational constant_term() const { return coeff(Exp(static_cast<size_t>(nvars_), 0)); }

    void set_coeff(const Exp& e, const Rational& c);
    void add_term(const Exp& e, const Rational& c);

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    TruncatedSeries operator-() const;
    TruncatedSeries scaled(const Rational& c) const;

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

    // Multiplicative inverse; requires nonzero constant term.
    TruncatedSeries inverse() const;

    // a^alpha for rational alpha; requires constant term exactly 1.
    TruncatedSeries pow_rational(const Rational& alpha) const;

    // Re-truncate to a smaller bound (drops higher terms).
    TruncatedSeries truncated(int new_bound) const;

    bool operator==(const TruncatedSeries& o) const {
        return nvars_ == o.nvars_ && bound_ == o.bound_ && terms_ == o.terms_;
    }
    bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

    bool is_zero() const { return terms_.empty(); }
    std::string str() const;

private:
    void check_same_shape(const TruncatedSeries& o, const char* op) const;

    int nvars_;
    int bound_;
    std::map<Exp, Rational> terms_;
};

// Exponent vector of the window monomial z^{[i;j]} = z_i z_{i+1} ... z_j,
// indices mod n: component l counts k in [i..j] with k = l mod n.
Exp window_monomial(int n, int i, int j);

// Weyl determinant prod_{i<=n, j>=i} (1 - z^{[i;j]}) truncated at degree D.
TruncatedSeries weyl_delta(int n, int D);

// Series with an additional formal monomial prefactor prod z_k^{offset_k},
// offsets rational. Semantics: (prod z_k^{b_k}) * body.
struct OffsetSeries {
    std::vector<Rational> offset;
    TruncatedSeries body;

    OffsetSeries(std::vector<Rational> off, TruncatedSeries b)
        : offset(std::move(off)), body(std::move(b)) {}
};

} // namespace laumon
