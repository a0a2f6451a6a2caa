#pragma once

#include <map>
#include <vector>

#include "laumon/gln.hpp"
#include "laumon/params.hpp"
#include "laumon/series.hpp"

namespace laumon {

// Vector in the evaluation module S^m: a finite combination of monomials
// y_1^{m+k_1} ... y_n^{m+k_n} with integer offsets summing to zero. Each
// weight space is one-dimensional, so the offset vector is the label.
class SModVector {
public:
    explicit SModVector(int n) : n_(n) {}
    int n() const { return n_; }

    static SModVector weight_zero(int n);  // the line through (y_1...y_n)^m

    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }
    void add(const std::vector<int>& offset, const Rational& c);
    SModVector scaled(const Rational& c) const;
    SModVector& operator+=(const SModVector& o);
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const std::vector<int>& offset) const;

private:
    int n_;
    std::map<std::vector<int>, Rational> terms_;
};

// Action z^k E_{ij} = -y_j d/dy_i + m delta_i^j delta_k^0, central charge 0.
SModVector smodule_act(const AlgebraElement& x, const SModVector& s, const EquivParams& params);

// ev: S^m -> scalars, y_1 = ... = y_n = 1.
Rational smodule_ev(const SModVector& s);

// ev o g^{-1} as a series-valued functional:
// y^alpha -> prod_i (1 + sum_{j>=i} g_{[i;j]})^{alpha_i} with alpha_i = m + k_i.
TruncatedSeries ev_g_inverse(const SModVector& s, const EquivParams& params, int D);

} // namespace laumon
