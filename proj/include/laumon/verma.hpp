#pragma once

#include <functional>
#include <map>
#include <vector>

#include "laumon/gln.hpp"
#include "laumon/params.hpp"
#include "laumon/series.hpp"

namespace laumon {

// Product of lowering generators e^-_{w_1} ... e^-_{w_k} applied to the
// vacuum, windows kept in the canonical (length, start) order.
struct PBWMonomial {
    std::vector<Win> windows;  // sorted ascending in the canonical order

    Exp degree(int n) const;
    bool operator<(const PBWMonomial& o) const { return windows < o.windows; }
    bool operator==(const PBWMonomial& o) const { return windows == o.windows; }
};

// All canonical monomials of degree exactly d.
std::vector<PBWMonomial> pbw_basis(int n, const Exp& d);

// Finite linear combination of PBW monomials.
class VermaVector {
public:
    explicit VermaVector(int n) : n_(n) {}
    int n() const { return n_; }

    static VermaVector vacuum(int n);
    static VermaVector basis(int n, const PBWMonomial& m);

    const std::map<PBWMonomial, Rational>& terms() const { return terms_; }
    void add(const PBWMonomial& m, const Rational& c);
    VermaVector& operator+=(const VermaVector& o);
    VermaVector& operator-=(const VermaVector& o);
    VermaVector scaled(const Rational& c) const;
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const PBWMonomial& m) const;

private:
    int n_;
    std::map<PBWMonomial, Rational> terms_;
};

// Action of affine gl_n on the Verma module with vacuum weights
// h_i v = (xi_i + i) v and central charge c = -n - eta. Raising operators
// are commuted through to the vacuum, results re-expressed in the canonical
// PBW basis.
VermaVector act(const AlgebraElement& x, const VermaVector& u, const EquivParams& params);

// exp(sum_w e^+_{[i;j]} / len(w)) applied through the action; terminates
// because raising strictly lowers the grading.
VermaVector apply_B(const VermaVector& u, const EquivParams& params);

// Energy operator C = sum_i (h_i^2/2 + c i h_i / n) + sum_w e^-_w e^+_w
//                   + (1/c) sum_{k>0} a^-_k a^+_k, all sums finite on a
// graded vector.
VermaVector energy_apply(const VermaVector& u, const EquivParams& params);

// Graded trace: coefficient of z^d is the matrix trace of the operator's
// degree-preserving block on H_d.
TruncatedSeries graded_trace(const std::function<VermaVector(const VermaVector&)>& op, int n,
                             int D);

} // namespace laumon
