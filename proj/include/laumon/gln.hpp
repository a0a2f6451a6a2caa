#pragma once

#include <map>
#include <vector>

#include "laumon/params.hpp"
#include "laumon/series.hpp"

namespace laumon {

// Root-type window [i;j], 1 <= i <= n, j >= i, identified mod n via
// [i;j] = [i+n;j+n]. Length j-i+1 is the z-degree of its monomial.
struct Win {
    int i = 1, j = 1;
    int len() const { return j - i + 1; }
    bool operator<(const Win& o) const {
        if (len() != o.len()) return len() < o.len();
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
    bool operator==(const Win& o) const { return i == o.i && j == o.j; }
};

// Basis unit z^a E_{ij} of gl_n[z, z^{-1}] (1 <= i,j <= n).
struct LoopUnit {
    int a = 0;
    int i = 1, j = 1;
    bool operator<(const LoopUnit& o) const {
        if (a != o.a) return a < o.a;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
    bool operator==(const LoopUnit& o) const { return a == o.a && i == o.i && j == o.j; }
};

// Element of affine gl_n = gl_n[z,z^{-1}] + C c, finitely supported.
class AlgebraElement {
public:
    explicit AlgebraElement(int n) : n_(n) {}
    int n() const { return n_; }

    static AlgebraElement unit(int n, int a, int i, int j, const Rational& c = Rational(1));
    static AlgebraElement central(int n, const Rational& c);

    // e^+_{[i;j]} = z^{floor(j/n)} E_{i, (j+1) mod n},
    // e^-_{[i;j]} = z^{-floor(j/n)} E_{(j+1) mod n, i},
    // h_i = E_{ii},  a^{+-}_k = sum_i e^{+-}_{[i; i+nk-1]}.
    static AlgebraElement e_plus(int n, Win w);
    static AlgebraElement e_minus(int n, Win w);
    static AlgebraElement h(int n, int i);
    static AlgebraElement loop_a(int n, int sign, int k);

    const std::map<LoopUnit, Rational>& units() const { return units_; }
    const Rational& central_part() const { return central_; }

    void add_unit(const LoopUnit& u, const Rational& c);
    void add_central(const Rational& c) { central_ += c; }

    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement scaled(const Rational& c) const;
    bool is_zero() const { return units_.empty() && central_.is_zero(); }

private:
    int n_;
    std::map<LoopUnit, Rational> units_;
    Rational central_;
};

// [z^a E_{ij}, z^b E_{kl}] = d_{jk} z^{a+b} E_{il} - d_{li} z^{a+b} E_{kj}
//                          + a d_{a+b,0} d_{jk} d_{il} c.
AlgebraElement lie_bracket(const AlgebraElement& x, const AlgebraElement& y);

// Element of the completed positive subgroup P, stored through its window
// matrix entries g_{[i;j]} (series valued), up to a window-length bound.
// The convention g_{[i;i-1]} = 1 realizes the identity.
class GroupElement {
public:
    GroupElement(int n, int bound, int series_vars_bound);

    static GroupElement identity(int n, int bound, int series_bound);

    int n() const { return n_; }
    int bound() const { return bound_; }   // max window length stored
    int series_bound() const { return sbound_; }

    TruncatedSeries entry(const Win& w) const;           // zero series if absent
    void set_entry(const Win& w, const TruncatedSeries& s);
    const std::map<Win, TruncatedSeries>& entries() const { return entries_; }

    bool operator==(const GroupElement& o) const {
        return n_ == o.n_ && bound_ == o.bound_ && entries_ == o.entries_;
    }

private:
    int n_, bound_, sbound_;
    std::map<Win, TruncatedSeries> entries_;
};

// (gh)_{[i;j]} = sum_{k=i}^{j+1} g_{[i;k-1]} h_{[k;j]}, windows reduced mod n.
GroupElement group_multiply(const GroupElement& g, const GroupElement& h);

// Two-sided inverse up to the window-length bound.
GroupElement group_invert(const GroupElement& g);

// exp of window data x (scalar per window) into P.
GroupElement exp_positive(int n, int bound, int series_bound,
                          const std::map<Win, Rational>& x);

// B = exp(sum_w e_{[i;j]} / (j-i+1)); every window entry equals 1.
GroupElement b_element(int n, int bound, int series_bound);

// g in P with entries z^{[i;j]} / prod_{j'=i..j} (1 - z^{[i;j']}).
GroupElement g_element(int n, int D);

struct TwistReport {
    bool pass = true;
    std::vector<Win> failing;
};

// Verifies B o z = g^{-1} o z o g through total degree D, i.e.
// group_multiply(invert(g), z-conjugate of g) equals B with series entries.
// Conjugation by the grading operator divides the entry at window w by the
// monomial z^w (every entry of g is divisible by it).
TwistReport check_twist_conjugation(int n, int D);

} // namespace laumon
