#pragma once

#include <map>
#include <vector>

#include "laumon/params.hpp"
#include "laumon/series.hpp"

namespace laumon {

// Torus fixed point of an affine Laumon space: a periodic tableau of
// non-negative integers. columns[l-1] holds the weakly decreasing entries
// d_{l,l} >= d_{l+1,l} >= ... of column l (rows r = l, l+1, ...); the
// periodic extension d_{r+n, l+n} = d_{r,l} defines entries for every
// integer column index.
struct FixedPoint {
    int n = 1;
    std::vector<std::vector<int>> columns;

    // Entry d_{r,l} for any integers r, l with the periodic extension.
    int entry(int r, int l) const;

    bool operator==(const FixedPoint& o) const { return n == o.n && columns == o.columns; }
    bool operator<(const FixedPoint& o) const { return columns < o.columns; }
};

// Degree vector: d_k = sum of stored entries in rows congruent to k mod n.
Exp fixed_point_degree(const FixedPoint& fp);

// All fixed points of degree exactly d, canonically ordered, no duplicates.
std::vector<FixedPoint> enumerate_fixed_points(int n, const Exp& d);

// Integer-coefficient Laurent polynomial in the framing characters
// t_1..t_n and the two torus characters q, q'.
struct CharKey {
    std::vector<int> t;
    int q = 0;
    int qp = 0;
    bool operator<(const CharKey& o) const {
        if (t != o.t) return t < o.t;
        if (q != o.q) return q < o.q;
        return qp < o.qp;
    }
    bool operator==(const CharKey& o) const { return t == o.t && q == o.q && qp == o.qp; }
};

class CharacterPolynomial {
public:
    explicit CharacterPolynomial(int n) : n_(n) {}
    int n() const { return n_; }
    const std::map<CharKey, long>& terms() const { return terms_; }
    void add(const CharKey& k, long c);
    CharacterPolynomial operator-() const;
    bool is_zero() const { return terms_.empty(); }
    long total_mass() const;  // sum of coefficients

private:
    int n_;
    std::map<CharKey, long> terms_;
};

// Geometry-side convention switches, resolved empirically and then frozen.
struct GeomConventions {
    bool q_swap = false;      // read q as the hbar' character instead of hbar
    int t_shift_sign = +1;    // sign s in t_l = t_{l0} * q'^{s (l - l0)/n}
    bool serre_dual = false;  // tangent read as -chi with q, q' inverted
};

// Torus character of RHom between two fixed points (fpA unprimed entries,
// fpB primed), all geometric-series quotients expanded as finite Laurent
// polynomials in q, with t_l reduced into t_1..t_n.
CharacterPolynomial rhom_character(int n, const FixedPoint& fpA, const FixedPoint& fpB,
                                   const GeomConventions& conv = {});

using WeightList = std::vector<Rational>;

// Tangent weights at a fixed point: the negated self-character expanded to
// scalars u.xi + a + b*eta (hbar units). Throws NonGenericError when the
// character has a non-positive coefficient or a weight vanishes.
WeightList tangent_weights(const FixedPoint& fp, const EquivParams& params,
                           const GeomConventions& conv = {});

// Z(m) by equivariant localization: coefficient of z^d is
// sum over fixed points of degree d of prod (w + m)/w.
TruncatedSeries localization_partition_function(const EquivParams& params, int D,
                                                const GeomConventions& conv = {});

} // namespace laumon
