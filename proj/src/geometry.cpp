#include "laumon/geometry.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "laumon/errors.hpp"

namespace laumon {

int FixedPoint::entry(int r, int l) const {
    // shift (r,l) by multiples of n until l lands in 1..n
    int l0 = ((l - 1) % n + n) % n + 1;
    int t = (l0 - l) / n;
    int rr = r + t * n;
    int ll = l0;
    if (rr < ll) return 0;
    const auto& col = columns[static_cast<size_t>(ll - 1)];
    int row_index = rr - ll;  // 0-based position within the column
    if (row_index >= static_cast<int>(col.size())) return 0;
    return col[static_cast<size_t>(row_index)];
}

Exp fixed_point_degree(const FixedPoint& fp) {
    Exp d(static_cast<size_t>(fp.n), 0);
    for (int l = 1; l <= fp.n; ++l) {
        const auto& col = fp.columns[static_cast<size_t>(l - 1)];
        for (size_t idx = 0; idx < col.size(); ++idx) {
            int r = l + static_cast<int>(idx);
            d[static_cast<size_t>((r - 1) % fp.n)] += col[idx];
        }
    }
    return d;
}

namespace {

// Build all weakly decreasing tails for one column, threading the
// remaining componentwise budget. rem is mutated in place during DFS.
void fill_column(int n, int l, int row, int max_entry, std::vector<int>& col, Exp& rem,
                 FixedPoint& fp, std::vector<FixedPoint>& out,
                 const std::function<void()>& next_column) {
    // close this column here
    fp.columns[static_cast<size_t>(l - 1)] = col;
    next_column();

    if (max_entry == 0) return;
    size_t res = static_cast<size_t>((row - 1) % n);
    for (int e = 1; e <= std::min(max_entry, rem[res]); ++e) {
        rem[res] -= e;
        col.push_back(e);
        fill_column(n, l, row + 1, e, col, rem, fp, out, next_column);
        col.pop_back();
        rem[res] += e;
    }
}

} // namespace

std::vector<FixedPoint> enumerate_fixed_points(int n, const Exp& d) {
    if (static_cast<int>(d.size()) != n) throw DimensionError("degree vector length != n");
    for (int x : d)
        if (x < 0) throw DimensionError("negative degree component");
    int size = total_degree(d);

    std::vector<FixedPoint> out;
    FixedPoint fp;
    fp.n = n;
    fp.columns.assign(static_cast<size_t>(n), {});
    Exp rem(d);

    // Columns are independent apart from the shared budget; recurse l = 1..n.
    std::function<void(int)> do_column = [&](int l) {
        if (l > n) {
            if (total_degree(rem) == 0) out.push_back(fp);
            return;
        }
        std::vector<int> col;
        fill_column(n, l, l, size, col, rem, fp, out, [&] { do_column(l + 1); });
    };
    do_column(1);
    std::sort(out.begin(), out.end());
    return out;
}

void CharacterPolynomial::add(const CharKey& k, long c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

CharacterPolynomial CharacterPolynomial::operator-() const {
    CharacterPolynomial r(n_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

long CharacterPolynomial::total_mass() const {
    long m = 0;
    for (const auto& [k, c] : terms_) m += c;
    return m;
}

namespace {

// t_l / t_{l'} with the reduction t_l = t_{l0} q'^{s*(l-l0)/n}:
// returns (tvec, qp_shift).
std::pair<std::vector<int>, int> t_ratio(int n, int l_num, int l_den, int shift_sign) {
    std::vector<int> t(static_cast<size_t>(n), 0);
    auto reduce = [&](int l, int dir) {
        int l0 = ((l - 1) % n + n) % n + 1;
        int shifts = (l - l0) / n;
        t[static_cast<size_t>(l0 - 1)] += dir;
        return dir * shift_sign * shifts;
    };
    int qp = 0;
    qp += reduce(l_num, +1);
    qp += reduce(l_den, -1);
    return {t, qp};
}

int max_row_reach(const FixedPoint& fp) {
    int m = 0;
    for (int l = 1; l <= fp.n; ++l)
        m = std::max(m, l + static_cast<int>(fp.columns[static_cast<size_t>(l - 1)].size()));
    return m;
}

} // namespace

CharacterPolynomial rhom_character(int n, const FixedPoint& fpA, const FixedPoint& fpB,
                                   const GeomConventions& conv) {
    if (fpA.n != n || fpB.n != n) throw DimensionError("fixed point rank mismatch");
    CharacterPolynomial chi(n);

    // Entries at column l appear at reduced row l0 + (k - l); columns have
    // finite support, so l can stop once every reduced row is past the end.
    int reach = std::max(max_row_reach(fpA), max_row_reach(fpB));
    int lmin_pad = n * (reach + 2);
    int s = conv.t_shift_sign;

    auto add_t_q = [&](int l_num, int l_den, int qexp, long c) {
        auto [t, qp] = t_ratio(n, l_num, l_den, s);
        chi.add(CharKey{t, qexp, qp}, c);
    };

    for (int k = 1; k <= n; ++k) {
        // -sum_{l<=k} (t_l/t_k) (q^{-d'_{kl}} - 1)/(q^{-1} - 1)
        for (int l = k; l >= k - lmin_pad; --l) {
            int dp = fpB.entry(k, l);
            if (dp == 0) continue;
            for (int sdeg = 0; sdeg < dp; ++sdeg) add_t_q(l, k, -sdeg, -1);
        }
        // -sum_{l'<=k-1} (t_k/t_{l'}) (q^{d_{(k-1)l'}+1} - q)/(q - 1)
        for (int lp = k - 1; lp >= k - lmin_pad; --lp) {
            int dd = fpA.entry(k - 1, lp);
            if (dd == 0) continue;
            for (int sdeg = 1; sdeg <= dd; ++sdeg) add_t_q(k, lp, sdeg, -1);
        }
        // -sum_{l<=k, l'<=k-1} (t_l/t_{l'}) (q^{d_{(k-1)l'}+1} - q)(q^{-d'_{kl}} - 1)/(q - 1)
        for (int l = k; l >= k - lmin_pad; --l) {
            int dp = fpB.entry(k, l);
            if (dp == 0) continue;
            for (int lp = k - 1; lp >= k - lmin_pad; --lp) {
                int dd = fpA.entry(k - 1, lp);
                if (dd == 0) continue;
                for (int sdeg = 1; sdeg <= dd; ++sdeg) {
                    add_t_q(l, lp, sdeg - dp, -1);
                    add_t_q(l, lp, sdeg, +1);
                }
            }
        }
        // +sum_{l<=k, l'<=k} (t_l/t_{l'}) (q^{d_{kl'}+1} - q)(q^{-d'_{kl}} - 1)/(q - 1)
        for (int l = k; l >= k - lmin_pad; --l) {
            int dp = fpB.entry(k, l);
            if (dp == 0) continue;
            for (int lp = k; lp >= k - lmin_pad; --lp) {
                int dd = fpA.entry(k, lp);
                if (dd == 0) continue;
                for (int sdeg = 1; sdeg <= dd; ++sdeg) {
                    add_t_q(l, lp, sdeg - dp, +1);
                    add_t_q(l, lp, sdeg, -1);
                }
            }
        }
    }
    return chi;
}

WeightList tangent_weights(const FixedPoint& fp, const EquivParams& params,
                           const GeomConventions& conv) {
    CharacterPolynomial tangent = -rhom_character(fp.n, fp, fp, conv);
    Rational wq = conv.q_swap ? params.eta : Rational(1);
    Rational wqp = conv.q_swap ? Rational(1) : params.eta;

    WeightList weights;
    for (const auto& [key, c] : tangent.terms()) {
        if (c <= 0) {
            std::ostringstream os;
            os << "tangent character has non-positive coefficient " << c
               << " (convention or parameter problem)";
            throw NonGenericError(os.str());
        }
        int qe = conv.serre_dual ? -key.q : key.q;
        int qpe = conv.serre_dual ? -key.qp : key.qp;
        Rational w = wq * Rational(qe) + wqp * Rational(qpe);
        for (int l = 0; l < fp.n; ++l)
            w += Rational(key.t[static_cast<size_t>(l)]) * params.xi[static_cast<size_t>(l)];
        if (w.is_zero()) throw NonGenericError("vanishing tangent weight at a fixed point");
        for (long rep = 0; rep < c; ++rep) weights.push_back(w);
    }
    return weights;
}

namespace {

// all exponent vectors of length n with total degree exactly s
void degree_vectors(int n, int s, Exp& cur, int pos, std::vector<Exp>& out) {
    if (pos == n - 1) {
        cur[static_cast<size_t>(pos)] = s;
        out.push_back(cur);
        return;
    }
    for (int v = 0; v <= s; ++v) {
        cur[static_cast<size_t>(pos)] = v;
        degree_vectors(n, s - v, cur, pos + 1, out);
    }
}

} // namespace

TruncatedSeries localization_partition_function(const EquivParams& params, int D,
                                                const GeomConventions& conv) {
    int n = params.n;
    TruncatedSeries Z = TruncatedSeries::one(n, D);
    for (int s = 1; s <= D; ++s) {
        std::vector<Exp> degs;
        Exp cur(static_cast<size_t>(n), 0);
        degree_vectors(n, s, cur, 0, degs);
        for (const Exp& d : degs) {
            Rational total(0);
            for (const FixedPoint& fp : enumerate_fixed_points(n, d)) {
                Rational contrib(1);
                for (const Rational& w : tangent_weights(fp, params, conv))
                    contrib *= (w + params.m) / w;
                total += contrib;
            }
            Z.set_coeff(d, total);
        }
    }
    return Z;
}

} // namespace laumon
