#include "laumon/intertwiner.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "laumon/errors.hpp"

namespace laumon {

void HSVector::add(const PBWMonomial& m, const std::vector<int>& off, const Rational& c) {
    if (c.is_zero()) return;
    Key k{m, off};
    auto [it, fresh] = terms_.emplace(std::move(k), c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

HSVector HSVector::scaled(const Rational& c) const {
    HSVector r(n_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
    return r;
}

HSVector& HSVector::operator+=(const HSVector& o) {
    for (const auto& [k, v] : o.terms_) add(k.first, k.second, v);
    return *this;
}

HSVector HSVector::coproduct_apply(const AlgebraElement& x, const EquivParams& params,
                                   int hbound) const {
    HSVector out(n_);
    for (const auto& [key, c] : terms_) {
        const auto& [mono, off] = key;
        // x (x) 1
        VermaVector h = act(x, VermaVector::basis(n_, mono), params);
        for (const auto& [m2, c2] : h.terms()) {
            if (total_degree(m2.degree(n_)) > hbound) continue;
            out.add(m2, off, c * c2);
        }
        // 1 (x) x
        SModVector s(n_);
        s.add(off, Rational(1));
        SModVector sx = smodule_act(x, s, params);
        for (const auto& [off2, c2] : sx.terms()) out.add(mono, off2, c * c2);
    }
    return out;
}

VermaVector HSVector::ev_right(const EquivParams& params) const {
    (void)params;
    VermaVector out(n_);
    for (const auto& [key, c] : terms_) out.add(key.first, c);
    return out;
}

namespace {

// offsets forced by weight conservation: kappa_i = -(d_i - d_{i-1}), d_0 = d_n
std::vector<int> forced_offset(const Exp& d) {
    int n = static_cast<int>(d.size());
    std::vector<int> k(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        k[static_cast<size_t>(i)] = -(d[static_cast<size_t>(i)] - d[static_cast<size_t>((i + n - 1) % n)]);
    return k;
}

std::vector<Exp> degree_vectors_of_level(int n, int s) {
    std::vector<Exp> out;
    Exp cur(static_cast<size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int pos, int rem) {
        if (pos == n - 1) {
            cur[static_cast<size_t>(pos)] = rem;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            cur[static_cast<size_t>(pos)] = v;
            rec(pos + 1, rem - v);
        }
    };
    rec(0, s);
    return out;
}

// exact Gaussian elimination; returns true when Ax = rhs has a unique
// solution, filling sol. cols = number of unknowns.
bool solve_unique(std::vector<std::vector<Rational>>& A, std::vector<Rational>& rhs,
                  std::vector<Rational>& sol) {
    size_t rows = A.size();
    size_t cols = rows == 0 ? 0 : A[0].size();
    std::vector<size_t> pivot_row(cols, SIZE_MAX);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = SIZE_MAX;
        for (size_t rr = r; rr < rows; ++rr)
            if (!A[rr][c].is_zero()) { p = rr; break; }
        if (p == SIZE_MAX) continue;
        std::swap(A[p], A[r]);
        std::swap(rhs[p], rhs[r]);
        Rational inv = Rational(1) / A[r][c];
        for (size_t cc = c; cc < cols; ++cc) A[r][cc] *= inv;
        rhs[r] *= inv;
        for (size_t rr = 0; rr < rows; ++rr) {
            if (rr == r || A[rr][c].is_zero()) continue;
            Rational f = A[rr][c];
            for (size_t cc = c; cc < cols; ++cc) A[rr][cc] -= f * A[r][cc];
            rhs[rr] -= f * rhs[r];
        }
        pivot_row[c] = r;
        ++r;
    }
    // uniqueness: every column has a pivot
    for (size_t c = 0; c < cols; ++c)
        if (pivot_row[c] == SIZE_MAX) return false;
    // consistency: zero rows must have zero rhs
    for (size_t rr = r; rr < rows; ++rr)
        if (!rhs[rr].is_zero()) return false;
    sol.assign(cols, Rational(0));
    for (size_t c = 0; c < cols; ++c) sol[c] = rhs[pivot_row[c]];
    return true;
}

} // namespace

Intertwiner::Intertwiner(const EquivParams& params, int D) : params_(params), D_(D), phi_v_(params.n) {
    int n = params.n;
    solution_dims_.assign(static_cast<size_t>(D + 1), 1);

    // normalization: degree 0 component is v (x) (y_1...y_n)^m
    phi_v_.add(PBWMonomial{}, std::vector<int>(static_cast<size_t>(n), 0), Rational(1));

    // annihilation generators with their H-degree drop
    struct Gen {
        AlgebraElement x;
        int drop;
    };
    std::vector<Gen> gens;
    for (int i = 1; i <= n; ++i) gens.push_back({AlgebraElement::e_plus(n, Win{i, i}), 1});
    for (int k = 1; n * k <= D; ++k) gens.push_back({AlgebraElement::loop_a(n, +1, k), n * k});

    for (int s = 1; s <= D; ++s) {
        // unknowns: one per PBW monomial of each degree vector at level s
        struct Unknown {
            PBWMonomial mono;
            std::vector<int> offset;
        };
        std::vector<Unknown> unknowns;
        for (const Exp& d : degree_vectors_of_level(n, s))
            for (const PBWMonomial& m : pbw_basis(n, d))
                unknowns.push_back({m, forced_offset(d)});
        if (unknowns.empty()) continue;

        // rows: (G index, target monomial, target offset) -> equation
        std::map<std::tuple<size_t, PBWMonomial, std::vector<int>>, size_t> row_index;
        std::vector<std::vector<Rational>> A;
        std::vector<Rational> rhs;
        auto row_of = [&](size_t gi, const PBWMonomial& m, const std::vector<int>& off) {
            auto key = std::make_tuple(gi, m, off);
            auto it = row_index.find(key);
            if (it != row_index.end()) return it->second;
            size_t idx = A.size();
            row_index.emplace(key, idx);
            A.emplace_back(unknowns.size(), Rational(0));
            rhs.emplace_back(Rational(0));
            return idx;
        };

        for (size_t gi = 0; gi < gens.size(); ++gi) {
            const Gen& g = gens[gi];
            if (g.drop > s) continue;
            // (G (x) 1) applied to the level-s unknowns
            for (size_t ui = 0; ui < unknowns.size(); ++ui) {
                VermaVector img = act(g.x, VermaVector::basis(n, unknowns[ui].mono), params_);
                for (const auto& [m2, c2] : img.terms()) {
                    if (total_degree(m2.degree(n)) != s - g.drop) continue;
                    size_t ri = row_of(gi, m2, unknowns[ui].offset);
                    A[ri][ui] += c2;
                }
            }
            // -(1 (x) G) applied to the already-solved level s - drop
            for (const auto& [key, c] : phi_v_.terms()) {
                const auto& [mono, off] = key;
                if (total_degree(mono.degree(n)) != s - g.drop) continue;
                SModVector sv(n);
                sv.add(off, Rational(1));
                SModVector sx = smodule_act(g.x, sv, params_);
                for (const auto& [off2, c2] : sx.terms()) {
                    size_t ri = row_of(gi, mono, off2);
                    rhs[ri] -= c * c2;
                }
            }
        }

        std::vector<Rational> sol;
        if (!solve_unique(A, rhs, sol)) {
            std::ostringstream os;
            os << "intertwiner linear system at degree level " << s
               << " is not uniquely solvable (non-generic parameters or convention error)";
            throw NonGenericError(os.str());
        }
        for (size_t ui = 0; ui < unknowns.size(); ++ui)
            phi_v_.add(unknowns[ui].mono, unknowns[ui].offset, sol[ui]);
    }
}

HSVector Intertwiner::apply(const VermaVector& u) const {
    int n = params_.n;
    HSVector out(n);
    for (const auto& [mono, c] : u.terms()) {
        if (total_degree(mono.degree(n)) > D_)
            throw DegreeBoundError("intertwiner not solved deep enough for this vector");
        // Phi(e-_{w1} ... e-_{wk} v) = Delta(e-_{w1}) ... Delta(e-_{wk}) Phi(v)
        HSVector cur = phi_v_;
        for (auto it = mono.windows.rbegin(); it != mono.windows.rend(); ++it)
            cur = cur.coproduct_apply(AlgebraElement::e_minus(n, *it), params_, D_);
        out += cur.scaled(c);
    }
    return out;
}

VermaVector Intertwiner::vertex_operator(const VermaVector& u) const {
    return apply(apply_B(u, params_)).ev_right(params_);
}

TruncatedSeries Intertwiner::trace_scalar(int D) const {
    int n = params_.n;
    TruncatedSeries tr = TruncatedSeries::zero(n, D);
    std::vector<int> zero_off(static_cast<size_t>(n), 0);
    for (int s = 0; s <= D; ++s) {
        for (const Exp& d : degree_vectors_of_level(n, s)) {
            Rational diag(0);
            for (const PBWMonomial& m : pbw_basis(n, d)) {
                HSVector img = apply(VermaVector::basis(n, m));
                for (const auto& [key, c] : img.terms()) {
                    if (key.first == m && key.second == zero_off) diag += c;
                }
            }
            tr.set_coeff(d, diag);
        }
    }
    return tr;
}

namespace {

std::string diff_string(const VermaVector& v) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : v.terms()) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*[";
        for (size_t i = 0; i < m.windows.size(); ++i)
            os << (i ? " " : "") << m.windows[i].i << ";" << m.windows[i].j;
        os << "]";
    }
    return os.str();
}

} // namespace

VertexRelationReport check_vertex_relations(const Intertwiner& phi, int D) {
    const EquivParams& p = phi.params();
    int n = p.n;
    const Rational& m = p.m;
    Rational c = p.central_charge();
    VertexRelationReport rep;

    auto A = [&](const VermaVector& u) { return phi.vertex_operator(u); };

    // With Phi solved through degree Dp, a relation whose raising part lowers
    // the grading by `len` has complete residual components only through
    // Dp - len; deeper components would need a deeper solve.
    int Dp = phi.degree_bound();

    auto record = [&](const std::string& name, const Exp& d, const VermaVector& diff,
                      int complete_through) {
        VermaVector cut(n);
        for (const auto& [mono, cf] : diff.terms())
            if (total_degree(mono.degree(n)) <= complete_through) cut.add(mono, cf);
        if (cut.is_zero()) return;
        rep.pass = false;
        rep.failures.push_back({name, d, diff_string(cut)});
    };

    for (int s = 0; s <= D; ++s) {
        for (const Exp& d : degree_vectors_of_level(n, s)) {
            for (const PBWMonomial& mono : pbw_basis(n, d)) {
                VermaVector u = VermaVector::basis(n, mono);
                VermaVector Au = A(u);

                for (int i = 1; i <= n; ++i) {
                    // e^+_{i+1} A - A e^+_i = h_{i+1} A - A h_{i+1} + m A
                    AlgebraElement epi = AlgebraElement::e_plus(n, Win{i, i});
                    AlgebraElement epi1 = AlgebraElement::e_plus(n, Win{i + 1, i + 1});
                    AlgebraElement hi1 =
                        i + 1 <= n ? AlgebraElement::h(n, i + 1) : AlgebraElement::h(n, 1);
                    Rational hshift = i + 1 <= n ? Rational(0) : -c;  // h_{n+1} = h_1 - c
                    VermaVector lhs = act(epi1, Au, p);
                    lhs -= A(act(epi, u, p));
                    VermaVector rhs = act(hi1, Au, p);
                    rhs += Au.scaled(hshift);
                    VermaVector Ahu = A(act(hi1, u, p));
                    Ahu += Au.scaled(hshift);
                    rhs -= Ahu;
                    rhs += Au.scaled(m);
                    lhs -= rhs;
                    record("rel1[i=" + std::to_string(i) + "]", d, lhs, Dp - 1);

                    // e^-_i A - A e^-_i = h_{i+1} A - A h_i + m A
                    AlgebraElement emi = AlgebraElement::e_minus(n, Win{i, i});
                    AlgebraElement hi = AlgebraElement::h(n, i);
                    VermaVector lhs2 = act(emi, Au, p);
                    lhs2 -= A(act(emi, u, p));
                    VermaVector rhs2 = act(hi1, Au, p);
                    rhs2 += Au.scaled(hshift);
                    rhs2 -= A(act(hi, u, p));
                    rhs2 += Au.scaled(m);
                    lhs2 -= rhs2;
                    record("rel2[i=" + std::to_string(i) + "]", d, lhs2, Dp - 1);
                }

                // loop relations, k = 1
                AlgebraElement ap = AlgebraElement::loop_a(n, +1, 1);
                AlgebraElement am = AlgebraElement::loop_a(n, -1, 1);
                VermaVector lhs3 = act(ap, Au, p);
                lhs3 -= A(act(ap, u, p));
                lhs3 -= Au.scaled(m * Rational(n));
                record("loop+[k=1]", d, lhs3, Dp - n);

                VermaVector lhs4 = act(am, Au, p);
                lhs4 -= A(act(am, u, p));
                lhs4 -= Au.scaled(m * Rational(n) - c);
                record("loop-[k=1]", d, lhs4, Dp);
            }
        }
    }
    return rep;
}

} // namespace laumon
