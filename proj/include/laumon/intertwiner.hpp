#pragma once

#include <map>
#include <string>
#include <vector>

#include "laumon/smodule.hpp"
#include "laumon/verma.hpp"

namespace laumon {

// Element of H (x) S^m: PBW monomial tensored with an S^m weight line.
class HSVector {
public:
    explicit HSVector(int n) : n_(n) {}
    int n() const { return n_; }

    using Key = std::pair<PBWMonomial, std::vector<int>>;
    const std::map<Key, Rational>& terms() const { return terms_; }
    void add(const PBWMonomial& m, const std::vector<int>& off, const Rational& c);
    HSVector scaled(const Rational& c) const;
    HSVector& operator+=(const HSVector& o);
    bool is_zero() const { return terms_.empty(); }

    // Delta(x) = x (x) 1 + 1 (x) x, truncated at H-degree <= hbound.
    HSVector coproduct_apply(const AlgebraElement& x, const EquivParams& params,
                             int hbound) const;

    // Id (x) ev
    VermaVector ev_right(const EquivParams& params) const;

private:
    int n_;
    std::map<Key, Rational> terms_;
};

// The intertwiner H -> H (x) S^m, solved degree by degree from the
// annihilation conditions and normalized so the vacuum maps to
// v (x) (y_1...y_n)^m plus lower-weight terms.
class Intertwiner {
public:
    // Solves through H-degree D. Throws NonGenericError when some degree's
    // linear system is not uniquely solvable.
    Intertwiner(const EquivParams& params, int D);

    int degree_bound() const { return D_; }
    const EquivParams& params() const { return params_; }
    const HSVector& phi_vacuum() const { return phi_v_; }

    // dimension of the solution space found at each degree level (all 1)
    const std::vector<int>& solution_dims() const { return solution_dims_; }

    // Phi(u) for a general vector, H-components truncated at degree <= D.
    HSVector apply(const VermaVector& u) const;

    // A(m) = (Id (x) ev) o Phi o B, valid on vectors of degree <= D.
    VermaVector vertex_operator(const VermaVector& u) const;

    // S^m-valued graded trace of Phi; the trace lies in the weight-zero
    // line, returned as its scalar series.
    TruncatedSeries trace_scalar(int D) const;

private:
    EquivParams params_;
    int D_;
    HSVector phi_v_;
    std::vector<int> solution_dims_;
};

struct RelationFailure {
    std::string relation;
    Exp degree;
    std::string detail;
};

struct VertexRelationReport {
    bool pass = true;
    std::vector<RelationFailure> failures;
};

// Tests the vertex-operator relations
//   e^+_{i+1} A - A e^+_i = h_{i+1} A - A h_{i+1} + m A
//   e^-_i A - A e^-_i = h_{i+1} A - A h_i + m A
//   [a^+_k, A] = m n A,   [a^-_k, A] = (m n - c) A
// on every PBW basis vector of degree <= D. The intertwiner must be solved
// through degree >= D + n (the a^-_k relation raises degrees).
VertexRelationReport check_vertex_relations(const Intertwiner& phi, int D);

} // namespace laumon
