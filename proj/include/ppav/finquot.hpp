#pragma once

#include <memory>

#include "ppav/intlin.hpp"

namespace ppav {

/// Default bound on |Q| for subgroup enumeration.
inline const Integer default_enumeration_budget = Integer(1) << 16;

/*
 * The finite abelian group L'/L for lattices L ⊆ L' of equal rational span.
 *
 * An SNF-adapted basis w_1..w_k of L' is fixed at construction so that
 * L = <d_1 w_1, ..., d_k w_k>. Group coordinates of an element are its
 * components along the w_i with d_i > 1, reduced modulo d_i.
 */
class FiniteQuotient {
public:
    FiniteQuotient(Lattice lower, Lattice upper);

    const Lattice& lower() const { return lower_; }
    const Lattice& upper() const { return upper_; }

    /* Elementary divisors > 1, as a divisor chain. */
    const IntVector& invariants() const { return invariants_; }
    Integer order() const;
    Integer exponent() const;

    /* Adapted generators of the nontrivial cyclic factors (one per column). */
    const RatMatrix& generators() const { return generators_; }

    bool contains(const RatVector& x) const;
    bool is_zero(const RatVector& x) const;
    /* Coordinates along generators(), reduced into [0, e_i). x must lie in L'. */
    IntVector coordinates(const RatVector& x) const;
    RatVector representative(const IntVector& coords) const;
    Integer element_order(const RatVector& x) const;
    /* Every element's coordinates, in lexicographic order. */
    std::vector<IntVector> all_coordinates() const;

    /* The subgroup generated by `gens` (elements of L'), as L_S/L. */
    FiniteQuotient subgroup(const std::vector<RatVector>& gens) const;
    /* Same L and L'_this ⊆ L'_other. */
    bool is_subgroup_of(const FiniteQuotient& other) const;

    friend bool operator==(const FiniteQuotient& a, const FiniteQuotient& b)
    {
        return a.lower_ == b.lower_ && a.upper_ == b.upper_;
    }
    friend bool operator!=(const FiniteQuotient& a, const FiniteQuotient& b) { return !(a == b); }

private:
    Lattice lower_;
    Lattice upper_;
    IntVector invariants_;
    RatMatrix generators_;
    RatMatrix coordinate_map_; // x -> components along the nontrivial generators
};

/* An element of a FiniteQuotient, held by a representative in span(L). */
class QuotientElement {
public:
    QuotientElement(std::shared_ptr<const FiniteQuotient> parent, RatVector representative);

    const FiniteQuotient& parent() const { return *parent_; }
    const std::shared_ptr<const FiniteQuotient>& parent_ptr() const { return parent_; }
    const RatVector& representative() const { return rep_; }

    IntVector coordinates() const { return parent_->coordinates(rep_); }
    Integer order() const { return parent_->element_order(rep_); }
    bool is_zero() const { return parent_->is_zero(rep_); }

    QuotientElement operator+(const QuotientElement& o) const;
    QuotientElement operator-() const;
    QuotientElement scaled(const Integer& k) const;

    /* Equal iff representatives differ by an element of L. */
    friend bool operator==(const QuotientElement& a, const QuotientElement& b);

private:
    std::shared_ptr<const FiniteQuotient> parent_;
    RatVector rep_;
};

/*
 * A Q/Z-valued pairing p(x, y) = F(x~, y~) mod Z for an alternating form F
 * on the ambient space. Values are reduced into [0, 1).
 */
class PairingOnQuotient {
public:
    explicit PairingOnQuotient(RatMatrix form);

    const RatMatrix& form() const { return form_; }
    Rational value(const RatVector& x, const RatVector& y) const;
    /* F(L', L) ⊆ Z, so values on L'/L do not depend on the lifts. */
    bool well_defined_on(const FiniteQuotient& q) const;

private:
    RatMatrix form_;
};

struct PairedQuotient {
    FiniteQuotient group;
    PairingOnQuotient pairing;
};

IntVector group_invariants(const FiniteQuotient& q);

/* p vanishes identically on the subgroup S = L_S/L. */
bool is_isotropic(const FiniteQuotient& s, const PairingOnQuotient& p);

/* Isotropic, and no element outside S is orthogonal to all of S. */
bool is_maximal_isotropic(const FiniteQuotient& s, const FiniteQuotient& q, const PairingOnQuotient& p);

/*
 * All maximal totally isotropic subgroups of Q, each as L_S/L, sorted by the
 * column HNF of their generators in adapted coordinates. Throws BudgetError
 * when |Q| exceeds `budget`.
 */
std::vector<FiniteQuotient> enumerate_mti(const FiniteQuotient& q, const PairingOnQuotient& p,
                                          const Integer& budget = default_enumeration_budget);

/* All subgroups of Q, in the same canonical order. */
std::vector<FiniteQuotient> enumerate_subgroups(const FiniteQuotient& q,
                                                const Integer& budget = default_enumeration_budget);

/* [m]^{-1}(S) = ((1/m) L_S) / L. */
FiniteQuotient preimage_under_mult(const FiniteQuotient& s, long m);

/* x mod Z in [0, 1). */
Rational frac(const Rational& x);

} // namespace ppav
