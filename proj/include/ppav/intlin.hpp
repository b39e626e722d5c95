#pragma once

#include <optional>

#include "ppav/matrix.hpp"

namespace ppav {

/* --- exact rational linear algebra ------------------------------------ */

std::size_t rank(const RatMatrix& a);
Rational determinant(const RatMatrix& a);
/* Throws DomainError when `a` is singular or not square. */
RatMatrix inverse(const RatMatrix& a);
/* Some X with A X = B, or nullopt when the system is inconsistent. */
std::optional<RatMatrix> solve(const RatMatrix& a, const RatMatrix& b);
/* Basis (as columns) of the rational null space of `a`. */
RatMatrix nullspace(const RatMatrix& a);

/* --- Smith normal form -------------------------------------------------- */

struct SmithForm {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;

    /* Diagonal entries of D (length min(rows, cols)). */
    IntVector diagonal() const;
    /* Number of nonzero diagonal entries. */
    std::size_t rank() const;
};

/*
 * U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ..., all
 * d_i >= 0. Pivot rule: minimal nonzero absolute value, ties broken by the
 * lowest (row, col), so the output is deterministic.
 */
SmithForm smith_normal_form(const IntMatrix& m);

/* Inverse of a unimodular integer matrix. */
IntMatrix unimodular_inverse(const IntMatrix& u);

/* --- lattices ----------------------------------------------------------- */

/*
 * A finitely generated subgroup of Q^n, stored by its canonical basis:
 * (column HNF of d * generators) / d where d clears all denominators. Two
 * lattices are equal iff their stored bases are equal.
 */
class Lattice {
public:
    Lattice() = default;
    /* Columns of `generators` span the lattice; they may be dependent. */
    explicit Lattice(const RatMatrix& generators);
    explicit Lattice(const IntMatrix& generators);

    static Lattice standard(std::size_t n);
    static Lattice zero(std::size_t n);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t rank() const { return basis_.cols(); }
    const RatMatrix& basis() const { return basis_; }

    /* Integer coordinates of the columns of `x` in the stored basis; nullopt
     * if some column is outside the lattice. */
    std::optional<IntMatrix> integer_coordinates(const RatMatrix& x) const;
    /* Rational coordinates; throws DomainError if outside the span. */
    RatMatrix coordinates(const RatMatrix& x) const;

    bool contains(const RatVector& x) const;
    bool contains(const Lattice& other) const;
    bool same_span(const Lattice& other) const;

    Lattice scaled(const Rational& s) const;
    Lattice operator+(const Lattice& other) const;
    Lattice with_vector(const RatVector& v) const;

    friend bool operator==(const Lattice& a, const Lattice& b)
    {
        return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Lattice& a, const Lattice& b) { return !(a == b); }

private:
    std::size_t ambient_dim_ = 0;
    RatMatrix basis_;
};

/* The lattice L ∩ span(columns of S). Throws DomainError if span(S) ⊄ span(L). */
Lattice saturate(const RatMatrix& s, const Lattice& l);
/* True iff L ∩ span(sub) = sub. */
bool is_saturated(const Lattice& sub, const Lattice& l);

/* {x in L : f x = 0}; f acts on the ambient space of L. */
Lattice kernel_lattice(const RatMatrix& f, const Lattice& l);

/* f(L) as a lattice in the target ambient space. */
Lattice image_lattice(const RatMatrix& f, const Lattice& l);

/* {x in Q^n : f x in L} for injective f; span(f) must lie in span(L). */
Lattice preimage_injective(const RatMatrix& f, const Lattice& l);

/* [Lp : L] for L ⊆ Lp of equal span; DomainError otherwise. */
Integer index(const Lattice& l, const Lattice& lp);

} // namespace ppav
