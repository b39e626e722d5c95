#pragma once

#include "ppav/finquot.hpp"

namespace ppav {

/// Elementary-divisor chain d_1 | ... | d_n of a polarization.
struct PolarizationType {
    IntVector chain;

    bool is_principal() const;
    friend bool operator==(const PolarizationType& a, const PolarizationType& b) { return a.chain == b.chain; }
};

/*
 * A lattice with an alternating form E on the ambient space that is integral
 * and nondegenerate on the lattice. Rank-0 lattices are allowed.
 */
class PolarizedLattice {
public:
    PolarizedLattice(Lattice lattice, RatMatrix form);

    const Lattice& lattice() const { return lattice_; }
    const RatMatrix& form() const { return form_; }
    std::size_t rank() const { return lattice_.rank(); }
    std::size_t ambient_dim() const { return lattice_.ambient_dim(); }
    /// Gram matrix of E in the stored basis.
    IntMatrix gram() const;

    friend bool operator==(const PolarizedLattice& a, const PolarizedLattice& b)
    {
        return a.lattice_ == b.lattice_ && a.form_ == b.form_;
    }

private:
    Lattice lattice_;
    RatMatrix form_;
};

/*
 * A rational linear map between ambient spaces with matrix * source ⊆ target.
 * Two maps are equal when they agree on the source lattice.
 */
class LatticeMap {
public:
    LatticeMap(RatMatrix matrix, Lattice source, Lattice target);

    const RatMatrix& matrix() const { return matrix_; }
    const Lattice& source() const { return source_; }
    const Lattice& target() const { return target_; }
    /// Integer matrix F with matrix * B_source = B_target * F.
    IntMatrix coordinate_matrix() const;

    friend bool operator==(const LatticeMap& a, const LatticeMap& b);
    friend bool operator!=(const LatticeMap& a, const LatticeMap& b) { return !(a == b); }

private:
    RatMatrix matrix_;
    Lattice source_;
    Lattice target_;
};

/// g ∘ f; requires f.target() ⊆ g.source().
LatticeMap compose(const LatticeMap& g, const LatticeMap& f);
LatticeMap identity_map(const Lattice& l);

/// J_g on Z^{2g}, ordered (e_1..e_g, f_1..f_g).
RatMatrix standard_symplectic(std::size_t g);
PolarizedLattice standard_principal(std::size_t g);

PolarizationType polarization_type(const PolarizedLattice& p);

/// Λ† = {x in span Λ : E(x, Λ) ⊆ Z}.
Lattice dual_lattice(const PolarizedLattice& p);

/// Λ†/Λ with pairing E mod Z.
PairedQuotient ker_lambda(const PolarizedLattice& p);

/// (1/m)Λ/Λ with pairing m·E mod Z.
PairedQuotient torsion_subgroup(const PolarizedLattice& p, long m);

struct DualPolarization {
    PolarizedLattice dual; // (Λ†, m·E)
    LatticeMap mu;         // m·id : Λ† -> Λ
};

/// Requires every d_i | m.
DualPolarization dual_polarization(const PolarizedLattice& p, long m);

/// ker μ = (1/m)Λ/Λ† with the pairing induced from the m-torsion, m·E mod Z.
PairedQuotient ker_mu(const PolarizedLattice& p, long m);

/*
 * (L_K, scale·E) where L_K = K.upper() and K.lower() is the lattice of p.
 * Throws IsotropyError when scale·E is not integral on L_K.
 */
PolarizedLattice quotient_by_isotropic(const PolarizedLattice& p, const FiniteQuotient& k, const Rational& scale);

/// quotient_by_isotropic with scale m; the result must be principal.
PolarizedLattice principal_quotient(const PolarizedLattice& p, const FiniteQuotient& k, long m);

/*
 * f^t with E_src(f^t x, y) = E_dst(x, f y). Off the span of the target lattice
 * the returned matrix factors through the E_dst-orthogonal projection.
 * Throws AdjointError when f^t does not carry Λ_dst into Λ_src.
 */
LatticeMap adjoint_map(const LatticeMap& f, const PolarizedLattice& src, const PolarizedLattice& dst);

} // namespace ppav
