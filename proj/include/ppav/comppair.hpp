#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ppav/covers.hpp"

namespace ppav {

/*
 * A saturated sublattice Λ_B of a principal lattice together with its
 * E-orthogonal complement Λ_A. A∩B is Λ/(Λ_A + Λ_B).
 */
struct ComplementaryPair {
    PolarizedLattice ambient;
    Lattice sub_B;
    Lattice sub_A;
    FiniteQuotient intersection;

    PolarizedLattice polarized_A() const { return PolarizedLattice(sub_A, ambient.form()); }
    PolarizedLattice polarized_B() const { return PolarizedLattice(sub_B, ambient.form()); }
};

/*
 * Throws DomainError if the ambient is not principal or sub_B is not saturated,
 * NotAbelianSubvarietyError if E is degenerate on sub_B. Certifies
 * |A∩B| = |ker λ_A| = |ker λ_B|.
 */
ComplementaryPair complement(const PolarizedLattice& ambient, const Lattice& sub_B);

/* The pair with the roles of A and B exchanged. */
ComplementaryPair swapped(const ComplementaryPair& pair);

/* E-orthogonal projection of the ambient space onto span(Λ_B). */
RatMatrix projection_B(const ComplementaryPair& pair);

/*
 * j = 1 - m pr_B. Certifies (j-1)(j+m-1) = 0, ker(1-j) = Λ_A and
 * ker(j+m-1) = Λ_B. Throws PreconditionError if the exponent of A∩B does not
 * divide m, InconsistentPairError if j is not integral on Λ.
 */
LatticeMap j_endomorphism(const ComplementaryPair& pair, long m);

/* (j - 1)(j + c) as a matrix on the ambient space. */
RatMatrix j_polynomial(const LatticeMap& j, const Rational& c);

struct IdentityCheck {
    std::string name;
    bool holds = false;
};

struct WeltersOutput {
    long m = 1;
    ComplementaryPair pair;
    PolarizedLattice B_hat; // (Λ_B^†, m E)
    FiniteQuotient K;
    PolarizedLattice X;
    LatticeMap u;   // Λ -> Λ_X
    LatticeMap u_t; // Λ_X -> Λ
    LatticeMap j;
    std::vector<IdentityCheck> checks;
};

/* The maximal isotropic subgroups of ker μ_B, in canonical order. */
std::vector<FiniteQuotient> mti_of_ker_mu(const ComplementaryPair& pair, long m,
                                          const Integer& budget = default_enumeration_budget);

/*
 * X = (Λ_X, m E) where Λ_X/Λ_B^† = K. K must be a maximal isotropic subgroup
 * of ker μ_B = (1/m)Λ_B / Λ_B^†. Every identity is certified; a failure throws
 * CertificationError naming it.
 */
WeltersOutput welters_construct(const PolarizedLattice& ambient, const Lattice& sub_B, const FiniteQuotient& K,
                                long m);

enum class Preset { jacobian_quotient, prym_quotient, pullback_quotient };

std::string preset_name(Preset p);
std::optional<Preset> parse_preset(const std::string& s);

/* The Λ_B a preset uses on a cover: Λ_N, the Prym lattice, or the transfer image. */
Lattice preset_sub_B(Preset kind, const CoverHomology& cov);

/*
 * Runs welters_construct on the cover with m = cov.m (which must be 2) and the
 * preset's Λ_B. Without K, the first maximal isotropic subgroup is used.
 */
WeltersOutput preset_m2(Preset kind, const CoverHomology& cov, const std::optional<FiniteQuotient>& K = {});

} // namespace ppav
