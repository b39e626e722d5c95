#pragma once

#include <optional>
#include <string>
#include <vector>

namespace ppav {

/* Dimensions of the loci attached to degree-m covers of genus-g curves branched over r points. */
struct LocusReport {
    long g = 0;
    long m = 0;
    long r = 0;
    long dim_Ag = 0;
    long dim_Mg = 0;
    long dim_R_gmr = 0;
    long dim_jacobian_quotient_locus = 0;
    long dim_inverse_prym_locus = 0;
    long dim_prym_quotient_bound = 0;
    long prym_target_dim_index = 0;
    long cover_genus = 0;
    long prym_dim = 0;
    long genus_lower = 0;
    std::optional<long> genus_welters_upper; // m = 2 only
    long genus_family_lower_bound = 0;
};

/* Requires g >= 2, m >= 1, r >= 0 even; throws DomainError otherwise. */
LocusReport locus_dimensions(long g, long m, long r);

struct GenusBounds {
    long lower = 0;
    std::optional<long> upper; // unknown for m >= 3
    long family_bound = 0;
};

/* Bounds on the genus of a curve in an m-minimal class of a g-dimensional ppav. */
GenusBounds genus_bounds(long g, long m);

struct FamilyDimension {
    std::string family;
    long dimension = 0;
};

/*
 * Dimensions of the three m = 2 families of g-dimensional 2-minimal ppav:
 * Jacobian quotients, Prym quotients of unramified double covers, and
 * quotients of pull-backs.
 */
std::vector<FamilyDimension> m2_family_dimensions(long g);

/* Largest entry of m2_family_dimensions. */
long m2_locus_dimension(long g);

} // namespace ppav
