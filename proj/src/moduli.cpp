#include "ppav/moduli.hpp"

#include <algorithm>

#include "ppav/errors.hpp"

namespace ppav {

namespace {

void require_gm(long g, long m)
{
    if (g < 2)
        throw DomainError("genus must be at least 2");
    if (m < 1)
        throw DomainError("m must be positive");
}

} // namespace

LocusReport locus_dimensions(long g, long m, long r)
{
    require_gm(g, m);
    if (r < 0 || r % 2 != 0)
        throw DomainError("r must be even and nonnegative");
    LocusReport rep;
    rep.g = g;
    rep.m = m;
    rep.r = r;
    rep.dim_Ag = g * (g + 1) / 2;
    rep.dim_Mg = 3 * g - 3;
    rep.dim_R_gmr = 3 * g - 3 + r;
    rep.dim_jacobian_quotient_locus = 3 * g - 3;
    rep.dim_inverse_prym_locus = 3 * g - 3;
    rep.dim_prym_quotient_bound = 2 * (g - 1 + m) - 3;
    rep.prym_target_dim_index = m * (g - 1) + 1 + r / 2;
    // Riemann-Hurwitz with 2g' - 2 = m(2g - 2) + r
    rep.cover_genus = m * (g - 1) + 1 + r / 2;
    rep.prym_dim = (m - 1) * (g - 1) + r / 2;
    GenusBounds b = genus_bounds(g, m);
    rep.genus_lower = b.lower;
    if (m == 2)
        rep.genus_welters_upper = b.upper;
    rep.genus_family_lower_bound = b.family_bound;
    return rep;
}

GenusBounds genus_bounds(long g, long m)
{
    require_gm(g, m);
    GenusBounds b;
    b.lower = g;
    if (m == 1)
        b.upper = g;
    else if (m == 2)
        b.upper = 2 * g + 1;
    b.family_bound = m * g - m + 1;
    return b;
}

std::vector<FamilyDimension> m2_family_dimensions(long g)
{
    if (g < 1)
        throw DomainError("dimension must be positive");
    // Jacobians of genus g, Pryms of double covers of genus g + 1 curves, pull-backs from genus g
    return {{"jacobian_quotient", 3 * g - 3}, {"prym_quotient", 3 * (g + 1) - 3}, {"pullback_quotient", 3 * g - 3}};
}

long m2_locus_dimension(long g)
{
    auto fams = m2_family_dimensions(g);
    return std::max_element(fams.begin(), fams.end(),
                            [](const FamilyDimension& a, const FamilyDimension& b) { return a.dimension < b.dimension; })
        ->dimension;
}

} // namespace ppav
