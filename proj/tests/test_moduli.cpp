#include <doctest.h>

#include "ppav/covers.hpp"
#include "ppav/moduli.hpp"

using namespace ppav;

TEST_CASE("locus dimensions examples")
{
    CHECK(locus_dimensions(5, 2, 0).dim_Ag == 15);
    LocusReport r6 = locus_dimensions(6, 2, 0);
    CHECK(r6.dim_R_gmr == 15);
    CHECK(r6.cover_genus == 11);
    LocusReport r = locus_dimensions(2, 3, 0);
    CHECK(r.cover_genus == 4);
    CHECK(r.prym_dim == 2);
    CHECK(r.dim_inverse_prym_locus == 3);
    CHECK_FALSE(r.genus_welters_upper);
    LocusReport r5 = locus_dimensions(5, 2, 0);
    CHECK(r5.dim_R_gmr == 12);
    CHECK(r5.cover_genus == 9);
    CHECK(r5.genus_welters_upper == 11);
}

TEST_CASE("locus dimensions validation")
{
    CHECK_THROWS_AS(locus_dimensions(2, 2, 3), DomainError);
    CHECK_THROWS_AS(locus_dimensions(2, 2, -2), DomainError);
    CHECK_THROWS_AS(locus_dimensions(1, 2, 0), DomainError);
    CHECK_THROWS_AS(locus_dimensions(3, 0, 0), DomainError);
    CHECK_THROWS_AS(genus_bounds(1, 2), DomainError);
}

TEST_CASE("genus bounds")
{
    GenusBounds b1 = genus_bounds(4, 1);
    CHECK(b1.lower == 4);
    CHECK(b1.upper == 4);
    CHECK(b1.family_bound == 4);
    GenusBounds b2 = genus_bounds(4, 2);
    CHECK(b2.upper == 9);
    CHECK(b2.family_bound == 7);
    GenusBounds b3 = genus_bounds(4, 3);
    CHECK(b3.lower == 4);
    CHECK_FALSE(b3.upper);
    CHECK(b3.family_bound == 10);
}

TEST_CASE("formula table against hand-coded values")
{
    for (long g = 2; g <= 10; ++g)
        for (long m = 1; m <= 5; ++m)
            for (long r = 0; r <= 6; r += 2) {
                LocusReport rep = locus_dimensions(g, m, r);
                long twice_ag = g * g + g;
                CHECK(2 * rep.dim_Ag == twice_ag);
                CHECK(rep.dim_Mg == 3 * (g - 1));
                CHECK(rep.dim_R_gmr == rep.dim_Mg + r);
                CHECK(rep.prym_target_dim_index == m * g - m + 1 + r / 2);
                CHECK(rep.dim_prym_quotient_bound == 2 * g + 2 * m - 5);
                CHECK(2 * rep.cover_genus - 2 == m * (2 * g - 2) + r);
                CHECK(rep.prym_dim == rep.cover_genus - g);
                GenusBounds b = genus_bounds(g, m);
                CHECK(b.family_bound == m * (g - 1) + 1);
                if (b.upper)
                    CHECK(b.family_bound <= *b.upper);
            }
}

TEST_CASE("2-minimal locus has dimension 3g")
{
    for (long g = 1; g <= 10; ++g) {
        CHECK(m2_locus_dimension(g) == 3 * g);
        CHECK(m2_family_dimensions(g).size() == 3);
    }
}

TEST_CASE("cover genus matches the ribbon-graph genus")
{
    for (auto [g, m] : std::vector<std::pair<long, long>>{{2, 2}, {2, 3}, {3, 2}, {2, 4}, {2, 1}, {3, 3}})
        CHECK(static_cast<long>(standard_cover(g, m).total_graph.genus()) == locus_dimensions(g, m, 0).cover_genus);
}
