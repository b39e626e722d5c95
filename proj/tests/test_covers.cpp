#include <doctest.h>

#include "helpers.hpp"
#include "ppav/covers.hpp"

using namespace ppav;
using testing_support::to_rat_matrix;

namespace {

Integer ipow(long b, std::size_t e)
{
    Integer r = 1;
    for (std::size_t i = 0; i < e; ++i)
        r *= b;
    return r;
}

IntMatrix as_int(const RatMatrix& m) { return to_integer(m); }

// 2 vertices, 3 edges from v0 to v1.
RibbonGraph theta(bool twisted)
{
    std::vector<std::size_t> v1 = twisted ? std::vector<std::size_t>{1, 3, 5} : std::vector<std::size_t>{5, 3, 1};
    return RibbonGraph(3, {{0, 2, 4}, v1});
}

} // namespace

TEST_CASE("ribbon graphs")
{
    RibbonGraph t = surface_ribbon(1);
    CHECK(t.num_vertices() == 1);
    CHECK(t.num_edges() == 2);
    CHECK(t.faces().size() == 1);
    CHECK(t.euler_characteristic() == 0);
    CHECK(surface_ribbon(2).euler_characteristic() == -2);
    CHECK(surface_ribbon(4).genus() == 4);
    CHECK_THROWS_AS(surface_ribbon(0), DomainError);
    CHECK_THROWS_AS(RibbonGraph(2, {{0, 1, 2}}), DomainError);
    CHECK_THROWS_AS(RibbonGraph(1, {{0, 0}}), DomainError);
    CHECK(theta(true).genus() == 1);
    CHECK(theta(false).genus() == 0);
    CHECK_FALSE(RibbonGraph(2, {{0, 1}, {2, 3}}).is_connected());
}

TEST_CASE("homology with intersection form")
{
    CHECK(SurfaceHomology(surface_ribbon(1)).intersection_form() == IntMatrix{{0, 1}, {-1, 0}});
    CHECK(SurfaceHomology(surface_ribbon(2)).intersection_form() ==
          IntMatrix{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}});
    for (std::size_t g = 1; g <= 4; ++g) {
        PolarizedLattice p = homology_with_form(surface_ribbon(g));
        CHECK(p.rank() == 2 * g);
        CHECK(polarization_type(p).is_principal());
    }
    PolarizedLattice torus = homology_with_form(theta(true));
    CHECK(torus.rank() == 2);
    CHECK(polarization_type(torus).is_principal());
    CHECK(homology_with_form(theta(false)).rank() == 0);
    CHECK_THROWS_AS(homology_with_form(RibbonGraph(2, {{0, 1}, {2, 3}})), DomainError);
}

TEST_CASE("classes and chains round-trip")
{
    SurfaceHomology h(theta(true));
    for (std::size_t i = 0; i < h.rank(); ++i) {
        IntVector e(h.rank(), Integer(0));
        e[i] = 1;
        CHECK(h.class_of(h.chain_of(e)) == e);
    }
    CHECK_THROWS_AS(h.class_of(IntVector{1, 0, 0}), DomainError);
    // the boundary of the single face is null-homologous
    IntVector face(3, Integer(0));
    auto faces = theta(true).faces();
    for (std::size_t half : faces[0])
        face[half / 2] += (half % 2 == 0) ? 1 : -1;
    CHECK(h.class_of(face) == IntVector(2, Integer(0)));
}

TEST_CASE("cyclic covers of genus-2 surfaces")
{
    CoverHomology c22 = standard_cover(2, 2);
    CHECK(c22.total_genus() == 3);
    CHECK(c22.total().rank() == 6);
    CHECK(standard_cover(2, 3).total().rank() == 8);
    CHECK(standard_cover(2, 3).total_genus() == 4);

    CoverHomology c1 = standard_cover(2, 1);
    CHECK(c1.total() == c1.base());
    CHECK(c1.sigma.matrix() == RatMatrix::identity(4));
    CHECK(c1.pushforward.matrix() == RatMatrix::identity(4));
    CHECK(c1.transfer.matrix() == RatMatrix::identity(4));
}

TEST_CASE("cover invariants")
{
    for (auto [g, m] : std::vector<std::pair<std::size_t, long>>{{1, 2}, {2, 2}, {2, 3}, {3, 2}, {2, 4}, {1, 5}}) {
        CAPTURE(g);
        CAPTURE(m);
        CoverHomology cov = standard_cover(g, m);
        CHECK(cov.total_genus() == static_cast<std::size_t>(m) * (g - 1) + 1);
        CHECK(cov.total_graph.genus() == cov.total_genus());
        IntMatrix s = as_int(cov.sigma.matrix());
        IntMatrix e = cov.total_homology.intersection_form();
        CHECK(s.transpose() * e * s == e);
        IntMatrix p = IntMatrix::identity(s.rows()), sum(s.rows(), s.rows());
        for (long i = 0; i < m; ++i) {
            sum = sum + p;
            p = p * s;
        }
        CHECK(p == IntMatrix::identity(s.rows()));
        IntMatrix push = as_int(cov.pushforward.matrix()), pull = as_int(cov.transfer.matrix());
        CHECK(push * pull == Integer(m) * IntMatrix::identity(2 * g));
        CHECK(pull * push == sum);

        // the σ-invariant lattice is the saturated transfer image
        PrymSublattices subs = prym_sublattice(cov);
        RatMatrix fixed = cov.sigma.matrix() - RatMatrix::identity(s.rows());
        CHECK(kernel_lattice(fixed, cov.total().lattice()) == subs.sub_B);
        CHECK(subs.sub_A.rank() == 2 * (cov.total_genus() - g));
    }
}

TEST_CASE("other generating voltages")
{
    CoverHomology cov = cyclic_cover(surface_ribbon(2), VoltageAssignment{3, {1, 2, 0, 1}});
    CHECK(cov.total_genus() == 4);
    CHECK(norm_component_group(cov).group.order() == 3);
    CHECK(eta_class(cov).order() == 3);
    CHECK(ker_mu_basis(cov).group->invariants() == IntVector{3, 3});

    CoverHomology torus = cyclic_cover(theta(true), VoltageAssignment{2, {0, 1, 1}});
    CHECK(torus.total_genus() == 1);
}

TEST_CASE("disconnected covers are rejected")
{
    CHECK_THROWS_AS(cyclic_cover(surface_ribbon(2), VoltageAssignment{2, {0, 0, 0, 0}}), CoverError);
    CHECK_THROWS_AS(cyclic_cover(surface_ribbon(2), VoltageAssignment{4, {2, 0, 2, 0}}), CoverError);
    CHECK_THROWS_AS(cyclic_cover(surface_ribbon(2), VoltageAssignment{2, {1, 0}}), DomainError);
}

TEST_CASE("Prym sublattices")
{
    CoverHomology cov = standard_cover(2, 2);
    PrymSublattices subs = prym_sublattice(cov);
    CHECK(subs.sub_A.rank() == 2);
    CHECK(subs.sub_B.rank() == 4);
    CHECK(is_saturated(subs.sub_A, cov.total().lattice()));
    CHECK(is_saturated(subs.sub_B, cov.total().lattice()));
    for (const auto& d : polarization_type(PolarizedLattice(subs.sub_B, cov.total().form())).chain)
        CHECK(Integer(2) % d == 0);
    CHECK(prym_sublattice(standard_cover(2, 1)).sub_A.rank() == 0);
}

TEST_CASE("component group of the norm kernel")
{
    for (long m : {1, 2, 3, 4}) {
        CoverHomology cov = standard_cover(2, m);
        ComponentGroup comp = norm_component_group(cov);
        CHECK(comp.group.order() == m);
        CHECK(comp.component_index(cov, comp.p1) == 1 % m);
        RatVector p3 = comp.p1;
        for (auto& x : p3)
            x *= 3;
        CHECK(comp.component_index(cov, p3) == 3 % m);
        // lattice points lie in P_0
        RatVector zero(cov.total().rank(), Rational(0));
        zero[0] = 1;
        CHECK(comp.component_index(cov, zero) == 0);
    }
}

TEST_CASE("eta generates the kernel of the transfer")
{
    for (long m : {2, 3, 4}) {
        CoverHomology cov = standard_cover(2, m);
        QuotientElement eta = eta_class(cov);
        CHECK(eta.order() == m);
        CHECK(eta.scaled(m).is_zero());
        CHECK(cov.total().lattice().contains(cov.transfer.matrix() * eta.representative()));
    }
    CHECK_THROWS_AS(eta_class(standard_cover(2, 1)), DomainError);
}

TEST_CASE("ker mu_B is (Z/m)^2 generated by xi_bar and P_1")
{
    for (auto [g, m] : std::vector<std::pair<std::size_t, long>>{{2, 2}, {2, 3}, {3, 2}, {2, 4}}) {
        KerMuData d = ker_mu_basis(standard_cover(g, m));
        CHECK(d.group->invariants() == IntVector{Integer(m), Integer(m)});
        CHECK(d.xi_bar.order() == m);
        CHECK(d.p1.order() == m);
        // exactness: |B_m| = |ker λ_B| |ker μ_B|
        CHECK(ipow(m, 2 * g) == ker_lambda(d.B).group.order() * d.group->order());
    }
}

TEST_CASE("classification of maximal isotropic K")
{
    for (long m : {2, 3}) {
        CoverHomology cov = standard_cover(2, m);
        KerMuData d = ker_mu_basis(cov);
        // brute force on (Z/m)^2 in the (ξ̄, P_1) basis
        Rational pv = d.ker_mu.pairing.value(d.xi_bar.representative(), d.p1.representative()) * m;
        long u = pv.get_num().get_si();
        oracle::FiniteGroup og({m, m});
        auto brute = oracle::maximal_isotropic(og, {{0, u}, {-u, 0}}, m);
        auto ks = classify_mti_K(cov);
        CHECK(ks.size() == brute.size());
        CHECK(ks.size() == static_cast<std::size_t>(m + 1));
        CHECK(ks.front().a == 0);
        CHECK(ks.front().b == 1);
    }
    auto ks4 = classify_mti_K(standard_cover(2, 4));
    KerMuData d4 = ker_mu_basis(standard_cover(2, 4));
    FiniteQuotient xi4 = d4.group->subgroup({d4.xi_bar.representative()});
    CHECK(std::any_of(ks4.begin(), ks4.end(), [&](const LabeledSubgroup& s) { return s.K == xi4; }));
}

TEST_CASE("birationality predicate")
{
    KerMuData d = ker_mu_basis(standard_cover(2, 2));
    FiniteQuotient xi = d.group->subgroup({d.xi_bar.representative()});
    FiniteQuotient p1 = d.group->subgroup({d.p1.representative()});
    FiniteQuotient sum = d.group->subgroup({(d.xi_bar + d.p1).representative()});
    CHECK(birational_predicate(xi, d.p1));
    CHECK_FALSE(birational_predicate(p1, d.p1));
    CHECK(birational_predicate(sum, d.p1));

    for (long m : {3, 4}) {
        CoverHomology cov = standard_cover(2, m);
        KerMuData dm = ker_mu_basis(cov);
        for (const auto& k : classify_mti_K(cov))
            CHECK(birational_predicate(k.K, dm.p1) == (std::gcd(k.a, m) == 1));
    }
}

TEST_CASE("kernel of the composite map to X")
{
    for (auto [g, m] : std::vector<std::pair<std::size_t, long>>{{2, 2}, {2, 3}, {3, 2}}) {
        CAPTURE(g);
        CAPTURE(m);
        CoverHomology cov = standard_cover(g, m);
        KerMuData d = ker_mu_basis(cov);
        for (const auto& k : classify_mti_K(cov)) {
            KernelIdentification r = kernel_identification(cov, k.K);
            bool birational = birational_predicate(k.K, d.p1);
            CHECK(r.norm_preimage.contains(r.composite_kernel));
            CHECK(r.composite_order == ipow(m, 2 * g));
            if (birational) {
                CHECK(r.norm_preimage_order == ipow(m, 2 * g) * m);
                REQUIRE(r.eta_preimage);
                CHECK(*r.eta_preimage == r.norm_preimage);
                // the composite kernel has index m in [m]^{-1} Nm(K), so the two are not equal
                CHECK(index(r.composite_kernel, r.norm_preimage) == m);
                CHECK_FALSE(verify_kernel_identification(cov, k.K));
            } else {
                CHECK(r.composite_kernel == r.norm_preimage);
                CHECK(verify_kernel_identification(cov, k.K));
            }
        }
    }
}
