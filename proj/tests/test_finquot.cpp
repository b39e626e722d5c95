#include <doctest.h>

#include <memory>

#include "helpers.hpp"
#include "ppav/finquot.hpp"

using namespace ppav;
using testing_support::columns_of;
using testing_support::rat_vector;
using testing_support::to_int_matrix;
using testing_support::to_rat_matrix;

namespace {

// m-torsion of the standard principal lattice Z^{2g}, with the pairing m*J.
struct TorsionFixture {
    FiniteQuotient q;
    PairingOnQuotient p;
    long m;
};

TorsionFixture torsion(std::size_t g, long m)
{
    Lattice z = Lattice::standard(2 * g);
    RatMatrix form = to_rat_matrix(oracle::standard_symplectic(g));
    return {FiniteQuotient(z, z.scaled(make_rational(1, m))), PairingOnQuotient(Rational(m) * form), m};
}

FiniteQuotient diagonal_group(const oracle::Vec& d)
{
    oracle::Mat m(d.size(), oracle::Vec(d.size(), 0));
    for (std::size_t i = 0; i < d.size(); ++i)
        m[i][i] = d[i];
    return FiniteQuotient(Lattice(to_int_matrix(m)), Lattice::standard(d.size()));
}

RatVector scaled_vector(const oracle::Vec& x, long den)
{
    RatVector v;
    for (long long c : x)
        v.push_back(make_rational(static_cast<long>(c), den));
    return v;
}

// The set of oracle elements lying in S; `den` maps oracle coordinates to the ambient space.
oracle::FiniteGroup::Subgroup as_oracle_subgroup(const FiniteQuotient& s, const oracle::FiniteGroup& g, long den)
{
    oracle::FiniteGroup::Subgroup out(g.size(), false);
    for (std::size_t i = 0; i < g.size(); ++i)
        out[i] = s.contains(scaled_vector(g.elements[i], den));
    return out;
}

} // namespace

TEST_CASE("group invariants")
{
    Lattice z2 = Lattice::standard(2);
    CHECK(group_invariants(FiniteQuotient(z2, z2)).empty());
    CHECK(group_invariants(FiniteQuotient(z2.scaled(2), z2)) == IntVector{2, 2});
    CHECK(group_invariants(FiniteQuotient(Lattice(to_rat_matrix({{1, 0}, {1, 6}})), z2)) == IntVector{6});
    CHECK(FiniteQuotient(z2.scaled(2), z2).order() == 4);
    CHECK(diagonal_group({2, 3}).invariants() == IntVector{6});
    CHECK_THROWS_AS(FiniteQuotient(z2, z2.scaled(2)), DomainError);
}

TEST_CASE("quotient elements")
{
    Lattice z2 = Lattice::standard(2);
    auto q = std::make_shared<const FiniteQuotient>(z2.scaled(3), z2);
    QuotientElement a(q, rat_vector({1, 0})), b(q, rat_vector({2, 0}));
    CHECK(a.order() == 3);
    CHECK((a + b).is_zero());
    CHECK(-a == b);
    CHECK(a.scaled(4) == a);
    CHECK(QuotientElement(q, rat_vector({4, 3})) == a);
    CHECK_THROWS_AS(QuotientElement(q, rat_vector({1, 1}, 2)), DomainError);
    for (const auto& c : q->all_coordinates())
        CHECK(q->coordinates(q->representative(c)) == c);
    CHECK(q->all_coordinates().size() == 9);
}

TEST_CASE("pairing on a quotient")
{
    TorsionFixture t = torsion(1, 2);
    CHECK(t.p.well_defined_on(t.q));
    Rational v = t.p.value(rat_vector({1, 0}, 2), rat_vector({0, 1}, 2));
    CHECK(v == make_rational(1, 2));
    CHECK(frac(v + t.p.value(rat_vector({0, 1}, 2), rat_vector({1, 0}, 2))) == 0);
    CHECK_THROWS_AS(PairingOnQuotient(to_rat_matrix({{0, 1}, {1, 0}})), InvariantError);
    PairingOnQuotient too_fine(to_rat_matrix({{0, 1}, {-1, 0}}));
    CHECK_FALSE(too_fine.well_defined_on(FiniteQuotient(Lattice::standard(2), Lattice::standard(2).scaled(make_rational(1, 4)))));
}

TEST_CASE("is_isotropic")
{
    TorsionFixture t = torsion(1, 2);
    CHECK(is_isotropic(t.q.subgroup({}), t.p));
    CHECK(is_isotropic(t.q.subgroup({rat_vector({1, 1}, 2)}), t.p));
    CHECK(is_isotropic(t.q.subgroup({rat_vector({1, 0}, 2)}), t.p));
    CHECK_FALSE(is_isotropic(t.q, t.p));
}

TEST_CASE("maximal isotropic subgroups match the brute-force oracle")
{
    struct Case {
        std::size_t g;
        long m;
        std::size_t expected; // frozen from oracle::maximal_isotropic
    };
    for (Case c : {Case{1, 2, 3}, Case{2, 2, 15}, Case{1, 3, 4}, Case{2, 3, 40}, Case{1, 4, 7}}) {
        CAPTURE(c.g);
        CAPTURE(c.m);
        TorsionFixture t = torsion(c.g, c.m);
        oracle::FiniteGroup og(oracle::Vec(2 * c.g, c.m));
        auto expected = oracle::maximal_isotropic(og, oracle::standard_symplectic(c.g), c.m);
        CHECK(expected.size() == c.expected);

        auto got = enumerate_mti(t.q, t.p);
        CHECK(got.size() == c.expected);
        std::set<oracle::FiniteGroup::Subgroup> got_sets, want_sets(expected.begin(), expected.end());
        for (const auto& s : got)
            got_sets.insert(as_oracle_subgroup(s, og, c.m));
        CHECK(got_sets == want_sets);
    }
}

TEST_CASE("trivial quotient has one maximal isotropic subgroup")
{
    Lattice z2 = Lattice::standard(2);
    FiniteQuotient q(z2, z2);
    auto got = enumerate_mti(q, PairingOnQuotient(to_rat_matrix({{0, 1}, {-1, 0}})));
    REQUIRE(got.size() == 1);
    CHECK(got[0].order() == 1);
}

TEST_CASE("every maximal isotropic subgroup of principal m-torsion has order m^g")
{
    for (std::size_t g : {1, 2})
        for (long m : {2, 3, 4}) {
            TorsionFixture t = torsion(g, m);
            Integer expected = 1;
            for (std::size_t i = 0; i < g; ++i)
                expected *= m;
            for (const auto& s : enumerate_mti(t.q, t.p)) {
                CHECK(s.order() == expected);
                CHECK(is_isotropic(s, t.p));
                CHECK(is_maximal_isotropic(s, t.q, t.p));
            }
        }
}

TEST_CASE("enumeration respects the budget")
{
    TorsionFixture t = torsion(2, 3);
    CHECK_THROWS_AS(enumerate_mti(t.q, t.p, Integer(80)), BudgetError);
    CHECK_THROWS_AS(enumerate_subgroups(t.q, Integer(80)), BudgetError);
    CHECK_NOTHROW(enumerate_mti(t.q, t.p, Integer(81)));
}

TEST_CASE("enumeration output is sorted and deterministic")
{
    TorsionFixture t = torsion(2, 2);
    auto a = enumerate_mti(t.q, t.p), b = enumerate_mti(t.q, t.p);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(a[i] == b[i]);
}

TEST_CASE("subgroup enumeration matches brute force")
{
    for (const oracle::Vec& d : {oracle::Vec{2, 2}, oracle::Vec{6}, oracle::Vec{2, 4}, oracle::Vec{2, 2, 2},
                                 oracle::Vec{3, 9}, oracle::Vec{4, 4}, oracle::Vec{2, 4, 8}}) {
        FiniteQuotient q = diagonal_group(d);
        oracle::FiniteGroup og(d);
        auto expected = og.all_subgroups();
        auto got = enumerate_subgroups(q);
        CHECK(got.size() == expected.size());
        std::set<oracle::FiniteGroup::Subgroup> got_sets, want_sets(expected.begin(), expected.end());
        for (const auto& s : got)
            got_sets.insert(as_oracle_subgroup(s, og, 1));
        CHECK(got_sets == want_sets);
    }
}

TEST_CASE("preimage under multiplication")
{
    Lattice z2 = Lattice::standard(2);
    FiniteQuotient trivial(z2, z2);
    CHECK(preimage_under_mult(trivial, 2).order() == 4);
    CHECK(preimage_under_mult(trivial, 1) == trivial);

    Lattice z4 = Lattice::standard(4);
    RatVector eta = rat_vector({1, 0, 0, 0}, 3);
    FiniteQuotient s(z4, z4.with_vector(eta));
    CHECK(s.order() == 3);
    FiniteQuotient pre = preimage_under_mult(s, 3);
    CHECK(pre.order() == 243);
    CHECK(preimage_under_mult(s, 1) == s);

    // contains the full m-torsion, and m * pre = S
    CHECK(pre.upper().contains(z4.scaled(make_rational(1, 3))));
    CHECK(pre.upper().scaled(3) == s.upper());
    CHECK_THROWS_AS(preimage_under_mult(s, 0), DomainError);
}
