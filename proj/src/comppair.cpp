#include "ppav/comppair.hpp"

namespace ppav {

namespace {

void certify(bool ok, const std::string& identity)
{
    if (!ok)
        throw CertificationError(identity, "pair certification failed: " + identity);
}

RatMatrix scalar(std::size_t n, const Rational& c) { return c * RatMatrix::identity(n); }

} // namespace

ComplementaryPair complement(const PolarizedLattice& ambient, const Lattice& sub_B)
{
    if (!polarization_type(ambient).is_principal())
        throw DomainError("complement: ambient lattice is not principal");
    if (sub_B.ambient_dim() != ambient.ambient_dim())
        throw DomainError("complement: sublattice lives in a different ambient space");
    if (!is_saturated(sub_B, ambient.lattice()))
        throw DomainError("complement: sublattice is not saturated");
    const RatMatrix& e = ambient.form();
    const RatMatrix& b = sub_B.basis();
    if (sub_B.rank() % 2 != 0 || (sub_B.rank() > 0 && determinant(b.transpose() * e * b) == 0))
        throw NotAbelianSubvarietyError("complement: form is degenerate on the sublattice");

    Lattice sub_A = sub_B.rank() == 0 ? ambient.lattice() : kernel_lattice(b.transpose() * e, ambient.lattice());
    ComplementaryPair pair{ambient, sub_B, sub_A, FiniteQuotient(sub_A + sub_B, ambient.lattice())};

    Integer n = pair.intersection.order();
    certify(ker_lambda(pair.polarized_A()).group.order() == n, "|A∩B| = |ker λ_A|");
    certify(ker_lambda(pair.polarized_B()).group.order() == n, "|A∩B| = |ker λ_B|");
    return pair;
}

ComplementaryPair swapped(const ComplementaryPair& pair)
{
    return complement(pair.ambient, pair.sub_A);
}

RatMatrix projection_B(const ComplementaryPair& pair)
{
    const std::size_t n = pair.ambient.ambient_dim();
    if (pair.sub_B.rank() == 0)
        return RatMatrix(n, n);
    const RatMatrix& b = pair.sub_B.basis();
    const RatMatrix& e = pair.ambient.form();
    return b * inverse(b.transpose() * e * b) * b.transpose() * e;
}

RatMatrix j_polynomial(const LatticeMap& j, const Rational& c)
{
    const std::size_t n = j.matrix().rows();
    return (j.matrix() - RatMatrix::identity(n)) * (j.matrix() + scalar(n, c));
}

LatticeMap j_endomorphism(const ComplementaryPair& pair, long m)
{
    if (m < 1)
        throw DomainError("j: m must be positive");
    if (Integer(m) % pair.intersection.exponent() != 0)
        throw PreconditionError("j: exponent of A∩B does not divide m = " + std::to_string(m));
    const std::size_t n = pair.ambient.ambient_dim();
    RatMatrix jm = RatMatrix::identity(n) - Rational(m) * projection_B(pair);
    const Lattice& l = pair.ambient.lattice();
    if (!l.integer_coordinates(jm * l.basis()))
        throw InconsistentPairError("j = 1 - m pr_B is not integral on the lattice");
    LatticeMap j(jm, l, l);

    certify(j_polynomial(j, Rational(m - 1)) == RatMatrix(n, n), "(j-1)(j+m-1) = 0");
    certify(kernel_lattice(RatMatrix::identity(n) - jm, l) == pair.sub_A, "ker(1-j) = A");
    certify(kernel_lattice(jm + scalar(n, Rational(m - 1)), l) == pair.sub_B, "ker(j+m-1) = B");
    return j;
}

std::vector<FiniteQuotient> mti_of_ker_mu(const ComplementaryPair& pair, long m, const Integer& budget)
{
    PairedQuotient km = ker_mu(pair.polarized_B(), m);
    return enumerate_mti(km.group, km.pairing, budget);
}

WeltersOutput welters_construct(const PolarizedLattice& ambient, const Lattice& sub_B, const FiniteQuotient& K, long m)
{
    ComplementaryPair pair = complement(ambient, sub_B);
    LatticeMap j = j_endomorphism(pair, m);
    PolarizedLattice pb = pair.polarized_B();
    DualPolarization dual = dual_polarization(pb, m);
    PairedQuotient km = ker_mu(pb, m);
    if (!K.is_subgroup_of(km.group))
        throw DomainError("welters: K is not a subgroup of ker mu_B");
    if (!is_maximal_isotropic(K, km.group, km.pairing))
        throw IsotropyError("welters: K is not maximal isotropic in ker mu_B");

    const std::size_t n = ambient.ambient_dim();
    const Lattice& l = ambient.lattice();
    const RatMatrix& e = ambient.form();
    RatMatrix pr = projection_B(pair);
    RatMatrix one = RatMatrix::identity(n);
    std::vector<IdentityCheck> checks;
    auto check = [&](bool ok, const std::string& name) {
        checks.push_back({name, ok});
        certify(ok, name);
    };

    check(image_lattice(pr, l) == dual.dual.lattice(), "pr_B(Λ) = Λ_B^†");
    PolarizedLattice x = quotient_by_isotropic(dual.dual, K, Rational(1));
    check(polarization_type(x).is_principal(), "X principal");

    LatticeMap u(pr, l, x.lattice());
    LatticeMap ut = adjoint_map(u, ambient, x);
    const std::size_t nx = x.ambient_dim();
    check(compose(u, ut) == LatticeMap(scalar(nx, Rational(m)), x.lattice(), x.lattice()), "u u^t = m");
    check(ut.matrix() * u.matrix() == one - j.matrix(), "u^t u = 1 - j");
    check(j_polynomial(j, Rational(m - 1)) == RatMatrix(n, n), "(j-1)(j+m-1) = 0");
    check(pr.transpose() * e == e * pr, "1 - j is E-self-adjoint");
    Integer order = pair.intersection.order();
    check(ker_lambda(pair.polarized_A()).group.order() == order && ker_lambda(pb).group.order() == order,
          "|A∩B| = |ker λ_A| = |ker λ_B|");

    return WeltersOutput{m, std::move(pair), std::move(dual.dual), K, std::move(x), std::move(u), std::move(ut),
                         std::move(j), std::move(checks)};
}

std::string preset_name(Preset p)
{
    switch (p) {
    case Preset::jacobian_quotient:
        return "jacobian_quotient";
    case Preset::prym_quotient:
        return "prym_quotient";
    case Preset::pullback_quotient:
        return "pullback_quotient";
    }
    return "";
}

std::optional<Preset> parse_preset(const std::string& s)
{
    for (Preset p : {Preset::jacobian_quotient, Preset::prym_quotient, Preset::pullback_quotient})
        if (preset_name(p) == s)
            return p;
    return std::nullopt;
}

Lattice preset_sub_B(Preset kind, const CoverHomology& cov)
{
    switch (kind) {
    case Preset::jacobian_quotient:
        return cov.total().lattice();
    case Preset::prym_quotient:
        return prym_sublattice(cov).sub_A;
    case Preset::pullback_quotient:
        return prym_sublattice(cov).sub_B;
    }
    throw DomainError("unknown preset");
}

WeltersOutput preset_m2(Preset kind, const CoverHomology& cov, const std::optional<FiniteQuotient>& K)
{
    if (cov.m != 2)
        throw PreconditionError("m=2 presets need a double cover");
    Lattice sub_B = preset_sub_B(kind, cov);
    if (K)
        return welters_construct(cov.total(), sub_B, *K, 2);
    auto ks = mti_of_ker_mu(complement(cov.total(), sub_B), 2);
    return welters_construct(cov.total(), sub_B, ks.front(), 2);
}

} // namespace ppav
