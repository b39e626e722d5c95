#include "ppav/pollat.hpp"

namespace ppav {

bool PolarizationType::is_principal() const
{
    return std::all_of(chain.begin(), chain.end(), [](const Integer& d) { return d == 1; });
}

PolarizedLattice::PolarizedLattice(Lattice lattice, RatMatrix form) : lattice_(std::move(lattice)), form_(std::move(form))
{
    if (form_.rows() != lattice_.ambient_dim() || form_.cols() != lattice_.ambient_dim())
        throw DomainError("polarized lattice: form does not match the ambient dimension");
    if (form_.transpose() != -form_)
        throw InvariantError("polarized lattice: form is not alternating");
    const RatMatrix& b = lattice_.basis();
    RatMatrix g = b.transpose() * form_ * b;
    if (!is_integral(g))
        throw InvariantError("polarized lattice: form is not integral on the lattice");
    if (lattice_.rank() % 2 != 0 || (lattice_.rank() > 0 && determinant(g) == 0))
        throw InvariantError("polarized lattice: form is degenerate on the lattice");
}

IntMatrix PolarizedLattice::gram() const
{
    const RatMatrix& b = lattice_.basis();
    return to_integer(b.transpose() * form_ * b);
}

LatticeMap::LatticeMap(RatMatrix matrix, Lattice source, Lattice target)
    : matrix_(std::move(matrix)), source_(std::move(source)), target_(std::move(target))
{
    if (matrix_.cols() != source_.ambient_dim() || matrix_.rows() != target_.ambient_dim())
        throw DomainError("lattice map: matrix shape does not match the ambient spaces");
    if (!target_.integer_coordinates(matrix_ * source_.basis()))
        throw DomainError("lattice map: image of the source is not inside the target");
}

IntMatrix LatticeMap::coordinate_matrix() const
{
    return *target_.integer_coordinates(matrix_ * source_.basis());
}

bool operator==(const LatticeMap& a, const LatticeMap& b)
{
    return a.source_ == b.source_ && a.target_ == b.target_ &&
           a.matrix_ * a.source_.basis() == b.matrix_ * b.source_.basis();
}

LatticeMap compose(const LatticeMap& g, const LatticeMap& f)
{
    if (!g.source().contains(f.target()))
        throw DomainError("compose: target of f is not inside the source of g");
    return LatticeMap(g.matrix() * f.matrix(), f.source(), g.target());
}

LatticeMap identity_map(const Lattice& l)
{
    return LatticeMap(RatMatrix::identity(l.ambient_dim()), l, l);
}

RatMatrix standard_symplectic(std::size_t g)
{
    RatMatrix j(2 * g, 2 * g);
    for (std::size_t i = 0; i < g; ++i) {
        j(i, g + i) = 1;
        j(g + i, i) = -1;
    }
    return j;
}

PolarizedLattice standard_principal(std::size_t g)
{
    return PolarizedLattice(Lattice::standard(2 * g), standard_symplectic(g));
}

PolarizationType polarization_type(const PolarizedLattice& p)
{
    IntVector d = smith_normal_form(p.gram()).diagonal();
    PolarizationType t;
    for (std::size_t i = 0; i < d.size(); i += 2) {
        if (d[i] == 0 || d[i] != d[i + 1])
            throw InvariantError("polarization type: Gram matrix is not a nondegenerate alternating form");
        t.chain.push_back(d[i]);
    }
    return t;
}

Lattice dual_lattice(const PolarizedLattice& p)
{
    if (p.rank() == 0)
        return p.lattice();
    RatMatrix g = to_rational(p.gram());
    return Lattice(RatMatrix(p.lattice().basis() * inverse(g.transpose())));
}

PairedQuotient ker_lambda(const PolarizedLattice& p)
{
    return {FiniteQuotient(p.lattice(), dual_lattice(p)), PairingOnQuotient(p.form())};
}

PairedQuotient torsion_subgroup(const PolarizedLattice& p, long m)
{
    if (m < 1)
        throw DomainError("torsion subgroup: m must be positive");
    Rational rm(m);
    return {FiniteQuotient(p.lattice(), p.lattice().scaled(make_rational(1, m))), PairingOnQuotient(rm * p.form())};
}

namespace {

void require_divides(const PolarizedLattice& p, long m)
{
    if (m < 1)
        throw DomainError("m must be positive");
    for (const auto& d : polarization_type(p).chain)
        if (Integer(m) % d != 0)
            throw PreconditionError("polarization type entry " + d.get_str() + " does not divide m = " +
                                    std::to_string(m));
}

} // namespace

DualPolarization dual_polarization(const PolarizedLattice& p, long m)
{
    require_divides(p, m);
    Lattice dual = dual_lattice(p);
    Rational rm(m);
    PolarizedLattice pd(dual, rm * p.form());
    LatticeMap mu(rm * RatMatrix::identity(p.ambient_dim()), dual, p.lattice());
    return {std::move(pd), std::move(mu)};
}

PairedQuotient ker_mu(const PolarizedLattice& p, long m)
{
    require_divides(p, m);
    Rational rm(m);
    return {FiniteQuotient(dual_lattice(p), p.lattice().scaled(make_rational(1, m))),
            PairingOnQuotient(rm * p.form())};
}

PolarizedLattice quotient_by_isotropic(const PolarizedLattice& p, const FiniteQuotient& k, const Rational& scale)
{
    if (k.lower() != p.lattice())
        throw DomainError("quotient: subgroup is not a quotient of the polarized lattice");
    if (scale <= 0)
        throw DomainError("quotient: scale must be positive");
    RatMatrix f = scale * p.form();
    const RatMatrix& b = k.upper().basis();
    if (!is_integral(b.transpose() * f * b))
        throw IsotropyError("quotient: subgroup is not totally isotropic for the scaled form");
    return PolarizedLattice(k.upper(), f);
}

PolarizedLattice principal_quotient(const PolarizedLattice& p, const FiniteQuotient& k, long m)
{
    PolarizedLattice x = quotient_by_isotropic(p, k, Rational(m));
    if (!polarization_type(x).is_principal())
        throw CertificationError("X principal", "quotient is not principally polarized");
    return x;
}

LatticeMap adjoint_map(const LatticeMap& f, const PolarizedLattice& src, const PolarizedLattice& dst)
{
    if (f.source() != src.lattice() || f.target() != dst.lattice())
        throw DomainError("adjoint: map does not match the polarized lattices");
    RatMatrix gs = to_rational(src.gram());
    RatMatrix gd = to_rational(dst.gram());
    RatMatrix fc = to_rational(f.coordinate_matrix());
    // coordinates: T = G_s^{-T} F^T G_d^T
    RatMatrix t = inverse(gs.transpose()) * fc.transpose() * gd.transpose();
    if (!is_integral(t))
        throw AdjointError("adjoint is not integral on the target lattice");
    const RatMatrix& bs = src.lattice().basis();
    const RatMatrix& bd = dst.lattice().basis();
    RatMatrix projection = inverse(gd) * bd.transpose() * dst.form();
    return LatticeMap(bs * t * projection, dst.lattice(), src.lattice());
}

} // namespace ppav
