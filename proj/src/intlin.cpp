#include "ppav/intlin.hpp"

#include <numeric>

namespace ppav {

RatMatrix to_rational(const IntMatrix& m)
{
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = Rational(m(i, j));
    return r;
}

IntMatrix to_integer(const RatMatrix& m)
{
    IntMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).get_den() != 1)
                throw DomainError("matrix entry is not an integer");
            r(i, j) = m(i, j).get_num();
        }
    return r;
}

bool is_integral(const RatMatrix& m)
{
    return std::all_of(m.data().begin(), m.data().end(), [](const Rational& x) { return x.get_den() == 1; });
}

bool is_integral(const RatVector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.get_den() == 1; });
}

Integer common_denominator(const RatMatrix& m)
{
    Integer d = 1;
    for (const auto& x : m.data())
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
    return d;
}

namespace {

/* Reduced row echelon form in place; returns the pivot columns. */
std::vector<std::size_t> rref(RatMatrix& a, std::size_t ncols)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < a.rows(); ++col) {
        std::size_t p = row;
        while (p < a.rows() && a(p, col) == 0)
            ++p;
        if (p == a.rows())
            continue;
        a.swap_rows(row, p);
        Rational inv = 1 / a(row, col);
        for (std::size_t j = 0; j < a.cols(); ++j)
            a(row, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a(i, col) == 0)
                continue;
            Rational f = a(i, col);
            a.add_row_multiple(i, row, -f);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::size_t rank(const RatMatrix& a)
{
    RatMatrix w = a;
    return rref(w, w.cols()).size();
}

Rational determinant(const RatMatrix& a)
{
    if (a.rows() != a.cols())
        throw DomainError("determinant of a non-square matrix");
    RatMatrix w = a;
    Rational det = 1;
    const std::size_t n = w.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && w(p, c) == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            w.swap_rows(p, c);
            det = -det;
        }
        det *= w(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (w(i, c) == 0)
                continue;
            Rational f = w(i, c) / w(c, c);
            w.add_row_multiple(i, c, -f);
        }
    }
    return det;
}

std::optional<RatMatrix> solve(const RatMatrix& a, const RatMatrix& b)
{
    if (a.rows() != b.rows())
        throw DomainError("solve: row counts differ");
    const std::size_t n = a.cols();
    RatMatrix aug(a.rows(), n + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j)
            aug(i, n + j) = b(i, j);
    }
    auto pivots = rref(aug, n);
    for (std::size_t i = pivots.size(); i < aug.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (aug(i, n + j) != 0)
                return std::nullopt;
    RatMatrix x(n, b.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x(pivots[r], j) = aug(r, n + j);
    return x;
}

RatMatrix inverse(const RatMatrix& a)
{
    if (a.rows() != a.cols())
        throw DomainError("inverse of a non-square matrix");
    if (rank(a) != a.rows())
        throw DomainError("inverse of a singular matrix");
    return *solve(a, RatMatrix::identity(a.rows()));
}

RatMatrix nullspace(const RatMatrix& a)
{
    RatMatrix w = a;
    auto pivots = rref(w, w.cols());
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < a.cols(); ++j)
        if (!is_pivot[j])
            free.push_back(j);
    RatMatrix ns(a.cols(), free.size());
    for (std::size_t k = 0; k < free.size(); ++k) {
        ns(free[k], k) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            ns(pivots[r], k) = -w(r, free[k]);
    }
    return ns;
}

IntVector SmithForm::diagonal() const
{
    IntVector d;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
        d.push_back(D(i, i));
    return d;
}

std::size_t SmithForm::rank() const
{
    std::size_t r = 0;
    for (const auto& x : diagonal())
        if (x != 0)
            ++r;
    return r;
}

SmithForm smith_normal_form(const IntMatrix& m)
{
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    IntMatrix D = m;
    IntMatrix U = IntMatrix::identity(rows);
    IntMatrix V = IntMatrix::identity(cols);

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        bool exhausted = false;
        for (;;) {
            std::size_t pi = rows, pj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (D(i, j) != 0 && (pi == rows || abs(D(i, j)) < abs(D(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == rows) {
                exhausted = true;
                break;
            }
            D.swap_rows(t, pi);
            U.swap_rows(t, pi);
            D.swap_cols(t, pj);
            V.swap_cols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (D(i, t) == 0)
                    continue;
                Integer q = D(i, t) / D(t, t);
                D.add_row_multiple(i, t, -q);
                U.add_row_multiple(i, t, -q);
                if (D(i, t) != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (D(t, j) == 0)
                    continue;
                Integer q = D(t, j) / D(t, t);
                D.add_col_multiple(j, t, -q);
                V.add_col_multiple(j, t, -q);
                if (D(t, j) != 0)
                    clean = false;
            }
            if (!clean)
                continue;

            // enforce d_t | every remaining entry
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (D(i, j) % D(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad == rows)
                break;
            D.add_row_multiple(t, bad, Integer(1));
            U.add_row_multiple(t, bad, Integer(1));
        }
        if (exhausted)
            break;
        if (D(t, t) < 0) {
            D.negate_row(t);
            U.negate_row(t);
        }
    }
    return {std::move(U), std::move(D), std::move(V)};
}

IntMatrix unimodular_inverse(const IntMatrix& u)
{
    return to_integer(inverse(to_rational(u)));
}

Lattice::Lattice(const RatMatrix& generators) : ambient_dim_(generators.rows())
{
    Integer d = common_denominator(generators);
    IntMatrix scaled = to_integer(Rational(d) * generators);
    IntMatrix h = column_hnf(scaled);
    Rational inv = Rational(1) / Rational(d);
    basis_ = inv * to_rational(h);
}

Lattice::Lattice(const IntMatrix& generators) : Lattice(to_rational(generators)) {}

Lattice Lattice::standard(std::size_t n)
{
    return Lattice(RatMatrix::identity(n));
}

Lattice Lattice::zero(std::size_t n)
{
    return Lattice(RatMatrix(n, 0));
}

std::optional<IntMatrix> Lattice::integer_coordinates(const RatMatrix& x) const
{
    if (x.rows() != ambient_dim_)
        throw DomainError("coordinates: ambient dimensions differ");
    auto c = solve(basis_, x);
    if (!c || !is_integral(*c))
        return std::nullopt;
    return to_integer(*c);
}

RatMatrix Lattice::coordinates(const RatMatrix& x) const
{
    if (x.rows() != ambient_dim_)
        throw DomainError("coordinates: ambient dimensions differ");
    auto c = solve(basis_, x);
    if (!c)
        throw DomainError("vector outside the span of the lattice");
    return *c;
}

bool Lattice::contains(const RatVector& x) const
{
    return integer_coordinates(RatMatrix::column_vector(x)).has_value();
}

bool Lattice::contains(const Lattice& other) const
{
    if (other.ambient_dim_ != ambient_dim_)
        return false;
    return integer_coordinates(other.basis_).has_value();
}

bool Lattice::same_span(const Lattice& other) const
{
    if (other.ambient_dim_ != ambient_dim_ || other.rank() != rank())
        return false;
    return ppav::rank(hstack(basis_, other.basis_)) == rank();
}

Lattice Lattice::scaled(const Rational& s) const
{
    return Lattice(s * basis_);
}

Lattice Lattice::operator+(const Lattice& other) const
{
    if (other.ambient_dim_ != ambient_dim_)
        throw DomainError("lattice sum: ambient dimensions differ");
    return Lattice(hstack(basis_, other.basis_));
}

Lattice Lattice::with_vector(const RatVector& v) const
{
    return *this + Lattice(RatMatrix::column_vector(v));
}

Lattice saturate(const RatMatrix& s, const Lattice& l)
{
    RatMatrix c = l.coordinates(s);
    Integer d = common_denominator(c);
    IntMatrix ci = to_integer(Rational(d) * c);
    SmithForm snf = smith_normal_form(ci);
    const std::size_t r = snf.rank();
    IntMatrix uinv = unimodular_inverse(snf.U);
    return Lattice(l.basis() * to_rational(uinv.columns(0, r)));
}

bool is_saturated(const Lattice& sub, const Lattice& l)
{
    return saturate(sub.basis(), l) == sub;
}

Lattice kernel_lattice(const RatMatrix& f, const Lattice& l)
{
    if (f.cols() != l.ambient_dim())
        throw DomainError("kernel_lattice: map and lattice dimensions differ");
    const std::size_t k = l.rank();
    RatMatrix m = f * l.basis();
    if (m.rows() == 0 || k == 0)
        return l;
    Integer d = common_denominator(m);
    SmithForm snf = smith_normal_form(to_integer(Rational(d) * m));
    const std::size_t r = snf.rank();
    return Lattice(l.basis() * to_rational(snf.V.columns(r, k - r)));
}

Lattice image_lattice(const RatMatrix& f, const Lattice& l)
{
    if (f.cols() != l.ambient_dim())
        throw DomainError("image_lattice: map and lattice dimensions differ");
    return Lattice(f * l.basis());
}

Lattice preimage_injective(const RatMatrix& f, const Lattice& l)
{
    if (rank(f) != f.cols())
        throw DomainError("preimage_injective: map is not injective");
    Lattice inside = saturate(f, l);
    auto x = solve(f, inside.basis());
    if (!x)
        throw DomainError("preimage_injective: saturated image outside span of map");
    return Lattice(*x);
}

Integer index(const Lattice& l, const Lattice& lp)
{
    if (!l.same_span(lp))
        throw DomainError("index: lattices span different subspaces");
    auto c = lp.integer_coordinates(l.basis());
    if (!c)
        throw DomainError("index: lattice is not contained in the larger one");
    if (c->rows() == 0)
        return 1;
    Rational det = determinant(to_rational(*c));
    return abs(det.get_num());
}

} // namespace ppav
