#include "ppav/finquot.hpp"

#include <set>

namespace ppav {

Rational frac(const Rational& x)
{
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return Rational(x - Rational(fl));
}

FiniteQuotient::FiniteQuotient(Lattice lower, Lattice upper) : lower_(std::move(lower)), upper_(std::move(upper))
{
    if (!lower_.same_span(upper_))
        throw DomainError("finite quotient: lattices span different subspaces");
    auto inclusion = upper_.integer_coordinates(lower_.basis());
    if (!inclusion)
        throw DomainError("finite quotient: lower lattice is not contained in upper lattice");

    const std::size_t k = upper_.rank();
    const RatMatrix& b = upper_.basis();
    if (k == 0) {
        generators_ = RatMatrix(upper_.ambient_dim(), 0);
        coordinate_map_ = RatMatrix(0, upper_.ambient_dim());
        return;
    }
    SmithForm snf = smith_normal_form(*inclusion);
    RatMatrix w = b * to_rational(unimodular_inverse(snf.U));
    RatMatrix bt = b.transpose();
    RatMatrix left_inverse = inverse(bt * b) * bt;
    RatMatrix coords = to_rational(snf.U) * left_inverse;

    std::vector<std::size_t> nontrivial;
    for (std::size_t i = 0; i < k; ++i)
        if (snf.D(i, i) != 1) {
            nontrivial.push_back(i);
            invariants_.push_back(snf.D(i, i));
        }
    generators_ = RatMatrix(upper_.ambient_dim(), nontrivial.size());
    coordinate_map_ = RatMatrix(nontrivial.size(), upper_.ambient_dim());
    for (std::size_t t = 0; t < nontrivial.size(); ++t) {
        generators_.set_column(t, w.column(nontrivial[t]));
        for (std::size_t j = 0; j < upper_.ambient_dim(); ++j)
            coordinate_map_(t, j) = coords(nontrivial[t], j);
    }
}

Integer FiniteQuotient::order() const
{
    Integer o = 1;
    for (const auto& d : invariants_)
        o *= d;
    return o;
}

Integer FiniteQuotient::exponent() const
{
    return invariants_.empty() ? Integer(1) : invariants_.back();
}

bool FiniteQuotient::contains(const RatVector& x) const
{
    return upper_.contains(x);
}

bool FiniteQuotient::is_zero(const RatVector& x) const
{
    return lower_.contains(x);
}

IntVector FiniteQuotient::coordinates(const RatVector& x) const
{
    RatVector y = coordinate_map_ * x;
    IntVector c(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (y[i].get_den() != 1)
            throw DomainError("quotient coordinates: vector is not in the upper lattice");
        mpz_fdiv_r(c[i].get_mpz_t(), y[i].get_num_mpz_t(), invariants_[i].get_mpz_t());
    }
    return c;
}

RatVector FiniteQuotient::representative(const IntVector& coords) const
{
    if (coords.size() != invariants_.size())
        throw DomainError("quotient representative: wrong number of coordinates");
    RatVector c(coords.begin(), coords.end());
    return generators_ * c;
}

Integer FiniteQuotient::element_order(const RatVector& x) const
{
    IntVector c = coordinates(x);
    Integer ord = 1;
    for (std::size_t i = 0; i < c.size(); ++i) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), c[i].get_mpz_t(), invariants_[i].get_mpz_t());
        Integer oi = invariants_[i] / g;
        mpz_lcm(ord.get_mpz_t(), ord.get_mpz_t(), oi.get_mpz_t());
    }
    return ord;
}

std::vector<IntVector> FiniteQuotient::all_coordinates() const
{
    std::vector<IntVector> out;
    IntVector cur(invariants_.size(), Integer(0));
    for (;;) {
        out.push_back(cur);
        std::size_t i = cur.size();
        while (i > 0) {
            --i;
            cur[i] += 1;
            if (cur[i] < invariants_[i])
                break;
            cur[i] = 0;
            if (i == 0)
                return out;
        }
        if (cur.empty())
            return out;
    }
}

FiniteQuotient FiniteQuotient::subgroup(const std::vector<RatVector>& gens) const
{
    Lattice l = lower_;
    for (const auto& g : gens) {
        if (!contains(g))
            throw DomainError("subgroup generator is not an element of the quotient");
        l = l.with_vector(g);
    }
    return FiniteQuotient(lower_, l);
}

bool FiniteQuotient::is_subgroup_of(const FiniteQuotient& other) const
{
    return lower_ == other.lower_ && other.upper_.contains(upper_);
}

QuotientElement::QuotientElement(std::shared_ptr<const FiniteQuotient> parent, RatVector representative)
    : parent_(std::move(parent)), rep_(std::move(representative))
{
    if (!parent_->contains(rep_))
        throw DomainError("quotient element: representative outside the upper lattice");
}

QuotientElement QuotientElement::operator+(const QuotientElement& o) const
{
    if (parent_->lower() != o.parent_->lower() || parent_->upper() != o.parent_->upper())
        throw DomainError("adding elements of different quotients");
    RatVector r = rep_;
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] += o.rep_[i];
    return QuotientElement(parent_, std::move(r));
}

QuotientElement QuotientElement::operator-() const
{
    RatVector r = rep_;
    for (auto& x : r)
        x = -x;
    return QuotientElement(parent_, std::move(r));
}

QuotientElement QuotientElement::scaled(const Integer& k) const
{
    RatVector r = rep_;
    for (auto& x : r)
        x *= Rational(k);
    return QuotientElement(parent_, std::move(r));
}

bool operator==(const QuotientElement& a, const QuotientElement& b)
{
    RatVector d = a.rep_;
    for (std::size_t i = 0; i < d.size(); ++i)
        d[i] -= b.rep_[i];
    return a.parent_->is_zero(d);
}

PairingOnQuotient::PairingOnQuotient(RatMatrix form) : form_(std::move(form))
{
    if (form_.rows() != form_.cols())
        throw DomainError("pairing form must be square");
    if (form_.transpose() != -form_)
        throw InvariantError("pairing form must be alternating");
}

Rational PairingOnQuotient::value(const RatVector& x, const RatVector& y) const
{
    RatVector fy = form_ * y;
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        s += x[i] * fy[i];
    return frac(s);
}

bool PairingOnQuotient::well_defined_on(const FiniteQuotient& q) const
{
    if (form_.rows() != q.upper().ambient_dim())
        return false;
    return is_integral(q.upper().basis().transpose() * form_ * q.lower().basis());
}

IntVector group_invariants(const FiniteQuotient& q)
{
    return q.invariants();
}

bool is_isotropic(const FiniteQuotient& s, const PairingOnQuotient& p)
{
    const RatMatrix& b = s.upper().basis();
    return is_integral(b.transpose() * p.form() * b);
}

bool is_maximal_isotropic(const FiniteQuotient& s, const FiniteQuotient& q, const PairingOnQuotient& p)
{
    if (!s.is_subgroup_of(q) || !is_isotropic(s, p))
        return false;
    const RatMatrix& sb = s.upper().basis();
    for (const auto& c : q.all_coordinates()) {
        RatVector x = q.representative(c);
        if (s.contains(x))
            continue;
        bool orthogonal = true;
        for (std::size_t j = 0; j < sb.cols() && orthogonal; ++j)
            orthogonal = p.value(x, sb.column(j)) == 0;
        if (orthogonal)
            return false;
    }
    return true;
}

namespace {

using SmallMatrix = Matrix<long long>;

/* Q in adapted coordinates with machine integers: Z^k / diag(d) Z^k. */
struct CoordinateModel {
    std::vector<long long> divisors;
    long long exponent = 1;
    std::vector<std::vector<long long>> elements;

    explicit CoordinateModel(const FiniteQuotient& q)
    {
        for (const auto& d : q.invariants())
            divisors.push_back(d.get_si());
        exponent = q.exponent().get_si();
        for (const auto& c : q.all_coordinates()) {
            std::vector<long long> e;
            for (const auto& x : c)
                e.push_back(x.get_si());
            elements.push_back(std::move(e));
        }
    }

    std::size_t k() const { return divisors.size(); }

    SmallMatrix relations() const
    {
        SmallMatrix d(k(), k());
        for (std::size_t i = 0; i < k(); ++i)
            d(i, i) = divisors[i];
        return d;
    }

    /* Canonical HNF of the subgroup generated by `gens` (columns) and the relations. */
    SmallMatrix canonical(const SmallMatrix& gens) const
    {
        return column_hnf(hstack(gens, relations()));
    }

    FiniteQuotient to_quotient(const FiniteQuotient& q, const SmallMatrix& h) const
    {
        std::vector<RatVector> gens;
        for (std::size_t j = 0; j < h.cols(); ++j) {
            IntVector c(k());
            for (std::size_t i = 0; i < k(); ++i)
                c[i] = Integer(static_cast<long>(h(i, j)));
            gens.push_back(q.generators() * RatVector(c.begin(), c.end()));
        }
        Lattice l = q.lower();
        for (const auto& g : gens)
            l = l.with_vector(g);
        return FiniteQuotient(q.lower(), l);
    }
};

void check_budget(const FiniteQuotient& q, const Integer& budget)
{
    if (q.order() > budget)
        throw BudgetError("group of order " + q.order().get_str() + " exceeds the enumeration budget " +
                          budget.get_str());
}

struct SmallMatrixLess {
    bool operator()(const SmallMatrix& a, const SmallMatrix& b) const { return lex_less(a, b); }
};

} // namespace

std::vector<FiniteQuotient> enumerate_mti(const FiniteQuotient& q, const PairingOnQuotient& p, const Integer& budget)
{
    check_budget(q, budget);
    if (!p.well_defined_on(q))
        throw DomainError("pairing is not well defined on the quotient");
    CoordinateModel model(q);
    const std::size_t k = model.k();
    const long long e = model.exponent;

    // gram(i, j) = e * p(w_i, w_j) mod e
    SmallMatrix gram(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            Rational v = p.value(q.generators().column(i), q.generators().column(j)) * Rational(static_cast<long>(e));
            gram(i, j) = v.get_num().get_si();
        }

    auto orthogonal_to = [&](const std::vector<long long>& x, const SmallMatrix& h) {
        for (std::size_t c = 0; c < h.cols(); ++c) {
            __int128 s = 0;
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    s += static_cast<__int128>(x[i]) * gram(i, j) * h(j, c);
            if (s % e != 0)
                return false;
        }
        return true;
    };

    std::set<SmallMatrix, SmallMatrixLess> visited;
    std::set<SmallMatrix, SmallMatrixLess> maximal;
    std::vector<SmallMatrix> stack{model.canonical(SmallMatrix(k, 0))};
    visited.insert(stack.back());
    while (!stack.empty()) {
        SmallMatrix s = std::move(stack.back());
        stack.pop_back();
        bool extendable = false;
        for (const auto& x : model.elements) {
            if (!orthogonal_to(x, s))
                continue;
            SmallMatrix col(k, 1);
            for (std::size_t i = 0; i < k; ++i)
                col(i, 0) = x[i];
            SmallMatrix t = model.canonical(hstack(s, col));
            if (t == s)
                continue;
            extendable = true;
            if (visited.insert(t).second)
                stack.push_back(std::move(t));
        }
        if (!extendable)
            maximal.insert(std::move(s));
    }

    std::vector<FiniteQuotient> out;
    for (const auto& h : maximal)
        out.push_back(model.to_quotient(q, h));
    return out;
}

std::vector<FiniteQuotient> enumerate_subgroups(const FiniteQuotient& q, const Integer& budget)
{
    check_budget(q, budget);
    CoordinateModel model(q);
    const std::size_t k = model.k();
    const long long e = model.exponent;
    std::vector<long long> divisors_of_e;
    for (long long d = 1; d <= e; ++d)
        if (e % d == 0)
            divisors_of_e.push_back(d);

    std::vector<SmallMatrix> found;
    SmallMatrix h(k, k);

    // D Z^k ⊆ H Z^k, checked by forward substitution on the lower-triangular H.
    auto contains_relations = [&]() {
        for (std::size_t c = 0; c < k; ++c) {
            std::vector<long long> x(k, 0);
            for (std::size_t i = 0; i < k; ++i) {
                long long rhs = (i == c) ? model.divisors[c] : 0;
                for (std::size_t j = 0; j < i; ++j)
                    rhs -= h(i, j) * x[j];
                if (rhs % h(i, i) != 0)
                    return false;
                x[i] = rhs / h(i, i);
            }
        }
        return true;
    };

    // Odometer over lower-triangular candidates: diagonal entries divide e,
    // entries left of the diagonal lie in [0, h_ii).
    std::vector<std::size_t> diag_idx(k, 0);
    for (;;) {
        for (std::size_t i = 0; i < k; ++i) {
            h(i, i) = divisors_of_e[diag_idx[i]];
            for (std::size_t j = 0; j < i; ++j)
                h(i, j) = 0;
        }
        for (;;) {
            if (contains_relations())
                found.push_back(h);
            // advance off-diagonal odometer
            bool carried_out = true;
            for (std::size_t i = k; i-- > 0 && carried_out;)
                for (std::size_t j = i; j-- > 0;) {
                    if (++h(i, j) < h(i, i)) {
                        carried_out = false;
                        break;
                    }
                    h(i, j) = 0;
                }
            if (carried_out)
                break;
        }
        std::size_t i = k;
        bool done = true;
        while (i-- > 0) {
            if (++diag_idx[i] < divisors_of_e.size()) {
                done = false;
                break;
            }
            diag_idx[i] = 0;
        }
        if (done)
            break;
    }

    std::sort(found.begin(), found.end(), [](const SmallMatrix& a, const SmallMatrix& b) { return lex_less(a, b); });
    std::vector<FiniteQuotient> out;
    for (const auto& s : found)
        out.push_back(model.to_quotient(q, s));
    return out;
}

FiniteQuotient preimage_under_mult(const FiniteQuotient& s, long m)
{
    if (m < 1)
        throw DomainError("preimage_under_mult: m must be positive");
    return FiniteQuotient(s.lower(), s.upper().scaled(make_rational(1, m)));
}

} // namespace ppav
