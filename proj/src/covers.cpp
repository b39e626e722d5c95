#include "ppav/covers.hpp"

#include <numeric>
#include <queue>
#include <set>

namespace ppav {

RibbonGraph::RibbonGraph(std::size_t edges, std::vector<std::vector<std::size_t>> rotation)
    : edges_(edges), rotation_(std::move(rotation)), vertex_(2 * edges, 0), next_(2 * edges, 0)
{
    std::vector<bool> seen(2 * edges, false);
    for (std::size_t v = 0; v < rotation_.size(); ++v) {
        const auto& rot = rotation_[v];
        for (std::size_t i = 0; i < rot.size(); ++i) {
            std::size_t h = rot[i];
            if (h >= 2 * edges || seen[h])
                throw DomainError("ribbon graph: rotation is not a partition of the half-edges");
            seen[h] = true;
            vertex_[h] = v;
            next_[h] = rot[(i + 1) % rot.size()];
        }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        throw DomainError("ribbon graph: some half-edge has no vertex");
}

std::vector<std::vector<std::size_t>> RibbonGraph::faces() const
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> used(num_half_edges(), false);
    for (std::size_t h0 = 0; h0 < num_half_edges(); ++h0) {
        if (used[h0])
            continue;
        std::vector<std::size_t> face;
        for (std::size_t h = h0; !used[h]; h = next(flip(h))) {
            used[h] = true;
            face.push_back(h);
        }
        out.push_back(std::move(face));
    }
    return out;
}

long RibbonGraph::euler_characteristic() const
{
    return static_cast<long>(num_vertices()) - static_cast<long>(num_edges()) + static_cast<long>(faces().size());
}

std::size_t RibbonGraph::genus() const
{
    if (!is_connected())
        throw DomainError("ribbon graph is not connected");
    long chi = euler_characteristic();
    return static_cast<std::size_t>((2 - chi) / 2);
}

bool RibbonGraph::is_connected() const
{
    if (num_vertices() == 0)
        return true;
    std::vector<bool> seen(num_vertices(), false);
    std::queue<std::size_t> todo;
    todo.push(0);
    seen[0] = true;
    std::size_t count = 1;
    while (!todo.empty()) {
        std::size_t v = todo.front();
        todo.pop();
        for (std::size_t h : rotation_[v]) {
            std::size_t w = vertex_of(flip(h));
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                todo.push(w);
            }
        }
    }
    return count == num_vertices();
}

RibbonGraph surface_ribbon(std::size_t g)
{
    if (g == 0)
        throw DomainError("surface_ribbon: genus 0 is not supported");
    std::vector<std::size_t> rot;
    for (std::size_t i = 0; i < g; ++i) {
        std::size_t a = 2 * i, b = 2 * i + 1;
        rot.insert(rot.end(), {2 * a, 2 * b, 2 * a + 1, 2 * b + 1});
    }
    return RibbonGraph(2 * g, {rot});
}

namespace {

long sign_of(std::size_t h) { return RibbonGraph::is_tail(h) ? 1 : -1; }

IntVector chain_of_walk(const RibbonGraph& r, const std::vector<std::size_t>& walk)
{
    IntVector c(r.num_edges(), Integer(0));
    for (std::size_t h : walk)
        c[RibbonGraph::edge_of(h)] += sign_of(h);
    return c;
}

/*
 * Algebraic intersection of a closed walk with a cycle: push the walk off to
 * its left and count how the cycle leaves each vertex through the swept
 * corners.
 */
Integer intersect(const RibbonGraph& r, const std::vector<std::size_t>& walk, const IntVector& cycle)
{
    auto out_mult = [&](std::size_t h) {
        const Integer& c = cycle[RibbonGraph::edge_of(h)];
        return RibbonGraph::is_tail(h) ? c : Integer(-c);
    };
    Integer total = 0;
    const std::size_t n = walk.size();
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t in = RibbonGraph::flip(walk[(i + n - 1) % n]);
        std::size_t out = walk[i];
        for (std::size_t h = r.next(out); h != in; h = r.next(h)) {
            if (h == out)
                break;
            total += out_mult(h);
        }
    }
    return total;
}

struct SpanningTree {
    std::vector<std::size_t> parent_half; // half-edge at v on the tree edge to its parent
    std::vector<std::size_t> depth;
    std::vector<bool> tree_edge;
};

SpanningTree bfs_tree(const RibbonGraph& r)
{
    const std::size_t none = static_cast<std::size_t>(-1);
    SpanningTree t{std::vector<std::size_t>(r.num_vertices(), none), std::vector<std::size_t>(r.num_vertices(), 0),
                   std::vector<bool>(r.num_edges(), false)};
    std::vector<bool> seen(r.num_vertices(), false);
    std::queue<std::size_t> todo;
    todo.push(0);
    seen[0] = true;
    while (!todo.empty()) {
        std::size_t v = todo.front();
        todo.pop();
        for (std::size_t h : r.rotation()[v]) {
            std::size_t w = r.vertex_of(RibbonGraph::flip(h));
            if (seen[w])
                continue;
            seen[w] = true;
            t.parent_half[w] = RibbonGraph::flip(h);
            t.depth[w] = t.depth[v] + 1;
            t.tree_edge[RibbonGraph::edge_of(h)] = true;
            todo.push(w);
        }
    }
    return t;
}

/* Outgoing half-edges of the tree path from w to u. */
std::vector<std::size_t> tree_path(const RibbonGraph& r, const SpanningTree& t, std::size_t w, std::size_t u)
{
    std::vector<std::size_t> up_w, up_u;
    while (w != u) {
        if (t.depth[w] >= t.depth[u]) {
            up_w.push_back(t.parent_half[w]);
            w = r.vertex_of(RibbonGraph::flip(t.parent_half[w]));
        } else {
            up_u.push_back(t.parent_half[u]);
            u = r.vertex_of(RibbonGraph::flip(t.parent_half[u]));
        }
    }
    std::vector<std::size_t> path = up_w;
    for (auto it = up_u.rbegin(); it != up_u.rend(); ++it)
        path.push_back(RibbonGraph::flip(*it));
    return path;
}

} // namespace

SurfaceHomology::SurfaceHomology(const RibbonGraph& graph) : graph_(graph)
{
    if (!graph_.is_connected())
        throw DomainError("homology: ribbon graph is not connected");
    const std::size_t ne = graph_.num_edges();
    SpanningTree tree = bfs_tree(graph_);

    std::vector<std::size_t> cotree;
    std::vector<std::vector<std::size_t>> walks;
    for (std::size_t e = 0; e < ne; ++e) {
        if (tree.tree_edge[e])
            continue;
        std::vector<std::size_t> walk{2 * e};
        auto back = tree_path(graph_, tree, graph_.head_vertex(e), graph_.tail_vertex(e));
        walk.insert(walk.end(), back.begin(), back.end());
        cotree.push_back(e);
        walks.push_back(std::move(walk));
    }
    const std::size_t c = cotree.size();
    IntMatrix cycles(ne, c);
    for (std::size_t k = 0; k < c; ++k)
        cycles.set_column(k, chain_of_walk(graph_, walks[k]));

    auto faces = graph_.faces();
    IntMatrix boundaries(c, faces.size());
    std::vector<IntVector> face_chains;
    for (std::size_t f = 0; f < faces.size(); ++f) {
        IntVector chain = chain_of_walk(graph_, faces[f]);
        for (std::size_t k = 0; k < c; ++k)
            boundaries(k, f) = chain[cotree[k]];
        face_chains.push_back(std::move(chain));
    }

    SmithForm snf = smith_normal_form(boundaries);
    const std::size_t r = snf.rank();
    for (std::size_t i = 0; i < r; ++i)
        if (snf.D(i, i) != 1)
            throw InvariantError("homology: face relations have torsion");
    const std::size_t n = c - r;
    IntMatrix u_inv = unimodular_inverse(snf.U);
    IntMatrix lifts = u_inv.columns(r, n);
    class_to_chain_ = cycles * lifts;
    IntMatrix select(c, ne);
    for (std::size_t k = 0; k < c; ++k)
        select(k, cotree[k]) = 1;
    chain_to_class_ = snf.U.row_block(r, n) * select;

    IntMatrix ic(c, c);
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = 0; j < c; ++j)
            ic(i, j) = intersect(graph_, walks[i], cycles.column(j));
    for (std::size_t i = 0; i < c; ++i)
        for (const auto& fc : face_chains)
            if (intersect(graph_, walks[i], fc) != 0)
                throw InvariantError("homology: intersection does not vanish on face boundaries");
    form_ = lifts.transpose() * ic * lifts;
    if (form_.transpose() != -form_)
        throw InvariantError("homology: intersection form is not alternating");
    polarized_ = PolarizedLattice(Lattice::standard(n), to_rational(form_));
    if (!polarization_type(polarized_).is_principal())
        throw InvariantError("homology: intersection form is not unimodular");
}

IntVector SurfaceHomology::class_of(const IntVector& cycle) const
{
    if (cycle.size() != graph_.num_edges())
        throw DomainError("class_of: chain has the wrong length");
    IntVector boundary(graph_.num_vertices(), Integer(0));
    for (std::size_t e = 0; e < cycle.size(); ++e) {
        boundary[graph_.head_vertex(e)] += cycle[e];
        boundary[graph_.tail_vertex(e)] -= cycle[e];
    }
    for (const auto& b : boundary)
        if (b != 0)
            throw DomainError("class_of: chain is not a cycle");
    return chain_to_class_ * cycle;
}

IntVector SurfaceHomology::chain_of(const IntVector& cls) const
{
    return class_to_chain_ * cls;
}

PolarizedLattice homology_with_form(const RibbonGraph& graph)
{
    return SurfaceHomology(graph).polarized();
}

VoltageAssignment standard_voltage(std::size_t g, long m)
{
    VoltageAssignment v{m, std::vector<long>(2 * g, 0)};
    if (g > 0)
        v.values[0] = 1 % m;
    return v;
}

namespace {

long mod(long a, long m) { return ((a % m) + m) % m; }

} // namespace

RibbonGraph derived_graph(const RibbonGraph& base, const VoltageAssignment& v)
{
    const long m = v.m;
    const std::size_t um = static_cast<std::size_t>(m);
    std::vector<std::vector<std::size_t>> rot(base.num_vertices() * um);
    for (std::size_t x = 0; x < base.num_vertices(); ++x)
        for (std::size_t s = 0; s < um; ++s) {
            auto& r = rot[x * um + s];
            for (std::size_t h : base.rotation()[x]) {
                std::size_t e = RibbonGraph::edge_of(h);
                if (RibbonGraph::is_tail(h)) {
                    r.push_back(2 * (e * um + s));
                } else {
                    std::size_t from = static_cast<std::size_t>(mod(static_cast<long>(s) - v.values[e], m));
                    r.push_back(2 * (e * um + from) + 1);
                }
            }
        }
    return RibbonGraph(base.num_edges() * um, std::move(rot));
}

namespace {

void certify(bool ok, const std::string& identity)
{
    if (!ok)
        throw CertificationError(identity, "cover certification failed: " + identity);
}

IntVector unit(std::size_t n, std::size_t i)
{
    IntVector v(n, Integer(0));
    v[i] = 1;
    return v;
}

IntMatrix power(const IntMatrix& a, long k)
{
    IntMatrix r = IntMatrix::identity(a.rows());
    for (long i = 0; i < k; ++i)
        r = r * a;
    return r;
}

} // namespace

CoverHomology cyclic_cover(const RibbonGraph& base, const VoltageAssignment& v)
{
    const long m = v.m;
    if (m < 1)
        throw DomainError("cyclic cover: m must be positive");
    if (v.values.size() != base.num_edges())
        throw DomainError("cyclic cover: one voltage per edge is required");
    long g = m;
    for (long x : v.values)
        g = std::gcd(g, mod(x, m));
    if (g != 1)
        throw CoverError("voltages do not generate Z/" + std::to_string(m) + "; the cover is disconnected");

    VoltageAssignment norm{m, {}};
    for (long x : v.values)
        norm.values.push_back(mod(x, m));
    RibbonGraph total = derived_graph(base, norm);
    if (!total.is_connected())
        throw CoverError("derived graph is disconnected");

    SurfaceHomology hb(base), ht(total);
    const std::size_t nb = hb.rank(), nt = ht.rank();
    const std::size_t um = static_cast<std::size_t>(m);

    IntMatrix sigma(nt, nt), push(nb, nt), pull(nt, nb);
    for (std::size_t i = 0; i < nt; ++i) {
        IntVector chain = ht.chain_of(unit(nt, i));
        IntVector shifted(chain.size()), down(base.num_edges(), Integer(0));
        for (std::size_t k = 0; k < chain.size(); ++k) {
            std::size_t e = k / um, s = k % um;
            shifted[e * um + (s + 1) % um] = chain[k];
            down[e] += chain[k];
        }
        sigma.set_column(i, ht.class_of(shifted));
        push.set_column(i, hb.class_of(down));
    }
    for (std::size_t j = 0; j < nb; ++j) {
        IntVector chain = hb.chain_of(unit(nb, j));
        IntVector lifted(total.num_edges(), Integer(0));
        for (std::size_t e = 0; e < chain.size(); ++e)
            for (std::size_t s = 0; s < um; ++s)
                lifted[e * um + s] = chain[e];
        pull.set_column(j, ht.class_of(lifted));
    }

    const Lattice& lb = hb.polarized().lattice();
    const Lattice& lt = ht.polarized().lattice();
    CoverHomology cov{m,
                      base,
                      norm,
                      total,
                      hb,
                      ht,
                      LatticeMap(to_rational(sigma), lt, lt),
                      LatticeMap(to_rational(push), lt, lb),
                      LatticeMap(to_rational(pull), lb, lt)};

    const IntMatrix& eb = hb.intersection_form();
    const IntMatrix& et = ht.intersection_form();
    std::size_t gb = nb / 2;
    certify(gb == 0 || total.genus() == static_cast<std::size_t>(m) * (gb - 1) + 1, "genus g' = mg - m + 1");
    certify(nt == 2 * total.genus(), "rank of H_1 equals twice the genus");
    certify(sigma.transpose() * et * sigma == et, "sigma preserves the intersection form");
    certify(power(sigma, m) == IntMatrix::identity(nt), "sigma^m = id");
    // on a genus-1 base the deck group acts by translation, trivially on H_1
    certify(m == 1 || gb < 2 || sigma != IntMatrix::identity(nt), "sigma != id");
    certify(push * pull == Integer(m) * IntMatrix::identity(nb), "pi_* pi^* = m");
    IntMatrix orbit_sum(nt, nt);
    for (long i = 0; i < m; ++i)
        orbit_sum = orbit_sum + power(sigma, i);
    certify(pull * push == orbit_sum, "pi^* pi_* = sum of sigma^i");
    certify(pull.transpose() * et == eb * push, "transfer is adjoint to the norm");
    return cov;
}

CoverHomology standard_cover(std::size_t g, long m)
{
    return cyclic_cover(surface_ribbon(g), standard_voltage(g, m));
}

long voltage_of_class(const CoverHomology& cov, const IntVector& base_class)
{
    IntVector chain = cov.base_homology.chain_of(base_class);
    Integer s = 0;
    for (std::size_t e = 0; e < chain.size(); ++e)
        s += chain[e] * cov.voltage.values[e];
    Integer r;
    Integer mm(cov.m);
    mpz_fdiv_r(r.get_mpz_t(), s.get_mpz_t(), mm.get_mpz_t());
    return r.get_si();
}

PrymSublattices prym_sublattice(const CoverHomology& cov)
{
    const Lattice& lt = cov.total().lattice();
    return {kernel_lattice(cov.pushforward.matrix(), lt), saturate(cov.transfer.matrix(), lt)};
}

namespace {

/* A base class whose voltage is target mod m (extended Euclid over the basis voltages). */
IntVector class_with_voltage(const CoverHomology& cov, long target)
{
    const std::size_t n = cov.base().rank();
    const long m = cov.m;
    // invariant: voltage(gcoeffs) = g (mod m)
    IntVector coeffs(n, Integer(0));
    long g = m;
    IntVector gcoeffs(n, Integer(0));
    for (std::size_t i = 0; i < n; ++i) {
        long vi = voltage_of_class(cov, unit(n, i));
        if (vi == 0)
            continue;
        // combine (g, gcoeffs) with (vi, e_i)
        long a = g, b = vi;
        long x0 = 1, x1 = 0, y0 = 0, y1 = 1;
        while (b != 0) {
            long q = a / b;
            long t = a - q * b;
            a = b;
            b = t;
            t = x0 - q * x1;
            x0 = x1;
            x1 = t;
            t = y0 - q * y1;
            y0 = y1;
            y1 = t;
        }
        // a = x0 g + y0 vi
        IntVector next(n, Integer(0));
        for (std::size_t k = 0; k < n; ++k)
            next[k] = gcoeffs[k] * x0;
        next[i] += y0;
        gcoeffs = next;
        g = a;
    }
    if (g != 1)
        throw CoverError("voltage homomorphism is not surjective");
    for (std::size_t k = 0; k < n; ++k) {
        Integer c = gcoeffs[k] * target;
        Integer mm(m);
        mpz_fdiv_r(coeffs[k].get_mpz_t(), c.get_mpz_t(), mm.get_mpz_t());
    }
    return coeffs;
}

RatVector to_rat(const IntVector& v)
{
    return RatVector(v.begin(), v.end());
}

RatVector scale(const RatVector& v, const Rational& s)
{
    RatVector r = v;
    for (auto& x : r)
        x *= s;
    return r;
}

} // namespace

long ComponentGroup::component_index(const CoverHomology& cov, const RatVector& x) const
{
    RatVector y = cov.pushforward.matrix() * x;
    if (!is_integral(y))
        throw DomainError("component_index: point is not in the kernel of the norm");
    IntVector yi;
    for (const auto& q : y)
        yi.push_back(q.get_num());
    return mod(-voltage_of_class(cov, yi), cov.m);
}

ComponentGroup norm_component_group(const CoverHomology& cov)
{
    const Lattice& lb = cov.base().lattice();
    FiniteQuotient group(image_lattice(cov.pushforward.matrix(), cov.total().lattice()), lb);
    if (group.order() != cov.m)
        throw CertificationError("|pi_0(ker Nm)| = m", "component group has order " + group.order().get_str());
    // x - σ(x) projects to a loop of voltage -1, so P_1 sits over voltage -1.
    IntVector gamma = class_with_voltage(cov, mod(-1, cov.m));
    RatVector p1 = scale(cov.transfer.matrix() * to_rat(gamma), make_rational(1, cov.m));
    return {std::move(group), std::move(p1)};
}

QuotientElement eta_class(const CoverHomology& cov)
{
    if (cov.m < 2)
        throw DomainError("eta_class: m must be at least 2");
    const Lattice& lb = cov.base().lattice();
    auto q = std::make_shared<const FiniteQuotient>(lb, preimage_injective(cov.transfer.matrix(), cov.total().lattice()));
    if (q->invariants() != IntVector{Integer(cov.m)})
        throw CertificationError("ker pi^* cyclic of order m", "kernel of the transfer is not cyclic of order m");
    return QuotientElement(q, q->generators().column(0));
}

KerMuData ker_mu_basis(const CoverHomology& cov)
{
    if (cov.m < 2)
        throw DomainError("ker_mu_basis: m must be at least 2");
    PrymSublattices subs = prym_sublattice(cov);
    PolarizedLattice b(subs.sub_B, cov.total().form());
    PairedQuotient km = ker_mu(b, cov.m);
    auto group = std::make_shared<const FiniteQuotient>(km.group);
    QuotientElement eta = eta_class(cov);
    RatVector eta_lift = eta.representative();
    RatVector xi = scale(cov.transfer.matrix() * eta_lift, make_rational(1, cov.m));
    ComponentGroup comp = norm_component_group(cov);
    QuotientElement xi_bar(group, xi), p1(group, comp.p1);

    IntVector expected{Integer(cov.m), Integer(cov.m)};
    if (group->invariants() != expected)
        throw CertificationError("ker mu_B = (Z/m)^2", "ker mu_B is not (Z/m)^2");
    if (group->subgroup({xi, comp.p1}) != *group || xi_bar.order() != cov.m || p1.order() != cov.m)
        throw CertificationError("xi_bar and P_1 generate ker mu_B", "xi_bar and P_1 do not generate ker mu_B");
    return {std::move(b), std::move(km), group, std::move(xi_bar), std::move(p1), std::move(eta_lift)};
}

namespace {

bool is_prime(long m)
{
    if (m < 2)
        return false;
    for (long d = 2; d * d <= m; ++d)
        if (m % d == 0)
            return false;
    return true;
}

RatVector combination(const KerMuData& d, long a, long b)
{
    RatVector r = scale(d.xi_bar.representative(), Rational(a));
    RatVector p = scale(d.p1.representative(), Rational(b));
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] += p[i];
    return r;
}

} // namespace

std::vector<LabeledSubgroup> classify_mti_K(const CoverHomology& cov)
{
    KerMuData d = ker_mu_basis(cov);
    const long m = cov.m;
    std::vector<LabeledSubgroup> out;
    for (long a = 0; a < m; ++a)
        for (long b = 0; b < m; ++b) {
            if (std::gcd(std::gcd(a, b), m) != 1)
                continue;
            FiniteQuotient k = d.group->subgroup({combination(d, a, b)});
            bool seen = std::any_of(out.begin(), out.end(), [&](const LabeledSubgroup& s) { return s.K == k; });
            if (seen)
                continue;
            if (!is_maximal_isotropic(k, *d.group, d.ker_mu.pairing))
                throw CertificationError("K maximal isotropic", "<" + std::to_string(a) + " xi + " +
                                                                    std::to_string(b) + " P_1> is not maximal isotropic");
            out.push_back({a, b, std::move(k)});
        }
    if (is_prime(m)) {
        auto all = enumerate_mti(*d.group, d.ker_mu.pairing);
        bool same = all.size() == out.size();
        for (const auto& s : out)
            same = same && std::find(all.begin(), all.end(), s.K) != all.end();
        if (!same)
            throw CertificationError("classification matches enumeration",
                                     "labeled subgroups differ from the enumerated maximal isotropic subgroups");
    }
    return out;
}

bool birational_predicate(const FiniteQuotient& K, const QuotientElement& p1)
{
    long m = p1.order().get_si();
    for (long l = 1; l < m; ++l)
        if (K.contains(p1.scaled(Integer(l)).representative()))
            return false;
    return true;
}

KernelIdentification kernel_identification(const CoverHomology& cov, const FiniteQuotient& K)
{
    KerMuData d = ker_mu_basis(cov);
    if (K.lower() != d.group->lower())
        throw DomainError("kernel identification: K is not a subgroup of ker mu_B");
    const Lattice& lb = cov.base().lattice();
    const Rational inv_m = make_rational(1, cov.m);
    KernelIdentification r;
    r.composite_kernel = preimage_injective(cov.transfer.matrix(), K.upper());
    r.norm_preimage = (lb + image_lattice(cov.pushforward.matrix(), K.upper())).scaled(inv_m);
    bool birational = birational_predicate(K, d.p1);
    FiniteQuotient xi_subgroup = d.group->subgroup({d.xi_bar.representative()});
    if ((is_prime(cov.m) && birational) || K == xi_subgroup)
        r.eta_preimage = lb.with_vector(d.eta_lift).scaled(inv_m);
    r.composite_order = index(lb, r.composite_kernel);
    r.norm_preimage_order = index(lb, r.norm_preimage);
    r.agrees = r.composite_kernel == r.norm_preimage && (!r.eta_preimage || *r.eta_preimage == r.norm_preimage);
    return r;
}

bool verify_kernel_identification(const CoverHomology& cov, const FiniteQuotient& K)
{
    return kernel_identification(cov, K).agrees;
}

} // namespace ppav
