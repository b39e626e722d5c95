#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ppav/pollat.hpp"

namespace ppav {

/*
 * Ribbon (fat) graph. Edge e has half-edges 2e (tail) and 2e+1 (head);
 * rotation[v] lists the half-edges at v in counter-clockwise order.
 * Faces are the orbits of h -> next(flip(h)).
 */
class RibbonGraph {
public:
    RibbonGraph() = default;
    RibbonGraph(std::size_t edges, std::vector<std::vector<std::size_t>> rotation);

    std::size_t num_vertices() const { return rotation_.size(); }
    std::size_t num_edges() const { return edges_; }
    std::size_t num_half_edges() const { return 2 * edges_; }
    const std::vector<std::vector<std::size_t>>& rotation() const { return rotation_; }

    static std::size_t flip(std::size_t h) { return h ^ 1U; }
    static std::size_t edge_of(std::size_t h) { return h / 2; }
    static bool is_tail(std::size_t h) { return h % 2 == 0; }

    std::size_t vertex_of(std::size_t h) const { return vertex_[h]; }
    std::size_t next(std::size_t h) const { return next_[h]; }
    std::size_t tail_vertex(std::size_t e) const { return vertex_[2 * e]; }
    std::size_t head_vertex(std::size_t e) const { return vertex_[2 * e + 1]; }

    std::vector<std::vector<std::size_t>> faces() const;
    long euler_characteristic() const;
    /* Genus of the closed surface; requires a connected graph. */
    std::size_t genus() const;
    bool is_connected() const;

    friend bool operator==(const RibbonGraph& a, const RibbonGraph& b) { return a.rotation_ == b.rotation_; }

private:
    std::size_t edges_ = 0;
    std::vector<std::vector<std::size_t>> rotation_;
    std::vector<std::size_t> vertex_;
    std::vector<std::size_t> next_;
};

/* One vertex, loops a_1, b_1, ..., a_g, b_g (edges 2i, 2i+1), one face. */
RibbonGraph surface_ribbon(std::size_t g);

/*
 * H_1 of the surface of a ribbon graph in a fixed basis, with the
 * intersection form. Classes are integer vectors; chains are integer vectors
 * indexed by edges.
 */
class SurfaceHomology {
public:
    explicit SurfaceHomology(const RibbonGraph& graph);

    const RibbonGraph& graph() const { return graph_; }
    std::size_t rank() const { return class_to_chain_.cols(); }
    const PolarizedLattice& polarized() const { return polarized_; }
    const IntMatrix& intersection_form() const { return form_; }

    /* Cycle representatives of the basis classes, one per column. */
    const IntMatrix& class_to_chain() const { return class_to_chain_; }
    /* Class of a cycle; the chain must have zero boundary. */
    IntVector class_of(const IntVector& cycle) const;
    IntVector chain_of(const IntVector& cls) const;

private:
    RibbonGraph graph_;
    IntMatrix class_to_chain_; // E x r
    IntMatrix chain_to_class_; // r x E, valid on cycles
    IntMatrix form_;
    PolarizedLattice polarized_{Lattice(), RatMatrix()};
};

/* Throws DomainError for a disconnected graph. */
PolarizedLattice homology_with_form(const RibbonGraph& graph);

/* Per-edge values in Z/m; traversing an edge backwards negates its value. */
struct VoltageAssignment {
    long m = 1;
    std::vector<long> values;
};

/* a_1 -> 1, everything else -> 0. */
VoltageAssignment standard_voltage(std::size_t g, long m);

/*
 * Derived graph of a voltage assignment: vertex (v, s) is v*m + s and
 * edge (e, s) is e*m + s, running from sheet s to sheet s + volt(e).
 */
RibbonGraph derived_graph(const RibbonGraph& base, const VoltageAssignment& v);

/* Homology of an m-sheeted cyclic unramified cover with deck action, norm and transfer. */
struct CoverHomology {
    long m = 1;
    RibbonGraph base_graph;
    VoltageAssignment voltage;
    RibbonGraph total_graph;
    SurfaceHomology base_homology;
    SurfaceHomology total_homology;
    LatticeMap sigma;       // deck transformation, sheet s -> s+1
    LatticeMap pushforward; // π_*
    LatticeMap transfer;    // π^*

    const PolarizedLattice& base() const { return base_homology.polarized(); }
    const PolarizedLattice& total() const { return total_homology.polarized(); }
    std::size_t base_genus() const { return base().rank() / 2; }
    std::size_t total_genus() const { return total().rank() / 2; }
};

/* Throws CoverError unless the voltages generate Z/m; certifies the cover identities. */
CoverHomology cyclic_cover(const RibbonGraph& base, const VoltageAssignment& v);
CoverHomology standard_cover(std::size_t g, long m);

/* Voltage of a base class: Σ volt(e)·chain(e) mod m, in [0, m). */
long voltage_of_class(const CoverHomology& cov, const IntVector& base_class);

struct PrymSublattices {
    Lattice sub_A; // ker π_*, saturated
    Lattice sub_B; // saturation of π^* Λ_0
};
PrymSublattices prym_sublattice(const CoverHomology& cov);

struct ComponentGroup {
    FiniteQuotient group; // Λ_0 / π_* Λ_N
    /* Index ℓ of the component P_ℓ containing x; x must satisfy π_* x ∈ Λ_0. */
    long component_index(const CoverHomology& cov, const RatVector& x) const;
    /* A representative of P_1 in the total ambient space. */
    RatVector p1;
};
ComponentGroup norm_component_group(const CoverHomology& cov);

/* ker π^* = (π^*)^{-1}(Λ_N)/Λ_0, certified cyclic of order m; its generator η. */
QuotientElement eta_class(const CoverHomology& cov);

struct KerMuData {
    PolarizedLattice B;            // (Λ_B, E)
    PairedQuotient ker_mu;         // (1/m)Λ_B / Λ_B†, pairing m·E
    std::shared_ptr<const FiniteQuotient> group;
    QuotientElement xi_bar;
    QuotientElement p1;
    RatVector eta_lift;            // η̃ in the base ambient space
};
/* ξ̃ = (1/m) π^* η̃; certifies that ξ̄ and P_1 generate ker μ_B ≅ (Z/m)^2. */
KerMuData ker_mu_basis(const CoverHomology& cov);

struct LabeledSubgroup {
    long a = 0;
    long b = 0;
    FiniteQuotient K;
};
/*
 * The subgroups <a ξ̄ + b P_1> with gcd(a, b, m) = 1, labeled by the
 * lexicographically smallest such (a, b), in label order. Each is certified
 * maximal isotropic; for prime m the list is cross-checked against
 * enumerate_mti.
 */
std::vector<LabeledSubgroup> classify_mti_K(const CoverHomology& cov);

/* ℓ P_1 ∉ K for ℓ = 1..m-1. */
bool birational_predicate(const FiniteQuotient& K, const QuotientElement& p1);

struct KernelIdentification {
    Lattice composite_kernel; // {x : π^* x ∈ Λ_X}
    Lattice norm_preimage;    // (1/m)(Λ_0 + π_* Λ_X)
    std::optional<Lattice> eta_preimage; // (1/m)(Λ_0 + Z η̃), when applicable
    Integer composite_order;
    Integer norm_preimage_order;
    bool agrees = false;
};
KernelIdentification kernel_identification(const CoverHomology& cov, const FiniteQuotient& K);
bool verify_kernel_identification(const CoverHomology& cov, const FiniteQuotient& K);

} // namespace ppav
