#pragma once

#include "clusterwalk/expansion.hpp"
#include "clusterwalk/laurent.hpp"
#include "clusterwalk/surface.hpp"
#include "clusterwalk/triangulation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace clusterwalk {

/// Multiset of pairwise compatible arcs plus at most one loop. A loop is
/// never combined with bridging arcs.
struct Collection {
    MarkedSurface surface;
    std::vector<Curve> arcs;  // kept sorted; repetitions allowed
    int loop_m = 0;           // 0 = no loop, otherwise the loop z_m

    static Collection empty(const MarkedSurface& s) { return Collection{s, {}, 0}; }
    bool has_loop() const { return loop_m > 0; }
    int size() const { return static_cast<int>(arcs.size()) + (has_loop() ? 1 : 0); }

    bool operator==(const Collection& o) const {
        return surface == o.surface && arcs == o.arcs && loop_m == o.loop_m;
    }
    bool operator<(const Collection& o) const;

    std::string to_string() const;  // "{}" or "{c 1-3, c 1-4}" or "{p inner:1+2, z2}"
    static Collection parse(const MarkedSurface& s, const std::string& spec);
};

ValidationReport validate_collection(const Collection& c);

/// Total crossing weight against the standard triangulation (fan or
/// zig-zag), plus m for a loop z_m.
long collection_weight(const Collection& c);

/// All valid collections with weight <= max_weight and at most max_size
/// members, in a deterministic order starting from the empty collection.
std::vector<Collection> enumerate_collections(const MarkedSurface& s, long max_weight,
                                              int max_size, bool allow_loops);

/// Product of the member expansions in the cluster of t.
LaurentPoly expand_collection(const Triangulation& t, const Collection& c);

struct Decomposition {
    std::vector<std::pair<Collection, Int>> coefficients;  // nonzero entries
    LaurentPoly residual;                                  // zero on success

    Int coefficient(const Collection& c) const;
    bool exact() const { return residual.is_zero(); }
};

/// Exact integer coordinates of y in the candidate expansions. The
/// candidates must be linearly independent (they are whenever they are
/// distinct collections). A y outside the integer span either yields a
/// nonzero residual or, when the rational solution is fractional, throws
/// std::runtime_error.
Decomposition decompose(const LaurentPoly& y, const Triangulation& t,
                        const std::vector<Collection>& candidates);

/// Candidate set for decomposing y over the cluster of t: weight bounded
/// by the largest denominator component plus loop slack, size bounded by
/// the largest positive degree plus the same slack, pruned to candidates
/// whose expansion stays inside y's exponent envelope.
std::vector<Collection> default_candidates(const LaurentPoly& y, const Triangulation& t);

struct Report {
    std::string suite;
    std::string surface;
    std::string parameters;
    long total = 0;
    long passed = 0;
    std::vector<std::string> failures;

    bool ok() const { return passed == total; }
    void check(bool cond, const std::string& what);
};

/// Subtraction-freeness of every collection expansion over a family of
/// clusters: all triangulations for polygons, a flip ball plus wrapping
/// triangulations for annuli.
Report verify_positive_basis(const MarkedSurface& s, int cluster_radius, int wrap_range,
                             long weight_bound, int size_bound, int loop_bound);

/// Witness check for atomicity: a compatible triangulation (or a wrapping
/// triangulation with adaptively grown r) in which gamma's distinguished
/// monomial appears in x_gamma with coefficient one and in no other
/// candidate expansion.
Report verify_atomicity_witness(const MarkedSurface& s, const Collection& gamma,
                                const std::vector<Collection>& candidates, int r_bound = 3);

struct ExchangeGraph {
    std::vector<Triangulation> vertices;
    std::vector<std::pair<int, int>> edges;  // i < j
};

/// Flip graph: full for polygons, radius ball around the standard
/// triangulation for annuli.
ExchangeGraph exchange_graph(const MarkedSurface& s, int radius);

}  // namespace clusterwalk
