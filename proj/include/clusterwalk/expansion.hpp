#pragma once

#include "clusterwalk/laurent.hpp"
#include "clusterwalk/surface.hpp"
#include "clusterwalk/triangulation.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace clusterwalk {

struct WalkStep {
    bool positive = true;
    bool is_boundary = false;
    int arc_index = -1;                        // 0-based into the triangulation
    BoundarySide bside = BoundarySide::Outer;  // for boundary steps
    int bindex = 0;
    std::int64_t translate = 0;  // cover-translate tag of the lift used
};

/// Sign-decorated edge sequence. Arc walks have odd length and start and
/// end with a positive step; loop walks have even length and alternate
/// starting from a negative bridging step.
struct ColouredWalk {
    std::vector<WalkStep> steps;
};

/// Paper-style inline notation: 1-based arc indices, "i"/"o" for boundary
/// segments, e.g. "1+ 3- o+".
std::string walk_to_string(const ColouredWalk& w);

/// Laurent monomial contributed by a walk: positive steps multiply,
/// negative steps divide, boundary segments contribute 1.
LaurentPoly walk_monomial(const Triangulation& t, const ColouredWalk& w);

/// All coloured walks for a non-loop curve on the triangulation, computed
/// in the universal cover. Self-crossing curves are handled uniformly.
std::vector<ColouredWalk> enumerate_arc_walks(const Triangulation& t, const Curve& g);

/// All coloured m-walks: closed alternating walks in the m-fold cover,
/// homotopic to its meridian, negative steps on bridging arcs in strictly
/// increasing meridian order, counted once per rotation orbit.
std::vector<ColouredWalk> enumerate_loop_walks(const Triangulation& t, int m);

/// Laurent expansion of a non-loop curve in the cluster of t.
LaurentPoly expand_curve(const Triangulation& t, const Curve& g);

/// Laurent expansion of the loop z_m in the cluster of t.
LaurentPoly expand_loop(const Triangulation& t, int m);

/// The difference expansion x_{M_m} - x_{N_m} along a boundary component
/// with at least two marked points; equals expand_loop(t, m).
LaurentPoly expand_loop_difference(const Triangulation& t, int m);

/// Ring homomorphism from the 3-arc triangulation of the (2,1) annulus
/// (two bridging arcs plus the inner near-loop) onto the Kronecker
/// cluster: the near-loop variable is sent to 1.
LaurentPoly specialize_from_c21(const Triangulation& t_src, const LaurentPoly& poly);

/// Normalised Chebyshev polynomial of the first kind:
/// F_0 = 2, F_1 = z, F_{m+1} = z F_m - F_{m-1}.
struct ChebyshevPoly {
    int m = 0;
    std::vector<Int> coeffs;  // coeffs[i] multiplies z^i
};

ChebyshevPoly chebyshev(int m);
LaurentPoly chebyshev_eval(int m, const LaurentPoly& v);

/// Independent oracle: expands g in t's cluster by flipping towards a
/// triangulation containing g and propagating exchange relations back.
/// Throws std::runtime_error when the search bound is exceeded and
/// InexactDivisionError if an exchange step fails (a correctness alarm).
LaurentPoly mutation_expand_oracle(const Triangulation& t, const Curve& g,
                                   int max_nodes = 20000);

/// Same search run once for a whole target family; results are keyed by
/// Curve::to_string().
std::map<std::string, LaurentPoly> oracle_expand_many(const Triangulation& t,
                                                      const std::vector<Curve>& targets,
                                                      int max_nodes = 50000);

}  // namespace clusterwalk
