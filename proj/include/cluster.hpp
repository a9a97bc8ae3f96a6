#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "arrangement.hpp"
#include "cones.hpp"

/**
 * Seeds, Laurent expressions, and transport of the superpotential.
 *
 * The faces of an arrangement form a seed: its exchange matrix counts quiver
 * arrows, bounded faces are mutable, unbounded ones frozen.  A braid move of
 * the word acts on Laurent expressions as a mutation at the changing face
 * followed by the face-relabelling; the same mutation formulas drive the
 * pullback used to express a frozen face's theta function in the starting
 * coordinates.
 */
namespace cluster {

/** A seed: face labels with frozen flags and the antisymmetric exchange matrix. */
struct Seed {
    std::vector<arrangement::FaceId> vertices;  ///< canonical face order
    std::vector<char> frozen;
    /** eps[i][k] = arrows i -> k minus arrows k -> i. */
    std::vector<std::vector<long long>> eps;

    int dim() const { return static_cast<int>(vertices.size()); }
};

/** The seed of an arrangement, read off its quiver. */
Seed seed_of(const arrangement::Arrangement& arr);

/** Matrix mutation at a mutable vertex (frozen-frozen entries stay zero). */
Seed mutate_seed(const Seed& seed, int k);

/** An integer Laurent polynomial over named exponent coordinates. */
struct LaurentExpr {
    std::vector<std::string> basis;                 ///< coordinate labels, e.g. "e(1,3)", "e2"
    std::map<polyhedra::IVec, long long> terms;     ///< exponent vector -> nonzero coefficient

    bool operator==(const LaurentExpr&) const = default;
    std::size_t size() const { return terms.size(); }
    std::string str() const;  ///< "z^{-e(1,2)} + z^{-e1}" style rendering
};

/** A single term c * z^exponent. */
LaurentExpr monomial(std::vector<std::string> basis, polyhedra::IVec exponent, long long coeff = 1);

LaurentExpr add(const LaurentExpr& a, const LaurentExpr& b);
LaurentExpr mul(const LaurentExpr& a, const LaurentExpr& b);

/**
 * Rewrite an expression over a permuted/renamed coordinate list.  Every label
 * carrying a nonzero exponent must survive the renaming into the new basis.
 */
LaurentExpr reindex(const LaurentExpr& e, const std::vector<std::string>& new_basis,
                    const std::map<std::string, std::string>& rename = {});

/**
 * Multiply each term c z^m by (1 + z^{u_k})^{delta(m)} where u_k is the k-th
 * unit exponent.  Negative powers run through an exact division; a nonzero
 * remainder (the result not being a Laurent polynomial) throws.
 */
LaurentExpr binomial_twist(const LaurentExpr& e, int k,
                           const std::function<long long(const polyhedra::IVec&)>& delta);

/**
 * Pull a Laurent expression written in the coordinates of mutate_seed(seed, k)
 * back to the coordinates of `seed` along the mutation's birational map.
 */
LaurentExpr pullback(const LaurentExpr& e, const Seed& seed_before, int k);

/**
 * Transport an expression forward across the braid move at a mutable face:
 * the inverse of pullback, followed by the face-label cycle onto the new
 * arrangement's coordinates.
 */
LaurentExpr transport_braid(const LaurentExpr& e, const arrangement::Arrangement& arr,
                            const arrangement::FaceId& face);

/**
 * The same transport through the per-term shortcut table, which inspects each
 * term only at the mutating face and its quiver neighbours.  Throws when a
 * term falls outside the table.
 */
LaurentExpr transport_braid_cases(const LaurentExpr& e, const arrangement::Arrangement& arr,
                                  const arrangement::FaceId& face);

/**
 * The superpotential on the staircase word of rank n: for each level i, one
 * chain of terms walking the level-i faces from the right edge inward and one
 * chain starting at the band face; n(n+1) terms in total.
 */
LaurentExpr superpotential_initial(int n);

/**
 * The superpotential on any reduced word of the longest element, obtained by
 * transporting the staircase expression along a word-graph path (commutations
 * reindex, braid moves mutate).
 */
LaurentExpr superpotential_on(const words::ReducedWord& word0);

/** Drop terms supported on faces absent from the prefix arrangement; reindex. */
LaurentExpr restrict_potential(const LaurentExpr& big, const arrangement::Arrangement& arr0,
                               const arrangement::Arrangement& arr_w);

/** One inequality row per term: the exponent vectors over the given space. */
cones::HCone tropicalize(const LaurentExpr& e, const cones::CoordSpace& space);

/** A mutation sequence reaching a seed optimized for one frozen vertex. */
struct OptimizedSeed {
    Seed seed;                   ///< the optimized seed
    std::vector<int> mutations;  ///< vertex indices mutated, in order
};

/**
 * Breadth-first search over seed mutations until every exchange-matrix entry
 * in the frozen vertex's row is <= 0 (all its arrows point inward).  The
 * depth cap is SCL_DEPTH_CAP (default 12); exhaustion throws.
 */
OptimizedSeed optimized_seed_for(const Seed& start, int frozen_vertex);

/**
 * The potential assembled frozen face by frozen face: each term starts as the
 * plain coordinate function on the frozen face in its optimized seed and is
 * pulled back to the arrangement's seed.
 */
LaurentExpr ghkk_potential(const arrangement::Arrangement& arr);

}  // namespace cluster
