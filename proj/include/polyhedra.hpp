#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

/**
 * Exact rational half-space kernel.
 *
 * Everything here is arbitrary-precision: no floating point is used anywhere.
 * Cones and polytopes are handled in H-representation only; the two engines
 * (Fourier-Motzkin elimination and a two-phase exact simplex) certify every
 * implication either with nonnegative multipliers or with a separating point.
 */
namespace polyhedra {

using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using IVec = std::vector<long long>;
using QVec = std::vector<Rational>;

/** floor/ceil of an exact rational as an arbitrary-precision integer. */
Int floor_rat(const Rational& r);
Int ceil_rat(const Rational& r);

/**
 * A finite system of half-spaces and affine equations:
 * inequalities <a, x> >= 0 (homogeneous) and equalities <b, x> = c.
 */
struct HSystem {
    int dim = 0;

    std::vector<QVec> ineqs;                     ///< rows a with a.x >= 0
    std::vector<std::pair<QVec, Rational>> eqs;  ///< rows (b, c) with b.x = c

    explicit HSystem(int dimension = 0) : dim(dimension) {}

    void add_ineq(QVec a);
    void add_eq(QVec b, Rational c);
};

/** Build a homogeneous system from integer normal vectors (one row each). */
HSystem system_from_rows(int dim, const std::vector<IVec>& rows);

/** Divide an integer vector by the gcd of its entries (orientation kept). */
IVec primitive(IVec v);

/** gcd-reduce every row, drop zero rows and duplicates, sort lexicographically. */
std::vector<IVec> canonical_rows(std::vector<IVec> rows);

/** Outcome of a linear program min c.x subject to A x >= b (free variables). */
struct LpResult {
    enum class Status { optimal, infeasible, unbounded };
    Status status = Status::infeasible;
    Rational value;
    QVec x;  ///< optimal point when status == optimal
};

/** Exact two-phase simplex (Bland's rule, cycle-free) on min c.x, A x >= b. */
LpResult lp_minimize(const std::vector<QVec>& a, const QVec& b, const QVec& c);

/**
 * Decide whether `target` is a nonnegative combination of `rows`; on success
 * returns the multipliers (a Farkas certificate), otherwise nothing.
 */
std::optional<QVec> conic_combination(const std::vector<QVec>& rows, const QVec& target);

/** Certificate-carrying answer to "does the system imply target.x >= 0 ?". */
struct ImplicationResult {
    bool implied = false;
    QVec multipliers;  ///< over sys.ineqs; reproduces target exactly when implied
    QVec separating;   ///< point with sys rows >= 0 and target.x < 0 otherwise
};

/**
 * Farkas implication for homogeneous systems (eqs must be empty).
 *
 * Dimension <= 12 runs through provenance-tracked Fourier-Motzkin elimination;
 * larger systems use the exact simplex.  Both produce certificates.
 */
ImplicationResult implies(const HSystem& sys, const QVec& target);

/** Same decision through the simplex engine regardless of dimension. */
ImplicationResult implies_simplex(const HSystem& sys, const QVec& target);

/** Mutual row implication of two homogeneous systems over one space. */
struct ConesEqualResult {
    bool equal = false;
    bool witness_in_a = false;  ///< true: witness satisfies A but not B
    int failing_row = -1;       ///< row index in the other system
    QVec witness;               ///< separating rational point (empty when equal)
};
ConesEqualResult cones_equal(const HSystem& a, const HSystem& b);

/** One-sided version: every row of `outer` is implied by `inner` (inner subset of outer). */
ImplicationResult contains(const HSystem& inner, const std::vector<QVec>& outer_rows, int* failing = nullptr);

/** Membership of a rational point (all inequalities and equalities). */
bool accepts(const HSystem& sys, const QVec& point);

/**
 * All integer points of a bounded region.
 *
 * A Fourier-Motzkin ladder (eliminating the last coordinate first) provides
 * exact per-prefix bounds; missing bound directions on a nonempty region
 * raise std::domain_error — unboundedness is never silently truncated.
 */
std::vector<std::vector<Int>> lattice_points(const HSystem& sys);

/** Exact min/max of a coordinate over the region, via the simplex. */
struct CoordinateBounds {
    bool bounded_below = false, bounded_above = false;
    Rational lo, hi;
};
CoordinateBounds coordinate_bounds(const HSystem& sys, int coordinate);

/** Fraction-free Bareiss determinant of a square integer matrix. */
Int determinant(const std::vector<IVec>& m);

/** Square, integer, and determinant +-1. */
bool is_unimodular(const std::vector<IVec>& m);

}  // namespace polyhedra
