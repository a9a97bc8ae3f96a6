#pragma once

#include <string>
#include <utility>
#include <vector>

#include "arrangement.hpp"
#include "gp_paths.hpp"
#include "polyhedra.hpp"

/**
 * The three cone constructions attached to a reduced word, all given by
 * explicit integer inequality rows over named coordinate spaces:
 *
 *  - the path cone over crossing coordinates (one coordinate per crossing,
 *    plus one weight coordinate per level in the weighted version),
 *  - the area cone over face coordinates (one coordinate per left-bounded
 *    face, plus the band faces in the weighted version),
 *  - the linear map between the two spaces that matches them up.
 */
namespace cones {

/** A coordinate space with printable labels and pair/level keys. */
struct CoordSpace {
    enum class Kind { crossing, face };

    Kind kind = Kind::crossing;
    bool weighted = false;
    int n = 0;           ///< rank of the underlying word
    int pair_count = 0;  ///< leading coordinates carry pair keys; the rest level keys

    std::vector<std::string> labels;           ///< "c(1,2)", "w1", "e(1,3)", "e2", ...
    std::vector<std::pair<int, int>> keys;     ///< (a,b) for pairs, (l,0) for levels
    std::vector<int> levels;                   ///< crossing/face level per coordinate

    int dim() const { return static_cast<int>(labels.size()); }
    int index_of_pair(int a, int b) const;  ///< -1 when absent
    int index_of_level(int l) const;        ///< weight or band coordinate; -1 when absent

    bool operator==(const CoordSpace&) const = default;
};

/** Crossing coordinates in word-position order (+ weight coordinates w_1..w_n). */
CoordSpace crossing_space(const arrangement::Arrangement& arr, bool weighted);

/** Face coordinates in canonical face order; unweighted keeps only pair faces. */
CoordSpace face_space(const arrangement::Arrangement& arr, bool weighted);

/** An H-represented cone: integer normals a with a.x >= 0 over a named space. */
struct HCone {
    CoordSpace space;
    std::vector<polyhedra::IVec> normals;

    HCone canonicalized() const;          ///< gcd-reduced, deduplicated, sorted rows
    polyhedra::HSystem system() const;    ///< same rows as an exact-rational system
};

/**
 * The weight row at word position k (letter i): w_i minus the crossing
 * coordinate at k, minus twice every later level-i crossing, plus every later
 * crossing at level i+-1.  Lives in the weighted crossing space.
 */
polyhedra::IVec weight_vector_d(const arrangement::Arrangement& arr, int k);

/**
 * The area-side weight row for level i and 0 <= k < (number of level-i
 * crossings): minus the band face F_i minus the first k left-bounded level-i
 * faces in position order.  Lives in the full face space.
 */
polyhedra::IVec weight_area_f(const arrangement::Arrangement& arr, int i, int k);

/**
 * Path cone: one row per GP-path (turns contribute +-1 at their crossing).
 * Weighted adds the weight-coordinate rows w_l >= 0 and every weight row d.
 */
HCone cone_C(const arrangement::Arrangement& arr, bool weighted);
HCone cone_C(const words::ReducedWord& word, bool weighted);

/**
 * Area cone: one row per GP-path (-1 on each enclosed face).  Weighted adds
 * the area-side weight rows f over the full face space.
 */
HCone cone_S(const arrangement::Arrangement& arr, bool weighted);
HCone cone_S(const words::ReducedWord& word, bool weighted);

/** An integer linear map between two named coordinate spaces. */
struct UnimodularMap {
    CoordSpace from, to;
    std::vector<polyhedra::IVec> matrix;  ///< to.dim() rows by from.dim() columns
};

/**
 * The face-to-crossing change of coordinates: a left-bounded face maps to
 * minus its left and right crossing coordinates plus its adjacent-level
 * boundary crossings; a band face F_i maps to minus the weight row at the
 * first level-i position.  Unimodular, and it carries the area cone onto the
 * path cone row by row.
 */
UnimodularMap psi(const arrangement::Arrangement& arr);

/** Matrix-vector application. */
polyhedra::IVec apply(const UnimodularMap& map, const polyhedra::IVec& v);

enum class SliceKind {
    pi,  ///< fix the weight coordinates:  w_l = lambda_l
    tau  ///< fix level sums of face coordinates:  sum_{level l} x_F = -lambda_l
};

/** The cone cut by the slice equations for a dominant weight lambda. */
polyhedra::HSystem slice(const HCone& cone, const std::vector<long long>& lambda,
                         SliceKind kind);

/**
 * The face of the full word's weighted path cone obtained by zeroing every
 * extension crossing coordinate, written over the prefix word's weighted
 * crossing space.  word0 must be a reduced word for the longest element
 * extending word.
 */
HCone schubert_face(const words::ReducedWord& word, const words::ReducedWord& word0);

}  // namespace cones
