#pragma once

#include <vector>

#include "arrangement.hpp"

/**
 * Gleizer-Postnikov paths.
 *
 * For the orientation (l_i, l_{i+1}) the lines l_1..l_i run right to left and
 * l_{i+1}..l_{n+1} left to right.  A path starts at the right end L_p of a
 * leftward line, moves along oriented lines, may turn at crossings, and ends
 * at the right end L_q of a rightward line.  Passing straight through the
 * crossing of the current line l_u with l_j is forbidden when u < j with both
 * lines leftward, or u > j with both lines rightward (rigorousness).  Sources
 * and sinks obey p <= i < i+1 <= q together with the height window
 * h(i+1) <= h(p), h(q) <= h(i), where h(k) is the right-end height of line k.
 */
namespace gp {

struct GpPath {
    int orientation = 0;        ///< the index i of the shape (l_i, l_{i+1})
    int source = 0, sink = 0;   ///< line labels of L_source and L_sink
    std::vector<int> vertices;  ///< crossing positions in travel order

    bool operator==(const GpPath&) const = default;
    bool operator<(const GpPath& other) const;
    /** "L1 -> v(1,3) -> v(2,3) -> L2" (pairs looked up in the arrangement). */
    std::string str(const arrangement::Arrangement& arr) const;
};

/** One visited crossing with the lines ridden before and after it. */
struct Step {
    int position = 0;
    int from_line = 0, to_line = 0;
    bool turn() const { return from_line != to_line; }
};

/** True iff line k is oriented right-to-left under orientation i. */
inline bool leftward(int line, int orientation) { return line <= orientation; }

/** All GP-paths of one shape, sorted by vertex sequence; empty paths excluded. */
std::vector<GpPath> enumerate(const arrangement::Arrangement& arr, int orientation);

/** All GP-paths for all orientations 1..n. */
std::vector<GpPath> enumerate_all(const arrangement::Arrangement& arr);

/** Reconstruct the ridden lines of a stored vertex sequence. */
std::vector<Step> steps(const GpPath& path, const arrangement::Arrangement& arr);

/**
 * Crossing-coordinate normal vector: each turn from line a onto line b at a
 * crossing contributes +1 there when a < b and -1 when a > b.
 */
std::vector<long long> normal_c(const GpPath& path, const arrangement::Arrangement& arr);

/**
 * Faces enclosed between the path and the right edge of the arrangement
 * (even winding parity against a vertical ray, exact by construction).
 */
std::vector<arrangement::FaceId> area(const GpPath& path, const arrangement::Arrangement& arr);

/** Face-coordinate normal: -1 on every face of area(path), over all faces. */
std::vector<long long> normal_e(const GpPath& path, const arrangement::Arrangement& arr);

/**
 * Cut the path at the end of the prefix word: the maximal runs of vertices in
 * prefix columns, each a GP-path of the prefix arrangement with endpoints on
 * the lines that carried the original path across the cut.
 */
std::vector<GpPath> restrict_path(const GpPath& path, const arrangement::Arrangement& arr0,
                                  const arrangement::Arrangement& arr_w);

/**
 * Extend a path of the prefix word through the extension columns: the sink
 * side greedily turns onto lines closer to l_{i+1}, the source side (walked
 * backwards) onto lines closer to l_i, giving a path from L_i to L_{i+1}.
 */
GpPath induce(const GpPath& path, const arrangement::Arrangement& arr_w,
              const arrangement::Arrangement& arr0);

}  // namespace gp
