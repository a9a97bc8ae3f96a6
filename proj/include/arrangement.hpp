#pragma once

#include <map>
#include <string>
#include <vector>

#include "words.hpp"

/**
 * Pseudoline arrangements of reduced words.
 *
 * A word letter i at position p is a crossing at level i: the two lines
 * occupying heights i and i+1 just before column p swap there.  Lines are
 * labelled by their left-edge height (line k starts at height k); the right
 * end of line k, written L_k, sits at height w^{-1}(k).
 *
 * Each level band (between heights i and i+1) is split by its crossings into
 * faces: one left-unbounded band face F_i and one face per level-i crossing,
 * labelled by the crossing pair on its left.  Faces above the top line and
 * below the bottom line are not part of the coordinate space, so there are
 * exactly length + n faces.
 */
namespace arrangement {

/** A crossing of the lines a < b, at a word position and level. */
struct Crossing {
    int position = 0;  ///< 1-based letter index
    int level = 0;     ///< the letter itself
    int a = 0, b = 0;  ///< the two crossing lines, a < b
    std::string str() const;  ///< "v(1,2)"
};

/** Face label: a crossing pair (a,b) for left-bounded faces, or a level band. */
struct FaceId {
    int level = 0;     ///< band label for left-unbounded faces; 0 otherwise
    int a = 0, b = 0;  ///< pair label for left-bounded faces; 0 otherwise

    static FaceId pair(int a, int b);
    static FaceId band(int level);
    bool is_pair() const { return a != 0; }
    bool operator==(const FaceId&) const = default;
    bool operator<(const FaceId& other) const;
    std::string str() const;  ///< "F(1,3)" or "F2"
};

/** A face of the arrangement with its interval and boundary crossings. */
struct Face {
    FaceId id;
    int level = 0;
    int left_pos = 0;          ///< position of the left crossing; 0 = unbounded
    int right_pos = 0;         ///< position of the right crossing; 0 = unbounded
    std::vector<int> above;    ///< positions of level+1 crossings strictly inside
    std::vector<int> below;    ///< positions of level-1 crossings strictly inside
    bool frozen() const { return left_pos == 0 || right_pos == 0; }
};

struct Arrangement {
    words::ReducedWord word;
    std::vector<Crossing> crossings;  ///< crossings[p-1] is the crossing at position p
    /**
     * Faces in the canonical coordinate order: left-bounded faces in word
     * order of their left crossing, then the band faces F_1..F_n.
     */
    std::vector<Face> faces;
    /** line_at[j][h-1] = line occupying height h after the first j columns. */
    std::vector<std::vector<int>> line_at;

    int n() const { return word.n; }
    int length() const { return word.length(); }
    /** Height of a line over the open interval (j, j+1), j = 0..length. */
    int line_height(int line, int interval) const;
    /** Height of the right end L_k; equals w^{-1}(k). */
    int right_end_height(int line) const;
    /** The crossing of lines a < b, or nullptr if they never cross. */
    const Crossing* crossing_of(int a, int b) const;
    /** Index into faces for a label, or -1 if the face does not exist. */
    int face_index(const FaceId& id) const;
    const Face& face(const FaceId& id) const;  ///< throws if absent
};

/** Build the arrangement by a left-to-right sweep; throws on non-reduced input. */
Arrangement build(const words::ReducedWord& word);

/**
 * Faces around which a braid move can be performed: bounded faces whose
 * boundary consists of exactly three crossings (left, right, and a single
 * crossing at an adjacent level), so that sliding commuting letters turns the
 * word locally into s_i s_{i+1} s_i or s_{i+1} s_i s_{i+1}.
 */
std::vector<Face> mutable_faces(const Arrangement& arr);

/** Result of a braid move: the new arrangement plus the face-label correspondence. */
struct MutationResult {
    Arrangement result;
    std::map<FaceId, FaceId> label_map;  ///< old label -> new label (three labels cycle)
    FaceId mutated;                      ///< new label of the mutated face
};

/** Perform the braid move at a mutable face; throws if the face is not mutable. */
MutationResult mutate(const Arrangement& arr, const FaceId& face);

/** The quiver of an arrangement: faces as vertices, frozen = unbounded. */
struct Quiver {
    std::vector<FaceId> vertices;  ///< face ids in canonical order
    std::vector<char> frozen;
    std::vector<std::pair<int, int>> arrows;  ///< recorded arrows (vertex indices)
};

/**
 * Arrows: left-to-right between consecutive same-level faces, and G -> H
 * between faces at adjacent levels whose intervals interleave as
 * h_left < g_left < h_right < g_right; frozen-frozen arrows are dropped.
 */
Quiver quiver(const Arrangement& arr);

/** Plain-text rendering: one row per strand height (top to bottom). */
std::string ascii(const Arrangement& arr);

}  // namespace arrangement
