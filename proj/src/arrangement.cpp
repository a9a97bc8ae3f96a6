#include "arrangement.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace arrangement {

std::string Crossing::str() const {
    return "v(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

FaceId FaceId::pair(int a, int b) {
    if (a <= 0 || b <= a) throw std::invalid_argument("FaceId: pair must satisfy 0 < a < b");
    FaceId id;
    id.a = a;
    id.b = b;
    return id;
}

FaceId FaceId::band(int level) {
    if (level <= 0) throw std::invalid_argument("FaceId: band level must be positive");
    FaceId id;
    id.level = level;
    return id;
}

bool FaceId::operator<(const FaceId& other) const {
    return std::tie(level, a, b) < std::tie(other.level, other.a, other.b);
}

std::string FaceId::str() const {
    if (is_pair()) return "F(" + std::to_string(a) + "," + std::to_string(b) + ")";
    return "F" + std::to_string(level);
}

int Arrangement::line_height(int line, int interval) const {
    const auto& heights = line_at[interval];
    for (int h = 1; h <= n() + 1; ++h)
        if (heights[h - 1] == line) return h;
    throw std::invalid_argument("line_height: unknown line " + std::to_string(line));
}

int Arrangement::right_end_height(int line) const { return line_height(line, length()); }

const Crossing* Arrangement::crossing_of(int a, int b) const {
    for (const auto& c : crossings)
        if (c.a == a && c.b == b) return &c;
    return nullptr;
}

int Arrangement::face_index(const FaceId& id) const {
    for (size_t i = 0; i < faces.size(); ++i)
        if (faces[i].id == id) return static_cast<int>(i);
    return -1;
}

const Face& Arrangement::face(const FaceId& id) const {
    int idx = face_index(id);
    if (idx < 0) throw std::invalid_argument("face: no face labelled " + id.str());
    return faces[idx];
}

Arrangement build(const words::ReducedWord& word) {
    words::validate_letters(word);
    Arrangement arr;
    arr.word = word;
    const int n = word.n;
    const int len = word.length();

    std::vector<int> heights(n + 1);
    for (int h = 0; h <= n; ++h) heights[h] = h + 1;
    arr.line_at.push_back(heights);
    std::set<std::pair<int, int>> crossed;
    for (int p = 1; p <= len; ++p) {
        const int level = word.letters[p - 1];
        int lo = heights[level - 1], hi = heights[level];
        if (lo > hi) std::swap(lo, hi);
        if (!crossed.emplace(lo, hi).second)
            throw std::invalid_argument("build: word is not reduced (lines " + std::to_string(lo) +
                                        " and " + std::to_string(hi) + " would cross twice)");
        arr.crossings.push_back({p, level, lo, hi});
        std::swap(heights[level - 1], heights[level]);
        arr.line_at.push_back(heights);
    }

    // Faces, level by level; canonical order fills bounded faces first.
    std::vector<Face> bands;
    for (int level = 1; level <= n; ++level) {
        std::vector<int> positions;
        for (const auto& c : arr.crossings)
            if (c.level == level) positions.push_back(c.position);
        auto inside = [&](int adjacent_level, int from, int to) {
            std::vector<int> result;
            for (const auto& c : arr.crossings)
                if (c.level == adjacent_level && c.position > from && (to == 0 || c.position < to))
                    result.push_back(c.position);
            return result;
        };
        Face band;
        band.id = FaceId::band(level);
        band.level = level;
        band.left_pos = 0;
        band.right_pos = positions.empty() ? 0 : positions.front();
        band.above = inside(level + 1, 0, band.right_pos);
        band.below = inside(level - 1, 0, band.right_pos);
        bands.push_back(std::move(band));
        for (size_t k = 0; k < positions.size(); ++k) {
            const Crossing& left = arr.crossings[positions[k] - 1];
            Face face;
            face.id = FaceId::pair(left.a, left.b);
            face.level = level;
            face.left_pos = positions[k];
            face.right_pos = (k + 1 < positions.size()) ? positions[k + 1] : 0;
            face.above = inside(level + 1, face.left_pos, face.right_pos);
            face.below = inside(level - 1, face.left_pos, face.right_pos);
            arr.faces.push_back(std::move(face));
        }
    }
    std::sort(arr.faces.begin(), arr.faces.end(),
              [](const Face& x, const Face& y) { return x.left_pos < y.left_pos; });
    for (auto& band : bands) arr.faces.push_back(std::move(band));
    return arr;
}

std::vector<Face> mutable_faces(const Arrangement& arr) {
    std::vector<Face> result;
    for (const auto& face : arr.faces) {
        if (face.frozen()) continue;
        if (face.above.size() + face.below.size() != 1) continue;
        result.push_back(face);
    }
    return result;
}

MutationResult mutate(const Arrangement& arr, const FaceId& id) {
    const Face& face = arr.face(id);
    const bool braidable = !face.frozen() && face.above.size() + face.below.size() == 1;
    if (!braidable) throw std::invalid_argument("mutate: face " + id.str() + " is not mutable");

    const int t1 = face.left_pos, t3 = face.right_pos;
    const int t2 = face.above.empty() ? face.below.front() : face.above.front();
    const int i = face.level;
    const int mid_level = face.above.empty() ? i - 1 : i + 1;

    // Slide the commuting letters out of the triple, then braid. All letters
    // strictly inside (t1, t3) other than the middle crossing are at levels
    // at distance >= 2 from i, so they commute with s_i.
    const auto& w = arr.word.letters;
    words::ReducedWord moved{arr.word.n, {}};
    moved.letters.insert(moved.letters.end(), w.begin(), w.begin() + (t1 - 1));
    for (int p = t1 + 1; p <= t2 - 1; ++p) moved.letters.push_back(w[p - 1]);
    moved.letters.push_back(mid_level);
    moved.letters.push_back(i);
    moved.letters.push_back(mid_level);
    for (int p = t2 + 1; p <= t3 - 1; ++p) moved.letters.push_back(w[p - 1]);
    moved.letters.insert(moved.letters.end(), w.begin() + t3, w.end());

    MutationResult mutation;
    mutation.result = build(moved);
    if (words::permutation_of(moved) != words::permutation_of(arr.word))
        throw std::runtime_error("mutate: braid move changed the permutation (internal error)");

    // Labels persist except for a 3-cycle: the pairs at the triple crossings
    // A = left, B = middle, C = right map as A -> C -> B -> A.
    const Crossing& ca = arr.crossings[t1 - 1];
    const Crossing& cb = arr.crossings[t2 - 1];
    const Crossing& cc = arr.crossings[t3 - 1];
    for (const auto& f : arr.faces) mutation.label_map[f.id] = f.id;
    mutation.label_map[FaceId::pair(ca.a, ca.b)] = FaceId::pair(cc.a, cc.b);
    mutation.label_map[FaceId::pair(cc.a, cc.b)] = FaceId::pair(cb.a, cb.b);
    mutation.label_map[FaceId::pair(cb.a, cb.b)] = FaceId::pair(ca.a, ca.b);
    mutation.mutated = mutation.label_map[id];
    if (mutation.result.face_index(mutation.mutated) < 0)
        throw std::runtime_error("mutate: mutated face label missing (internal error)");
    return mutation;
}

Quiver quiver(const Arrangement& arr) {
    Quiver q;
    for (const auto& face : arr.faces) {
        q.vertices.push_back(face.id);
        q.frozen.push_back(face.frozen() ? 1 : 0);
    }
    auto add_arrow = [&](const Face& from, const Face& to) {
        if (from.frozen() && to.frozen()) return;  // disregarded
        int s = arr.face_index(from.id), t = arr.face_index(to.id);
        q.arrows.emplace_back(s, t);
    };
    // Same-level arrows, left to right across one crossing.
    for (const auto& from : arr.faces)
        for (const auto& to : arr.faces)
            if (from.level == to.level && from.right_pos != 0 && from.right_pos == to.left_pos)
                add_arrow(from, to);
    // Adjacent-level arrows G -> H with h_l < g_l < h_r < g_r (right to left);
    // unbounded ends count as -infinity / +infinity.
    for (const auto& g : arr.faces)
        for (const auto& h : arr.faces) {
            if (std::abs(g.level - h.level) != 1) continue;
            if (g.left_pos == 0 || h.right_pos == 0) continue;
            const bool left_ok = h.left_pos == 0 || h.left_pos < g.left_pos;
            const bool right_ok = g.right_pos == 0 || h.right_pos < g.right_pos;
            if (left_ok && right_ok && g.left_pos < h.right_pos) add_arrow(g, h);
        }
    std::sort(q.arrows.begin(), q.arrows.end());
    return q;
}

std::string ascii(const Arrangement& arr) {
    const int n = arr.n(), len = arr.length();
    std::string out;
    for (int h = n + 1; h >= 1; --h) {
        out += std::to_string(h);
        out += ' ';
        for (int p = 1; p <= len; ++p) {
            const int level = arr.word.letters[p - 1];
            if (level == h) out += '/';        // lower strand of the crossing rises
            else if (level + 1 == h) out += '\\';  // upper strand descends
            else out += '-';
        }
        out += " L" + std::to_string(arr.line_at[len][h - 1]);
        out += '\n';
    }
    return out;
}

}  // namespace arrangement
