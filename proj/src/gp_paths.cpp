#include "gp_paths.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace gp {

using arrangement::Arrangement;
using arrangement::FaceId;

bool GpPath::operator<(const GpPath& other) const {
    return std::tie(orientation, source, vertices, sink) <
           std::tie(other.orientation, other.source, other.vertices, other.sink);
}

std::string GpPath::str(const Arrangement& arr) const {
    std::ostringstream os;
    os << "L" << source;
    for (int p : vertices) os << " -> " << arr.crossings[p - 1].str();
    os << " -> L" << sink;
    return os.str();
}

namespace {

/** Straight passage of line u through its crossing with line v is non-rigorous
 *  when both lines point the same way and u is the farther one from the
 *  (l_i, l_{i+1}) axis. */
bool forbidden_straight(int u, int v, int orientation) {
    return (u < v && v <= orientation) || (u > v && v >= orientation + 1);
}

/** Crossing positions per line, ascending (filled by one sweep). */
std::vector<std::vector<int>> positions_by_line(const Arrangement& arr) {
    std::vector<std::vector<int>> on_line(arr.n() + 2);
    for (const auto& c : arr.crossings) {
        on_line[c.a].push_back(c.position);
        on_line[c.b].push_back(c.position);
    }
    return on_line;
}

/** Next crossing met when travelling on a line from x in its direction; 0 = none. */
int next_on_line(const std::vector<int>& positions, int x, bool left) {
    if (left) {
        auto it = std::lower_bound(positions.begin(), positions.end(), x);
        return it == positions.begin() ? 0 : *std::prev(it);
    }
    auto it = std::upper_bound(positions.begin(), positions.end(), x);
    return it == positions.end() ? 0 : *it;
}

void check_prefix(const Arrangement& arr0, const Arrangement& arr_w) {
    if (arr0.n() != arr_w.n()) throw std::invalid_argument("rank mismatch between arrangements");
    if (arr_w.length() > arr0.length())
        throw std::invalid_argument("prefix arrangement is longer than the full one");
    for (int j = 0; j < arr_w.length(); ++j)
        if (arr0.word.letters[j] != arr_w.word.letters[j])
            throw std::invalid_argument("arrangement word is not a prefix of the full word");
}

}  // namespace

std::vector<GpPath> enumerate(const Arrangement& arr, int orientation) {
    const int i = orientation;
    if (i < 1 || i > arr.n()) throw std::invalid_argument("orientation out of range");
    const int len = arr.length();
    const int h_top = arr.right_end_height(i), h_bot = arr.right_end_height(i + 1);
    auto in_window = [&](int line) {
        int h = arr.right_end_height(line);
        return h_bot <= h && h <= h_top;
    };
    auto on_line = positions_by_line(arr);

    std::vector<GpPath> out;
    std::vector<int> trail;
    std::vector<char> used(len + 1, 0);
    int source_line = 0;

    std::function<void(int, int)> dfs = [&](int line, int x) {
        int q = next_on_line(on_line[line], x, leftward(line, i));
        if (q == 0) {
            // Walked off an end: only a rightward line reaches a right end L_line.
            if (!leftward(line, i) && in_window(line) && !trail.empty())
                out.push_back(GpPath{i, source_line, line, trail});
            return;
        }
        if (used[q]) return;  // paths are simple
        const auto& c = arr.crossings[q - 1];
        int other = c.a + c.b - line;
        used[q] = 1;
        trail.push_back(q);
        dfs(other, q);  // turning is always allowed
        if (!forbidden_straight(line, other, i)) dfs(line, q);
        trail.pop_back();
        used[q] = 0;
    };

    for (int p = 1; p <= i; ++p) {
        if (!in_window(p)) continue;
        source_line = p;
        dfs(p, len + 1);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<GpPath> enumerate_all(const Arrangement& arr) {
    std::vector<GpPath> out;
    for (int i = 1; i <= arr.n(); ++i) {
        auto part = enumerate(arr, i);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<Step> steps(const GpPath& path, const Arrangement& arr) {
    const int i = path.orientation;
    auto on_line = positions_by_line(arr);
    auto next_on = [&](int line, int x) { return next_on_line(on_line[line], x, leftward(line, i)); };

    std::vector<Step> out;
    out.reserve(path.vertices.size());
    int line = path.source;
    int x = arr.length() + 1;
    for (std::size_t k = 0; k < path.vertices.size(); ++k) {
        int p = path.vertices[k];
        if (next_on(line, x) != p) throw std::runtime_error("inconsistent path: vertex not reached on ridden line");
        const auto& c = arr.crossings[p - 1];
        if (c.a != line && c.b != line) throw std::runtime_error("inconsistent path: ridden line misses vertex");
        int other = c.a + c.b - line;
        bool stay_ok, switch_ok;
        if (k + 1 < path.vertices.size()) {
            int pn = path.vertices[k + 1];
            stay_ok = next_on(line, p) == pn;
            switch_ok = next_on(other, p) == pn;
        } else {
            stay_ok = !leftward(line, i) && next_on(line, p) == 0 && line == path.sink;
            switch_ok = !leftward(other, i) && next_on(other, p) == 0 && other == path.sink;
        }
        if (stay_ok == switch_ok) throw std::runtime_error("inconsistent path: step not determined");
        int to = stay_ok ? line : other;
        out.push_back(Step{p, line, to});
        line = to;
        x = p;
    }
    if (line != path.sink) throw std::runtime_error("inconsistent path: does not end on its sink line");
    return out;
}

std::vector<long long> normal_c(const GpPath& path, const Arrangement& arr) {
    std::vector<long long> v(arr.length(), 0);
    for (const auto& s : steps(path, arr))
        if (s.turn()) v[s.position - 1] += s.from_line < s.to_line ? 1 : -1;
    return v;
}

std::vector<FaceId> area(const GpPath& path, const Arrangement& arr) {
    const int len = arr.length();
    // coverage[j][h-1]: parity of path segments over the interval (j, j+1) at height h
    std::vector<std::vector<char>> cov(len + 1, std::vector<char>(arr.n() + 1, 0));
    auto ride = [&](int line, int x_from, int x_to) {
        int lo = std::min(x_from, x_to), hi = std::max(x_from, x_to);
        for (int j = lo; j < hi; ++j) cov[j][arr.line_height(line, j) - 1] ^= 1;
    };
    int x = len + 1;
    int line = path.source;
    for (const auto& s : steps(path, arr)) {
        ride(line, x, s.position);
        line = s.to_line;
        x = s.position;
    }
    ride(line, x, len + 1);

    // A face lies between the path and the right edge iff a downward ray from
    // its leftmost interval crosses the path an odd number of times.
    std::vector<FaceId> out;
    for (const auto& f : arr.faces) {
        int par = 0;
        for (int h = 1; h <= f.level; ++h) par ^= cov[f.left_pos][h - 1];
        if (par) out.push_back(f.id);
    }
    return out;
}

std::vector<long long> normal_e(const GpPath& path, const Arrangement& arr) {
    std::vector<long long> v(arr.faces.size(), 0);
    for (const auto& id : area(path, arr)) v[arr.face_index(id)] = -1;
    return v;
}

std::vector<GpPath> restrict_path(const GpPath& path, const Arrangement& arr0,
                                  const Arrangement& arr_w) {
    check_prefix(arr0, arr_w);
    const int cut = arr_w.length();
    auto st = steps(path, arr0);
    std::vector<GpPath> out;
    std::size_t k = 0;
    while (k < st.size()) {
        if (st[k].position > cut) {
            ++k;
            continue;
        }
        std::size_t e = k;
        while (e + 1 < st.size() && st[e + 1].position <= cut) ++e;
        GpPath frag;
        frag.orientation = path.orientation;
        frag.source = st[k].from_line;  // line carrying the path leftwards across the cut
        frag.sink = st[e].to_line;      // line carrying it back out rightwards
        for (std::size_t t = k; t <= e; ++t) frag.vertices.push_back(st[t].position);
        out.push_back(std::move(frag));
        k = e + 1;
    }
    return out;
}

GpPath induce(const GpPath& path, const Arrangement& arr_w, const Arrangement& arr0) {
    check_prefix(arr0, arr_w);
    const int cut = arr_w.length();
    const int i = path.orientation;
    auto on_line = positions_by_line(arr0);
    // Both walks move rightwards through the extension columns, greedily
    // turning towards the target line and recording every crossing passed.
    auto walk = [&](int start_line, int target, bool towards_smaller) {
        std::vector<int> visited;
        int line = start_line, x = cut;
        while (true) {
            int q = next_on_line(on_line[line], x, /*left=*/false);
            if (q == 0) break;
            const auto& c = arr0.crossings[q - 1];
            int other = c.a + c.b - line;
            visited.push_back(q);
            if (towards_smaller ? (other >= target && other < line) : (other <= target && other > line))
                line = other;
            x = q;
        }
        if (line != target) throw std::runtime_error("induced path walk does not reach line " + std::to_string(target));
        return visited;
    };
    std::vector<int> tail = walk(path.sink, i + 1, /*towards_smaller=*/true);
    std::vector<int> head = walk(path.source, i, /*towards_smaller=*/false);

    GpPath out;
    out.orientation = i;
    out.source = i;
    out.sink = i + 1;
    out.vertices.assign(head.rbegin(), head.rend());  // the source side is walked backwards
    out.vertices.insert(out.vertices.end(), path.vertices.begin(), path.vertices.end());
    out.vertices.insert(out.vertices.end(), tail.begin(), tail.end());
    std::set<int> distinct(out.vertices.begin(), out.vertices.end());
    if (distinct.size() != out.vertices.size())
        throw std::runtime_error("induced path revisits a crossing");
    return out;
}

}  // namespace gp
