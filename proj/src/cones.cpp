#include "cones.hpp"

#include <algorithm>
#include <stdexcept>

namespace cones {

using arrangement::Arrangement;
using arrangement::FaceId;
using polyhedra::IVec;
using polyhedra::QVec;
using polyhedra::Rational;

int CoordSpace::index_of_pair(int a, int b) const {
    for (int j = 0; j < pair_count; ++j)
        if (keys[j].first == a && keys[j].second == b) return j;
    return -1;
}

int CoordSpace::index_of_level(int l) const {
    for (int j = pair_count; j < dim(); ++j)
        if (keys[j].first == l) return j;
    return -1;
}

CoordSpace crossing_space(const Arrangement& arr, bool weighted) {
    CoordSpace s;
    s.kind = CoordSpace::Kind::crossing;
    s.weighted = weighted;
    s.n = arr.n();
    for (const auto& c : arr.crossings) {
        s.labels.push_back("c(" + std::to_string(c.a) + "," + std::to_string(c.b) + ")");
        s.keys.emplace_back(c.a, c.b);
        s.levels.push_back(c.level);
    }
    s.pair_count = s.dim();
    if (weighted)
        for (int l = 1; l <= s.n; ++l) {
            s.labels.push_back("w" + std::to_string(l));
            s.keys.emplace_back(l, 0);
            s.levels.push_back(l);
        }
    return s;
}

CoordSpace face_space(const Arrangement& arr, bool weighted) {
    CoordSpace s;
    s.kind = CoordSpace::Kind::face;
    s.weighted = weighted;
    s.n = arr.n();
    for (const auto& f : arr.faces) {
        if (!f.id.is_pair()) continue;
        s.labels.push_back("e(" + std::to_string(f.id.a) + "," + std::to_string(f.id.b) + ")");
        s.keys.emplace_back(f.id.a, f.id.b);
        s.levels.push_back(f.level);
    }
    s.pair_count = s.dim();
    if (weighted)
        for (int l = 1; l <= s.n; ++l) {
            s.labels.push_back("e" + std::to_string(l));
            s.keys.emplace_back(l, 0);
            s.levels.push_back(l);
        }
    return s;
}

HCone HCone::canonicalized() const {
    HCone out;
    out.space = space;
    out.normals = polyhedra::canonical_rows(normals);
    return out;
}

polyhedra::HSystem HCone::system() const {
    return polyhedra::system_from_rows(space.dim(), normals);
}

IVec weight_vector_d(const Arrangement& arr, int k) {
    const int len = arr.length();
    if (k < 1 || k > len) throw std::invalid_argument("weight row position out of range");
    const int i = arr.word.letters[k - 1];
    IVec v(len + arr.n(), 0);
    v[len + i - 1] = 1;  // the weight coordinate w_i
    v[k - 1] -= 1;
    for (int p = k + 1; p <= len; ++p) {
        int j = arr.word.letters[p - 1];
        if (j == i) v[p - 1] -= 2;
        else if (j == i - 1 || j == i + 1) v[p - 1] += 1;
    }
    return v;
}

IVec weight_area_f(const Arrangement& arr, int i, int k) {
    if (i < 1 || i > arr.n()) throw std::invalid_argument("level out of range");
    std::vector<int> level_faces;  // canonical indices of left-bounded level-i faces
    for (std::size_t j = 0; j < arr.faces.size(); ++j)
        if (arr.faces[j].id.is_pair() && arr.faces[j].level == i)
            level_faces.push_back(static_cast<int>(j));
    if (k < 0 || k >= static_cast<int>(level_faces.size()))
        throw std::invalid_argument("face weight row index out of range");
    IVec v(arr.faces.size(), 0);
    v[arr.face_index(FaceId::band(i))] = -1;
    for (int r = 0; r < k; ++r) v[level_faces[r]] = -1;
    return v;
}

namespace {

std::vector<IVec> path_rows_c(const Arrangement& arr, bool weighted) {
    std::vector<IVec> rows;
    for (const auto& p : gp::enumerate_all(arr)) {
        IVec v = gp::normal_c(p, arr);
        if (weighted) v.resize(arr.length() + arr.n(), 0);
        rows.push_back(std::move(v));
    }
    return rows;
}

}  // namespace

HCone cone_C(const Arrangement& arr, bool weighted) {
    HCone cone;
    cone.space = crossing_space(arr, weighted);
    cone.normals = path_rows_c(arr, weighted);
    if (weighted) {
        const int len = arr.length();
        for (int l = 1; l <= arr.n(); ++l) {
            IVec v(len + arr.n(), 0);
            v[len + l - 1] = 1;
            cone.normals.push_back(std::move(v));
        }
        for (int k = 1; k <= len; ++k) cone.normals.push_back(weight_vector_d(arr, k));
    }
    return cone;
}

HCone cone_C(const words::ReducedWord& word, bool weighted) {
    return cone_C(arrangement::build(word), weighted);
}

HCone cone_S(const Arrangement& arr, bool weighted) {
    HCone cone;
    cone.space = face_space(arr, weighted);
    for (const auto& p : gp::enumerate_all(arr)) {
        IVec full = gp::normal_e(p, arr);
        if (weighted) {
            cone.normals.push_back(std::move(full));
        } else {
            // enclosed faces are always left-bounded, so the band block is zero
            for (int j = cone.space.pair_count; j < static_cast<int>(full.size()); ++j)
                if (full[j] != 0) throw std::runtime_error("path area touches a band face");
            full.resize(cone.space.pair_count);
            cone.normals.push_back(std::move(full));
        }
    }
    if (weighted) {
        for (int i = 1; i <= arr.n(); ++i) {
            int m = 0;
            for (const auto& c : arr.crossings)
                if (c.level == i) ++m;
            for (int k = 0; k < m; ++k) cone.normals.push_back(weight_area_f(arr, i, k));
        }
    }
    return cone;
}

HCone cone_S(const words::ReducedWord& word, bool weighted) {
    return cone_S(arrangement::build(word), weighted);
}

UnimodularMap psi(const Arrangement& arr) {
    UnimodularMap map;
    map.from = face_space(arr, true);
    map.to = crossing_space(arr, true);
    const int rows = map.to.dim(), cols = map.from.dim();
    map.matrix.assign(rows, IVec(cols, 0));
    auto set_column = [&](int col, const IVec& v) {
        for (int r = 0; r < rows; ++r) map.matrix[r][col] = v[r];
    };
    for (int col = 0; col < cols; ++col) {
        auto key = map.from.keys[col];
        IVec v(rows, 0);
        if (col < map.from.pair_count) {
            const auto& f = arr.face(FaceId::pair(key.first, key.second));
            v[f.left_pos - 1] = -1;
            if (f.right_pos != 0) v[f.right_pos - 1] = -1;
            for (int p : f.above) v[p - 1] += 1;
            for (int p : f.below) v[p - 1] += 1;
        } else {
            // band F_i: minus the weight row at the first level-i position
            int i = key.first, first = 0;
            for (const auto& c : arr.crossings)
                if (c.level == i) { first = c.position; break; }
            if (first != 0) {
                IVec d = weight_vector_d(arr, first);
                for (int r = 0; r < rows; ++r) v[r] = -d[r];
            } else {
                v[map.to.index_of_level(i)] = -1;
            }
        }
        set_column(col, v);
    }
    return map;
}

IVec apply(const UnimodularMap& map, const IVec& v) {
    if (static_cast<int>(v.size()) != map.from.dim())
        throw std::invalid_argument("vector does not live in the map's source space");
    IVec out(map.to.dim(), 0);
    for (int r = 0; r < map.to.dim(); ++r)
        for (int c = 0; c < map.from.dim(); ++c) out[r] += map.matrix[r][c] * v[c];
    return out;
}

polyhedra::HSystem slice(const HCone& cone, const std::vector<long long>& lambda,
                         SliceKind kind) {
    const CoordSpace& s = cone.space;
    if (static_cast<int>(lambda.size()) != s.n)
        throw std::invalid_argument("weight vector has wrong rank");
    if (kind == SliceKind::pi && !(s.kind == CoordSpace::Kind::crossing && s.weighted))
        throw std::invalid_argument("pi slice needs the weighted crossing space");
    if (kind == SliceKind::tau && !(s.kind == CoordSpace::Kind::face && s.weighted))
        throw std::invalid_argument("tau slice needs the full face space");
    polyhedra::HSystem sys = cone.system();
    for (int l = 1; l <= s.n; ++l) {
        QVec row(s.dim(), Rational(0));
        Rational rhs;
        if (kind == SliceKind::pi) {
            row[s.index_of_level(l)] = 1;
            rhs = lambda[l - 1];
        } else {
            for (int j = 0; j < s.dim(); ++j)
                if (s.levels[j] == l) row[j] = 1;
            rhs = -Rational(lambda[l - 1]);
        }
        sys.add_eq(std::move(row), rhs);
    }
    return sys;
}

HCone schubert_face(const words::ReducedWord& word, const words::ReducedWord& word0) {
    Arrangement arr_w = arrangement::build(word);
    Arrangement arr0 = arrangement::build(word0);
    if (word0.n != word.n) throw std::invalid_argument("rank mismatch");
    if (word0.length() < word.length() ||
        !std::equal(word.letters.begin(), word.letters.end(), word0.letters.begin()))
        throw std::invalid_argument("full word does not extend the prefix");
    if (!(permutation_of(word0) == words::longest_element(word0.n)))
        throw std::invalid_argument("full word does not represent the longest element");
    HCone big = cone_C(arr0, true);
    const int lw = word.length(), l0 = word0.length();
    HCone out;
    out.space = crossing_space(arr_w, true);
    for (const auto& row : big.normals) {
        IVec v(lw + word.n, 0);
        for (int j = 0; j < lw; ++j) v[j] = row[j];
        for (int l = 0; l < word.n; ++l) v[lw + l] = row[l0 + l];
        out.normals.push_back(std::move(v));
    }
    return out;
}

}  // namespace cones
