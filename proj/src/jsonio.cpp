#include "jsonio.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace jsonio {

namespace {

json pair_or_null(const arrangement::Arrangement& arr, int pos) {
    if (pos == 0) return nullptr;
    const auto& c = arr.crossings[pos - 1];
    return json::array({c.a, c.b});
}

}  // namespace

json word_json(const words::ReducedWord& word) {
    return json{{"schema", 1}, {"n", word.n}, {"word", word.letters}};
}

json crossing_json(const arrangement::Crossing& c) {
    return json{{"pos", c.position}, {"level", c.level}, {"pair", json::array({c.a, c.b})}};
}

json face_json(const arrangement::Face& f, const arrangement::Arrangement& arr) {
    json id;
    if (f.id.is_pair()) id["pair"] = json::array({f.id.a, f.id.b});
    else id["band"] = f.id.level;
    json above = json::array(), below = json::array();
    for (int p : f.above) above.push_back(pair_or_null(arr, p));
    for (int p : f.below) below.push_back(pair_or_null(arr, p));
    return json{{"id", id},
                {"level", f.level},
                {"left", pair_or_null(arr, f.left_pos)},
                {"right", pair_or_null(arr, f.right_pos)},
                {"above", above},
                {"below", below}};
}

json arrangement_json(const arrangement::Arrangement& arr) {
    json crossings = json::array(), faces = json::array();
    for (const auto& c : arr.crossings) crossings.push_back(crossing_json(c));
    for (const auto& f : arr.faces) faces.push_back(face_json(f, arr));
    return json{{"schema", 1},
                {"word", word_json(arr.word)},
                {"crossings", crossings},
                {"faces", faces}};
}

json path_json(const gp::GpPath& p, const arrangement::Arrangement& arr) {
    json verts = json::array();
    for (int pos : p.vertices) verts.push_back(pair_or_null(arr, pos));
    return json{{"orientation", p.orientation},
                {"source", "L" + std::to_string(p.source)},
                {"sink", "L" + std::to_string(p.sink)},
                {"vertices", verts}};
}

json paths_json(const std::vector<gp::GpPath>& ps, const arrangement::Arrangement& arr) {
    json list = json::array();
    for (const auto& p : ps) list.push_back(path_json(p, arr));
    return json{{"schema", 1}, {"paths", list}};
}

json cone_json(const cones::HCone& cone) {
    return json{{"schema", 1}, {"space", cone.space.labels}, {"normals", cone.normals}};
}

json map_json(const cones::UnimodularMap& map) {
    return json{{"schema", 1},
                {"from", map.from.labels},
                {"to", map.to.labels},
                {"matrix", map.matrix}};
}

json quiver_json(const arrangement::Quiver& q) {
    json verts = json::array(), frozen = json::array(), arrows = json::array();
    for (const auto& v : q.vertices) verts.push_back(v.str());
    for (char f : q.frozen) frozen.push_back(static_cast<bool>(f));
    for (const auto& [u, v] : q.arrows) arrows.push_back(json::array({u, v}));
    return json{{"schema", 1}, {"vertices", verts}, {"frozen", frozen}, {"arrows", arrows}};
}

json expr_json(const cluster::LaurentExpr& e) {
    // bands ("e1") first, then pair faces ("e(1,2)"), each block in internal order
    std::vector<int> order;
    for (std::size_t j = 0; j < e.basis.size(); ++j)
        if (e.basis[j].find('(') == std::string::npos) order.push_back(static_cast<int>(j));
    for (std::size_t j = 0; j < e.basis.size(); ++j)
        if (e.basis[j].find('(') != std::string::npos) order.push_back(static_cast<int>(j));
    std::vector<std::string> basis;
    for (int j : order) basis.push_back(e.basis[j]);
    std::map<polyhedra::IVec, long long> sorted;
    for (const auto& [m, c] : e.terms) {
        polyhedra::IVec mm(m.size());
        for (std::size_t j = 0; j < order.size(); ++j) mm[j] = m[order[j]];
        sorted.emplace(std::move(mm), c);
    }
    json terms = json::array();
    for (const auto& [m, c] : sorted) terms.push_back(json{{"exp", m}, {"coef", c}});
    return json{{"schema", 1}, {"basis", basis}, {"terms", terms}};
}

std::string inequality_text(const cones::HCone& cone) {
    auto var = [&](int j) {
        const std::string& label = cone.space.labels[j];
        auto p = label.find('(');
        return p == std::string::npos ? label : "x" + label.substr(p);
    };
    std::ostringstream os;
    for (const auto& row : cone.normals) {
        bool first = true;
        bool any = false;
        for (std::size_t j = 0; j < row.size(); ++j) {
            long long c = row[j];
            if (c == 0) continue;
            any = true;
            if (first) {
                if (c < 0) os << "-";
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            if (c != 1 && c != -1) os << (c < 0 ? -c : c) << "*";
            os << var(static_cast<int>(j));
            first = false;
        }
        if (!any) os << "0";
        os << " >= 0\n";
    }
    return os.str();
}

words::ReducedWord parse_word(const std::string& text, int n_hint) {
    words::ReducedWord w;
    std::string s = text;
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream is(s);
    for (int v; is >> v;) w.letters.push_back(v);
    if (!is.eof()) throw std::invalid_argument("malformed word: " + text);
    int top = 0;
    for (int v : w.letters) top = std::max(top, v);
    w.n = n_hint > 0 ? n_hint : top;
    if (w.n == 0) throw std::invalid_argument("empty word needs an explicit rank (--n)");
    if (w.n > 6) throw std::invalid_argument("rank guard: n must be at most 6");
    words::validate_letters(w);
    return w;
}

std::vector<long long> parse_vector(const std::string& text) {
    std::string s = text;
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream is(s);
    std::vector<long long> v;
    for (long long x; is >> x;) v.push_back(x);
    if (!is.eof()) throw std::invalid_argument("malformed integer vector: " + text);
    return v;
}

}  // namespace jsonio
