#include "cluster.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cluster {

using arrangement::Arrangement;
using arrangement::FaceId;
using polyhedra::IVec;

namespace {

std::string face_label(const FaceId& id) {
    if (id.is_pair()) return "e(" + std::to_string(id.a) + "," + std::to_string(id.b) + ")";
    return "e" + std::to_string(id.level);
}

std::vector<std::string> basis_of(const Arrangement& arr) {
    std::vector<std::string> basis;
    basis.reserve(arr.faces.size());
    for (const auto& f : arr.faces) basis.push_back(face_label(f.id));
    return basis;
}

void check_basis(const LaurentExpr& e, const Arrangement& arr) {
    if (e.basis != basis_of(arr))
        throw std::invalid_argument("expression is not written over this arrangement's faces");
}

/** Exponent rewrite between the bases of a seed and its mutation at k (involutive). */
IVec convert_exponent(const IVec& a, const Seed& seed_before, int k) {
    IVec b = a;
    long long s = 0;
    for (int i = 0; i < seed_before.dim(); ++i)
        if (i != k) s += a[i] * std::max<long long>(seed_before.eps[i][k], 0);
    b[k] = -a[k] + s;
    return b;
}

LaurentExpr convert_all(const LaurentExpr& e, const Seed& seed_before, int k) {
    LaurentExpr out;
    out.basis = e.basis;
    for (const auto& [m, c] : e.terms) out.terms[convert_exponent(m, seed_before, k)] += c;
    for (auto it = out.terms.begin(); it != out.terms.end();)
        it = it->second == 0 ? out.terms.erase(it) : std::next(it);
    return out;
}

long long pairing_with_unit(const IVec& m, const Seed& seed, int k) {
    long long s = 0;
    for (int i = 0; i < seed.dim(); ++i) s += m[i] * seed.eps[i][k];
    return s;
}

/** The reverse of pullback, still in the abstract seed coordinates. */
LaurentExpr forward_core(const LaurentExpr& e, const Seed& seed_before, int k) {
    LaurentExpr tw = binomial_twist(
        e, k, [&](const IVec& m) { return pairing_with_unit(m, seed_before, k); });
    return convert_all(tw, seed_before, k);
}

}  // namespace

Seed seed_of(const Arrangement& arr) {
    auto q = arrangement::quiver(arr);
    Seed s;
    s.vertices = q.vertices;
    s.frozen = q.frozen;
    s.eps.assign(q.vertices.size(), std::vector<long long>(q.vertices.size(), 0));
    for (const auto& [u, v] : q.arrows) {
        s.eps[u][v] += 1;
        s.eps[v][u] -= 1;
    }
    return s;
}

Seed mutate_seed(const Seed& seed, int k) {
    if (k < 0 || k >= seed.dim()) throw std::invalid_argument("mutation vertex out of range");
    if (seed.frozen[k]) throw std::invalid_argument("cannot mutate a frozen vertex");
    Seed out = seed;
    for (int i = 0; i < seed.dim(); ++i)
        for (int j = 0; j < seed.dim(); ++j) {
            if (i == k || j == k) {
                out.eps[i][j] = -seed.eps[i][j];
            } else {
                long long prod = seed.eps[i][k] * seed.eps[k][j];
                long long sgn = seed.eps[i][k] > 0 ? 1 : (seed.eps[i][k] < 0 ? -1 : 0);
                out.eps[i][j] = seed.eps[i][j] + sgn * std::max<long long>(prod, 0);
            }
            if (seed.frozen[i] && seed.frozen[j]) out.eps[i][j] = 0;
        }
    return out;
}

std::string LaurentExpr::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms) {
        if (!first) os << " + ";
        first = false;
        bool flat = std::all_of(m.begin(), m.end(), [](long long v) { return v == 0; });
        if (c != 1 || flat) os << c;
        if (flat) continue;
        if (c != 1) os << "*";
        os << "z^{";
        bool lead = true;
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (m[j] == 0) continue;
            if (m[j] > 0 && !lead) os << "+";
            if (m[j] == -1) os << "-";
            else if (m[j] != 1) os << m[j] << "*";
            os << basis[j];
            lead = false;
        }
        os << "}";
    }
    return os.str();
}

LaurentExpr monomial(std::vector<std::string> basis, IVec exponent, long long coeff) {
    if (basis.size() != exponent.size()) throw std::invalid_argument("exponent/basis size mismatch");
    LaurentExpr e;
    e.basis = std::move(basis);
    if (coeff != 0) e.terms.emplace(std::move(exponent), coeff);
    return e;
}

LaurentExpr add(const LaurentExpr& a, const LaurentExpr& b) {
    if (a.basis != b.basis) throw std::invalid_argument("cannot add expressions over different bases");
    LaurentExpr out = a;
    for (const auto& [m, c] : b.terms) {
        auto [it, fresh] = out.terms.emplace(m, c);
        if (!fresh && (it->second += c) == 0) out.terms.erase(it);
    }
    return out;
}

LaurentExpr mul(const LaurentExpr& a, const LaurentExpr& b) {
    if (a.basis != b.basis) throw std::invalid_argument("cannot multiply expressions over different bases");
    LaurentExpr out;
    out.basis = a.basis;
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) {
            IVec m(ma.size());
            for (std::size_t j = 0; j < m.size(); ++j) m[j] = ma[j] + mb[j];
            out.terms[m] += ca * cb;
        }
    for (auto it = out.terms.begin(); it != out.terms.end();)
        it = it->second == 0 ? out.terms.erase(it) : std::next(it);
    return out;
}

LaurentExpr reindex(const LaurentExpr& e, const std::vector<std::string>& new_basis,
                    const std::map<std::string, std::string>& rename) {
    std::map<std::string, int> pos;
    for (std::size_t j = 0; j < new_basis.size(); ++j) pos[new_basis[j]] = static_cast<int>(j);
    std::vector<int> dest(e.basis.size(), -1);
    for (std::size_t j = 0; j < e.basis.size(); ++j) {
        auto rn = rename.find(e.basis[j]);
        const std::string& label = rn == rename.end() ? e.basis[j] : rn->second;
        auto it = pos.find(label);
        if (it != pos.end()) dest[j] = it->second;
    }
    LaurentExpr out;
    out.basis = new_basis;
    for (const auto& [m, c] : e.terms) {
        IVec mm(new_basis.size(), 0);
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (m[j] == 0) continue;
            if (dest[j] < 0)
                throw std::invalid_argument("reindex drops coordinate " + e.basis[j] +
                                            " carrying a nonzero exponent");
            mm[dest[j]] += m[j];
        }
        out.terms[mm] += c;
    }
    return out;
}

LaurentExpr binomial_twist(const LaurentExpr& e, int k,
                           const std::function<long long(const IVec&)>& delta) {
    if (e.terms.empty()) return e;
    if (k < 0 || k >= static_cast<int>(e.basis.size()))
        throw std::invalid_argument("twist coordinate out of range");
    long long shift = 0;  // extra power making every exponent of (1 + z_k) nonnegative
    for (const auto& [m, c] : e.terms) shift = std::max(shift, -delta(m));

    LaurentExpr num;
    num.basis = e.basis;
    for (const auto& [m, c] : e.terms) {
        long long p = delta(m) + shift;
        long long binom = 1;
        for (long long j = 0; j <= p; ++j) {
            IVec mm = m;
            mm[k] += j;
            num.terms[mm] += c * binom;
            binom = binom * (p - j) / (j + 1);
        }
    }
    for (auto it = num.terms.begin(); it != num.terms.end();)
        it = it->second == 0 ? num.terms.erase(it) : std::next(it);
    if (shift == 0) return num;

    // exact division by (1 + z_k)^shift, one univariate line at a time
    std::map<IVec, std::map<long long, long long>> lines;
    for (const auto& [m, c] : num.terms) {
        IVec r = m;
        long long j = r[k];
        r[k] = 0;
        lines[r][j] = c;
    }
    LaurentExpr out;
    out.basis = e.basis;
    for (auto& [r, line] : lines) {
        long long lo = line.begin()->first;
        std::vector<long long> coef(line.rbegin()->first - lo + 1, 0);
        for (const auto& [j, c] : line) coef[j - lo] = c;
        for (long long d = 0; d < shift; ++d) {
            if (coef.size() < 2)
                throw std::runtime_error("twist result is not a Laurent polynomial");
            std::vector<long long> q(coef.size() - 1, 0);
            q[0] = coef[0];
            for (std::size_t j = 1; j < q.size(); ++j) q[j] = coef[j] - q[j - 1];
            if (coef.back() != q.back())
                throw std::runtime_error("twist result is not a Laurent polynomial");
            coef = std::move(q);
        }
        for (std::size_t j = 0; j < coef.size(); ++j) {
            if (coef[j] == 0) continue;
            IVec m = r;
            m[k] = lo + static_cast<long long>(j);
            out.terms[m] = coef[j];
        }
    }
    return out;
}

LaurentExpr pullback(const LaurentExpr& e, const Seed& seed_before, int k) {
    if (static_cast<int>(e.basis.size()) != seed_before.dim())
        throw std::invalid_argument("expression dimension does not match the seed");
    LaurentExpr conv = convert_all(e, seed_before, k);
    return binomial_twist(
        conv, k, [&](const IVec& m) { return -pairing_with_unit(m, seed_before, k); });
}

LaurentExpr transport_braid(const LaurentExpr& e, const Arrangement& arr, const FaceId& face) {
    check_basis(e, arr);
    int k = arr.face_index(face);
    if (k < 0) throw std::invalid_argument("no such face: " + face.str());
    auto move = arrangement::mutate(arr, face);
    LaurentExpr fwd = forward_core(e, seed_of(arr), k);
    std::map<std::string, std::string> rename;
    for (const auto& [from, to] : move.label_map) rename[face_label(from)] = face_label(to);
    return reindex(fwd, basis_of(move.result), rename);
}

LaurentExpr transport_braid_cases(const LaurentExpr& e, const Arrangement& arr,
                                  const FaceId& face) {
    check_basis(e, arr);
    int k = arr.face_index(face);
    if (k < 0) throw std::invalid_argument("no such face: " + face.str());
    Seed s = seed_of(arr);
    std::vector<int> in_nbr, out_nbr;
    for (int i = 0; i < s.dim(); ++i) {
        if (s.eps[i][k] > 0) in_nbr.push_back(i);
        if (s.eps[k][i] > 0) out_nbr.push_back(i);
    }
    auto nonzero_among = [](const IVec& m, const std::vector<int>& idx) {
        int c = 0;
        for (int i : idx)
            if (m[i] != 0) ++c;
        return c;
    };
    LaurentExpr out;
    out.basis = e.basis;
    for (const auto& [m, c] : e.terms) {
        long long ak = m[k];
        int nin = nonzero_among(m, in_nbr), nout = nonzero_among(m, out_nbr);
        if (ak == 0 && nin == 0 && nout == 0) {
            out.terms[m] += c;
        } else if (nin == nout) {
            IVec mm = m;
            mm[k] += ak == -1 ? 1 : -1;
            out.terms[mm] += c;
        } else if (nin < nout) {
            out.terms[m] += c;
            IVec mm = m;
            mm[k] -= 1;
            out.terms[mm] += c;
        } else {  // nin > nout
            if (ak == 0) out.terms[m] += c;
            else if (ak != -1)
                throw std::runtime_error("term outside the transport shortcut table");
            // ak == -1 contributes nothing
        }
    }
    for (auto it = out.terms.begin(); it != out.terms.end();)
        it = it->second == 0 ? out.terms.erase(it) : std::next(it);
    auto move = arrangement::mutate(arr, face);
    std::map<std::string, std::string> rename;
    for (const auto& [from, to] : move.label_map) rename[face_label(from)] = face_label(to);
    return reindex(out, basis_of(move.result), rename);
}

LaurentExpr superpotential_initial(int n) {
    auto arr = arrangement::build(words::initial_word(n));
    const int dim = static_cast<int>(arr.faces.size());
    LaurentExpr w;
    w.basis = basis_of(arr);
    for (int i = 1; i <= n; ++i) {
        // chain walking the level-i faces inward from the right edge
        IVec v(dim, 0);
        for (int k = 0; k <= n - i; ++k) {
            v[arr.face_index(FaceId::pair(i, n + 1 - k))] -= 1;
            w.terms[v] += 1;
        }
        // chain starting at the band face and climbing the first staircase
        IVec u(dim, 0);
        u[arr.face_index(FaceId::band(i))] -= 1;
        w.terms[u] += 1;
        for (int k = 1; k <= n - i; ++k) {
            u[arr.face_index(FaceId::pair(k, i + k))] -= 1;
            w.terms[u] += 1;
        }
    }
    return w;
}

LaurentExpr superpotential_on(const words::ReducedWord& word0) {
    if (!words::is_reduced(word0)) throw std::invalid_argument("word is not reduced");
    if (!(words::permutation_of(word0) == words::longest_element(word0.n)))
        throw std::invalid_argument("word does not represent the longest element");
    const words::ReducedWord start = words::initial_word(word0.n);

    // breadth-first path through the word graph
    std::map<words::ReducedWord, std::pair<words::ReducedWord, words::LocalMove>> parent;
    std::deque<words::ReducedWord> queue{start};
    std::set<words::ReducedWord> seen{start};
    while (!queue.empty() && !seen.count(word0)) {
        words::ReducedWord cur = queue.front();
        queue.pop_front();
        for (const auto& mv : words::local_moves(cur)) {
            if (seen.count(mv.result)) continue;
            seen.insert(mv.result);
            parent.emplace(mv.result, std::make_pair(cur, mv));
            queue.push_back(mv.result);
        }
    }
    if (!seen.count(word0)) throw std::runtime_error("word graph search failed");
    std::vector<std::pair<words::ReducedWord, words::LocalMove>> path;
    for (words::ReducedWord cur = word0; !(cur == start);) {
        auto& [prev, mv] = parent.at(cur);
        path.emplace_back(prev, mv);
        cur = prev;
    }
    std::reverse(path.begin(), path.end());

    LaurentExpr expr = superpotential_initial(word0.n);
    for (const auto& [at, mv] : path) {
        auto arr = arrangement::build(at);
        if (mv.kind == words::MoveKind::commutation) {
            expr = reindex(expr, basis_of(arrangement::build(mv.result)));
        } else {
            const auto& c = arr.crossings[mv.position - 1];
            expr = transport_braid(expr, arr, FaceId::pair(c.a, c.b));
        }
    }
    return expr;
}

LaurentExpr restrict_potential(const LaurentExpr& big, const Arrangement& arr0,
                               const Arrangement& arr_w) {
    check_basis(big, arr0);
    auto new_basis = basis_of(arr_w);
    std::map<std::string, int> pos;
    for (std::size_t j = 0; j < new_basis.size(); ++j) pos[new_basis[j]] = static_cast<int>(j);
    std::vector<int> dest(big.basis.size(), -1);
    for (std::size_t j = 0; j < big.basis.size(); ++j) {
        auto it = pos.find(big.basis[j]);
        if (it != pos.end()) dest[j] = it->second;
    }
    LaurentExpr out;
    out.basis = new_basis;
    for (const auto& [m, c] : big.terms) {
        IVec mm(new_basis.size(), 0);
        bool keep = true;
        for (std::size_t j = 0; j < m.size() && keep; ++j) {
            if (m[j] == 0) continue;
            if (dest[j] < 0) keep = false;
            else mm[dest[j]] = m[j];
        }
        if (keep) out.terms[mm] += c;
    }
    return out;
}

cones::HCone tropicalize(const LaurentExpr& e, const cones::CoordSpace& space) {
    if (e.basis != space.labels)
        throw std::invalid_argument("expression basis does not match the coordinate space");
    cones::HCone cone;
    cone.space = space;
    for (const auto& [m, c] : e.terms) cone.normals.push_back(m);
    return cone;
}

OptimizedSeed optimized_seed_for(const Seed& start, int frozen_vertex) {
    if (frozen_vertex < 0 || frozen_vertex >= start.dim())
        throw std::invalid_argument("vertex out of range");
    long long cap = 12;
    if (const char* env = std::getenv("SCL_DEPTH_CAP")) cap = std::atoll(env);
    auto optimized = [&](const Seed& s) {
        for (int j = 0; j < s.dim(); ++j)
            if (s.eps[frozen_vertex][j] > 0) return false;
        return true;
    };
    std::deque<OptimizedSeed> queue{{start, {}}};
    std::set<std::vector<std::vector<long long>>> seen{start.eps};
    while (!queue.empty()) {
        OptimizedSeed cur = std::move(queue.front());
        queue.pop_front();
        if (optimized(cur.seed)) return cur;
        if (static_cast<long long>(cur.mutations.size()) >= cap) continue;
        for (int k = 0; k < start.dim(); ++k) {
            if (start.frozen[k]) continue;
            Seed next = mutate_seed(cur.seed, k);
            if (!seen.insert(next.eps).second) continue;
            auto muts = cur.mutations;
            muts.push_back(k);
            queue.push_back({std::move(next), std::move(muts)});
        }
    }
    throw std::runtime_error("no optimized seed found for " + start.vertices[frozen_vertex].str() +
                             " within the mutation depth cap");
}

LaurentExpr ghkk_potential(const Arrangement& arr) {
    Seed s0 = seed_of(arr);
    LaurentExpr total;
    total.basis = basis_of(arr);
    for (int f = 0; f < s0.dim(); ++f) {
        if (!s0.frozen[f]) continue;
        auto opt = optimized_seed_for(s0, f);
        std::vector<Seed> chain{s0};
        for (int k : opt.mutations) chain.push_back(mutate_seed(chain.back(), k));
        IVec m(s0.dim(), 0);
        m[f] = -1;
        LaurentExpr theta = monomial(total.basis, m);
        for (std::size_t j = opt.mutations.size(); j-- > 0;)
            theta = pullback(theta, chain[j], opt.mutations[j]);
        total = add(total, theta);
    }
    return total;
}

}  // namespace cluster
