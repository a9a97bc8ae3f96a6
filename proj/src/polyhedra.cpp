#include "polyhedra.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace polyhedra {

namespace {

void check_dim(int dim, const QVec& v, const char* what) {
    if (static_cast<int>(v.size()) != dim)
        throw std::invalid_argument(std::string(what) + ": expected dimension " +
                                    std::to_string(dim) + ", got " + std::to_string(v.size()));
}

Rational dot(const QVec& a, const QVec& b) {
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/**
 * Full-tableau exact simplex on the standard form
 *     min c.x   subject to   A x = b,  x >= 0,
 * with Bland's smallest-index rule (no cycling).
 */
class StandardSimplex {
public:
    StandardSimplex(std::vector<QVec> a, QVec b, QVec c)
        : m_(static_cast<int>(a.size())), n_(m_ ? static_cast<int>(a[0].size()) : static_cast<int>(c.size())),
          rows_(std::move(a)), rhs_(std::move(b)), cost_(std::move(c)) {}

    enum class Status { optimal, infeasible, unbounded };

    Status solve() {
        // Make every right-hand side nonnegative before adding artificials.
        for (int i = 0; i < m_; ++i)
            if (rhs_[i] < 0) {
                for (auto& v : rows_[i]) v = -v;
                rhs_[i] = -rhs_[i];
            }
        // Phase 1: artificial variables n_..n_+m_-1 with unit columns.
        for (int i = 0; i < m_; ++i) {
            rows_[i].resize(n_ + m_, 0);
            rows_[i][n_ + i] = 1;
        }
        basis_.resize(m_);
        for (int i = 0; i < m_; ++i) basis_[i] = n_ + i;
        obj_.assign(n_ + m_, 0);
        obj_value_ = 0;
        for (int j = n_; j < n_ + m_; ++j) obj_[j] = 1;
        for (int i = 0; i < m_; ++i) reduce_objective_by_row(i);
        if (iterate(n_ + m_) == Status::unbounded)
            throw std::runtime_error("phase-1 objective unbounded: internal error");
        if (obj_value_ != 0) return Status::infeasible;
        drive_out_artificials();
        // Phase 2 with the real costs over the original variables.
        obj_.assign(n_, 0);
        for (int j = 0; j < n_ && j < static_cast<int>(cost_.size()); ++j) obj_[j] = cost_[j];
        for (auto& row : rows_) row.resize(n_);
        obj_value_ = 0;
        for (int i = 0; i < m_; ++i)
            if (basis_[i] < n_) reduce_objective_by_row(i);
        return iterate(n_);
    }

    Rational objective() const { return -obj_value_; }

    QVec solution() const {
        QVec x(n_, 0);
        for (int i = 0; i < m_; ++i)
            if (basis_[i] < n_) x[basis_[i]] = rhs_[i];
        return x;
    }

private:
    void reduce_objective_by_row(int i) {
        const Rational factor = obj_[basis_[i]];
        if (factor == 0) return;
        for (size_t j = 0; j < obj_.size() && j < rows_[i].size(); ++j) obj_[j] -= factor * rows_[i][j];
        obj_value_ -= factor * rhs_[i];
    }

    void pivot(int r, int c) {
        const Rational p = rows_[r][c];
        for (auto& v : rows_[r]) v /= p;
        rhs_[r] /= p;
        for (int i = 0; i < m_; ++i) {
            if (i == r || rows_[i][c] == 0) continue;
            const Rational f = rows_[i][c];
            for (size_t j = 0; j < rows_[i].size(); ++j) rows_[i][j] -= f * rows_[r][j];
            rhs_[i] -= f * rhs_[r];
        }
        if (obj_[c] != 0) {
            const Rational f = obj_[c];
            for (size_t j = 0; j < obj_.size() && j < rows_[r].size(); ++j) obj_[j] -= f * rows_[r][j];
            obj_value_ -= f * rhs_[r];
        }
        basis_[r] = c;
    }

    Status iterate(int ncols) {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < ncols; ++j)
                if (obj_[j] < 0) { enter = j; break; }  // Bland: smallest index
            if (enter < 0) return Status::optimal;
            int leave = -1;
            Rational best;
            for (int i = 0; i < m_; ++i) {
                if (rows_[i][enter] <= 0) continue;
                Rational ratio = rhs_[i] / rows_[i][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) return Status::unbounded;
            pivot(leave, enter);
        }
    }

    void drive_out_artificials() {
        for (int i = 0; i < m_; ++i) {
            if (basis_[i] < n_) continue;
            int col = -1;
            for (int j = 0; j < n_; ++j)
                if (rows_[i][j] != 0) { col = j; break; }
            if (col >= 0) {
                pivot(i, col);
            } else {
                // Redundant constraint: remove the row entirely.
                rows_.erase(rows_.begin() + i);
                rhs_.erase(rhs_.begin() + i);
                basis_.erase(basis_.begin() + i);
                --m_;
                --i;
            }
        }
    }

    int m_, n_;
    std::vector<QVec> rows_;
    QVec rhs_;
    QVec cost_;
    QVec obj_;
    Rational obj_value_;
    std::vector<int> basis_;
};

/** One working row of a Fourier-Motzkin elimination: a.x >= rhs. */
struct FmRow {
    QVec a;
    Rational rhs;
    QVec mult;  ///< provenance over the original rows (empty when not tracked)
};

/** Scale to a canonical integer form for deduplication (orientation kept). */
std::pair<IVec, Rational> fm_canonical_key(const FmRow& row) {
    Int lcm = 1;
    for (const auto& v : row.a) lcm = boost::multiprecision::lcm(lcm, Int(denominator(v)));
    Int g = 0;
    std::vector<Int> scaled(row.a.size());
    for (size_t j = 0; j < row.a.size(); ++j) {
        scaled[j] = Int(numerator(row.a[j])) * (lcm / Int(denominator(row.a[j])));
        g = boost::multiprecision::gcd(g, scaled[j]);
    }
    if (g == 0) g = 1;
    IVec key(row.a.size());
    for (size_t j = 0; j < row.a.size(); ++j) key[j] = static_cast<long long>(scaled[j] / g);
    return {key, row.rhs * Rational(lcm) / Rational(g)};
}

/**
 * Drop duplicates (keeping the strongest right-hand side) and trivial rows;
 * a zero-coefficient row with positive rhs marks the system infeasible and is
 * kept so callers can detect the contradiction.
 */
std::vector<FmRow> fm_prune(std::vector<FmRow> rows) {
    std::map<IVec, size_t> seen;
    std::vector<FmRow> out;
    for (auto& row : rows) {
        auto [key, scaled_rhs] = fm_canonical_key(row);
        const bool zero = std::all_of(key.begin(), key.end(), [](long long v) { return v == 0; });
        if (zero) {
            if (row.rhs > 0) out.push_back(std::move(row));  // contradiction marker
            continue;
        }
        // Rescale so equal directions become comparable by rhs.
        auto it = seen.find(key);
        if (it == seen.end()) {
            seen.emplace(key, out.size());
            FmRow canon;
            canon.a.assign(key.begin(), key.end());
            canon.rhs = scaled_rhs;
            canon.mult = std::move(row.mult);
            // Renormalize provenance to match the rescaled row.
            if (!canon.mult.empty()) {
                Rational factor = 0;
                for (size_t j = 0; j < row.a.size(); ++j)
                    if (row.a[j] != 0) { factor = Rational(canon.a[j]) / row.a[j]; break; }
                for (auto& m : canon.mult) m *= factor;
            }
            out.push_back(std::move(canon));
        } else {
            FmRow& kept = out[it->second];
            if (scaled_rhs > kept.rhs) {
                kept.rhs = scaled_rhs;
                if (!row.mult.empty()) {
                    Rational factor = 0;
                    for (size_t j = 0; j < row.a.size(); ++j)
                        if (row.a[j] != 0) { factor = Rational(kept.a[j]) / row.a[j]; break; }
                    kept.mult = std::move(row.mult);
                    for (auto& m : kept.mult) m *= factor;
                }
            }
        }
    }
    return out;
}

/** Eliminate variable k (0-based) from rows over x_0..x_k. */
std::vector<FmRow> fm_eliminate_var(const std::vector<FmRow>& rows, int k) {
    std::vector<const FmRow*> lower, upper;
    std::vector<FmRow> out;
    for (const auto& row : rows) {
        if (row.a[k] > 0) lower.push_back(&row);
        else if (row.a[k] < 0) upper.push_back(&row);
        else out.push_back(row);
    }
    for (const auto* lo : lower)
        for (const auto* up : upper) {
            // positive combination cancelling x_k: (-up.a[k])*lo + (lo.a[k])*up
            const Rational cl = -up->a[k], cu = lo->a[k];
            FmRow combo;
            combo.a.resize(rows.empty() ? 0 : lo->a.size());
            for (size_t j = 0; j < combo.a.size(); ++j) combo.a[j] = cl * lo->a[j] + cu * up->a[j];
            combo.a[k] = 0;
            combo.rhs = cl * lo->rhs + cu * up->rhs;
            if (!lo->mult.empty()) {
                combo.mult.resize(lo->mult.size());
                for (size_t j = 0; j < combo.mult.size(); ++j)
                    combo.mult[j] = cl * lo->mult[j] + cu * up->mult[j];
            }
            out.push_back(std::move(combo));
        }
    return fm_prune(std::move(out));
}

struct FmLadder {
    int dim = 0;
    /// level[k] = rows touching only x_0..x_{k-1}; level[dim] is the input.
    std::vector<std::vector<FmRow>> level;
    bool feasible = true;     ///< over the rationals
    int unbounded_var = -1;   ///< first variable missing a bound direction, -1 if none
};

FmLadder fm_build(int dim, std::vector<FmRow> rows) {
    FmLadder ladder;
    ladder.dim = dim;
    ladder.level.resize(dim + 1);
    ladder.level[dim] = fm_prune(std::move(rows));
    for (int k = dim; k >= 1; --k) {
        bool has_lower = false, has_upper = false;
        for (const auto& row : ladder.level[k]) {
            if (row.a[k - 1] > 0) has_lower = true;
            else if (row.a[k - 1] < 0) has_upper = true;
        }
        if ((!has_lower || !has_upper) && ladder.unbounded_var < 0) ladder.unbounded_var = k - 1;
        ladder.level[k - 1] = fm_eliminate_var(ladder.level[k], k - 1);
    }
    for (const auto& row : ladder.level[0])
        if (row.rhs > 0) ladder.feasible = false;
    return ladder;
}

/** Bounds for x_{k-1} in level[k] given fixed values of x_0..x_{k-2}. */
struct Interval {
    bool has_lo = false, has_hi = false;
    Rational lo, hi;
};

/**
 * Ladder built in a greedy elimination order: at each step the variable with
 * the fewest lower*upper row pairings goes first.  Dense systems that explode
 * under the fixed order usually stay small this way.
 */
struct OrderedLadder {
    /// level[k] holds rows touching only the k variables still uneliminated.
    std::vector<std::vector<FmRow>> level;
    /// assign_order[s] = variable to enumerate at stage s, bounded by level[s+1].
    std::vector<int> assign_order;
    bool feasible = true;
    int unbounded_var = -1;
};

OrderedLadder fm_build_greedy(int dim, std::vector<FmRow> rows) {
    OrderedLadder lad;
    lad.level.resize(dim + 1);
    lad.level[dim] = fm_prune(std::move(rows));
    std::vector<char> alive(dim, 1);
    std::vector<int> elim;
    for (int k = dim; k >= 1; --k) {
        const auto& cur = lad.level[k];
        int best = -1;
        long long best_cost = 0;
        bool best_lower = false, best_upper = false;
        for (int v = 0; v < dim; ++v) {
            if (!alive[v]) continue;
            long long nl = 0, nu = 0;
            for (const auto& row : cur) {
                if (row.a[v] > 0) ++nl;
                else if (row.a[v] < 0) ++nu;
            }
            long long cost = nl * nu;
            if (best < 0 || cost < best_cost) {
                best = v;
                best_cost = cost;
                best_lower = nl > 0;
                best_upper = nu > 0;
            }
        }
        alive[best] = 0;
        elim.push_back(best);
        if ((!best_lower || !best_upper) && lad.unbounded_var < 0) lad.unbounded_var = best;
        lad.level[k - 1] = fm_eliminate_var(cur, best);
    }
    for (const auto& row : lad.level[0])
        if (row.rhs > 0) lad.feasible = false;
    lad.assign_order.assign(elim.rbegin(), elim.rend());
    return lad;
}

/** Bounds for variable v from rows whose other touched variables are all set. */
Interval fm_interval_at(const std::vector<FmRow>& rows, int v, const QVec& values) {
    Interval iv;
    for (const auto& row : rows) {
        if (row.a[v] == 0) continue;
        Rational rest = row.rhs;
        for (size_t j = 0; j < row.a.size(); ++j)
            if (static_cast<int>(j) != v && row.a[j] != 0) rest -= row.a[j] * values[j];
        Rational bound = rest / row.a[v];
        if (row.a[v] > 0) {
            if (!iv.has_lo || bound > iv.lo) { iv.lo = bound; iv.has_lo = true; }
        } else {
            if (!iv.has_hi || bound < iv.hi) { iv.hi = bound; iv.has_hi = true; }
        }
    }
    return iv;
}

Interval fm_interval(const std::vector<FmRow>& rows, int k, const QVec& prefix) {
    Interval iv;
    for (const auto& row : rows) {
        if (row.a[k - 1] == 0) continue;
        Rational rest = row.rhs;
        for (int j = 0; j + 1 < k; ++j) rest -= row.a[j] * prefix[j];
        Rational bound = rest / row.a[k - 1];
        if (row.a[k - 1] > 0) {
            if (!iv.has_lo || bound > iv.lo) { iv.lo = bound; iv.has_lo = true; }
        } else {
            if (!iv.has_hi || bound < iv.hi) { iv.hi = bound; iv.has_hi = true; }
        }
    }
    return iv;
}

std::vector<FmRow> rows_of_system(const HSystem& sys) {
    std::vector<FmRow> rows;
    for (const auto& a : sys.ineqs) rows.push_back({a, 0, {}});
    for (const auto& [b, c] : sys.eqs) {
        rows.push_back({b, c, {}});
        QVec neg(b.size());
        for (size_t j = 0; j < b.size(); ++j) neg[j] = -b[j];
        rows.push_back({std::move(neg), -c, {}});
    }
    return rows;
}

}  // namespace

Int floor_rat(const Rational& r) {
    Int num(numerator(r)), den(denominator(r));
    Int q = num / den;
    if (q * den != num && num < 0) --q;
    return q;
}

Int ceil_rat(const Rational& r) {
    Int num(numerator(r)), den(denominator(r));
    Int q = num / den;
    if (q * den != num && num > 0) ++q;
    return q;
}

void HSystem::add_ineq(QVec a) {
    check_dim(dim, a, "inequality row");
    ineqs.push_back(std::move(a));
}

void HSystem::add_eq(QVec b, Rational c) {
    check_dim(dim, b, "equality row");
    eqs.emplace_back(std::move(b), std::move(c));
}

HSystem system_from_rows(int dim, const std::vector<IVec>& rows) {
    HSystem sys(dim);
    for (const auto& row : rows) {
        QVec q(row.begin(), row.end());
        sys.add_ineq(std::move(q));
    }
    return sys;
}

IVec primitive(IVec v) {
    long long g = 0;
    for (long long x : v) g = std::gcd(g, x);
    if (g > 1)
        for (long long& x : v) x /= g;
    return v;
}

std::vector<IVec> canonical_rows(std::vector<IVec> rows) {
    std::vector<IVec> out;
    for (auto& row : rows) {
        IVec p = primitive(std::move(row));
        if (std::all_of(p.begin(), p.end(), [](long long v) { return v == 0; })) continue;
        out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

LpResult lp_minimize(const std::vector<QVec>& a, const QVec& b, const QVec& c) {
    const int m = static_cast<int>(a.size());
    const int d = static_cast<int>(c.size());
    // Free x = u - v with slacks s: A(u - v) - s = b over nonnegative (u, v, s).
    std::vector<QVec> rows(m, QVec(2 * d + m, 0));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < d; ++j) {
            rows[i][j] = a[i][j];
            rows[i][d + j] = -a[i][j];
        }
        rows[i][2 * d + i] = -1;
    }
    QVec cost(2 * d + m, 0);
    for (int j = 0; j < d; ++j) {
        cost[j] = c[j];
        cost[d + j] = -c[j];
    }
    StandardSimplex simplex(std::move(rows), b, std::move(cost));
    LpResult result;
    switch (simplex.solve()) {
        case StandardSimplex::Status::infeasible:
            result.status = LpResult::Status::infeasible;
            return result;
        case StandardSimplex::Status::unbounded:
            result.status = LpResult::Status::unbounded;
            return result;
        case StandardSimplex::Status::optimal:
            break;
    }
    result.status = LpResult::Status::optimal;
    result.value = simplex.objective();
    QVec std_x = simplex.solution();
    result.x.resize(d);
    for (int j = 0; j < d; ++j) result.x[j] = std_x[j] - std_x[d + j];
    return result;
}

std::optional<QVec> conic_combination(const std::vector<QVec>& rows, const QVec& target) {
    const int m = static_cast<int>(rows.size());
    const int d = static_cast<int>(target.size());
    // Feasibility of  sum_i y_i rows[i] = target,  y >= 0.
    std::vector<QVec> a(d, QVec(m, 0));
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(rows[i].size()) != d)
            throw std::invalid_argument("conic_combination: row dimension mismatch");
        for (int j = 0; j < d; ++j) a[j][i] = rows[i][j];
    }
    StandardSimplex simplex(std::move(a), target, QVec(m, 0));
    if (simplex.solve() != StandardSimplex::Status::optimal) return std::nullopt;
    return simplex.solution();
}

ImplicationResult implies_simplex(const HSystem& sys, const QVec& target) {
    check_dim(sys.dim, target, "implication target");
    if (!sys.eqs.empty())
        throw std::invalid_argument("implies: homogeneous (cone) systems only");
    ImplicationResult result;
    if (auto mult = conic_combination(sys.ineqs, target)) {
        result.implied = true;
        result.multipliers = std::move(*mult);
        return result;
    }
    // Separating point: minimize target.x over the cone cut to a box.
    std::vector<QVec> rows = sys.ineqs;
    QVec rhs(rows.size(), 0);
    for (int j = 0; j < sys.dim; ++j) {
        QVec lo(sys.dim, 0), hi(sys.dim, 0);
        lo[j] = 1;   // x_j >= -1
        hi[j] = -1;  // -x_j >= -1
        rows.push_back(std::move(lo));
        rhs.push_back(-1);
        rows.push_back(std::move(hi));
        rhs.push_back(-1);
    }
    LpResult lp = lp_minimize(rows, rhs, target);
    if (lp.status != LpResult::Status::optimal || lp.value >= 0)
        throw std::runtime_error("implies: no certificate and no separating point (internal error)");
    result.implied = false;
    result.separating = std::move(lp.x);
    return result;
}

namespace {

ImplicationResult implies_fm(const HSystem& sys, const QVec& target) {
    const int m = static_cast<int>(sys.ineqs.size());
    std::vector<FmRow> rows;
    rows.reserve(m + 1);
    for (int i = 0; i < m; ++i) {
        QVec mult(m + 1, 0);
        mult[i] = 1;
        rows.push_back({sys.ineqs[i], 0, std::move(mult)});
    }
    // target.x <= -1, i.e. (-target).x >= 1: infeasible iff implied.
    QVec neg(target.size());
    for (size_t j = 0; j < target.size(); ++j) neg[j] = -target[j];
    QVec tmult(m + 1, 0);
    tmult[m] = 1;
    rows.push_back({std::move(neg), 1, std::move(tmult)});

    FmLadder ladder = fm_build(sys.dim, std::move(rows));
    ImplicationResult result;
    if (!ladder.feasible) {
        // A contradiction row certifies the implication; rescale by the
        // multiplier of the target row to express target as a combination.
        for (const auto& row : ladder.level[0]) {
            if (row.rhs <= 0) continue;
            const Rational lt = row.mult[m];
            if (lt <= 0) continue;
            result.implied = true;
            result.multipliers.resize(m);
            for (int i = 0; i < m; ++i) result.multipliers[i] = row.mult[i] / lt;
            return result;
        }
        throw std::runtime_error("implies: contradiction without target multiplier (internal error)");
    }
    // Feasible: back-substitute any rational point; it separates.
    QVec point(sys.dim, 0);
    for (int k = 1; k <= sys.dim; ++k) {
        Interval iv = fm_interval(ladder.level[k], k, point);
        Rational value = 0;
        if (iv.has_lo && iv.has_hi) value = (iv.lo + iv.hi) / 2;
        else if (iv.has_lo) value = iv.lo + 1;
        else if (iv.has_hi) value = iv.hi - 1;
        point[k - 1] = value;
    }
    result.implied = false;
    result.separating = std::move(point);
    return result;
}

}  // namespace

ImplicationResult implies(const HSystem& sys, const QVec& target) {
    check_dim(sys.dim, target, "implication target");
    if (!sys.eqs.empty())
        throw std::invalid_argument("implies: homogeneous (cone) systems only");
    ImplicationResult result = (sys.dim <= 12) ? implies_fm(sys, target) : implies_simplex(sys, target);
    // Certificates are cheap to verify; do it unconditionally.
    if (result.implied) {
        QVec recon(sys.dim, 0);
        for (size_t i = 0; i < sys.ineqs.size(); ++i) {
            if (result.multipliers[i] < 0)
                throw std::runtime_error("implies: negative Farkas multiplier (internal error)");
            for (int j = 0; j < sys.dim; ++j) recon[j] += result.multipliers[i] * sys.ineqs[i][j];
        }
        if (recon != target)
            throw std::runtime_error("implies: certificate does not reproduce the target (internal error)");
    } else {
        for (const auto& row : sys.ineqs)
            if (dot(row, result.separating) < 0)
                throw std::runtime_error("implies: separating point leaves the cone (internal error)");
        if (dot(target, result.separating) >= 0)
            throw std::runtime_error("implies: separating point fails to separate (internal error)");
    }
    return result;
}

ConesEqualResult cones_equal(const HSystem& a, const HSystem& b) {
    if (a.dim != b.dim) throw std::invalid_argument("cones_equal: dimension mismatch");
    ConesEqualResult result;
    for (size_t i = 0; i < b.ineqs.size(); ++i) {
        ImplicationResult imp = implies(a, b.ineqs[i]);
        if (!imp.implied) {
            result.equal = false;
            result.witness_in_a = true;
            result.failing_row = static_cast<int>(i);
            result.witness = std::move(imp.separating);
            return result;
        }
    }
    for (size_t i = 0; i < a.ineqs.size(); ++i) {
        ImplicationResult imp = implies(b, a.ineqs[i]);
        if (!imp.implied) {
            result.equal = false;
            result.witness_in_a = false;
            result.failing_row = static_cast<int>(i);
            result.witness = std::move(imp.separating);
            return result;
        }
    }
    result.equal = true;
    return result;
}

ImplicationResult contains(const HSystem& inner, const std::vector<QVec>& outer_rows, int* failing) {
    for (size_t i = 0; i < outer_rows.size(); ++i) {
        ImplicationResult imp = implies(inner, outer_rows[i]);
        if (!imp.implied) {
            if (failing) *failing = static_cast<int>(i);
            return imp;
        }
    }
    ImplicationResult ok;
    ok.implied = true;
    return ok;
}

bool accepts(const HSystem& sys, const QVec& point) {
    check_dim(sys.dim, point, "point");
    for (const auto& a : sys.ineqs)
        if (dot(a, point) < 0) return false;
    for (const auto& [b, c] : sys.eqs)
        if (dot(b, point) != c) return false;
    return true;
}

std::vector<std::vector<Int>> lattice_points(const HSystem& sys) {
    // Substitute out the variables pinned by the equalities first; the
    // elimination ladder then only sees the genuinely free coordinates, which
    // keeps the row growth manageable in higher rank.
    std::vector<QVec> eq_rows;       // reduced row echelon form, unit pivots
    std::vector<Rational> eq_rhs;
    std::vector<int> pivots;
    for (const auto& [b0, c0] : sys.eqs) {
        QVec b = b0;
        Rational c = c0;
        for (size_t r = 0; r < eq_rows.size(); ++r) {
            Rational f = b[pivots[r]];
            if (f == 0) continue;
            for (int j = 0; j < sys.dim; ++j) b[j] -= f * eq_rows[r][j];
            c -= f * eq_rhs[r];
        }
        int p = -1;
        for (int j = 0; j < sys.dim; ++j)
            if (b[j] != 0) { p = j; break; }
        if (p < 0) {
            if (c != 0) return {};  // inconsistent equalities: empty region
            continue;
        }
        Rational lead = b[p];
        for (int j = 0; j < sys.dim; ++j) b[j] /= lead;
        c /= lead;
        for (size_t r = 0; r < eq_rows.size(); ++r) {
            Rational g = eq_rows[r][p];
            if (g == 0) continue;
            for (int j = 0; j < sys.dim; ++j) eq_rows[r][j] -= g * b[j];
            eq_rhs[r] -= g * c;
        }
        eq_rows.push_back(std::move(b));
        eq_rhs.push_back(c);
        pivots.push_back(p);
    }
    std::vector<char> is_pivot(sys.dim, 0);
    for (int p : pivots) is_pivot[p] = 1;
    std::vector<int> free_cols;
    for (int j = 0; j < sys.dim; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    const int fdim = static_cast<int>(free_cols.size());

    // Inequality a.x >= 0 with x_p = eq_rhs[r] - sum_{free j} eq_rows[r][j] x_j
    // becomes a'.x_free >= rhs' over the free coordinates.
    std::vector<FmRow> rows;
    for (const auto& a : sys.ineqs) {
        FmRow row;
        row.a.resize(fdim);
        row.rhs = 0;
        for (size_t r = 0; r < eq_rows.size(); ++r) row.rhs -= a[pivots[r]] * eq_rhs[r];
        for (int t = 0; t < fdim; ++t) {
            Rational coef = a[free_cols[t]];
            for (size_t r = 0; r < eq_rows.size(); ++r)
                coef -= a[pivots[r]] * eq_rows[r][free_cols[t]];
            row.a[t] = coef;
        }
        rows.push_back(std::move(row));
    }

    OrderedLadder ladder = fm_build_greedy(fdim, std::move(rows));
    if (!ladder.feasible) return {};
    if (ladder.unbounded_var >= 0)
        throw std::domain_error("lattice_points: region is unbounded in coordinate " +
                                std::to_string(free_cols[ladder.unbounded_var]));
    std::vector<std::vector<Int>> points;
    std::vector<Int> current(fdim);
    QVec values(fdim, 0);
    auto emit = [&] {
        std::vector<Int> full(sys.dim);
        for (int t = 0; t < fdim; ++t) full[free_cols[t]] = current[t];
        for (size_t r = 0; r < eq_rows.size(); ++r) {
            Rational v = eq_rhs[r];
            for (int t = 0; t < fdim; ++t) v -= eq_rows[r][free_cols[t]] * values[t];
            if (denominator(v) != 1) return;  // pinned coordinate not integral here
            full[pivots[r]] = Int(numerator(v));
        }
        points.push_back(std::move(full));
    };
    auto recurse = [&](auto&& self, int stage) -> void {
        if (stage == fdim) {
            emit();
            return;
        }
        const int v = ladder.assign_order[stage];
        Interval iv = fm_interval_at(ladder.level[stage + 1], v, values);
        if (!iv.has_lo || !iv.has_hi)
            throw std::domain_error("lattice_points: unbounded fiber at coordinate " +
                                    std::to_string(free_cols[v]));
        Int lo = ceil_rat(iv.lo), hi = floor_rat(iv.hi);
        for (Int x = lo; x <= hi; ++x) {
            current[v] = x;
            values[v] = Rational(x);
            self(self, stage + 1);
        }
    };
    recurse(recurse, 0);
    return points;
}

CoordinateBounds coordinate_bounds(const HSystem& sys, int coordinate) {
    if (coordinate < 0 || coordinate >= sys.dim)
        throw std::invalid_argument("coordinate_bounds: index out of range");
    std::vector<QVec> rows = sys.ineqs;
    QVec rhs(rows.size(), 0);
    for (const auto& [b, c] : sys.eqs) {
        rows.push_back(b);
        rhs.push_back(c);
        QVec neg(b.size());
        for (size_t j = 0; j < b.size(); ++j) neg[j] = -b[j];
        rows.push_back(std::move(neg));
        rhs.push_back(-c);
    }
    CoordinateBounds bounds;
    QVec c(sys.dim, 0);
    c[coordinate] = 1;
    LpResult lo = lp_minimize(rows, rhs, c);
    if (lo.status == LpResult::Status::optimal) {
        bounds.bounded_below = true;
        bounds.lo = lo.value;
    }
    c[coordinate] = -1;
    LpResult hi = lp_minimize(rows, rhs, c);
    if (hi.status == LpResult::Status::optimal) {
        bounds.bounded_above = true;
        bounds.hi = -hi.value;
    }
    return bounds;
}

Int determinant(const std::vector<IVec>& m) {
    const int n = static_cast<int>(m.size());
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("determinant: matrix is not square");
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) { swap_row = i; break; }
            if (swap_row < 0) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return n == 0 ? Int(1) : Int(sign) * a[n - 1][n - 1];
}

bool is_unimodular(const std::vector<IVec>& m) {
    Int d = determinant(m);
    return d == 1 || d == -1;
}

}  // namespace polyhedra
