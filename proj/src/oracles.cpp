#include "oracles.hpp"

#include <functional>
#include <stdexcept>

namespace oracles {

using polyhedra::Rational;

namespace {

void check_lambda(int n, const std::vector<long long>& lambda) {
    if (static_cast<int>(lambda.size()) != n)
        throw std::invalid_argument("weight must have one entry per simple root");
    for (long long l : lambda)
        if (l < 0) throw std::invalid_argument("weight entries must be nonnegative");
}

}  // namespace

Int weyl_dim(int n, const std::vector<long long>& lambda) {
    check_lambda(n, lambda);
    Rational prod = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            long long s = 0;
            for (int k = i; k <= j; ++k) s += lambda[k - 1];
            prod *= Rational(s + (j - i + 1), j - i + 1);
        }
    if (denominator(prod) != 1) throw std::logic_error("dimension product is not integral");
    return numerator(prod);
}

Int gt_count(int n, const std::vector<long long>& lambda) {
    check_lambda(n, lambda);
    std::vector<long long> top(n + 1, 0);
    for (int j = 0; j < n; ++j)
        for (int k = j; k < n; ++k) top[j] += lambda[k];

    std::function<Int(const std::vector<long long>&)> count =
        [&](const std::vector<long long>& row) -> Int {
        if (row.size() <= 1) return 1;
        Int total = 0;
        std::vector<long long> next(row.size() - 1, 0);
        std::function<void(std::size_t)> fill = [&](std::size_t i) {
            if (i == next.size()) {
                total += count(next);
                return;
            }
            for (long long v = row[i + 1]; v <= row[i]; ++v) {
                next[i] = v;
                fill(i + 1);
            }
        };
        fill(0);
        return total;
    };
    return count(top);
}

std::map<std::vector<long long>, Int> demazure_character(const words::ReducedWord& word,
                                                         const std::vector<long long>& lambda) {
    words::validate_letters(word);
    check_lambda(word.n, lambda);
    const int n = word.n;
    std::vector<long long> a(n + 1, 0);
    for (int j = 0; j < n; ++j)
        for (int k = j; k < n; ++k) a[j] += lambda[k];

    std::map<std::vector<long long>, Int> f{{a, Int(1)}};
    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
        const int i = *it;  // act on exponents i, i+1 (1-based)
        std::map<std::vector<long long>, Int> g;
        for (const auto& [e, c] : f) {
            long long d = e[i - 1] - e[i];
            if (d >= 0) {
                for (long long t = 0; t <= d; ++t) {
                    auto e2 = e;
                    e2[i - 1] -= t;
                    e2[i] += t;
                    g[e2] += c;
                }
            } else if (d <= -2) {
                for (long long t = 1; t <= -d - 1; ++t) {
                    auto e2 = e;
                    e2[i - 1] += t;
                    e2[i] -= t;
                    g[e2] -= c;
                }
            }
            // d == -1 contributes nothing
        }
        for (auto jt = g.begin(); jt != g.end();)
            jt = jt->second == 0 ? g.erase(jt) : std::next(jt);
        f = std::move(g);
    }
    return f;
}

Int demazure_dim(const words::ReducedWord& word, const std::vector<long long>& lambda) {
    Int total = 0;
    for (const auto& [e, c] : demazure_character(word, lambda)) total += c;
    return total;
}

}  // namespace oracles
