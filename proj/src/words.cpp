#include "words.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>

namespace words {

Permutation Permutation::identity(int n) {
    Permutation p;
    p.images.resize(n + 1);
    for (int i = 0; i <= n; ++i) p.images[i] = i + 1;
    return p;
}

int Permutation::operator()(int i) const {
    if (i < 1 || i > degree()) throw std::invalid_argument("Permutation: point out of range");
    return images[i - 1];
}

Permutation Permutation::inverse() const {
    Permutation p;
    p.images.resize(images.size());
    for (int i = 0; i < degree(); ++i) p.images[images[i] - 1] = i + 1;
    return p;
}

int Permutation::inversions() const {
    int count = 0;
    for (int i = 0; i < degree(); ++i)
        for (int j = i + 1; j < degree(); ++j)
            if (images[i] > images[j]) ++count;
    return count;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (images[i] != i + 1) return false;
    return true;
}

std::string Permutation::str() const {
    std::string s = "[";
    for (int i = 0; i < degree(); ++i) {
        if (i) s += ',';
        s += std::to_string(images[i]);
    }
    return s + "]";
}

bool ReducedWord::operator<(const ReducedWord& other) const {
    return std::tie(n, letters) < std::tie(other.n, other.letters);
}

std::string ReducedWord::str() const {
    std::string s = "(";
    for (size_t i = 0; i < letters.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(letters[i]);
    }
    return s + ")";
}

void validate_letters(const ReducedWord& word) {
    if (word.n < 1) throw std::invalid_argument("word: rank must be at least 1");
    for (int letter : word.letters)
        if (letter < 1 || letter > word.n)
            throw std::invalid_argument("word: letter " + std::to_string(letter) +
                                        " outside 1.." + std::to_string(word.n));
}

Permutation permutation_of(const ReducedWord& word) {
    validate_letters(word);
    Permutation p = Permutation::identity(word.n);
    for (int letter : word.letters) std::swap(p.images[letter - 1], p.images[letter]);
    return p;
}

bool is_reduced(const ReducedWord& word) {
    validate_letters(word);
    return word.length() == permutation_of(word).inversions();
}

Permutation longest_element(int n) {
    Permutation p;
    p.images.resize(n + 1);
    for (int i = 0; i <= n; ++i) p.images[i] = n + 1 - i;
    return p;
}

ReducedWord initial_word(int n) {
    ReducedWord word{n, {}};
    for (int block = 1; block <= n; ++block)
        for (int letter = block; letter >= 1; --letter) word.letters.push_back(letter);
    return word;
}

std::vector<LocalMove> local_moves(const ReducedWord& word) {
    std::vector<LocalMove> moves;
    const auto& w = word.letters;
    for (size_t j = 0; j + 1 < w.size(); ++j) {
        if (std::abs(w[j] - w[j + 1]) > 1) {
            LocalMove move{static_cast<int>(j + 1), MoveKind::commutation, word};
            std::swap(move.result.letters[j], move.result.letters[j + 1]);
            moves.push_back(std::move(move));
        }
    }
    for (size_t j = 0; j + 2 < w.size(); ++j) {
        if (w[j] == w[j + 2] && std::abs(w[j] - w[j + 1]) == 1) {
            LocalMove move{static_cast<int>(j + 1), MoveKind::braid, word};
            std::swap(move.result.letters[j], move.result.letters[j + 1]);
            move.result.letters[j + 2] = move.result.letters[j];
            moves.push_back(std::move(move));
        }
    }
    return moves;
}

ReducedWord extend_to_w0(const ReducedWord& word) {
    if (!is_reduced(word)) throw std::invalid_argument("extend_to_w0: word is not reduced");
    ReducedWord extended = word;
    Permutation p = permutation_of(word);
    for (;;) {
        int chosen = 0;
        for (int j = extended.n; j >= 1; --j)
            if (p.images[j - 1] < p.images[j]) { chosen = j; break; }
        if (chosen == 0) break;  // no ascent: p is already w0
        extended.letters.push_back(chosen);
        std::swap(p.images[chosen - 1], p.images[chosen]);
    }
    return extended;
}

namespace {

void enumerate_rec(Permutation& p, int n, std::vector<int>& prefix,
                   std::vector<ReducedWord>& out) {
    if (p.is_identity()) {
        out.push_back(ReducedWord{n, prefix});
        return;
    }
    Permutation inv = p.inverse();
    for (int i = 1; i <= n; ++i) {
        if (inv.images[i - 1] <= inv.images[i]) continue;  // i is not a left descent
        // Prepend s_i: replace p by s_i * p (swap the values i and i+1).
        std::swap(p.images[inv.images[i - 1] - 1], p.images[inv.images[i] - 1]);
        prefix.push_back(i);
        enumerate_rec(p, n, prefix, out);
        prefix.pop_back();
        std::swap(p.images[inv.images[i] - 1], p.images[inv.images[i - 1] - 1]);
    }
}

}  // namespace

std::vector<ReducedWord> enumerate_reduced_words(const Permutation& perm) {
    const int n = perm.degree() - 1;
    if (n > 6)
        throw std::invalid_argument("enumerate_reduced_words: rank " + std::to_string(n) +
                                    " exceeds the n <= 6 guard; use sampling instead");
    std::vector<char> hit(perm.degree(), 0);
    for (int v : perm.images) {
        if (v < 1 || v > perm.degree() || hit[v - 1])
            throw std::invalid_argument("enumerate_reduced_words: " + perm.str() +
                                        " is not a permutation in one-line notation");
        hit[v - 1] = 1;
    }
    std::vector<ReducedWord> out;
    std::vector<int> prefix;
    Permutation p = perm;
    enumerate_rec(p, n, prefix, out);
    // The DFS emits letters source-first, which is already word order; make the
    // output order canonical regardless of traversal details.
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ReducedWord> reduced_words_of_w0(int n) {
    return enumerate_reduced_words(longest_element(n));
}

std::vector<ReducedWord> sample_w0_words(int n, int count, unsigned seed) {
    std::mt19937 rng(seed);
    ReducedWord current = initial_word(n);
    std::set<ReducedWord> seen{current};
    std::vector<ReducedWord> out{current};
    int stall = 0;
    while (static_cast<int>(out.size()) < count && stall < 50000) {
        std::vector<LocalMove> moves = local_moves(current);
        if (moves.empty()) break;
        std::uniform_int_distribution<size_t> pick(0, moves.size() - 1);
        current = moves[pick(rng)].result;
        if (seen.insert(current).second) {
            out.push_back(current);
            stall = 0;
        } else {
            ++stall;
        }
    }
    if (static_cast<int>(out.size()) < count)
        throw std::runtime_error("sample_w0_words: walk stalled before reaching the requested count");
    return out;
}

}  // namespace words
