#pragma once

#include <string>
#include <vector>

/**
 * Reduced words in the symmetric group S_{n+1}.
 *
 * Composition convention (fixed once, used everywhere): a word (i_1, ..., i_l)
 * acts on positions left to right — start from the identity one-line array and,
 * for each letter i, swap the entries at positions i and i+1.  Equivalently the
 * word evaluates to s_{i_1} o ... o s_{i_l} with the rightmost factor acting
 * first on points.
 */
namespace words {

/** One-line notation for an element of S_{n+1}; images[k] = w(k+1), 1-based values. */
struct Permutation {
    std::vector<int> images;

    static Permutation identity(int n);  ///< identity in S_{n+1}
    int degree() const { return static_cast<int>(images.size()); }  ///< n+1
    int operator()(int i) const;  ///< image of 1-based point i
    Permutation inverse() const;
    int inversions() const;  ///< Coxeter length
    bool is_identity() const;
    bool operator==(const Permutation&) const = default;
    bool operator<(const Permutation& other) const { return images < other.images; }
    std::string str() const;  ///< e.g. "[3,2,1]"
};

/** A word in the simple transpositions s_1..s_n of S_{n+1}. */
struct ReducedWord {
    int n = 0;                 ///< rank: the group is S_{n+1}
    std::vector<int> letters;  ///< generator indices, each in 1..n

    int length() const { return static_cast<int>(letters.size()); }
    bool operator==(const ReducedWord&) const = default;
    bool operator<(const ReducedWord& other) const;
    std::string str() const;  ///< e.g. "(1,2,1)"
};

/** Throws std::invalid_argument unless every letter lies in 1..n. */
void validate_letters(const ReducedWord& word);

/** Evaluate the word to a permutation (left-to-right position swaps). */
Permutation permutation_of(const ReducedWord& word);

/** True iff the word's length equals the inversion count of its permutation. */
bool is_reduced(const ReducedWord& word);

/** The longest element w0 (the order-reversing permutation). */
Permutation longest_element(int n);

/** The staircase word (1, 2,1, 3,2,1, ..., n,...,1) for w0. */
ReducedWord initial_word(int n);

enum class MoveKind { commutation, braid };

/** One local move: position is the leftmost letter of the changed pattern. */
struct LocalMove {
    int position = 0;  ///< 1-based
    MoveKind kind = MoveKind::commutation;
    ReducedWord result;
};

/** All words obtainable by a single commutation or braid move. */
std::vector<LocalMove> local_moves(const ReducedWord& word);

/**
 * Deterministic extension of a reduced word to a reduced word of w0 by
 * repeatedly appending the largest generator that increases the length.
 */
ReducedWord extend_to_w0(const ReducedWord& word);

/** All reduced words of a permutation (DFS over left descents); guard n <= 6. */
std::vector<ReducedWord> enumerate_reduced_words(const Permutation& perm);

/** All reduced words of w0 in S_{n+1}; guard n <= 6. */
std::vector<ReducedWord> reduced_words_of_w0(int n);

/**
 * Reproducible sample of distinct reduced words of w0, drawn from a seeded
 * random walk over local moves starting at the staircase word.
 */
std::vector<ReducedWord> sample_w0_words(int n, int count, unsigned seed);

}  // namespace words
