#pragma once

#include <map>
#include <vector>

#include "polyhedra.hpp"
#include "words.hpp"

/**
 * Independent reference values for representation sizes.
 *
 * Three computations that share no code with the cone machinery: the product
 * formula for irreducible dimensions, a direct count of interlacing integer
 * triangles, and character recursion by isobaric divided differences.  They
 * cross-check each other and pin down what the lattice-point counts of the
 * sliced cones must be.
 */
namespace oracles {

using polyhedra::Int;

/** Product formula: prod over 1<=i<=j<=n of (lambda_i+..+lambda_j + j-i+1)/(j-i+1). */
Int weyl_dim(int n, const std::vector<long long>& lambda);

/**
 * Number of triangular integer arrays with top row
 * (lambda_1+..+lambda_n, lambda_2+..+lambda_n, ..., lambda_n, 0), each row one
 * entry shorter and interlacing the row above.
 */
Int gt_count(int n, const std::vector<long long>& lambda);

/**
 * Character built by applying, rightmost letter first, the operator
 *   D_i x^a = x^a + x^(a-v) + ... + x^(s_i a)            (a_i >= a_{i+1})
 *   D_i x^a = 0                                          (a_i = a_{i+1} - 1)
 *   D_i x^a = -(x^(a+v) + ... + x^(s_i a - v))           (otherwise),
 * v = e_i - e_{i+1}, to the dominant monomial of lambda.  Keys are exponent
 * vectors in Z^{n+1}, values the (integer) multiplicities.
 */
std::map<std::vector<long long>, Int> demazure_character(const words::ReducedWord& word,
                                                         const std::vector<long long>& lambda);

/** Sum of the character's coefficients. */
Int demazure_dim(const words::ReducedWord& word, const std::vector<long long>& lambda);

}  // namespace oracles
