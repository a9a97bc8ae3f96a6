#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cluster.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

using namespace cluster;
using arrangement::Arrangement;
using arrangement::FaceId;
using polyhedra::IVec;
using words::ReducedWord;

namespace {

Arrangement sl4_word() { return arrangement::build(ReducedWord{3, {1, 2, 3, 2, 1}}); }

std::vector<std::string> face_labels(const Arrangement& arr) {
    return cones::face_space(arr, true).labels;
}

/** The canonicalized tropical rows of an expression over its arrangement. */
std::vector<IVec> trop_rows(const LaurentExpr& e, const Arrangement& arr) {
    return tropicalize(e, cones::face_space(arr, true)).canonicalized().normals;
}

} // namespace

// ---------------------------------------------------------------------------
// Laurent expression arithmetic
// ---------------------------------------------------------------------------

TEST_CASE("monomial, add, and mul behave like Laurent polynomials") {
    std::vector<std::string> basis = {"s", "t"};
    auto s = monomial(basis, {1, 0});
    auto t = monomial(basis, {0, 1});
    auto one = monomial(basis, {0, 0});

    SUBCASE("multiplication adds exponents") {
        auto st = mul(s, t);
        REQUIRE(st.size() == 1);
        CHECK(st.terms.at({1, 1}) == 1);
    }
    SUBCASE("addition merges and cancels") {
        auto sum = add(s, s);
        CHECK(sum.terms.at({1, 0}) == 2);
        auto zero = add(s, monomial(basis, {1, 0}, -1));
        CHECK(zero.size() == 0);
    }
    SUBCASE("a difference of squares expands correctly") {
        auto lhs = mul(add(one, t), add(one, monomial(basis, {0, 1}, -1)));
        LaurentExpr expected;
        expected.basis = basis;
        expected.terms[{0, 0}] = 1;
        expected.terms[{0, 2}] = -1;
        CHECK(lhs == expected);
    }
    SUBCASE("mixed bases are rejected") {
        auto other = monomial({"u"}, {1});
        CHECK_THROWS_AS(add(s, other), std::invalid_argument);
        CHECK_THROWS_AS(mul(s, other), std::invalid_argument);
    }
    SUBCASE("exponent length must match the basis") {
        CHECK_THROWS_AS(monomial(basis, {1}), std::invalid_argument);
    }
}

TEST_CASE("reindex permutes coordinates and renames labels") {
    auto e = monomial({"a", "b"}, {2, -1});
    SUBCASE("a pure permutation moves the exponents") {
        auto r = reindex(e, {"b", "a"});
        CHECK(r.terms.count({-1, 2}) == 1);
    }
    SUBCASE("renaming follows the map") {
        auto r = reindex(e, {"x", "b"}, {{"a", "x"}});
        CHECK(r.basis == std::vector<std::string>{"x", "b"});
        CHECK(r.terms.count({2, -1}) == 1);
    }
    SUBCASE("dropping a used coordinate throws") {
        CHECK_THROWS_AS(reindex(e, {"a"}), std::invalid_argument);
    }
    SUBCASE("dropping an unused coordinate is fine") {
        auto f = monomial({"a", "b"}, {3, 0});
        auto r = reindex(f, {"a"});
        CHECK(r.terms.count({3}) == 1);
    }
}

TEST_CASE("binomial_twist multiplies and exactly divides by 1 + z_k") {
    std::vector<std::string> basis = {"s", "t"};
    auto s = monomial(basis, {1, 0});
    auto t_index = 1;

    SUBCASE("a positive twist expands the binomial") {
        auto r = binomial_twist(s, t_index, [](const IVec&) { return 2LL; });
        LaurentExpr expected;
        expected.basis = basis;
        expected.terms[{1, 0}] = 1;
        expected.terms[{1, 1}] = 2;
        expected.terms[{1, 2}] = 1;
        CHECK(r == expected);
    }
    SUBCASE("a negative twist divides exactly when possible") {
        auto dividend = mul(s, add(monomial(basis, {0, 0}), monomial(basis, {0, 1})));
        auto r = binomial_twist(dividend, t_index, [](const IVec&) { return -1LL; });
        CHECK(r == s);
    }
    SUBCASE("a failed division is reported, not silently truncated") {
        CHECK_THROWS_AS(binomial_twist(s, t_index, [](const IVec&) { return -1LL; }),
                        std::runtime_error);
    }
    SUBCASE("the twist exponent may depend on the term") {
        auto e = add(s, monomial(basis, {2, 0}));
        auto r = binomial_twist(e, t_index,
                                [](const IVec& m) { return m[0] == 1 ? 1LL : 0LL; });
        LaurentExpr expected;
        expected.basis = basis;
        expected.terms[{1, 0}] = 1;
        expected.terms[{1, 1}] = 1;
        expected.terms[{2, 0}] = 1;
        CHECK(r == expected);
    }
}

// ---------------------------------------------------------------------------
// seeds and matrix mutation
// ---------------------------------------------------------------------------

TEST_CASE("seed_of reads the quiver into an antisymmetric matrix") {
    auto arr = arrangement::build(ReducedWord{2, {1, 2, 1}});
    auto s = seed_of(arr);
    REQUIRE(s.dim() == 5);
    CHECK(s.vertices[0] == FaceId::pair(1, 2));
    CHECK(s.frozen == std::vector<char>{0, 1, 1, 1, 1});
    for (int i = 0; i < s.dim(); ++i)
        for (int k = 0; k < s.dim(); ++k) CHECK(s.eps[i][k] == -s.eps[k][i]);
    // arrows: F1 -> F(1,2) -> F(2,3), F(1,3) -> F(1,2), F(1,2) -> F2
    CHECK(s.eps[0][2] == 1);
    CHECK(s.eps[0][4] == 1);
    CHECK(s.eps[0][1] == -1);
    CHECK(s.eps[0][3] == -1);
    CHECK(s.eps[1][2] == 0);
}

TEST_CASE("mutate_seed matches the seed of the mutated arrangement") {
    auto arr = arrangement::build(ReducedWord{2, {1, 2, 1}});
    auto s = seed_of(arr);
    auto mutated = mutate_seed(s, 0);  // F(1,2) is the only mutable face

    auto m = arrangement::mutate(arr, FaceId::pair(1, 2));
    auto target = seed_of(m.result);

    // compare entries through the face-label correspondence
    for (int i = 0; i < s.dim(); ++i) {
        for (int k = 0; k < s.dim(); ++k) {
            auto ni = target.vertices;
            int ti = m.result.face_index(m.label_map.at(s.vertices[i]));
            int tk = m.result.face_index(m.label_map.at(s.vertices[k]));
            REQUIRE(ti >= 0);
            REQUIRE(tk >= 0);
            CHECK(mutated.eps[i][k] == target.eps[ti][tk]);
        }
    }
}

TEST_CASE("mutate_seed is an involution and validates its vertex") {
    auto s = seed_of(sl4_word());
    int k = 1;  // F(1,3)
    REQUIRE(s.vertices[k] == FaceId::pair(1, 3));
    auto twice = mutate_seed(mutate_seed(s, k), k);
    CHECK(twice.eps == s.eps);
    CHECK_THROWS_AS(mutate_seed(s, -1), std::invalid_argument);
    CHECK_THROWS_AS(mutate_seed(s, 2), std::invalid_argument);  // F(1,4) is frozen
}

// ---------------------------------------------------------------------------
// the staircase superpotential
// ---------------------------------------------------------------------------

TEST_CASE("superpotential_initial lists one chain per level plus band chains") {
    SUBCASE("rank one") {
        auto w = superpotential_initial(1);
        REQUIRE(w.size() == 2);
        CHECK(w.terms.count({-1, 0}) == 1);
        CHECK(w.terms.count({0, -1}) == 1);
        CHECK(w.str() == "z^{-e(1,2)} + z^{-e1}");
    }
    SUBCASE("rank two has six terms with unit coefficients") {
        auto w = superpotential_initial(2);
        REQUIRE(w.size() == 6);
        std::map<IVec, long long> expected = {
            {{-1, -1, 0, 0, 0}, 1}, {{-1, 0, 0, -1, 0}, 1}, {{0, -1, 0, 0, 0}, 1},
            {{0, 0, -1, 0, 0}, 1},  {{0, 0, 0, -1, 0}, 1},  {{0, 0, 0, 0, -1}, 1},
        };
        CHECK(w.terms == expected);
        CHECK(w.str() ==
              "z^{-e(1,2)-e(1,3)} + z^{-e(1,2)-e1} + z^{-e(1,3)} + z^{-e(2,3)} + "
              "z^{-e1} + z^{-e2}");
    }
    SUBCASE("rank three has twelve terms") {
        CHECK(superpotential_initial(3).size() == 12);
    }
}

TEST_CASE("tropicalizing the staircase superpotential gives the area cone") {
    for (int n = 1; n <= 3; ++n) {
        auto word = words::initial_word(n);
        auto arr = arrangement::build(word);
        CHECK(trop_rows(superpotential_initial(n), arr) ==
              cones::cone_S(word, true).canonicalized().normals);
    }
}

TEST_CASE("superpotential_on the staircase word is the staircase expression") {
    CHECK(superpotential_on(words::initial_word(2)) == superpotential_initial(2));
    CHECK(superpotential_on(words::initial_word(3)) == superpotential_initial(3));
}

TEST_CASE("superpotential_on the braid partner matches its area cone") {
    ReducedWord w{2, {2, 1, 2}};
    auto arr = arrangement::build(w);
    auto pot = superpotential_on(w);
    REQUIRE(pot.size() == 6);
    // face order of (2,1,2): e(2,3), e(1,3), e(1,2), e1, e2
    std::map<IVec, long long> expected = {
        {{-1, -1, 0, 0, 0}, 1}, {{-1, 0, 0, 0, -1}, 1}, {{0, -1, 0, 0, 0}, 1},
        {{0, 0, -1, 0, 0}, 1},  {{0, 0, 0, -1, 0}, 1},  {{0, 0, 0, 0, -1}, 1},
    };
    CHECK(pot.terms == expected);
    CHECK(trop_rows(pot, arr) == cones::cone_S(w, true).canonicalized().normals);
}

TEST_CASE("superpotential_on rejects words that are not longest-element words") {
    CHECK_THROWS_AS(superpotential_on(ReducedWord{2, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(superpotential_on(ReducedWord{2, {1, 1}}), std::invalid_argument);
}

TEST_CASE("tropicalization matches the area cone on every rank-three longest word") {
    for (const auto& w : words::reduced_words_of_w0(3)) {
        CAPTURE(w.str());
        auto arr = arrangement::build(w);
        CHECK(trop_rows(superpotential_on(w), arr) ==
              cones::cone_S(w, true).canonicalized().normals);
    }
}

// ---------------------------------------------------------------------------
// transport across braid moves
// ---------------------------------------------------------------------------

TEST_CASE("transport_braid carries the superpotential between braid partners") {
    auto arr = arrangement::build(ReducedWord{2, {1, 2, 1}});
    auto moved = transport_braid(superpotential_initial(2), arr, FaceId::pair(1, 2));
    CHECK(moved == superpotential_on(ReducedWord{2, {2, 1, 2}}));
}

TEST_CASE("the per-term shortcut table agrees with the general transport") {
    SUBCASE("on the rank-two braid move") {
        auto arr = arrangement::build(ReducedWord{2, {1, 2, 1}});
        auto pot = superpotential_initial(2);
        CHECK(transport_braid_cases(pot, arr, FaceId::pair(1, 2)) ==
              transport_braid(pot, arr, FaceId::pair(1, 2)));
    }
    SUBCASE("on every braid move reachable from rank-three longest words") {
        for (const auto& w : words::reduced_words_of_w0(3)) {
            auto arr = arrangement::build(w);
            auto pot = superpotential_on(w);
            for (const auto& f : arrangement::mutable_faces(arr)) {
                CAPTURE(w.str());
                CAPTURE(f.id.str());
                CHECK(transport_braid_cases(pot, arr, f.id) ==
                      transport_braid(pot, arr, f.id));
            }
        }
    }
}

TEST_CASE("transport across a braid move tracks the mutated arrangement's cone") {
    auto arr = sl4_word();
    auto w0 = ReducedWord{3, {1, 2, 3, 2, 1, 2}};
    // restrict the full superpotential, transport it, and compare tropical
    // rows against the braid partner's restriction
    auto m = arrangement::mutate(arr, FaceId::pair(1, 3));
    auto big = superpotential_on(w0);
    auto pot = restrict_potential(big, arrangement::build(w0), arr);
    auto moved = transport_braid(pot, arr, FaceId::pair(1, 3));
    CHECK(moved.size() == pot.size());
    CHECK(moved.basis == face_labels(m.result));
}

// ---------------------------------------------------------------------------
// restriction of the superpotential
// ---------------------------------------------------------------------------

TEST_CASE("restrict_potential keeps exactly the prefix-supported terms") {
    auto w0 = ReducedWord{3, {1, 2, 3, 2, 1, 2}};
    auto arr0 = arrangement::build(w0);
    auto arr = sl4_word();
    auto restricted = restrict_potential(superpotential_on(w0), arr0, arr);
    CHECK(restricted.basis == face_labels(arr));
    REQUIRE(restricted.size() == 12);
    // face order: e(1,2), e(1,3), e(1,4), e(3,4), e(2,4), e1, e2, e3
    std::vector<IVec> expected_rows = {
        {-1, -1, -1, -1, 0, 0, 0, 0},
        {-1, 0, 0, 0, 0, -1, 0, 0},
        {0, -1, -1, -1, 0, 0, 0, 0},
        {0, -1, -1, 0, 0, 0, 0, 0},
        {0, -1, 0, -1, 0, 0, -1, 0},
        {0, -1, 0, 0, 0, 0, -1, 0},
        {0, 0, -1, 0, 0, 0, 0, 0},
        {0, 0, 0, -1, -1, 0, 0, 0},
        {0, 0, 0, 0, -1, 0, 0, 0},
        {0, 0, 0, 0, 0, -1, 0, 0},
        {0, 0, 0, 0, 0, 0, -1, 0},
        {0, 0, 0, 0, 0, 0, 0, -1},
    };
    CHECK(trop_rows(restricted, arr) == expected_rows);
}

TEST_CASE("the restricted cone sits inside the area cone, strictly here") {
    auto w0 = ReducedWord{3, {1, 2, 3, 2, 1, 2}};
    auto arr = sl4_word();
    auto restricted = restrict_potential(superpotential_on(w0), arrangement::build(w0), arr);
    auto trop = tropicalize(restricted, cones::face_space(arr, true));
    auto area = cones::cone_S(arr, true);

    std::vector<polyhedra::QVec> area_rows;
    for (const auto& row : area.canonicalized().normals) {
        polyhedra::QVec q(row.size());
        for (std::size_t i = 0; i < row.size(); ++i) q[i] = row[i];
        area_rows.push_back(q);
    }
    CHECK(polyhedra::contains(trop.system(), area_rows).implied);
    auto eq = polyhedra::cones_equal(trop.system(), area.system());
    CHECK_FALSE(eq.equal);
}

TEST_CASE("restriction to a short prefix can be incomparable with its area cone") {
    // For the prefix (2,1,3) of (2,1,3,2,3,1) the two cones cut across each
    // other.  The surviving level chains reach one crossing deeper than the
    // prefix's own chains (e.g. -x2 - x_{(2,3)} >= 0), while the prefix path
    // row -x_{(2,3)} - x_{(1,3)} - x_{(2,4)} >= 0 has no surviving monomial:
    // every term that would tropicalize to it also touches a dropped face.
    auto w0 = ReducedWord{3, {2, 1, 3, 2, 3, 1}};
    auto arr = arrangement::build(ReducedWord{3, {2, 1, 3}});
    auto restricted = restrict_potential(superpotential_on(w0), arrangement::build(w0), arr);
    REQUIRE(restricted.size() == 6);

    // face order: e(2,3), e(1,3), e(2,4), e1, e2, e3
    CHECK(trop_rows(restricted, arr) == std::vector<IVec>{
                                            {-1, 0, 0, 0, -1, 0},
                                            {0, -1, 0, -1, 0, 0},
                                            {0, 0, -1, 0, 0, -1},
                                            {0, 0, 0, -1, 0, 0},
                                            {0, 0, 0, 0, -1, 0},
                                            {0, 0, 0, 0, 0, -1},
                                        });

    auto trop = tropicalize(restricted, cones::face_space(arr, true));
    auto area = cones::cone_S(arr, true);
    auto to_qrows = [](const std::vector<IVec>& rows) {
        std::vector<polyhedra::QVec> out;
        for (const auto& row : rows) {
            polyhedra::QVec q(row.size());
            for (std::size_t i = 0; i < row.size(); ++i) q[i] = row[i];
            out.push_back(std::move(q));
        }
        return out;
    };
    int failing = -1;
    auto trop_in_area =
        polyhedra::contains(trop.system(), to_qrows(area.canonicalized().normals), &failing);
    CHECK_FALSE(trop_in_area.implied);
    CHECK(failing == 0);  // the three-crossing path row
    auto area_in_trop =
        polyhedra::contains(area.system(), to_qrows(trop.canonicalized().normals), &failing);
    CHECK_FALSE(area_in_trop.implied);
    CHECK(failing == 0);  // the deep chain -x_{(2,3)} - x2
}

// ---------------------------------------------------------------------------
// theta-function pullbacks and the frozen-face potential
// ---------------------------------------------------------------------------

TEST_CASE("pulling a frozen-face monomial through one mutation adds the twist term") {
    auto arr = sl4_word();
    auto s = seed_of(arr);
    int k = 1;  // F(1,3)
    auto labels = face_labels(arr);

    SUBCASE("the face above the mutating one gains a chain term") {
        auto e = monomial(labels, {0, 0, -1, 0, 0, 0, 0, 0});  // z^{-e(1,4)}
        auto pulled = pullback(e, s, k);
        LaurentExpr expected;
        expected.basis = labels;
        expected.terms[{0, 0, -1, 0, 0, 0, 0, 0}] = 1;
        expected.terms[{0, -1, -1, 0, 0, 0, 0, 0}] = 1;
        CHECK(pulled == expected);
    }
    SUBCASE("the band below gains the same chain factor") {
        auto e = monomial(labels, {0, 0, 0, 0, 0, 0, -1, 0});  // z^{-e2}
        auto pulled = pullback(e, s, k);
        LaurentExpr expected;
        expected.basis = labels;
        expected.terms[{0, 0, 0, 0, 0, 0, -1, 0}] = 1;
        expected.terms[{0, -1, 0, 0, 0, 0, -1, 0}] = 1;
        CHECK(pulled == expected);
    }
    SUBCASE("a face not adjacent to the mutation passes through unchanged") {
        auto e = monomial(labels, {0, 0, 0, 0, -1, 0, 0, 0});  // z^{-e(2,4)}
        CHECK(pullback(e, s, k) == e);
    }
}

TEST_CASE("optimized_seed_for finds the shortest optimizing mutation sequences") {
    auto s = seed_of(sl4_word());
    auto idx = [&](const FaceId& id) {
        for (int i = 0; i < s.dim(); ++i)
            if (s.vertices[i] == id) return i;
        return -1;
    };
    CHECK(optimized_seed_for(s, idx(FaceId::pair(2, 4))).mutations.empty());
    CHECK(optimized_seed_for(s, idx(FaceId::band(3))).mutations.empty());
    CHECK(optimized_seed_for(s, idx(FaceId::pair(1, 4))).mutations ==
          std::vector<int>{idx(FaceId::pair(1, 3))});
    CHECK(optimized_seed_for(s, idx(FaceId::band(2))).mutations ==
          std::vector<int>{idx(FaceId::pair(1, 3))});
    CHECK(optimized_seed_for(s, idx(FaceId::pair(3, 4))).mutations ==
          std::vector<int>{idx(FaceId::pair(1, 2))});
    CHECK(optimized_seed_for(s, idx(FaceId::band(1))).mutations ==
          std::vector<int>{idx(FaceId::pair(1, 2))});
}

TEST_CASE("the frozen-face potential of the five-letter word has ten known terms") {
    auto arr = sl4_word();
    auto pot = ghkk_potential(arr);
    REQUIRE(pot.size() == 10);
    std::map<IVec, long long> expected = {
        {{-1, 0, 0, -1, 0, 0, 0, 0}, 1},  // e(1,2) with e(3,4)
        {{-1, 0, 0, 0, 0, -1, 0, 0}, 1},  // e(1,2) with the band below
        {{0, -1, -1, 0, 0, 0, 0, 0}, 1},  // e(1,3) with e(1,4)
        {{0, -1, 0, 0, 0, 0, -1, 0}, 1},  // e(1,3) with the band below
        {{0, 0, -1, 0, 0, 0, 0, 0}, 1},
        {{0, 0, 0, -1, 0, 0, 0, 0}, 1},
        {{0, 0, 0, 0, -1, 0, 0, 0}, 1},
        {{0, 0, 0, 0, 0, -1, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0, -1, 0}, 1},
        {{0, 0, 0, 0, 0, 0, 0, -1}, 1},
    };
    CHECK(pot.terms == expected);
}

TEST_CASE("on the trivial word the frozen-face potential is the staircase one") {
    auto arr = arrangement::build(ReducedWord{1, {1}});
    CHECK(ghkk_potential(arr) == superpotential_initial(1));
}

TEST_CASE("the frozen-face cone is strictly inside the restricted cone") {
    auto arr = sl4_word();
    auto w0 = ReducedWord{3, {1, 2, 3, 2, 1, 2}};
    auto restricted = restrict_potential(superpotential_on(w0), arrangement::build(w0), arr);
    auto trop_res = tropicalize(restricted, cones::face_space(arr, true));
    auto trop_gh = tropicalize(ghkk_potential(arr), cones::face_space(arr, true));

    std::vector<polyhedra::QVec> res_rows;
    for (const auto& row : trop_res.canonicalized().normals) {
        polyhedra::QVec q(row.size());
        for (std::size_t i = 0; i < row.size(); ++i) q[i] = row[i];
        res_rows.push_back(q);
    }
    CHECK(polyhedra::contains(trop_gh.system(), res_rows).implied);
    CHECK_FALSE(polyhedra::cones_equal(trop_gh.system(), trop_res.system()).equal);

    SUBCASE("the separating direction raises exactly one face coordinate") {
        polyhedra::QVec witness(8, polyhedra::Rational(-1));
        witness[3] = 1;  // e(3,4)
        CHECK(polyhedra::accepts(trop_res.system(), witness));
        CHECK_FALSE(polyhedra::accepts(trop_gh.system(), witness));
    }
}

// ---------------------------------------------------------------------------
// tropicalization plumbing
// ---------------------------------------------------------------------------

TEST_CASE("tropicalize turns exponents into rows and checks the basis") {
    auto arr = arrangement::build(ReducedWord{2, {1, 2, 1}});
    auto space = cones::face_space(arr, true);
    auto e = add(monomial(space.labels, {-1, 0, 0, 0, 0}, 3),
                 monomial(space.labels, {0, -2, 0, 0, 0}));
    auto cone = tropicalize(e, space);
    REQUIRE(cone.normals.size() == 2);
    auto canon = cone.canonicalized().normals;
    CHECK(canon[0] == IVec{-1, 0, 0, 0, 0});
    CHECK(canon[1] == IVec{0, -1, 0, 0, 0});  // gcd-reduced from -2

    auto wrong = monomial({"a", "b", "c", "d", "e"}, {-1, 0, 0, 0, 0});
    CHECK_THROWS_AS(tropicalize(wrong, space), std::invalid_argument);
}
