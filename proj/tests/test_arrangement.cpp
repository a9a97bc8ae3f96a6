#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arrangement.hpp"

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

using namespace arrangement;
using words::ReducedWord;

namespace {

/** Split rendered text into lines, ignoring a trailing newline. */
std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

/** Render a quiver's arrows as "tail -> head" label strings for comparison. */
std::set<std::string> arrow_labels(const Quiver& q) {
    std::set<std::string> out;
    for (auto [tail, head] : q.arrows)
        out.insert(q.vertices[tail].str() + " -> " + q.vertices[head].str());
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// sweep construction
// ---------------------------------------------------------------------------

TEST_CASE("the rank-two staircase arrangement has the expected crossings") {
    auto arr = build(ReducedWord{2, {1, 2, 1}});
    REQUIRE(arr.crossings.size() == 3);
    CHECK(arr.crossings[0].position == 1);
    CHECK(arr.crossings[0].level == 1);
    CHECK(arr.crossings[0].a == 1);
    CHECK(arr.crossings[0].b == 2);
    CHECK(arr.crossings[1].a == 1);
    CHECK(arr.crossings[1].b == 3);
    CHECK(arr.crossings[1].level == 2);
    CHECK(arr.crossings[2].a == 2);
    CHECK(arr.crossings[2].b == 3);
    CHECK(arr.crossings[0].str() == "v(1,2)");
}

TEST_CASE("faces come in canonical order with correct intervals") {
    auto arr = build(ReducedWord{2, {1, 2, 1}});
    REQUIRE(arr.faces.size() == 5);  // length + n

    CHECK(arr.faces[0].id == FaceId::pair(1, 2));
    CHECK(arr.faces[0].left_pos == 1);
    CHECK(arr.faces[0].right_pos == 3);
    CHECK(arr.faces[0].above == std::vector<int>{2});
    CHECK(arr.faces[0].below.empty());
    CHECK_FALSE(arr.faces[0].frozen());

    CHECK(arr.faces[1].id == FaceId::pair(1, 3));
    CHECK(arr.faces[1].left_pos == 2);
    CHECK(arr.faces[1].right_pos == 0);
    CHECK(arr.faces[1].below == std::vector<int>{3});
    CHECK(arr.faces[1].frozen());

    CHECK(arr.faces[2].id == FaceId::pair(2, 3));
    CHECK(arr.faces[2].frozen());

    CHECK(arr.faces[3].id == FaceId::band(1));
    CHECK(arr.faces[3].right_pos == 1);
    CHECK(arr.faces[4].id == FaceId::band(2));
    CHECK(arr.faces[4].right_pos == 2);
    CHECK(arr.faces[4].below == std::vector<int>{1});
}

TEST_CASE("line heights trace the wiring diagram") {
    auto arr = build(ReducedWord{2, {1, 2, 1}});
    // line 1 starts at the bottom and climbs to the top
    CHECK(arr.line_height(1, 0) == 1);
    CHECK(arr.line_height(1, 1) == 2);
    CHECK(arr.line_height(1, 2) == 3);
    CHECK(arr.line_height(1, 3) == 3);
    CHECK(arr.right_end_height(1) == 3);
    CHECK(arr.right_end_height(2) == 2);
    CHECK(arr.right_end_height(3) == 1);
}

TEST_CASE("a rank-three word crosses exactly the inverse-inversion pairs") {
    auto arr = build(ReducedWord{3, {2, 1, 3}});
    REQUIRE(arr.crossings.size() == 3);
    CHECK(arr.crossings[0].a == 2);
    CHECK(arr.crossings[0].b == 3);
    CHECK(arr.crossings[1].a == 1);
    CHECK(arr.crossings[1].b == 3);
    CHECK(arr.crossings[2].a == 2);
    CHECK(arr.crossings[2].b == 4);

    REQUIRE(arr.crossing_of(1, 3) != nullptr);
    CHECK(arr.crossing_of(1, 3)->position == 2);
    CHECK(arr.crossing_of(1, 2) == nullptr);  // lines 1 and 2 never meet
    CHECK(arr.crossing_of(3, 4) == nullptr);

    CHECK(arr.right_end_height(1) == 2);
    CHECK(arr.right_end_height(2) == 4);
    CHECK(arr.right_end_height(3) == 1);
    CHECK(arr.right_end_height(4) == 3);
}

TEST_CASE("face lookup distinguishes present from absent labels") {
    auto arr = build(ReducedWord{3, {2, 1, 3}});
    CHECK(arr.face_index(FaceId::pair(2, 3)) == 0);
    CHECK(arr.face_index(FaceId::pair(1, 3)) == 1);
    CHECK(arr.face_index(FaceId::band(1)) == 3);
    CHECK(arr.face_index(FaceId::pair(1, 2)) == -1);
    CHECK(arr.face(FaceId::pair(2, 4)).left_pos == 3);
    CHECK_THROWS(arr.face(FaceId::pair(1, 4)));
}

TEST_CASE("build rejects non-reduced words") {
    CHECK_THROWS_AS(build(ReducedWord{2, {1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(build(ReducedWord{2, {1, 2, 1, 2}}), std::invalid_argument);
}

TEST_CASE("face count is always length plus rank") {
    for (const auto& w : words::reduced_words_of_w0(3))
        CHECK(build(w).faces.size() == static_cast<std::size_t>(w.length() + 3));
}

// ---------------------------------------------------------------------------
// plain-text rendering
// ---------------------------------------------------------------------------

TEST_CASE("ascii renders the rank-two staircase") {
    auto got = lines_of(ascii(build(ReducedWord{2, {1, 2, 1}})));
    REQUIRE(got.size() == 3);
    CHECK(got[0] == "3 -\\- L1");
    CHECK(got[1] == "2 \\/\\ L2");
    CHECK(got[2] == "1 /-/ L3");
}

TEST_CASE("ascii renders a rank-three word") {
    auto got = lines_of(ascii(build(ReducedWord{3, {2, 1, 3}})));
    REQUIRE(got.size() == 4);
    CHECK(got[0] == "4 --\\ L2");
    CHECK(got[1] == "3 \\-/ L4");
    CHECK(got[2] == "2 /\\- L1");
    CHECK(got[3] == "1 -/- L3");
}

// ---------------------------------------------------------------------------
// mutable faces and braid moves
// ---------------------------------------------------------------------------

TEST_CASE("mutable_faces finds exactly the three-sided bounded faces") {
    SUBCASE("the rank-two staircase has one") {
        auto faces = mutable_faces(build(ReducedWord{2, {1, 2, 1}}));
        REQUIRE(faces.size() == 1);
        CHECK(faces[0].id == FaceId::pair(1, 2));
    }
    SUBCASE("its braid partner has one") {
        auto faces = mutable_faces(build(ReducedWord{2, {2, 1, 2}}));
        REQUIRE(faces.size() == 1);
        CHECK(faces[0].id == FaceId::pair(2, 3));
    }
    SUBCASE("a commutation-only word has none") {
        CHECK(mutable_faces(build(ReducedWord{3, {2, 1, 3}})).empty());
    }
    SUBCASE("the five-letter rank-three word has one") {
        auto faces = mutable_faces(build(ReducedWord{3, {1, 2, 3, 2, 1}}));
        REQUIRE(faces.size() == 1);
        CHECK(faces[0].id == FaceId::pair(1, 3));
    }
}

TEST_CASE("mutate performs the braid move it claims") {
    auto arr = build(ReducedWord{2, {1, 2, 1}});
    auto m = mutate(arr, FaceId::pair(1, 2));
    CHECK(m.result.word.letters == std::vector<int>{2, 1, 2});
    SUBCASE("mutating back recovers the original word") {
        auto back = mutate(m.result, m.mutated);
        CHECK(back.result.word.letters == std::vector<int>{1, 2, 1});
    }
    SUBCASE("the label correspondence is a bijection onto the new faces") {
        std::set<FaceId> images;
        for (const auto& [from, to] : m.label_map) {
            CHECK(arr.face_index(from) >= 0);
            CHECK(m.result.face_index(to) >= 0);
            images.insert(to);
        }
        CHECK(images.size() == m.label_map.size());
        CHECK(m.label_map.size() == arr.faces.size());
    }
    SUBCASE("round-trip label maps compose to the identity") {
        auto back = mutate(m.result, m.mutated);
        for (const auto& [from, mid] : m.label_map) {
            REQUIRE(back.label_map.count(mid) == 1);
            CHECK(back.label_map.at(mid) == from);
        }
    }
}

TEST_CASE("mutate at the middle face of the five-letter word matches the braid move") {
    auto arr = build(ReducedWord{3, {1, 2, 3, 2, 1}});
    auto m = mutate(arr, FaceId::pair(1, 3));
    CHECK(m.result.word.letters == std::vector<int>{1, 3, 2, 3, 1});
    CHECK(m.result.face_index(m.mutated) >= 0);
    CHECK_FALSE(m.result.face(m.mutated).frozen());
}

TEST_CASE("mutate refuses frozen and absent faces") {
    auto arr = build(ReducedWord{2, {1, 2, 1}});
    CHECK_THROWS(mutate(arr, FaceId::pair(1, 3)));
    CHECK_THROWS(mutate(arr, FaceId::band(1)));
}

// ---------------------------------------------------------------------------
// quivers
// ---------------------------------------------------------------------------

TEST_CASE("the quiver of the other rank-two word has four arrows") {
    auto q = quiver(build(ReducedWord{2, {2, 1, 2}}));
    CHECK(arrow_labels(q) == std::set<std::string>{
        "F(2,3) -> F(1,2)",
        "F(2,3) -> F1",
        "F(1,3) -> F(2,3)",
        "F2 -> F(2,3)",
    });
}

TEST_CASE("the quiver of the five-letter rank-three word has eight arrows") {
    auto q = quiver(build(ReducedWord{3, {1, 2, 3, 2, 1}}));
    CHECK(arrow_labels(q) == std::set<std::string>{
        "F(1,2) -> F(2,4)",
        "F(1,2) -> F2",
        "F(1,3) -> F(3,4)",
        "F(1,3) -> F3",
        "F(1,4) -> F(1,3)",
        "F(3,4) -> F(1,2)",
        "F1 -> F(1,2)",
        "F2 -> F(1,3)",
    });
    SUBCASE("six of the eight vertices are frozen") {
        int frozen = 0;
        for (char f : q.frozen) frozen += f != 0;
        CHECK(q.vertices.size() == 8);
        CHECK(frozen == 6);
    }
    SUBCASE("no arrow joins two frozen vertices") {
        for (auto [tail, head] : q.arrows)
            CHECK((!q.frozen[tail] || !q.frozen[head]));
    }
}
