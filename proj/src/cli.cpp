#include "cli.hpp"

#include <atomic>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "arrangement.hpp"
#include "cluster.hpp"
#include "cones.hpp"
#include "gp_paths.hpp"
#include "jsonio.hpp"
#include "oracles.hpp"
#include "polyhedra.hpp"
#include "words.hpp"

namespace cli {

namespace {

using jsonio::json;
using polyhedra::QVec;
using polyhedra::Rational;

std::vector<QVec> to_rational_rows(const std::vector<polyhedra::IVec>& rows) {
    std::vector<QVec> out;
    out.reserve(rows.size());
    for (const auto& r : rows) {
        QVec q(r.size());
        for (std::size_t j = 0; j < r.size(); ++j) q[j] = r[j];
        out.push_back(std::move(q));
    }
    return out;
}

json rational_point_json(const QVec& point) {
    json out = json::array();
    for (const auto& v : point) {
        std::ostringstream os;
        os << v;
        out.push_back(os.str());
    }
    return out;
}

/** One verification check with an optional counterexample payload. */
struct Check {
    std::string name;
    bool pass = true;
    json detail;
};

struct WordReport {
    words::ReducedWord word;
    std::vector<Check> checks;
    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/** Weights to test against the character oracle, scaled down with the rank. */
std::vector<std::vector<long long>> lambda_grid(int n) {
    long long cap = n <= 3 ? 2 : (n == 4 ? 1 : 0);
    if (cap == 0) return {std::vector<long long>(n, 1)};
    std::vector<std::vector<long long>> out;
    std::vector<long long> cur(n, 0);
    while (true) {
        out.push_back(cur);
        int j = 0;
        while (j < n && cur[j] == cap) cur[j++] = 0;
        if (j == n) break;
        ++cur[j];
    }
    return out;
}

WordReport verify_word(const words::ReducedWord& word,
                       const std::optional<words::ReducedWord>& extension, bool with_ghkk) {
    WordReport report;
    report.word = word;
    auto run_check = [&](const std::string& name, auto&& body) {
        Check c{name, true, json()};
        try {
            body(c);
        } catch (const std::exception& e) {
            c.pass = false;
            c.detail["error"] = e.what();
        }
        report.checks.push_back(std::move(c));
    };

    auto arr = arrangement::build(word);
    const bool is_w0 = words::permutation_of(word) == words::longest_element(word.n);
    words::ReducedWord ext = extension ? *extension : words::extend_to_w0(word);
    auto arr0 = arrangement::build(ext);

    auto map = cones::psi(arr);

    run_check("psi-unimodular", [&](Check& c) {
        auto det = polyhedra::determinant(map.matrix);
        c.pass = det == 1 || det == -1;
        if (!c.pass) c.detail["det"] = det.str();
    });

    run_check("psi-normal-bijection", [&](Check& c) {
        std::vector<polyhedra::IVec> lhs, rhs;
        for (const auto& p : gp::enumerate_all(arr)) {
            lhs.push_back(cones::apply(map, gp::normal_e(p, arr)));
            auto row = gp::normal_c(p, arr);
            row.resize(arr.length() + arr.n(), 0);
            rhs.push_back(std::move(row));
        }
        for (int i = 1; i <= arr.n(); ++i) {
            int m = 0;
            for (const auto& cr : arr.crossings)
                if (cr.level == i) ++m;
            for (int k = 0; k < m; ++k)
                lhs.push_back(cones::apply(map, cones::weight_area_f(arr, i, k)));
        }
        for (int k = 1; k <= arr.length(); ++k) rhs.push_back(cones::weight_vector_d(arr, k));
        std::sort(lhs.begin(), lhs.end());
        std::sort(rhs.begin(), rhs.end());
        c.pass = lhs == rhs;
        if (!c.pass) {
            c.detail["mapped-area-normals"] = lhs;
            c.detail["path-and-weight-normals"] = rhs;
        }
    });

    // the tropical cone of the (restricted) superpotential, reused by the ghkk check
    cones::HCone tropical;
    run_check("tropical-equals-area", [&](Check& c) {
        auto big = cluster::superpotential_on(ext);
        auto expr = is_w0 ? big : cluster::restrict_potential(big, arr0, arr);
        tropical = cluster::tropicalize(expr, cones::face_space(arr, true));
        auto area = cones::cone_S(arr, true);
        if (is_w0) {
            c.pass = tropical.canonicalized().normals == area.canonicalized().normals;
            if (!c.pass) {
                c.detail["tropical"] = tropical.canonicalized().normals;
                c.detail["area"] = area.canonicalized().normals;
            }
        } else {
            // Restriction drops exactly the monomials supported on faces that
            // die at the cut, so the tropical cone must list exactly the
            // surviving rows of the long word's area cone.  No containment
            // relation with the prefix word's own area cone holds in general:
            // a weight chain of the long word can cut deeper, and a path whose
            // area crosses the cut takes its row with it.
            auto big_area = cones::cone_S(arr0, true);
            const auto& big_space = big_area.space;
            const auto& sub_space = tropical.space;
            std::vector<polyhedra::IVec> expected;
            for (const auto& row : big_area.normals) {
                polyhedra::IVec out(sub_space.dim(), 0);
                bool survives = true;
                for (int j = 0; j < big_space.dim() && survives; ++j) {
                    if (row[j] == 0) continue;
                    int target = j < big_space.pair_count
                                     ? sub_space.index_of_pair(big_space.keys[j].first,
                                                               big_space.keys[j].second)
                                     : sub_space.index_of_level(big_space.keys[j].first);
                    if (target < 0) survives = false;
                    else out[target] = row[j];
                }
                if (survives) expected.push_back(std::move(out));
            }
            c.pass = polyhedra::canonical_rows(std::move(expected)) ==
                     tropical.canonicalized().normals;
            if (!c.pass) c.detail["tropical"] = tropical.canonicalized().normals;
            auto res = polyhedra::cones_equal(tropical.system(), area.system());
            c.detail["equal"] = res.equal;
            if (!res.equal) {
                c.detail["witness"] = rational_point_json(res.witness);
                c.detail["witness-in"] = res.witness_in_a ? "tropical-cone" : "area-cone";
            }
        }
    });

    run_check("schubert-face", [&](Check& c) {
        auto face = cones::schubert_face(word, ext);
        auto res = polyhedra::cones_equal(face.system(), cones::cone_C(arr, true).system());
        c.pass = res.equal;
        if (!c.pass) {
            c.detail["witness"] = rational_point_json(res.witness);
            c.detail["witness-in"] = res.witness_in_a ? "schubert-face" : "path-cone";
        }
    });

    run_check("restrict-induce-identity", [&](Check& c) {
        std::map<int, std::vector<gp::GpPath>> full_paths;
        for (const auto& p : gp::enumerate_all(arr)) {
            if (!full_paths.count(p.orientation))
                full_paths[p.orientation] = gp::enumerate(arr0, p.orientation);
            auto lifted = gp::induce(p, arr, arr0);
            const auto& pool = full_paths[p.orientation];
            bool member = std::find(pool.begin(), pool.end(), lifted) != pool.end();
            auto back = gp::restrict_path(lifted, arr0, arr);
            bool identity = back.size() == 1 && back[0] == p;
            if (!member || !identity) {
                c.pass = false;
                c.detail["path"] = jsonio::path_json(p, arr);
                c.detail["lifted"] = jsonio::path_json(lifted, arr0);
                c.detail["lifted-is-gp-path"] = member;
                break;
            }
        }
    });

    run_check("slice-count-vs-oracle", [&](Check& c) {
        auto cone = cones::cone_C(arr, true);
        for (const auto& lambda : lambda_grid(word.n)) {
            auto sys = cones::slice(cone, lambda, cones::SliceKind::pi);
            auto count = polyhedra::lattice_points(sys).size();
            auto expect = oracles::demazure_dim(word, lambda);
            if (polyhedra::Int(count) != expect) {
                c.pass = false;
                c.detail["lambda"] = lambda;
                c.detail["count"] = count;
                c.detail["oracle"] = expect.str();
                break;
            }
        }
    });

    if (with_ghkk) {
        run_check("ghkk-containment", [&](Check& c) {
            auto ghkk = cluster::tropicalize(cluster::ghkk_potential(arr),
                                             cones::face_space(arr, true));
            if (tropical.normals.empty()) throw std::runtime_error("tropical cone unavailable");
            int failing = -1;
            auto sub = polyhedra::contains(ghkk.system(), to_rational_rows(tropical.normals),
                                           &failing);
            c.pass = sub.implied;
            auto eq = polyhedra::cones_equal(ghkk.system(), tropical.system());
            c.detail["equal"] = eq.equal;
            if (!eq.equal) {
                // Prefer a readable witness: all coordinates -1 except a single
                // +1, scanning faces left to right.  Fall back to the solver's
                // separating point when no such vector splits the cones.
                QVec witness = eq.witness;
                bool in_ghkk = eq.witness_in_a;
                const std::size_t dim = tropical.space.dim();
                for (std::size_t f = 0; f < dim; ++f) {
                    QVec candidate(dim, polyhedra::Rational(-1));
                    candidate[f] = 1;
                    bool in_res = polyhedra::accepts(tropical.system(), candidate);
                    bool in_gh = polyhedra::accepts(ghkk.system(), candidate);
                    if (in_res != in_gh) {
                        witness = std::move(candidate);
                        in_ghkk = in_gh;
                        break;
                    }
                }
                c.detail["witness"] = rational_point_json(witness);
                c.detail["witness-in"] = in_ghkk ? "ghkk" : "restricted";
            }
            if (!sub.implied) c.detail["unimplied-row"] = failing;
        });
    }
    return report;
}

std::vector<WordReport> verify_many(const std::vector<words::ReducedWord>& list,
                                    const std::optional<words::ReducedWord>& extension,
                                    bool with_ghkk) {
    std::vector<WordReport> out(list.size());
    unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                       static_cast<unsigned>(list.size())));
    if (workers <= 1) {
        for (std::size_t i = 0; i < list.size(); ++i)
            out[i] = verify_word(list[i], extension, with_ghkk);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < list.size(); i = next++)
                out[i] = verify_word(list[i], extension, with_ghkk);
        });
    for (auto& t : pool) t.join();
    return out;
}

json report_json(const std::vector<WordReport>& reports) {
    json list = json::array();
    bool all = true;
    for (const auto& r : reports) {
        json checks = json::array();
        for (const auto& c : r.checks) {
            json jc{{"name", c.name}, {"pass", c.pass}};
            if (!c.pass) jc["counterexample"] = c.detail;
            else if (!c.detail.is_null()) jc["detail"] = c.detail;
            checks.push_back(std::move(jc));
        }
        all = all && r.pass();
        list.push_back(json{{"word", jsonio::word_json(r.word)},
                            {"checks", checks},
                            {"pass", r.pass()}});
    }
    return json{{"schema", 1}, {"reports", list}, {"pass", all}};
}

void print_reports_text(const std::vector<WordReport>& reports, std::ostream& os) {
    bool all = true;
    for (const auto& r : reports) {
        all = all && r.pass();
        os << "word " << r.word.str() << ": " << (r.pass() ? "PASS" : "FAIL") << "\n";
        for (const auto& c : r.checks) {
            if (reports.size() == 1 || !c.pass)
                os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name << "\n";
            if (!c.pass && !c.detail.is_null()) os << "    " << c.detail.dump() << "\n";
        }
    }
    os << "overall: " << (all ? "PASS" : "FAIL") << " (" << reports.size() << " word"
       << (reports.size() == 1 ? "" : "s") << ")\n";
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"cones, paths, and superpotentials of reduced words"};
    app.fallthrough();
    app.require_subcommand(1);

    int rank = 0;
    bool as_json = false;
    unsigned seed = 1;
    app.add_option("--n", rank, "rank: words live in S_{n+1}");
    app.add_flag("--json", as_json, "emit JSON instead of text");
    app.add_option("--seed", seed, "seed for sampled word walks");

    int rc = 0;
    std::string word_text, kind = "string", restrict_text, lambda_text, ext_text;
    bool weighted = false, ghkk = false, tropicalize = false, count_only = false;
    bool all_w0 = false;
    int orientation = 0, sample = 0;

    auto* arrange = app.add_subcommand("arrange", "draw a word's line arrangement");
    arrange->fallthrough();
    arrange->add_option("word", word_text, "reduced word, e.g. 1,2,1")->required();
    arrange->callback([&] {
        auto arr = arrangement::build(jsonio::parse_word(word_text, rank));
        if (as_json) std::cout << jsonio::arrangement_json(arr).dump(2) << "\n";
        else std::cout << arrangement::ascii(arr);
    });

    auto* paths = app.add_subcommand("paths", "list the GP-paths of a word");
    paths->fallthrough();
    paths->add_option("word", word_text)->required();
    paths->add_option("--orientation", orientation, "restrict to one shape (l_i, l_{i+1})");
    paths->callback([&] {
        auto arr = arrangement::build(jsonio::parse_word(word_text, rank));
        auto ps = orientation ? gp::enumerate(arr, orientation) : gp::enumerate_all(arr);
        if (as_json) std::cout << jsonio::paths_json(ps, arr).dump(2) << "\n";
        else
            for (const auto& p : ps) std::cout << p.str(arr) << "\n";
    });

    auto* cone = app.add_subcommand("cone", "print a word's cone as inequalities");
    cone->fallthrough();
    cone->add_option("word", word_text)->required();
    cone->add_option("--kind", kind, "string (crossing coordinates) or area (face coordinates)")
        ->check(CLI::IsMember({"string", "area"}));
    cone->add_flag("--weighted", weighted, "include weight coordinates and rows");
    cone->callback([&] {
        auto word = jsonio::parse_word(word_text, rank);
        auto c = (kind == "string" ? cones::cone_C(word, weighted)
                                   : cones::cone_S(word, weighted))
                     .canonicalized();
        if (as_json) std::cout << jsonio::cone_json(c).dump(2) << "\n";
        else std::cout << jsonio::inequality_text(c);
    });

    auto* psi = app.add_subcommand("psi", "print the face-to-crossing change of coordinates");
    psi->fallthrough();
    psi->add_option("word", word_text)->required();
    psi->callback([&] {
        auto arr = arrangement::build(jsonio::parse_word(word_text, rank));
        auto map = cones::psi(arr);
        auto det = polyhedra::determinant(map.matrix);
        if (as_json) {
            auto j = jsonio::map_json(map);
            j["det"] = det.str();
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "det = " << det.str() << "\n";
            for (const auto& row : map.matrix) {
                for (std::size_t j = 0; j < row.size(); ++j)
                    std::cout << (j ? " " : "") << row[j];
                std::cout << "\n";
            }
        }
    });

    auto* quiver = app.add_subcommand("quiver", "print the face quiver");
    quiver->fallthrough();
    quiver->add_option("word", word_text)->required();
    quiver->callback([&] {
        auto arr = arrangement::build(jsonio::parse_word(word_text, rank));
        auto q = arrangement::quiver(arr);
        if (as_json) std::cout << jsonio::quiver_json(q).dump(2) << "\n";
        else
            for (const auto& [u, v] : q.arrows)
                std::cout << q.vertices[u].str() << " -> " << q.vertices[v].str() << "\n";
    });

    auto* potential = app.add_subcommand("potential", "superpotential of a longest-element word");
    potential->fallthrough();
    potential->add_option("word", word_text, "reduced word of the longest element")->required();
    potential->add_option("--restrict", restrict_text, "restrict to this prefix word");
    potential->add_flag("--ghkk", ghkk, "intrinsic frozen-face potential instead");
    potential->add_flag("--tropicalize", tropicalize, "print the tropical cone");
    potential->callback([&] {
        auto w0 = jsonio::parse_word(word_text, rank);
        cluster::LaurentExpr expr;
        arrangement::Arrangement target;
        if (ghkk) {
            auto base = restrict_text.empty() ? w0 : jsonio::parse_word(restrict_text, w0.n);
            target = arrangement::build(base);
            expr = cluster::ghkk_potential(target);
        } else {
            auto arr0 = arrangement::build(w0);
            expr = cluster::superpotential_on(w0);
            target = arr0;
            if (!restrict_text.empty()) {
                auto arr_w = arrangement::build(jsonio::parse_word(restrict_text, w0.n));
                expr = cluster::restrict_potential(expr, arr0, arr_w);
                target = arr_w;
            }
        }
        if (tropicalize) {
            auto c = cluster::tropicalize(expr, cones::face_space(target, true)).canonicalized();
            if (as_json) std::cout << jsonio::cone_json(c).dump(2) << "\n";
            else std::cout << jsonio::inequality_text(c);
        } else {
            if (as_json) std::cout << jsonio::expr_json(expr).dump(2) << "\n";
            else std::cout << expr.str() << "\n";
        }
    });

    auto* polytope = app.add_subcommand("polytope", "lattice points of a sliced weighted cone");
    polytope->fallthrough();
    polytope->add_option("word", word_text)->required();
    polytope->add_option("--lambda", lambda_text, "dominant weight, e.g. 1,1")->required();
    polytope->add_flag("--count", count_only, "print only the number of points");
    polytope->callback([&] {
        auto word = jsonio::parse_word(word_text, rank);
        auto lambda = jsonio::parse_vector(lambda_text);
        auto sys = cones::slice(cones::cone_C(word, true), lambda, cones::SliceKind::pi);
        auto pts = polyhedra::lattice_points(sys);
        if (count_only) {
            if (as_json) std::cout << json{{"schema", 1}, {"count", pts.size()}}.dump() << "\n";
            else std::cout << pts.size() << "\n";
            return;
        }
        json list = json::array();
        for (const auto& p : pts) {
            json row = json::array();
            for (const auto& v : p) row.push_back(v.convert_to<long long>());
            list.push_back(std::move(row));
        }
        if (as_json) std::cout << json{{"schema", 1}, {"points", list}}.dump(2) << "\n";
        else
            for (const auto& row : list) std::cout << row.dump() << "\n";
    });

    auto* oracle = app.add_subcommand("oracle", "reference dimension computations");
    oracle->fallthrough();
    oracle->require_subcommand(1);
    auto* oracle_dim = oracle->add_subcommand("dim", "irreducible dimension for a weight");
    oracle_dim->fallthrough();
    oracle_dim->add_option("--lambda", lambda_text)->required();
    oracle_dim->callback([&] {
        auto lambda = jsonio::parse_vector(lambda_text);
        int n = rank > 0 ? rank : static_cast<int>(lambda.size());
        auto d = oracles::weyl_dim(n, lambda);
        if (as_json) std::cout << json{{"schema", 1}, {"dim", d.str()}}.dump() << "\n";
        else std::cout << d.str() << "\n";
    });
    auto* oracle_dem = oracle->add_subcommand("demazure", "module dimension for a word and weight");
    oracle_dem->fallthrough();
    oracle_dem->add_option("--word", word_text)->required();
    oracle_dem->add_option("--lambda", lambda_text)->required();
    oracle_dem->callback([&] {
        auto word = jsonio::parse_word(word_text, rank);
        auto lambda = jsonio::parse_vector(lambda_text);
        auto d = oracles::demazure_dim(word, lambda);
        if (as_json) std::cout << json{{"schema", 1}, {"dim", d.str()}}.dump() << "\n";
        else std::cout << d.str() << "\n";
    });

    auto* verify = app.add_subcommand("verify", "run the theorem-checking suite");
    verify->fallthrough();
    std::string perm_text;
    verify->add_option("--word", word_text, "verify one word");
    verify->add_option("--perm", perm_text,
                       "verify every reduced word of this permutation (one-line, e.g. 3,2,1)");
    verify->add_flag("--all-w0", all_w0, "verify every longest-element word of rank --n");
    verify->add_option("--sample", sample, "verify this many sampled longest-element words");
    verify->add_option("--extension", ext_text, "longest-element extension for the word scope");
    verify->add_flag("--ghkk", ghkk, "also check the intrinsic-potential containment");
    verify->callback([&] {
        std::vector<words::ReducedWord> list;
        std::optional<words::ReducedWord> extension;
        int scopes = (!word_text.empty()) + (!perm_text.empty()) + all_w0 + (sample > 0);
        if (scopes != 1)
            throw std::invalid_argument("choose exactly one of --word, --perm, --all-w0, --sample");
        if (!word_text.empty()) {
            auto w = jsonio::parse_word(word_text, rank);
            if (!ext_text.empty()) extension = jsonio::parse_word(ext_text, w.n);
            list.push_back(std::move(w));
        } else if (!perm_text.empty()) {
            auto images = jsonio::parse_vector(perm_text);
            words::Permutation perm;
            for (const auto& v : images) perm.images.push_back(static_cast<int>(v));
            list = words::enumerate_reduced_words(perm);
        } else if (all_w0) {
            if (rank < 1) throw std::invalid_argument("--all-w0 needs --n");
            list = words::reduced_words_of_w0(rank);
        } else {
            if (rank < 1) throw std::invalid_argument("--sample needs --n");
            list = words::sample_w0_words(rank, sample, seed);
        }
        auto reports = verify_many(list, extension, ghkk);
        if (as_json) std::cout << report_json(reports).dump(2) << "\n";
        else print_reports_text(reports, std::cout);
        for (const auto& r : reports)
            if (!r.pass()) rc = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}

int run(const std::vector<std::string>& args) {
    std::vector<std::string> full;
    full.push_back("stringcones");
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : full) argv.push_back(s.c_str());
    return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace cli
