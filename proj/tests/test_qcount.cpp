#include "oracles.hpp"
#include "semican/bases.hpp"
#include "semican/qcount.hpp"

#include <doctest.h>

#include <random>

using namespace semican;
using namespace semican::core;
using namespace semican::qcount;

namespace {

MonomialWord word(std::initializer_list<int> vertices) { return MonomialWord::from_vertices(vertices); }

template <typename Class>
QPoly total_count(const std::vector<StepCount<Class>>& steps) {
    QPoly sum;
    for (const auto& s : steps) sum += s.count;
    return sum;
}

std::vector<DimVector> small_dims(int max_total) {
    std::vector<DimVector> out;
    for (int d1 = 0; d1 <= max_total; ++d1)
        for (int d2 = 0; d1 + d2 <= max_total; ++d2)
            if (d1 + d2 > 0) out.push_back({d1, d2});
    return out;
}

}  // namespace

TEST_CASE("gauss_binom examples") {
    CHECK(gauss_binom(2, 1) == QPoly{1, 1});
    CHECK(gauss_binom(5, 0) == QPoly(1));
    CHECK(gauss_binom(3, 2) == QPoly{1, 1, 1});
    CHECK(gauss_binom(3, 2).eval(2) == 7);
    CHECK(gauss_binom(3, 4).is_zero());
    CHECK(gauss_binom(3, -1).is_zero());
}

TEST_CASE("gauss_binom counts subspaces over F_2 and F_3") {
    for (int n = 0; n <= 4; ++n)
        for (int k = 0; k <= n; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            CHECK(gauss_binom(n, k).eval(2) == oracle::count_subspaces(2, n, k));
            Integer binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
            CHECK(gauss_binom(n, k).at_one() == binom);
        }
    for (int n = 0; n <= 3; ++n)
        for (int k = 0; k <= n; ++k) CHECK(gauss_binom(n, k).eval(3) == oracle::count_subspaces(3, n, k));
}

TEST_CASE("QPoly arithmetic and formatting") {
    const QPoly a{1, 1};
    CHECK((a * a) == QPoly{1, 2, 1});
    CHECK((a - a).is_zero());
    CHECK(QPoly{1, 0, 0}.degree() == 0);
    CHECK(QPoly{1, 1, 1}.to_string() == "1 + q + q^2");
    CHECK(gauss_factorial(3) == QPoly{1, 2, 2, 1});
}

TEST_CASE("sub_simple_E examples") {
    CHECK(sub_simple_E({{1, 1}, 1}, 1).empty());
    const auto v2 = sub_simple_E({{1, 1}, 1}, 2);
    REQUIRE(v2.size() == 1);
    CHECK(v2[0].child == Orbit{{1, 0}, 0});
    CHECK(v2[0].count == QPoly(1));
    const auto v1 = sub_simple_E({{2, 1}, 0}, 1);
    REQUIRE(v1.size() == 1);
    CHECK(v1[0].child == Orbit{{1, 1}, 0});
    CHECK(v1[0].count == QPoly{1, 1});
}

TEST_CASE("sub_simple_Pi examples") {
    CHECK(sub_simple_Pi({{1, 1}, 0, 1}, 2).empty());
    const auto a = sub_simple_Pi({{1, 1}, 1, 0}, 2);
    REQUIRE(a.size() == 1);
    CHECK(a[0].child == PiModClass{{1, 0}, 0, 0});
    CHECK(a[0].count == QPoly(1));
    const auto b = sub_simple_Pi({{2, 1}, 0, 1}, 1);
    REQUIRE(b.size() == 2);
    CHECK(b[0].child == PiModClass{{1, 1}, 0, 0});
    CHECK(b[0].count == QPoly(1));
    CHECK(b[1].child == PiModClass{{1, 1}, 0, 1});
    CHECK(b[1].count == QPoly::monomial(1));
}

TEST_CASE("sub_grouped examples") {
    const auto a = sub_grouped(Orbit{{2, 2}, 0}, 1, 2);
    REQUIRE(a.size() == 1);
    CHECK(a[0].child == Orbit{{0, 2}, 0});
    CHECK(a[0].count == QPoly(1));
    const auto b = sub_grouped(Orbit{{2, 2}, 1}, 2, 1);
    REQUIRE(b.size() == 2);
    CHECK(b[0].child == Orbit{{2, 1}, 0});
    CHECK(b[0].count == QPoly(1));
    CHECK(b[1].child == Orbit{{2, 1}, 1});
    CHECK(b[1].count == QPoly::monomial(1));
    CHECK(sub_grouped(Orbit{{2, 2}, 2}, 1, 1).empty());
    CHECK(sub_grouped(Orbit{{2, 2}, 0}, 1, 3).empty());
}

TEST_CASE("eval_word examples") {
    CHECK(eval_word(word({2, 1}), Orbit{{1, 1}, 1}) == QPoly(1));
    CHECK(eval_word(word({1, 2}), Orbit{{1, 1}, 1}).is_zero());
    const auto p = eval_word(word({1, 1, 2}), Orbit{{2, 1}, 0});
    CHECK(p == QPoly{1, 1});
    CHECK(p.at_one() == 2);
    CHECK_THROWS_AS(eval_word(word({1, 2}), Orbit{{2, 1}, 0}), ContentError);
}

TEST_CASE("step counts are nonnegative and conserve content") {
    for (const auto dim : small_dims(6)) {
        for (const auto& o : enumerate_orbits(dim)) {
            for (int v : {1, 2}) {
                const auto steps = sub_simple_E(o, v);
                for (const auto& s : steps) CHECK(s.count.has_nonnegative_coefficients());
                const QPoly expected = v == 1 ? gauss_integer(dim.d1 - o.r) : gauss_integer(dim.d2);
                CHECK(total_count(steps) == expected);
            }
            for (int b = 0; b <= 3; ++b)
                for (int v : {1, 2}) {
                    const auto steps = sub_grouped(o, v, b);
                    for (const auto& s : steps) CHECK(s.count.has_nonnegative_coefficients());
                    const int ambient = v == 1 ? dim.d1 - o.r : dim.d2;
                    if (b <= (v == 1 ? dim.d1 : dim.d2)) CHECK(total_count(steps) == gauss_binom(ambient, b));
                }
        }
        for (const auto& c : enumerate_pi_classes(dim)) {
            for (int v : {1, 2}) {
                const auto steps = sub_simple_Pi(c, v);
                for (const auto& s : steps) CHECK(s.count.has_nonnegative_coefficients());
                const QPoly expected = v == 1 ? gauss_integer(dim.d1 - c.r) : gauss_integer(dim.d2 - c.s);
                CHECK(total_count(steps) == expected);
            }
        }
    }
}

TEST_CASE("grouped letters equal iterated simple letters divided by complete flags") {
    for (const auto dim : small_dims(6))
        for (int v : {1, 2})
            for (int b = 1; b <= 3; ++b) {
                const int at_vertex = v == 1 ? dim.d1 : dim.d2;
                if (b > at_vertex) continue;
                MonomialWord grouped{{Letter{v, b}}};
                MonomialWord simple{std::vector<Letter>(static_cast<std::size_t>(b), Letter{v, 1})};
                for (const auto& o : enumerate_orbits(dim)) {
                    const auto g = prefix_paths(grouped, 1, o);
                    const auto s = prefix_paths(simple, static_cast<std::size_t>(b), o);
                    std::map<Orbit, QPoly> scaled;
                    for (const auto& [c, p] : g) scaled[c] = p * gauss_factorial(b);
                    std::map<Orbit, QPoly> s_nonzero;
                    for (const auto& [c, p] : s)
                        if (!p.is_zero()) s_nonzero[c] = p;
                    CHECK(scaled == s_nonzero);
                }
                for (const auto& c : enumerate_pi_classes(dim)) {
                    const auto g = prefix_paths(grouped, 1, c);
                    const auto s = prefix_paths(simple, static_cast<std::size_t>(b), c);
                    std::map<PiModClass, QPoly> scaled;
                    for (const auto& [k, p] : g) scaled[k] = p * gauss_factorial(b);
                    std::map<PiModClass, QPoly> s_nonzero;
                    for (const auto& [k, p] : s)
                        if (!p.is_zero()) s_nonzero[k] = p;
                    CHECK(scaled == s_nonzero);
                }
            }
}

TEST_CASE("eval_word matches brute-force stable flag counts over F_2 and F_3") {
    struct Case {
        int q;
        int max_total;
    };
    for (const Case cs : {Case{2, 4}, Case{3, 3}})
        for (const auto dim : small_dims(cs.max_total)) {
            if (dim.d1 * dim.d2 > 4 && cs.q == 3) continue;
            for (const auto& w : bases::spanning_words(dim)) {
                for (const auto& c : enumerate_pi_classes(dim)) {
                    CAPTURE(w.to_string());
                    CAPTURE(dim.d1);
                    CAPTURE(dim.d2);
                    CAPTURE(c.r);
                    CAPTURE(c.s);
                    const auto p = representative_pair(c);
                    const long brute = oracle::count_stable_flags(cs.q, w, p.x, p.y);
                    CHECK(eval_word(w, c).eval(cs.q) == brute);
                    if (c.s == 0) CHECK(eval_word(w, Orbit{dim, c.r}).eval(cs.q) == brute);
                }
            }
        }
}

TEST_CASE("associativity: splitting a word at any position") {
    std::mt19937 rng(2024);
    for (const auto dim : small_dims(6))
        for (const auto& w : bases::spanning_words(dim)) {
            if (w.letters.size() < 2) continue;
            std::uniform_int_distribution<std::size_t> pick(1, w.letters.size() - 1);
            const std::size_t cut = pick(rng);
            MonomialWord tail{{w.letters.begin() + static_cast<std::ptrdiff_t>(cut), w.letters.end()}};
            for (const auto& o : enumerate_orbits(dim)) {
                QPoly sum;
                for (const auto& [mid, mult] : prefix_paths(w, cut, o)) sum += mult * eval_word(tail, mid);
                CHECK(sum == eval_word(w, o));
            }
            for (const auto& c : enumerate_pi_classes(dim)) {
                QPoly sum;
                for (const auto& [mid, mult] : prefix_paths(w, cut, c)) sum += mult * eval_word(tail, mid);
                CHECK(sum == eval_word(w, c));
            }
        }
}

TEST_CASE("pairs with y = 0 count like points of E") {
    for (const auto dim : small_dims(7))
        for (const auto& w : bases::spanning_words(dim))
            for (const auto& o : enumerate_orbits(dim)) CHECK(eval_word(w, PiModClass{dim, o.r, 0}) == eval_word(w, o));
}
