#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "f1hall/f1vect.hpp"
#include "f1hall/rep.hpp"

#include <stdexcept>

using namespace f1hall;

namespace {

PartialInjection pi(int dom, int cod, std::vector<std::pair<int, int>> pairs)
{
    return PartialInjection(dom, cod, std::move(pairs));
}

}  // namespace

TEST_CASE("compose: identities and small cases")
{
    auto id3 = PartialInjection::identity(3);
    CHECK(compose(id3, id3) == id3);

    CHECK(compose(pi(2, 2, {{0, 1}}), pi(2, 1, {{1, 0}})) == pi(2, 1, {{0, 0}}));
    CHECK(compose(pi(1, 1, {{0, 0}}), pi(1, 1, {})) == pi(1, 1, {}));
    CHECK_THROWS_AS(compose(pi(2, 3, {}), pi(2, 2, {})), std::invalid_argument);
}

TEST_CASE("converse examples")
{
    CHECK(converse(pi(1, 1, {})) == pi(1, 1, {}));
    CHECK(converse(pi(1, 3, {{0, 2}})) == pi(3, 1, {{2, 0}}));
    CHECK(converse(PartialInjection::identity(4)) == PartialInjection::identity(4));
}

TEST_CASE("classify examples")
{
    CHECK(classify(PartialInjection::identity(3)) == MorphismKind::isomorphism);
    CHECK(classify(pi(2, 1, {{0, 0}})) == MorphismKind::deflation);
    CHECK(classify(pi(1, 2, {{0, 1}})) == MorphismKind::inflation);
    CHECK(classify(pi(2, 2, {{0, 0}})) == MorphismKind::neither);
    CHECK(classify(pi(0, 0, {})) == MorphismKind::isomorphism);
}

TEST_CASE("direct_sum: unit, blocks, additivity")
{
    auto f = pi(2, 3, {{0, 1}, {1, 2}});
    CHECK(direct_sum(f, pi(0, 0, {})) == f);

    auto g = pi(1, 1, {{0, 0}});
    CHECK(direct_sum(g, g) == pi(2, 2, {{0, 0}, {1, 1}}));

    auto h = direct_sum(pi(2, 3, {}), pi(1, 1, {}));
    CHECK(h.dom_size() == 3);
    CHECK(h.cod_size() == 4);
}

TEST_CASE("invariant violations are rejected")
{
    CHECK_THROWS_AS(pi(2, 2, {{0, 0}, {0, 1}}), std::invalid_argument);  // repeated source
    CHECK_THROWS_AS(pi(2, 2, {{0, 0}, {1, 0}}), std::invalid_argument);  // repeated target
    CHECK_THROWS_AS(pi(2, 2, {{2, 0}}), std::invalid_argument);          // out of bounds
    CHECK_THROWS_AS(pi(2, 2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(pi(-1, 0, {}), std::invalid_argument);
}

TEST_CASE("converse is an involution and exchanges inflations and deflations")
{
    for (int n = 0; n <= 4; ++n)
        for (int m = 0; m <= 4; ++m)
            for (const auto& f : all_partial_injections(n, m)) {
                CHECK(converse(converse(f)) == f);
                bool inf = classify(f) == MorphismKind::inflation ||
                           classify(f) == MorphismKind::isomorphism;
                bool def_conv = classify(converse(f)) == MorphismKind::deflation ||
                                classify(converse(f)) == MorphismKind::isomorphism;
                CHECK(inf == def_conv);
            }
}

TEST_CASE("compose is associative with two-sided identities, sizes <= 3")
{
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b) {
            auto fs = all_partial_injections(a, b);
            for (const auto& f : fs) {
                CHECK(compose(PartialInjection::identity(a), f) == f);
                CHECK(compose(f, PartialInjection::identity(b)) == f);
            }
            for (int c = 0; c <= 3; ++c) {
                auto gs = all_partial_injections(b, c);
                for (int d = 0; d <= 3; ++d) {
                    auto hs = all_partial_injections(c, d);
                    for (const auto& f : fs)
                        for (const auto& g : gs)
                            for (const auto& h : hs)
                                CHECK(compose(compose(f, g), h) ==
                                      compose(f, compose(g, h)));
                }
            }
        }
}

TEST_CASE("dimension is additive under direct_sum")
{
    for (int n = 0; n <= 3; ++n)
        for (int m = 0; m <= 3; ++m)
            for (const auto& f : all_partial_injections(n, m))
                for (const auto& g : all_partial_injections(2, 1)) {
                    auto s = direct_sum(f, g);
                    CHECK(s.dom_size() == f.dom_size() + g.dom_size());
                    CHECK(s.cod_size() == f.cod_size() + g.cod_size());
                    CHECK(s.pairs().size() == f.pairs().size() + g.pairs().size());
                }
}
