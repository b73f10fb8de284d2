#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

#include "f1hall/quiver.hpp"
#include "f1hall/rep.hpp"

#include <set>
#include <stdexcept>

using namespace f1hall;

namespace {

Quiver point_quiver() { return Quiver({"1"}, {}); }
Quiver a2_quiver() { return Quiver({"1", "2"}, {{"a", 0, 1}}); }
Quiver loop_quiver() { return Quiver({"1"}, {{"l", 0, 0}}); }

Rep rep_a2(int d1, int d2, std::vector<std::pair<int, int>> pairs)
{
    Quiver q = a2_quiver();
    return Rep(q, {{d1}, {d2}}, {PartialInjection(d1, d2, std::move(pairs))});
}

Rep rep_loop(int d, std::vector<std::pair<int, int>> pairs)
{
    Quiver q = loop_quiver();
    return Rep(q, {{d}}, {PartialInjection(d, d, std::move(pairs))});
}

}  // namespace

TEST_CASE("involution validation")
{
    Quiver a2 = a2_quiver();
    Involution swap;
    swap.vertex_map = {1, 0};
    swap.arrow_map = {0};
    CHECK(!validate(a2, swap));

    Quiver loop = loop_quiver();
    CHECK(!validate(loop, Involution::identity_for(loop)));

    // identity on vertices of a2 cannot be contravariant for a: 1 -> 2
    CHECK(validate(a2, Involution::identity_for(a2)).has_value());

    Involution not_invol;
    not_invol.vertex_map = {1, 1};
    not_invol.arrow_map = {0};
    CHECK(validate(a2, not_invol).has_value());
}

TEST_CASE("dim_vector")
{
    Quiver a2 = a2_quiver();
    CHECK(dim_vector(Rep::zero(a2)) == DimVector{0, 0});
    CHECK(dim_vector(rep_a2(1, 0, {})) == DimVector{1, 0});
    CHECK(dim_vector(rep_a2(1, 1, {{0, 0}})) == DimVector{1, 1});
}

TEST_CASE("canonical_form is invariant under relabeling")
{
    Quiver a2 = a2_quiver();
    CHECK(canonical_form(a2, direct_sum(a2, rep_a2(1, 0, {}), rep_a2(0, 1, {}))) ==
          canonical_form(a2, direct_sum(a2, rep_a2(0, 1, {}), rep_a2(1, 0, {}))));

    Quiver loop = loop_quiver();
    CHECK(canonical_form(loop, rep_loop(2, {{0, 1}, {1, 0}})) ==
          canonical_form(loop, rep_loop(2, {{1, 0}, {0, 1}})));

    // idempotence: the canonical representative re-canonicalizes to itself
    auto c = canonical_form(loop, rep_loop(3, {{2, 0}, {0, 2}}));
    CHECK(canonical_form(loop, parse_rep(loop, c.enc)) == c);
}

TEST_CASE("canonical_form separates classes exactly (brute-force cross-check)")
{
    struct Case {
        Quiver q;
        int max_total;
    };
    std::vector<Case> cases{{point_quiver(), 4}, {a2_quiver(), 3}, {loop_quiver(), 4}};
    for (const auto& [q, max_total] : cases) {
        for (const auto& d : dims_with_total_upto(q.num_vertices(), max_total)) {
            auto reps = oracle::raw_reps(q, d);
            for (std::size_t i = 0; i < reps.size(); ++i)
                for (std::size_t j = i; j < reps.size(); ++j) {
                    bool iso = oracle::brute_iso(q, reps[i], reps[j]);
                    bool same =
                        canonical_form(q, reps[i]) == canonical_form(q, reps[j]);
                    CHECK(iso == same);
                }
        }
    }
}

TEST_CASE("direct_sum basics")
{
    Quiver a2 = a2_quiver();
    Rep i = rep_a2(1, 1, {{0, 0}});
    CHECK(canonical_form(a2, direct_sum(a2, i, Rep::zero(a2))) == canonical_form(a2, i));
    CHECK(dim_vector(direct_sum(a2, i, rep_a2(1, 0, {}))) == DimVector{2, 1});

    Rep s1s2 = direct_sum(a2, rep_a2(1, 0, {}), rep_a2(0, 1, {}));
    CHECK(s1s2.map(0).pairs().empty());
    CHECK(s1s2.map(0).dom_size() == 1);
    CHECK(s1s2.map(0).cod_size() == 1);
}

TEST_CASE("indecomposables: examples and Krull-Schmidt")
{
    Quiver a2 = a2_quiver();
    CHECK(indecomposables(a2, Rep::zero(a2)).empty());

    Rep i = rep_a2(1, 1, {{0, 0}});
    auto only_i = indecomposables(a2, i);
    REQUIRE(only_i.size() == 1);
    CHECK(only_i.begin()->second == 1);
    CHECK(only_i.begin()->first == canonical_form(a2, i));

    Rep s1 = rep_a2(1, 0, {}), s2 = rep_a2(0, 1, {});
    Rep big = direct_sum(a2, direct_sum(a2, s1, s1), s2);
    auto parts = indecomposables(a2, big);
    REQUIRE(parts.size() == 2);
    CHECK(parts[canonical_form(a2, s1)] == 2);
    CHECK(parts[canonical_form(a2, s2)] == 1);

    // the components reassemble to the original class, and the multiset
    // determines the class, over all classes of total dim <= 4
    for (const Quiver& q : {point_quiver(), a2_quiver(), loop_quiver()}) {
        std::map<std::map<CanonicalClass, int>, CanonicalClass> seen;
        for (const auto& d : dims_with_total_upto(q.num_vertices(), 4))
            for (const auto& c : enumerate_reps(q, d)) {
                Rep r = parse_rep(q, c.enc);
                auto multi = indecomposables(q, r);
                Rep sum = Rep::zero(q);
                for (const auto& [part, count] : multi)
                    for (int k = 0; k < count; ++k)
                        sum = direct_sum(q, sum, parse_rep(q, part.enc));
                CHECK(canonical_form(q, sum) == c);
                auto [it, inserted] = seen.emplace(multi, c);
                CHECK(it->second == c);
            }
    }
}

TEST_CASE("enumerate_reps: counts against the brute-force oracle")
{
    Quiver pt = point_quiver();
    CHECK(enumerate_reps(pt, {3}).size() == 1);
    for (int n = 0; n <= 6; ++n)
        CHECK(enumerate_reps(pt, {n}).size() == 1);

    Quiver a2 = a2_quiver();
    CHECK(enumerate_reps(a2, {1, 1}).size() == 2);
    CHECK(enumerate_reps(a2, {0, 0}).size() == 1);  // the zero class

    Quiver loop = loop_quiver();
    auto d2 = enumerate_reps(loop, {2});
    CHECK(d2.size() == 5);
    CHECK(oracle::count_classes_brute(loop, {2}) == 5);

    for (const Quiver& q : {a2_quiver(), loop_quiver()})
        for (const auto& d : dims_with_total_upto(q.num_vertices(), 3))
            CHECK(static_cast<int>(enumerate_reps(q, d).size()) ==
                  oracle::count_classes_brute(q, d));
}

TEST_CASE("subrepresentations: closure")
{
    Quiver a2 = a2_quiver();
    CHECK(subrepresentations(a2, rep_a2(1, 0, {})).size() == 2);

    Rep i = rep_a2(1, 1, {{0, 0}});
    auto subs = subrepresentations(a2, i);
    REQUIRE(subs.size() == 3);  // empty, vertex-2 element, whole
    CHECK(subs[0].empty());
    CHECK(subs[1].bits == std::vector<std::uint32_t>{0, 1});
    CHECK(subs[2].bits == std::vector<std::uint32_t>{1, 1});

    CHECK(subrepresentations(a2, rep_a2(2, 0, {})).size() == 4);

    // against plain filtering of all subsets
    for (const Quiver& q : {a2_quiver(), loop_quiver()})
        for (const auto& d : dims_with_total_upto(q.num_vertices(), 4))
            for (const auto& c : enumerate_reps(q, d)) {
                Rep r = parse_rep(q, c.enc);
                std::set<std::vector<std::uint32_t>> expected;
                std::function<void(int, GradedSubset)> rec = [&](int v, GradedSubset s) {
                    if (v == q.num_vertices()) {
                        if (is_closed_subset(q, r, s))
                            expected.insert(s.bits);
                        return;
                    }
                    for (std::uint32_t m = 0; m < (1u << r.space(v).size); ++m) {
                        s.bits[static_cast<std::size_t>(v)] = m;
                        rec(v + 1, s);
                    }
                };
                rec(0, GradedSubset::none(q.num_vertices()));
                auto got = subrepresentations(q, r);
                CHECK(got.size() == expected.size());
                for (const auto& s : got)
                    CHECK(expected.count(s.bits) == 1);
            }
}

TEST_CASE("combinatorial property: subobjects of sums split")
{
    // every subrepresentation of r1 + r2 is the sum of its intersections
    // with the summands
    for (const Quiver& q : {a2_quiver(), loop_quiver()}) {
        for (const auto& d1 : dims_with_total_upto(q.num_vertices(), 2))
            for (const auto& d2 : dims_with_total_upto(q.num_vertices(), 2))
                for (const auto& c1 : enumerate_reps(q, d1))
                    for (const auto& c2 : enumerate_reps(q, d2)) {
                        Rep r1 = parse_rep(q, c1.enc);
                        Rep r2 = parse_rep(q, c2.enc);
                        Rep sum = direct_sum(q, r1, r2);
                        for (const auto& s : subrepresentations(q, sum)) {
                            GradedSubset in1 = GradedSubset::none(q.num_vertices());
                            GradedSubset in2 = GradedSubset::none(q.num_vertices());
                            for (int v = 0; v < q.num_vertices(); ++v) {
                                const int k = r1.space(v).size;
                                std::uint32_t mask1 = (k >= 32) ? ~0u : ((1u << k) - 1u);
                                in1.bits[static_cast<std::size_t>(v)] =
                                    s.bits[static_cast<std::size_t>(v)] & mask1;
                                in2.bits[static_cast<std::size_t>(v)] =
                                    s.bits[static_cast<std::size_t>(v)] >> k;
                            }
                            CHECK(is_closed_subset(q, r1, in1));
                            CHECK(is_closed_subset(q, r2, in2));
                            Rep split = direct_sum(q, restrict_elements(q, r1, in1),
                                                   restrict_elements(q, r2, in2));
                            CHECK(canonical_form(q, split) ==
                                  canonical_form(q, restrict_elements(q, sum, s)));
                        }
                    }
    }
}

TEST_CASE("quotient: examples, dimension additivity, rejection")
{
    Quiver a2 = a2_quiver();
    Rep i = rep_a2(1, 1, {{0, 0}});

    CHECK(canonical_form(a2, quotient(a2, i, GradedSubset::none(2))) ==
          canonical_form(a2, i));
    CHECK(canonical_form(a2, quotient(a2, i, GradedSubset::all(i))) ==
          canonical_form(a2, Rep::zero(a2)));

    GradedSubset s2_only{{0u, 1u}};
    CHECK(canonical_form(a2, quotient(a2, i, s2_only)) ==
          canonical_form(a2, rep_a2(1, 0, {})));

    GradedSubset s1_only{{1u, 0u}};
    CHECK_THROWS_AS(quotient(a2, i, s1_only), std::invalid_argument);

    for (const Quiver& q : {a2_quiver(), loop_quiver()})
        for (const auto& d : dims_with_total_upto(q.num_vertices(), 4))
            for (const auto& c : enumerate_reps(q, d)) {
                Rep r = parse_rep(q, c.enc);
                for (const auto& s : subrepresentations(q, r)) {
                    DimVector sub = dim_vector(restrict_elements(q, r, s));
                    DimVector quot = dim_vector(quotient(q, r, s));
                    CHECK(add(sub, quot) == dim_vector(r));
                }
            }
}

TEST_CASE("quiver and rep constructors validate input")
{
    CHECK_THROWS_AS(Quiver({"1", "1"}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Quiver({"a|b"}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Quiver({"1"}, {{"x", 0, 3}}), std::invalid_argument);
    Quiver a2 = a2_quiver();
    CHECK_THROWS_AS(Rep(a2, {{1}, {1}}, {PartialInjection::zero(2, 1)}),
                    std::invalid_argument);
}
