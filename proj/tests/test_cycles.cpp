#include <doctest.h>

#include "charcycle/cycle.hpp"
#include "charcycle/parse.hpp"
#include "oracles.hpp"

using namespace charcycle;

namespace {

Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(s, r); }

Ideal I(const RingPtr& r, const std::vector<std::string>& gens) {
    std::vector<Polynomial> polys;
    for (const auto& g : gens)
        polys.push_back(P(r, g));
    return Ideal(r, std::move(polys));
}

RingPtr ring_xyz() { return Ring::make({"x", "y", "z"}); }

Localizer L(const RingPtr& r, const std::string& s) { return {P(r, s), {}}; }

std::map<std::string, long> as_map(const CharCycle& cc) {
    std::map<std::string, long> out;
    for (const auto& [key, entry] : cc.entries())
        out[key] = entry.second;
    return out;
}

} // namespace

TEST_CASE("zero section") {
    auto r = ring_xyz();
    auto d = doubled_ring(r);
    CharCycle cc = zero_section(d);
    REQUIRE(cc.size() == 1);
    CHECK(cc.entries().begin()->first == I(d, {"dx", "dy", "dz"}).canonical_key());
    CHECK(cc.entries().begin()->second.second == 1);
    CHECK(cc.entries().begin()->second.first.dim == 3);

    auto r1 = Ring::make({"x"});
    CharCycle c1 = zero_section(doubled_ring(r1));
    CHECK(c1.size() == 1);

    auto r6 = Ring::make({"x1", "x2", "x3", "x4", "x5", "x6"});
    CharCycle c6 = zero_section(doubled_ring(r6));
    CHECK(c6.entries().begin()->second.first.dim == 6);

    CHECK_THROWS_AS(zero_section(r), MisuseError);
}

TEST_CASE("localization of R at x in three variables") {
    auto r = ring_xyz();
    auto d = doubled_ring(r);
    CharCycle cc = localize_cycle(zero_section(d), L(r, "x"), Strategy::Single);
    std::map<std::string, long> expected = {
        {I(d, {"dx", "dy", "dz"}).canonical_key(), 1},
        {I(d, {"x", "dy", "dz"}).canonical_key(), 1},
    };
    CHECK(as_map(cc) == expected);
}

TEST_CASE("localization of the V(x) conormal at y") {
    auto r = ring_xyz();
    auto d = doubled_ring(r);
    CharCycle start(d, r);
    start.add(component_of_variety(I(r, {"x"})), 1);
    CharCycle cc = localize_cycle(start, L(r, "y"), Strategy::Single);
    std::map<std::string, long> expected = {
        {I(d, {"x", "dy", "dz"}).canonical_key(), 1},
        {I(d, {"x", "y", "dz"}).canonical_key(), 1},
    };
    CHECK(as_map(cc) == expected);
}

TEST_CASE("localization at a nonzero constant is the identity") {
    auto r = ring_xyz();
    auto d = doubled_ring(r);
    CharCycle cc = localize_cycle(zero_section(d), L(r, "x"), Strategy::Single);
    CHECK(localize_cycle(cc, L(r, "5"), Strategy::Single) == cc);
    CHECK_THROWS_AS(localize_cycle(cc, Localizer{Polynomial(r), {}}, Strategy::Single),
                    MisuseError);
}

TEST_CASE("localization idempotence") {
    auto r = ring_xyz();
    auto d = doubled_ring(r);
    for (const std::string& f : {"x", "x*y", "x+y"}) {
        CharCycle once = localize_cycle(zero_section(d), L(r, f), Strategy::Single);
        CharCycle twice = localize_cycle(once, L(r, f), Strategy::Single);
        CHECK(once == twice);
    }
}

TEST_CASE("components with f vanishing on the support are dropped") {
    auto r = ring_xyz();
    auto d = doubled_ring(r);
    // localizing the conormal over V(x) at x kills the module entirely
    CharCycle vx(d, r);
    vx.add(component_of_variety(I(r, {"x"})), 1);
    CHECK(localize_cycle(vx, L(r, "x"), Strategy::Single).is_zero());
    // same for the origin's conormal at any variable
    CharCycle origin(d, r);
    origin.add(component_of_variety(I(r, {"x", "y", "z"})), 1);
    CHECK(localize_cycle(origin, L(r, "y"), Strategy::Single).is_zero());
    // a vanishing factor prunes only the components it kills
    CharCycle mixed = vx;
    mixed.add(component_of_variety(I(r, {"y"})), 2);
    CharCycle after = localize_cycle(mixed, L(r, "x"), Strategy::Single);
    CHECK(after.multiplicity_of(I(d, {"y", "dx", "dz"}).canonical_key()) == 2);
    for (const auto& [key, entry] : after.entries())
        CHECK(!Ideal::same_ideal(entry.first.base, I(r, {"x"})));
}

TEST_CASE("single equals iterative on factored localizers") {
    auto r = ring_xyz();
    auto d = doubled_ring(r);
    Localizer both{P(r, "x*y"), {P(r, "x"), P(r, "y")}};
    CharCycle single = localize_cycle(zero_section(d), both, Strategy::Single);
    CharCycle iterative = localize_cycle(zero_section(d), both, Strategy::Iterative);
    CHECK(single == iterative);
}

TEST_CASE("iterated coordinate localizations match the closed form") {
    auto r = ring_xyz();
    auto d = doubled_ring(r);
    Localizer loc{P(r, "x*y"), {P(r, "x"), P(r, "y")}};
    CharCycle cc = localize_cycle(zero_section(d), loc, Strategy::Iterative);
    CHECK(as_map(cc) == oracles::monomial_localization_cycle(r, {0, 1}));
}

TEST_CASE("support projections") {
    auto r = ring_xyz();
    auto d = doubled_ring(r);
    CharCycle cc = localize_cycle(zero_section(d), L(r, "x"), Strategy::Single);
    auto supp = support(cc);
    REQUIRE(supp.size() == 2);
    CHECK(supp[0].canonical_key() == "0");
    CHECK(supp[1].canonical_key() == "x");
    // component_support of the zero section is the zero ideal
    CharCycle zs = zero_section(d);
    CHECK(component_support(zs.entries().begin()->second.first).is_zero());
    // the zero cycle has empty support
    CharCycle zero(d, r);
    CHECK(support(zero).empty());
}
