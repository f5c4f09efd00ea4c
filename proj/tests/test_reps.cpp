#include "doctest.h"

#include <vector>

#include "gln/errors.hpp"
#include "gln/orbits.hpp"
#include "gln/reps.hpp"

using namespace gln;
using namespace gln::reps;
using partitions::Partition;
using partitions::Composition;

namespace {

AffineForm p(const char* name) { return AffineForm::parameter(name); }

UnitaryRep rep(std::vector<BasicRep> factors) { return UnitaryRep(std::move(factors)); }

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

}  // namespace

TEST_SUITE_BEGIN("reps");

TEST_CASE("associated partitions of basic factors") {
    for (int m = 1; m <= 4; ++m) {
        CHECK(associated_partition(rep({BasicRep::speh(m, 2)})) == P(std::vector<int>(m, 2)));
        CHECK(associated_partition(rep({BasicRep::speh_cs(m, 1, p("s"))})) ==
              P(std::vector<int>(m, 4)));
        CHECK(associated_partition(rep({BasicRep::character(m)})) == P(std::vector<int>(m, 1)));
        CHECK(associated_partition(rep({BasicRep::stein(m, p("s"))})) == P(std::vector<int>(m, 2)));
    }
    CHECK(associated_partition(rep({BasicRep::character(3), BasicRep::speh(2, 5)})) ==
          P({3, 3, 1}));
}

TEST_CASE("rank, GK dimension and Howe rank") {
    UnitaryRep trivial = rep({BasicRep::character(5)});
    CHECK(associated_partition(trivial) == P({1, 1, 1, 1, 1}));
    CHECK(rank(trivial) == 0);
    CHECK(gk_dimension(trivial) == 0);
    CHECK(howe_rank(trivial) == 0);

    // AP = (n) arises from a product of n size-1 characters.
    UnitaryRep generic = rep({BasicRep::character(1), BasicRep::character(1),
                              BasicRep::character(1), BasicRep::character(1)});
    CHECK(associated_partition(generic) == P({4}));
    CHECK(rank(generic) == 3);

    for (int m = 1; m <= 3; ++m) {
        UnitaryRep psi = rep({BasicRep::speh_cs(m, 2, p("s"))});
        CHECK(rank(psi) == 3 * m);
        CHECK(gk_dimension(psi) ==
              orbits::dimension(orbits::NilpotentOrbit(P(std::vector<int>(m, 4)))) / 2);
    }

    CHECK_THROWS_AS(rank(UnitaryRep{}), std::invalid_argument);
}

TEST_CASE("adduction of basic factors") {
    for (int m = 2; m <= 4; ++m) {
        auto res = adduce(rep({BasicRep::speh(m, 3)}));
        CHECK(res.primary == rep({BasicRep::speh(m - 1, 3)}));
        CHECK(res.depth == 2);
        CHECK_FALSE(res.ambiguous);
    }

    auto tiny = adduce(rep({BasicRep::character(1, 1, p("t"))}));
    CHECK(tiny.primary == UnitaryRep{});
    CHECK(tiny.depth == 1);

    auto mixed = adduce(rep({BasicRep::character(3), BasicRep::speh(2, 7)}));
    CHECK(mixed.primary == rep({BasicRep::character(2), BasicRep::speh(1, 7)}));
    CHECK(mixed.depth == 3);

    CHECK_THROWS_AS(adduce(UnitaryRep{}), std::invalid_argument);
}

TEST_CASE("k = m Speh complementary series is ambiguous") {
    auto res = adduce(rep({BasicRep::speh_cs(2, 2, p("s"))}));
    CHECK(res.ambiguous);
    CHECK(res.depth == 4);
    CHECK(res.primary == rep({BasicRep::speh_cs(1, 2, p("s"))}));
    REQUIRE(res.alternates.size() == 1);
    CHECK(res.alternates[0] ==
          rep({BasicRep::speh_cs(1, 1, AffineForm(Rational(1, 2)) - p("s"))}));

    auto res_k1 = adduce(rep({BasicRep::speh_cs(1, 1, p("s"))}));
    CHECK(res_k1.ambiguous);
    CHECK(res_k1.primary == UnitaryRep{});
    CHECK(res_k1.alternates.empty());  // both candidates exhaust to the trivial rep

    auto no_amb = adduce(rep({BasicRep::speh_cs(2, 1, p("s"))}));
    CHECK_FALSE(no_amb.ambiguous);
    CHECK(no_amb.alternates.empty());
}

TEST_CASE("depth composition iterates to the trivial rep") {
    CHECK(depth_composition(rep({BasicRep::character(4)})).dc == Composition({1, 1, 1, 1}));
    CHECK(depth_composition(rep({BasicRep::speh(3, 2)})).dc == Composition({2, 2, 2}));
    CHECK(depth_composition(rep({BasicRep::character(3), BasicRep::speh(2, 9)})).dc ==
          Composition({3, 3, 1}));
    CHECK(depth_composition(UnitaryRep{}).dc == Composition{});
    CHECK(depth_composition(rep({BasicRep::speh_cs(2, 2, p("s"))})).ambiguity_encountered);
}

TEST_CASE("whittaker verdicts") {
    UnitaryRep delta = rep({BasicRep::speh(2, 1)});
    CHECK(whittaker_nonvanishing(delta, Composition({2, 2})) == WhittakerVerdict::GuaranteedTrue);
    CHECK(whittaker_nonvanishing(delta, Composition({3, 1})) == WhittakerVerdict::GuaranteedFalse);
    CHECK(whittaker_nonvanishing(delta, Composition({2, 1, 1})) ==
          WhittakerVerdict::UpperBoundOnly);
    // Any reordering of AP is still the same orbit.
    CHECK(whittaker_nonvanishing(rep({BasicRep::character(2), BasicRep::character(1)}),
                                 Composition({1, 2})) == WhittakerVerdict::GuaranteedTrue);
    CHECK_THROWS_AS(whittaker_nonvanishing(delta, Composition({2, 1})), std::invalid_argument);
}

TEST_CASE("sign twist") {
    UnitaryRep speh = rep({BasicRep::speh(2, 3, p("t"))});
    CHECK(sign_twist(speh) == speh);
    CHECK(sign_twist(rep({BasicRep::character(3, 0, p("t"))})) ==
          rep({BasicRep::character(3, 1, p("t"))}));
    CHECK(sign_twist(sign_twist(rep({BasicRep::stein(2, p("s"), 0)}))) ==
          rep({BasicRep::stein(2, p("s"), 0)}));
    // Twisting commutes with adduction and fixes the associated partition.
    UnitaryRep pi = rep({BasicRep::character(2), BasicRep::speh(2, 4)});
    CHECK(adduce(sign_twist(pi)).primary == sign_twist(adduce(pi).primary));
    CHECK(associated_partition(sign_twist(pi)) == associated_partition(pi));
}

TEST_CASE("unitary twist") {
    UnitaryRep pi = rep({BasicRep::character(2), BasicRep::speh(1, 3)});
    AffineForm t = p("t");
    CHECK(adduce(unitary_twist(pi, t)).primary == unitary_twist(adduce(pi).primary, t));
    CHECK(associated_partition(unitary_twist(pi, t)) == associated_partition(pi));
    CHECK(depth_composition(unitary_twist(pi, t)).dc == depth_composition(pi).dc);
}

TEST_CASE("catalog identities on small sizes") {
    for (int n = 0; n <= 8; ++n) {
        for (const auto& pi : catalog_of_size(n)) {
            auto dc = depth_composition(pi);
            Partition ap = associated_partition(pi);
            CHECK(dc.dc.parts() == ap.parts());
            CHECK(dc.dc.is_nonincreasing());
            if (n > 0) {
                // Depth is exactly the ambient size drop, for every candidate.
                auto step = adduce(pi);
                CHECK(step.depth == n - step.primary.n());
                for (const auto& alt : step.alternates) CHECK(step.depth == n - alt.n());
            }
        }
    }
}

TEST_CASE("associated partition is multiplicative") {
    for (int a = 1; a <= 4; ++a) {
        for (int b = 1; b <= 4; ++b) {
            for (const auto& sigma : catalog_of_size(a)) {
                for (const auto& tau : catalog_of_size(b)) {
                    CHECK(associated_partition(sigma.times(tau)) ==
                          orbit_sum(associated_partition(sigma), associated_partition(tau)));
                }
            }
        }
    }
}

TEST_CASE("rep expressions parse and format") {
    UnitaryRep pi = parse_rep("chi(3) x speh(4,2)");
    CHECK(pi == rep({BasicRep::character(3), BasicRep::speh(2, 2)}));
    CHECK(parse_rep(format_rep(pi)) == pi);

    UnitaryRep full = parse_rep("stein(4,s,1,t) x spehcs(8,2,s2,t2) x chi(1,0,t3)");
    CHECK(full.n() == 13);
    CHECK(parse_rep(format_rep(full)) == full);

    CHECK_THROWS_AS(parse_rep("chi(0)"), std::exception);
    CHECK_THROWS_AS(parse_rep("stein(3,s)"), gln::ParseError);
    CHECK_THROWS_AS(parse_rep("spehcs(6,1,s)"), gln::ParseError);
    CHECK_THROWS_AS(parse_rep("chi(2) y chi(1)"), gln::ParseError);
    CHECK_THROWS_AS(parse_rep("stein(4,s) x stein(4,s)"), gln::ParseError);
    CHECK_THROWS_AS(parse_rep("stein(4,1/2)"), std::exception);
}

TEST_CASE("catalog round-trips through the text grammar") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& pi : catalog_of_size(n)) CHECK(parse_rep(format_rep(pi)) == pi);
}

TEST_SUITE_END();
