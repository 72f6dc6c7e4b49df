#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "realclif/extension.hpp"
#include "realclif/textio.hpp"

using namespace realclif;

TEST_CASE("B_1 pin-lift extension") {
    FiniteGradedExtension ext = from_pin_lifts(1, {1, 0});
    REQUIRE(ext.size() == 2);
    // element 0 is the identity, element 1 the sign flip with lift e_1
    CHECK(ext.grading[0] == 0);
    CHECK(ext.grading[1] == 1);
    CHECK(ext.cocycle[1][1] == Cyc8(1));  // e1 * e1 = 1
    for (std::size_t g = 0; g < 2; ++g) {
        CHECK(ext.cocycle[0][g] == Cyc8(1));
        CHECK(ext.cocycle[g][0] == Cyc8(1));
    }
    CHECK(verify_cocycle(ext).all_pass());
}

TEST_CASE("B_2 transposition lift squares to one") {
    FiniteGradedExtension ext = from_pin_lifts(2, {2, 0});
    REQUIRE(ext.size() == 8);
    // locate the plain swap
    std::size_t swap_idx = ext.size();
    for (std::size_t g = 0; g < ext.size(); ++g)
        if (ext.labels[g] == "(1 2)") swap_idx = g;
    REQUIRE(swap_idx < ext.size());
    CHECK(ext.cocycle[swap_idx][swap_idx] == Cyc8(1));
    CHECK(ext.grading[swap_idx] == 1);
    CHECK(verify_cocycle(ext).all_pass());
}

TEST_CASE("pin-lift extensions verify for every signature up to n = 3") {
    for (int n = 1; n <= 3; ++n)
        for (int p = 0; p <= n; ++p) {
            FiniteGradedExtension ext = from_pin_lifts(n, {p, n - p});
            Report r = verify_cocycle(ext);
            for (const auto& c : r.cases) {
                INFO(c.key, ": ", c.detail);
                REQUIRE(c.pass);
            }
            // q = 0 lifts are conjugation-fixed, so the cocycle is real
            if (p == n)
                for (const auto& row : ext.cocycle)
                    for (const Cyc8& c : row) REQUIRE(c.is_real());
        }
}

TEST_CASE("grading agrees with the parity of the lift") {
    for (int p = 0; p <= 2; ++p) {
        Signature sig{p, 2 - p};
        FiniteGradedExtension ext = from_pin_lifts(2, sig);
        // rebuild the lift of each label and compare parities
        for (std::size_t g = 0; g < ext.size(); ++g) {
            SignedPermutation sp = parse_signed_permutation(ext.labels[g], 2);
            PinElement w = lift_signed_permutation(sig, sp);
            REQUIRE(w.parity() == ext.grading[g]);
        }
    }
}

TEST_CASE("trivial cocycle passes and a perturbed one fails with a triple") {
    FiniteGradedExtension ext = from_pin_lifts(2, {2, 0});
    CHECK(verify_cocycle(trivial_extension(ext)).all_pass());

    FiniteGradedExtension bad = ext;
    // corrupt a non-identity entry by a phase
    bad.cocycle[3][2] = bad.cocycle[3][2] * Cyc8::zeta();
    Report r = verify_cocycle(bad);
    CHECK(!r.all_pass());
    bool named = false;
    for (const auto& c : r.cases)
        if (!c.pass && c.key.find("cocycle-identity") != std::string::npos &&
            c.detail.find("triple") != std::string::npos)
            named = true;
    CHECK(named);
}

TEST_CASE("internal tensor carries the odd-odd braiding sign") {
    FiniteGradedExtension b1 = from_pin_lifts(1, {1, 0});
    FiniteGradedExtension sq = tensor_same_group(b1, b1);
    // both factors odd at g = h = flip: cocycle picks up -1
    CHECK(sq.cocycle[1][1] == Cyc8(-1));
    CHECK(sq.grading[1] == 0);  // gradings add mod 2
    CHECK(verify_cocycle(sq).all_pass());

    FiniteGradedExtension quad = tensor_same_group(sq, sq);
    CHECK(verify_cocycle(quad).all_pass());
}

TEST_CASE("external tensor of B_1 and B_2 extensions") {
    FiniteGradedExtension b1 = from_pin_lifts(1, {1, 0});
    FiniteGradedExtension b2 = from_pin_lifts(2, {1, 1});
    FiniteGradedExtension prod = tensor_product_group(b1, b2);
    CHECK(prod.size() == 16);
    Report r = verify_cocycle(prod);
    for (const auto& c : r.cases) {
        INFO(c.key, ": ", c.detail);
        REQUIRE(c.pass);
    }
}

TEST_CASE("json round trip") {
    FiniteGradedExtension ext = from_pin_lifts(2, {1, 1});
    std::string dump = extension_to_json(ext);
    FiniteGradedExtension back = extension_from_json(dump);
    CHECK(back.labels == ext.labels);
    CHECK(back.grading == ext.grading);
    CHECK(back.mult == ext.mult);
    CHECK(back.involution == ext.involution);
    CHECK(back.cocycle == ext.cocycle);
    CHECK(verify_cocycle(back).all_pass());
    CHECK(extension_to_json(back) == dump);
}

TEST_CASE("incompatible groups are rejected") {
    FiniteGradedExtension b1 = from_pin_lifts(1, {1, 0});
    FiniteGradedExtension b2 = from_pin_lifts(2, {2, 0});
    CHECK_THROWS_AS(tensor_same_group(b1, b2), std::invalid_argument);
}
