#pragma once

#include <string>
#include <vector>

#include "realclif/clifford.hpp"
#include "realclif/pin.hpp"
#include "realclif/report.hpp"

namespace realclif {

/// Finite group with Z/2 grading, mu8-valued 2-cocycle and Real involution
/// data.  Element 0 is the identity and cocycles are normalized against it.
struct FiniteGradedExtension {
    std::string name;
    std::vector<std::string> labels;
    std::vector<std::vector<int>> mult;      // mult[g][h] = index of g*h
    std::vector<int> grading;                // Z/2 bits
    std::vector<std::vector<Cyc8>> cocycle;  // unit-norm scalars
    std::vector<int> involution;             // index map of order <= 2

    std::size_t size() const { return labels.size(); }
};

/// Signed permutation group B_n acting on R^{p,q} (n = p+q), with the
/// cocycle of the canonical Pin lifts: lift(g) lift(h) = c(g,h) lift(gh).
/// Every scalar is checked to lie in mu8; grading is the determinant bit and
/// the involution is conjugation by diag(1_p, -1_q).
FiniteGradedExtension from_pin_lifts(int n, Signature sig);

/// Same group, trivial grading and cocycle, same involution.
FiniteGradedExtension trivial_extension(const FiniteGradedExtension& like);

/// Exhaustive checks: normalization, the 2-cocycle identity over all
/// triples, grading homomorphism, Real compatibility
/// cocycle(conj g, conj h) = conj(cocycle(g, h)).
Report verify_cocycle(const FiniteGradedExtension& ext);

/// Graded tensor product over the same group: cocycles multiply and pick up
/// the braiding sign (-1)^{grading2(g) grading1(h)}; gradings add.
FiniteGradedExtension tensor_same_group(const FiniteGradedExtension& a,
                                        const FiniteGradedExtension& b);

/// External graded tensor product on the product group.
FiniteGradedExtension tensor_product_group(const FiniteGradedExtension& a,
                                           const FiniteGradedExtension& b);

/// JSON round-trip; cocycle values are stored as mu8 exponents.
std::string extension_to_json(const FiniteGradedExtension& ext);
FiniteGradedExtension extension_from_json(const std::string& text);

} // namespace realclif
