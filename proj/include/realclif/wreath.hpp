#pragma once

#include <vector>

#include "realclif/clifford.hpp"
#include "realclif/pin.hpp"
#include "realclif/report.hpp"

namespace realclif {

/// Element of O_{p,q} wr Sigma_k: one block per factor plus a permutation of
/// the factors.  perm[j] is the slot factor j moves to (0-based).
struct WreathElement {
    std::vector<OrthogonalMatrix> blocks;
    std::vector<int> perm;

    static WreathElement identity(const Signature& sig, int k);
    int factors() const { return static_cast<int>(blocks.size()); }

    /// Group law: apply o first, then this.
    WreathElement compose(const WreathElement& o) const;
    WreathElement inverse() const;
    /// Blockwise conjugation by diag(1_p, -1_q); the permutation is fixed.
    WreathElement conjugated(const Signature& sig) const;

    friend bool operator==(const WreathElement& a, const WreathElement& b) {
        return a.blocks == b.blocks && a.perm == b.perm;
    }

    std::string str() const;
};

/// Block embedding O_{p,q} wr Sigma_k -> O_{kp,kq} in the iso_phi coordinate
/// order; a group homomorphism.
OrthogonalMatrix wreath_embed(const Signature& sig, const WreathElement& w);

/// Sign of permuting homogeneous factors: -1 per inversion whose two factors
/// are both odd.
int koszul_perm_sign(const std::vector<int>& perm, const std::vector<int>& parities);

/// Blockwise Clifford automorphism followed by the Koszul-signed factor
/// permutation; an algebra automorphism of Cl_{p,q}^(x k).
TensorElement act_on_tensor(const WreathElement& w, const TensorElement& a);

/// Sign flips and adjacent coordinate transpositions per factor plus adjacent
/// factor swaps; all embed as signed permutation matrices, so exact Pin lifts
/// exist.
std::vector<WreathElement> default_wreath_generators(const Signature& sig, int k);

/// Checks iso_phi(act_on_tensor(w, a)) == automorphism(embed(w))(iso_phi(a))
/// exhaustively over the monomial tuple basis for each generator.
Report verify_phi_equivariance(int p, int q, int k,
                               const std::vector<WreathElement>& generators);
Report verify_phi_equivariance(int p, int q, int k);

} // namespace realclif
