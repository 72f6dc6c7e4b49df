#pragma once

#include <cstdint>
#include <vector>

#include "realclif/clifford.hpp"
#include "realclif/linalg.hpp"
#include "realclif/report.hpp"
#include "realclif/wreath.hpp"

namespace realclif {

/// The universal Thom family x -> cl_x: left Clifford multiplication on the
/// spinor module.  Evaluation is linear in x; the operator is odd,
/// self-adjoint, squares to |x|^2 id and is invertible iff x != 0.
struct ThomFamily {
    Signature sig;
    Operator evaluate(const std::vector<Cyc8>& x) const;
};

Operator thom_evaluate(const Signature& sig, const std::vector<Cyc8>& x);

/// sum_j id (x) ... (x) cl_{x_j} (x) ... (x) id on the k-fold spinor module,
/// built by iterated tensor_sum.
Operator power_family(const Signature& sig, int k,
                      const std::vector<std::vector<Cyc8>>& xs);

/// Concatenation of a vector tuple into R^{kp,kq} using the iso_phi
/// coordinate order.
std::vector<Cyc8> concat_reindexed(const Signature& sig, int k,
                                   const std::vector<std::vector<Cyc8>>& xs);

/// Koszul-signed factor permutation on the k-fold spinor module.
Operator koszul_permutation_operator(const Signature& sig, int k,
                                     const std::vector<int>& perm);

/// Spinor action of a wreath element whose blocks are signed permutations:
/// graded tensor of the lifted block actions followed by the Koszul
/// permutation.
Operator tensor_power_spinor_action(const Signature& sig, const WreathElement& w);

/// The theorem-a suite: (a) iso_phi is a graded Real algebra isomorphism,
/// (b) the conjugated power family equals the restricted Thom family,
/// (c) spinor-level wreath equivariance up to a measured mu8 scalar,
/// (d) twisted-adjoint conjugation equivariance of the family.
Report verify_theorem_a(int p, int q, int k, int samples, std::uint64_t seed);

/// Power operation axioms: (alpha) additivity of tuples under tensor_sum,
/// (beta) iterated powers flatten.
Report verify_power_axioms(int p, int q, int j, int k, std::uint64_t seed);

/// Deterministic-plus-random vector tuples on the integer lattice [-3,3];
/// index 0 is the zero tuple, then standard basis tuples, then seeded draws.
std::vector<std::vector<std::vector<Cyc8>>> sample_vector_tuples(
    const Signature& sig, int k, int count, std::uint64_t seed);

} // namespace realclif
