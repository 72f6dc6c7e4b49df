#pragma once

#include <cstdint>
#include <vector>

#include "realclif/clifford.hpp"
#include "realclif/pin.hpp"
#include "realclif/report.hpp"
#include "realclif/rng.hpp"

namespace realclif {

/// Exact unit-norm vector with real-subfield coordinates: signed basis
/// vectors, (e_i +- e_j)/sqrt2, Pythagorean combinations, half-sum patterns.
std::vector<Cyc8> random_unit_vector(const Signature& sig, SplitMix64& rng);

/// Product of up to max_factors unit vectors times a random mu8 phase.
PinElement random_pin_element(const Signature& sig, SplitMix64& rng, int max_factors = 5);

/// Seeded random odd self-adjoint operator on a graded basis of paired
/// blocks: offdiag(B, B^*) with Gaussian-integer lattice entries.
Operator random_odd_self_adjoint(std::size_t even_dim, std::size_t odd_dim,
                                 SplitMix64& rng);

struct SuiteOptions {
    int max_total = 6;   // bound on k(p+q)
    int samples = 5;
    std::uint64_t seed = 0;
    int jobs = 1;
};

Report run_grading_identity_suite(std::uint64_t seed);          // p+q <= 4, 1000 each
Report run_lift_roundtrip_suite(std::uint64_t seed);            // exhaustive n<=3, 200 at n=4
Report run_unitarity_suite();                                   // p+q <= 6
Report run_kernel_multiplicativity_suite(std::uint64_t seed);   // 100 samples, dim <= 8
Report run_morita_suite();                                      // p+q <= 3
Report run_extension_suite();                                   // B_n, n <= 4, + tensors
std::vector<Report> run_theorem_a_suite(const SuiteOptions& opt);
std::vector<Report> run_power_axiom_suite(const SuiteOptions& opt);

/// Everything above, ordered deterministically; case-level parallelism is
/// governed by opt.jobs and never changes report content.
std::vector<Report> run_all_suites(const SuiteOptions& opt);

} // namespace realclif
