#pragma once

#include <string>

#include "realclif/clifford.hpp"
#include "realclif/linalg.hpp"
#include "realclif/pin.hpp"

namespace realclif {

/// "c0 + c1*z + c2*z^2 + c3*z^3" with exact fractions; zero terms omitted,
/// "0" for zero.  Round-trips through parse_cyc8.
std::string to_string(const Cyc8& a);
Cyc8 parse_cyc8(const std::string& text);

/// "coeff*e1e3 + ... " with compound coefficients parenthesized; "e1", "1",
/// "z^2*e1" and similar forms all parse.  Round-trips through
/// parse_clifford.
std::string to_string(const CliffordElement& a);
CliffordElement parse_clifford(const std::string& text, Signature sig);

/// Matrix dump: a "basis:" header of label:parity pairs, then one "row:"
/// line per row with ';'-separated entries.
std::string operator_dump(const Operator& a);
Operator parse_operator_dump(const std::string& text);

/// Cycle-plus-signs notation, e.g. "(1 2)(3 4) -1 -3"; "id" for the
/// identity.
SignedPermutation parse_signed_permutation(const std::string& text, int n);

} // namespace realclif
