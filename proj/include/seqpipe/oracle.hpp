#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "seqpipe/field.hpp"

namespace seqpipe {

/// Closed-form or recurrence value T(n, k) of a named triangle, computed from
/// binomial sums and explicit recurrences only (no generating functions).
///
/// Names: N1 N2 N3 E1 E2 E3 stirling2 A019538 A086810 A028246ext A130850
/// A090582signed galton A096078 etude2_seq. Throws UnknownOracle for other
/// names and IndexRange unless 0 <= k <= n.
FieldElem oracle(std::string_view name, long n, long k);

/// The registered oracle names, in the order above.
const std::vector<std::string>& oracle_names();

}  // namespace seqpipe
