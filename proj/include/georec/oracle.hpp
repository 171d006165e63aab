#pragma once

#include <cstdint>

#include "georec/model.hpp"
#include "georec/records.hpp"

namespace georec {

// Exhaustive sum over all M^n words with letters in [1, M]. Exact on that
// truncated measure; the returned tail bounds certify the distance to the
// unbounded model. Throws std::invalid_argument when M^n exceeds `budget`.
RecordStatistics enumerate_oracle(const ModelParams& params, const RecordQuery& query,
                                  long M, std::uint64_t budget = 20'000'000);

// Dynamic program over (letters read, current maximum, records seen) on the
// same truncated measure as enumerate_oracle, hence exactly equal results
// at equal M, in O(n M r) arithmetic operations. Mass is absorbed into the
// (value, position) bins at the step where the r-th record appears; letters
// after that point only contribute the factor keeping them inside [1, M].
RecordStatistics dp_oracle(const ModelParams& params, const RecordQuery& query, long M);

// Expected number of records among all n letters of a word drawn from the
// truncated measure; |unbounded - truncated| <= n^2 q^M.
Rational dp_expected_records(const ModelParams& params, long n, long M, Mode mode);

// Expected record counts for every prefix length n = 1..n_max at a shared
// cutoff, from a single forward pass (entry 0 is unused and zero).
std::vector<Rational> dp_expected_records_prefix(const ModelParams& params, long n_max,
                                                 long M, Mode mode);

}  // namespace georec
