#pragma once

#include <stdexcept>
#include <vector>

#include "georec/model.hpp"

namespace georec {

struct RecordEntry {
  long position;  // 1-based
  long value;
  friend bool operator==(const RecordEntry&, const RecordEntry&) = default;
};

// Left-to-right maxima of a word of positive letters. The first letter is
// always a record; later letters must exceed (strict) or at least match
// (weak) the running maximum.
inline std::vector<RecordEntry> records_of_word(const std::vector<long>& word,
                                                Mode mode) {
  if (word.empty()) throw std::invalid_argument("records_of_word: empty word");
  std::vector<RecordEntry> records;
  long best = 0;
  for (size_t i = 0; i < word.size(); ++i) {
    const long a = word[i];
    if (a < 1) throw std::invalid_argument("records_of_word: letters must be >= 1");
    const bool is_record = mode == Mode::kStrict ? a > best : a >= best;
    if (is_record) {
      records.push_back({static_cast<long>(i) + 1, a});
      best = a;
    }
  }
  return records;
}

}  // namespace georec
