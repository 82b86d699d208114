#pragma once

#include "poslab/partition.hpp"

#include <functional>
#include <vector>

namespace poslab {

/// Rows weakly increase left to right, columns strictly increase top to
/// bottom (skew columns are compared across the skew boundary).
bool is_semistandard(const Numbering& t);

/// Rows concatenated top to bottom, each row read right to left.
std::vector<int> reading_word(const Numbering& t);

/// Every prefix of the word has #(i) <= #(i-1) for all i >= 2.
bool is_ballot(const std::vector<int>& word);

/// Semistandard, content equal to `content`, and ballot reading word.
bool is_lr_tableau(const Numbering& t, const Partition& content);

/// Visits semistandard fillings with entries in 1..max_entry; the visitor
/// returns false to stop early. Returns false iff stopped.
bool for_each_ssyt(const SkewShape& shape, int max_entry,
                   const std::function<bool(const Numbering&)>& visit);

/// All semistandard fillings, ordered lexicographically by reading word.
std::vector<Numbering> enumerate_ssyt(const SkewShape& shape, int max_entry);

long long count_ssyt(const SkewShape& shape, int max_entry);
long long count_ssyt(const Partition& shape, int max_entry);

/// All bijective fillings by 1..|shape| with strictly increasing rows and
/// columns, ordered lexicographically by reading word.
std::vector<Numbering> enumerate_standard(const Partition& shape);

long long count_standard(const Partition& shape);

/// Littlewood-Richardson coefficient: the number of ballot semistandard
/// fillings of gamma/alpha with content beta. Zero on size mismatch or when
/// alpha does not fit inside gamma.
long long lr_coefficient(const Partition& alpha, const Partition& beta,
                         const Partition& gamma);

} // namespace poslab
