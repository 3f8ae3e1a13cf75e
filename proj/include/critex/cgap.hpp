#pragma once

#include "critex/quadratic.hpp"

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace critex {

/// One period of a constant gap sequence: in the periodic extension every
/// letter recurs at a fixed distance.
class ConstantGap {
public:
    explicit ConstantGap(std::string period_word);

    const std::string& word() const { return word_; }
    size_t period() const { return word_.size(); }
    size_t alphabet_size() const;
    char at(size_t i) const { return word_[i % word_.size()]; }

    static bool is_constant_gap(std::string_view word);

private:
    std::string word_;
};

/// Interlaces constant gap sequences over pairwise disjoint alphabets;
/// the result has period k * lcm of the input periods.
ConstantGap interlace(const std::vector<ConstantGap>& parts);

struct alphabet_collision : std::invalid_argument {
    alphabet_collision() : std::invalid_argument("interlaced alphabets must be disjoint") {}
};

/// Achievable periods of constant gap sequences over exactly d letters,
/// built by closing interlacings over integer partitions. Supported for
/// 1 <= d <= 9 (interlacing is known to generate everything that far).
std::set<long> achievable_periods(int d);

/// A concrete constant gap word over exactly d letters with the given
/// period, letters drawn from "0123456789abc..." starting at letter_offset.
ConstantGap construct_constant_gap(int d, long period, int letter_offset = 0);

struct PairCandidate {
    long P, Pp;   // P <= Pp
    int da, db;   // alphabet split realizing them (da + db = d)
};

/// All unordered pairs {P, P'} achievable as periods of constant gap
/// sequences over an alphabet split of d, pruned by componentwise
/// divisibility (either orientation) and by the lower bound
/// 1/(P*P') > beta_cap.
std::vector<PairCandidate> enumerate_pairs(int d, const Quad& beta_cap);

}  // namespace critex
