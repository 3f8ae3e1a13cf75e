#include "critex/cgap.hpp"

#include <algorithm>
#include <cstring>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace critex {

namespace {

const char* kLetters = "0123456789abcdefghijklmnopqrstuvwxyz";

}  // namespace

ConstantGap::ConstantGap(std::string period_word) : word_(std::move(period_word)) {
    if (word_.empty()) throw std::invalid_argument("empty constant gap word");
    if (!is_constant_gap(word_))
        throw std::invalid_argument("not a constant gap word: " + word_);
}

size_t ConstantGap::alphabet_size() const {
    std::set<char> letters(word_.begin(), word_.end());
    return letters.size();
}

bool ConstantGap::is_constant_gap(std::string_view word) {
    if (word.empty()) return false;
    size_t p = word.size();
    std::map<char, std::vector<size_t>> occ;
    for (size_t i = 0; i < p; ++i) occ[word[i]].push_back(i);
    for (auto& [letter, pos] : occ) {
        (void)letter;
        // Gaps in the periodic extension: consecutive differences and the
        // wrap-around gap must all agree.
        size_t gap = pos.size() == 1 ? p : pos[1] - pos[0];
        for (size_t i = 1; i < pos.size(); ++i)
            if (pos[i] - pos[i - 1] != gap) return false;
        if (pos.front() + p - pos.back() != gap) return false;
    }
    return true;
}

ConstantGap interlace(const std::vector<ConstantGap>& parts) {
    if (parts.empty()) throw std::invalid_argument("nothing to interlace");
    std::set<char> seen;
    long l = 1;
    for (auto& part : parts) {
        std::set<char> own(part.word().begin(), part.word().end());
        for (char c : own)
            if (!seen.insert(c).second) throw alphabet_collision{};
        l = std::lcm(l, (long)part.period());
    }
    size_t k = parts.size();
    std::string out;
    out.reserve(k * l);
    for (long n = 0; n < l; ++n)
        for (size_t j = 0; j < k; ++j) out += parts[j].at(n);
    return ConstantGap(std::move(out));
}

namespace {

// Partitions of d into at least two parts, each part in 1..d-1, as sorted
// multisets (descending).
void partitions_into(int d, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (d == 0) {
        if (cur.size() >= 2) out.push_back(cur);
        return;
    }
    for (int part = std::min(d, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions_into(d - part, part, cur, out);
        cur.pop_back();
    }
}

void lcm_combos(const std::vector<std::set<long>>& choices, size_t idx, long acc, std::set<long>& out) {
    if (idx == choices.size()) {
        out.insert(acc);
        return;
    }
    for (long p : choices[idx]) lcm_combos(choices, idx + 1, std::lcm(acc, p), out);
}

const std::set<long>& periods_memo(int d) {
    static std::map<int, std::set<long>> memo;
    auto it = memo.find(d);
    if (it != memo.end()) return it->second;
    std::set<long> result;
    if (d == 1) {
        result = {1};
    } else {
        std::vector<std::vector<int>> parts;
        std::vector<int> cur;
        partitions_into(d, d - 1, cur, parts);
        for (auto& partition : parts) {
            std::vector<std::set<long>> choices;
            for (int di : partition) choices.push_back(periods_memo(di));
            std::set<long> lcms;
            lcm_combos(choices, 0, 1, lcms);
            for (long l : lcms) result.insert((long)partition.size() * l);
        }
    }
    return memo.emplace(d, std::move(result)).first->second;
}

std::optional<ConstantGap> try_construct(int d, long period, int letter_offset);

// Find a partition (d_1..d_k) with periods (P_1..P_k), k*lcm = period, and
// materialize the interlacing.
std::optional<ConstantGap> search_interlacing(int d, long period, int letter_offset) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions_into(d, d - 1, cur, parts);
    for (auto& partition : parts) {
        long k = (long)partition.size();
        if (period % k != 0) continue;
        long target_lcm = period / k;
        std::vector<std::vector<long>> choices;
        bool feasible = true;
        for (int di : partition) {
            std::vector<long> ok;
            for (long p : periods_memo(di))
                if (target_lcm % p == 0) ok.push_back(p);
            if (ok.empty()) feasible = false;
            choices.push_back(std::move(ok));
        }
        if (!feasible) continue;
        std::vector<long> pick(partition.size());
        std::function<bool(size_t, long)> dfs = [&](size_t idx, long acc) -> bool {
            if (idx == partition.size()) return acc == target_lcm;
            for (long p : choices[idx]) {
                pick[idx] = p;
                if (dfs(idx + 1, std::lcm(acc, p))) return true;
            }
            return false;
        };
        if (!dfs(0, 1)) continue;
        std::vector<ConstantGap> sub;
        int off = letter_offset;
        for (size_t i = 0; i < partition.size(); ++i) {
            auto piece = try_construct(partition[i], pick[i], off);
            if (!piece) {
                sub.clear();
                break;
            }
            sub.push_back(std::move(*piece));
            off += partition[i];
        }
        if (sub.size() == partition.size()) return interlace(sub);
    }
    return std::nullopt;
}

std::optional<ConstantGap> try_construct(int d, long period, int letter_offset) {
    if (d == 1) {
        if (period != 1) return std::nullopt;
        return ConstantGap(std::string(1, kLetters[letter_offset]));
    }
    return search_interlacing(d, period, letter_offset);
}

}  // namespace

std::set<long> achievable_periods(int d) {
    if (d < 1 || d > 9)
        throw std::invalid_argument("achievable periods supported for 1 <= d <= 9");
    return periods_memo(d);
}

ConstantGap construct_constant_gap(int d, long period, int letter_offset) {
    if (d < 1 || d > 9)
        throw std::invalid_argument("constant gap construction supported for 1 <= d <= 9");
    auto got = try_construct(d, period, letter_offset);
    if (!got)
        throw std::invalid_argument("no constant gap sequence over " + std::to_string(d) +
                                    " letters with period " + std::to_string(period));
    return *got;
}

std::vector<PairCandidate> enumerate_pairs(int d, const Quad& beta_cap) {
    if (d < 2 || d > 10) throw std::invalid_argument("pair enumeration supported for 2 <= d <= 10");
    std::map<std::pair<long, long>, std::pair<int, int>> pairs;  // {P<=P'} -> split
    for (int da = 1; da < d; ++da) {
        int db = d - da;
        if (da > 9 || db > 9) continue;  // one-sided catalogs stop at 9 letters
        for (long P : periods_memo(da)) {
            for (long Pp : periods_memo(db)) {
                long lo = std::min(P, Pp), hi = std::max(P, Pp);
                if (Quad(Rat(1, lo * hi)) > beta_cap) continue;  // below the E* lower bound
                auto key = std::make_pair(lo, hi);
                if (!pairs.count(key))
                    pairs[key] = lo == P ? std::make_pair(da, db) : std::make_pair(db, da);
            }
        }
    }
    auto dominated = [&](const std::pair<long, long>& a) {
        for (auto& [b, split] : pairs) {
            (void)split;
            if (b == a) continue;
            if ((b.first % a.first == 0 && b.second % a.second == 0) ||
                (b.second % a.first == 0 && b.first % a.second == 0))
                return true;
        }
        return false;
    };
    std::vector<PairCandidate> out;
    for (auto& [pq, split] : pairs)
        if (!dominated(pq)) out.push_back({pq.first, pq.second, split.first, split.second});
    return out;
}

}  // namespace critex
