#include "lexmorse/puzzle.hpp"

#include "lexmorse/error.hpp"

#include <algorithm>
#include <functional>

namespace lexmorse {

bool puzzle_split_condition(std::pair<int, int> b, std::pair<int, int> c) {
    return b.first < b.second && c.first < c.second && b.first + b.second == c.first + c.second && b.first > c.first;
}

namespace {

struct PoolEntry {
    int n;
    std::vector<int> parts;  // ascending, at least two
};

std::vector<PoolEntry> refinement_pool(int max_n, bool distinct) {
    std::vector<PoolEntry> pool;
    std::vector<int> cur;
    // Ascending parts, each >= the previous.
    std::function<void(int, int)> grow = [&](int rest, int min_part) {
        if (rest == 0) {
            if (cur.size() >= 2) {
                int n = 0;
                for (int x : cur) n += x;
                pool.push_back({n, cur});
            }
            return;
        }
        for (int x = min_part; x <= rest; ++x) {
            if (distinct && x > 1 && !cur.empty() && cur.back() == x) continue;
            cur.push_back(x);
            grow(rest - x, x);
            cur.pop_back();
        }
    };
    for (int n = 2; n <= max_n; ++n) grow(n, 1);
    std::sort(pool.begin(), pool.end(), [](const PoolEntry& a, const PoolEntry& b) {
        return a.n != b.n ? a.n < b.n : a.parts < b.parts;
    });
    return pool;
}

// Distributes `items` (ascending) into blocks so each block sums to its target
// and is strictly smaller than its reference list in the lexicographic order
// on ascending lists.
class Redistribution {
public:
    // Buffers are kept between candidates; reset() reuses their capacity.
    void reset(const std::vector<int>* items, const std::vector<int>* targets,
               const std::vector<const std::vector<int>*>* refs) {
        items_ = items;
        targets_ = targets;
        refs_ = refs;
        const std::size_t k = targets->size();
        sum_.assign(k, 0);
        eq_.assign(k, 1);
        if (blocks_.size() < k) blocks_.resize(k);
        for (std::size_t i = 0; i < k; ++i) blocks_[i].clear();
        chosen_.assign(items->size(), 0);
    }

    bool solve() { return place(0); }
    std::vector<std::vector<int>> blocks() const {
        return {blocks_.begin(), blocks_.begin() + static_cast<std::ptrdiff_t>(targets_->size())};
    }

private:
    bool place(std::size_t idx) {
        const auto& items = *items_;
        const auto& targets = *targets_;
        const auto& refs = *refs_;
        const std::size_t k = targets.size();
        if (idx == items.size()) {
            for (std::size_t i = 0; i < k; ++i)
                if (eq_[i] || sum_[i] != targets[i]) return false;
            return true;
        }
        const int x = items[idx];
        for (std::size_t i = 0; i < k; ++i) {
            const int cap = targets[i] - sum_[i];
            if (cap > 0 && cap < x) return false;
            if (eq_[i] && cap > 0) {
                const auto& ref = *refs[i];
                if (blocks_[i].size() >= ref.size() || ref[blocks_[i].size()] < x) return false;
            }
        }
        // Equal items are interchangeable: send them to nondecreasing blocks.
        const std::size_t first = idx > 0 && items[idx - 1] == x ? chosen_[idx - 1] : 0;
        for (std::size_t i = first; i < k; ++i) {
            if (sum_[i] + x > targets[i]) continue;
            if (redundant(first, i)) continue;
            const auto& ref = *refs[i];
            const std::size_t cnt = blocks_[i].size();
            bool eq = eq_[i];
            if (eq) {
                if (x > ref[cnt]) continue;
                eq = x == ref[cnt];
            }
            if (eq && sum_[i] + x == targets[i]) continue;
            const char old_eq = eq_[i];
            sum_[i] += x;
            eq_[i] = eq;
            blocks_[i].push_back(x);
            chosen_[idx] = i;
            if (place(idx + 1)) return true;
            blocks_[i].pop_back();
            eq_[i] = old_eq;
            sum_[i] -= x;
        }
        return false;
    }

    // An earlier block in an identical state makes this choice a repeat.
    bool redundant(std::size_t first, std::size_t i) const {
        for (std::size_t j = first; j < i; ++j)
            if ((*targets_)[j] == (*targets_)[i] && sum_[j] == sum_[i] && eq_[j] == eq_[i] && blocks_[j] == blocks_[i] &&
                *(*refs_)[j] == *(*refs_)[i])
                return true;
        return false;
    }

    const std::vector<int>* items_ = nullptr;
    const std::vector<int>* targets_ = nullptr;
    const std::vector<const std::vector<int>*>* refs_ = nullptr;
    std::vector<int> sum_;
    std::vector<char> eq_;
    std::vector<std::vector<int>> blocks_;
    std::vector<std::size_t> chosen_;
};

// Counts of values > 1, for the distinctness side conditions.
class DistinctTracker {
public:
    explicit DistinctTracker(int max_value) : count_(static_cast<std::size_t>(max_value) + 1, 0) {}
    bool can_add(const std::vector<int>& xs) const {
        for (std::size_t a = 0; a < xs.size(); ++a)
            if (xs[a] > 1 && (count_[static_cast<std::size_t>(xs[a])] > 0 ||
                              std::count(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(a), xs[a]) > 0))
                return false;
        return true;
    }
    void add(const std::vector<int>& xs, int delta) {
        for (int x : xs)
            if (x > 1) count_[static_cast<std::size_t>(x)] += delta;
    }

private:
    std::vector<int> count_;
};

}  // namespace

PuzzleReport puzzle_search(const PuzzleOptions& opts) {
    if (opts.max_total < 0 || opts.max_parts < 0) throw Error(ErrorCode::InvalidArgument, "puzzle bounds must be nonnegative");
    PuzzleReport report;
    if (opts.max_parts < 3) return report;
    const auto pool = refinement_pool(opts.max_total, opts.distinct);
    std::vector<int> items, targets;
    std::vector<const std::vector<int>*> refs;
    Redistribution r;

    for (int k = 3; k <= opts.max_parts; ++k) {
        for (int nk = 5; nk <= opts.max_total; ++nk) {
            const int rest = opts.max_total - nk;
            if (rest < 2 * (k - 1)) continue;
            for (int b1 = 2; 2 * b1 < nk; ++b1) {
                const std::vector<int> b_last{b1, nk - b1};
                for (int c1 = 1; c1 < b1; ++c1) {
                    const std::vector<int> c_last{c1, nk - c1};
                    DistinctTracker with_b(opts.max_total), with_c(opts.max_total);
                    if (opts.distinct) {
                        if (!with_b.can_add(b_last) || !with_c.can_add(c_last)) continue;
                        with_b.add(b_last, 1);
                        with_c.add(c_last, 1);
                    }
                    std::vector<std::size_t> chosen;
                    std::function<void(std::size_t, int)> pick = [&](std::size_t from, int budget) {
                        if (static_cast<int>(chosen.size()) == k - 1) {
                            ++report.candidates;
                            items.assign({c1, nk - c1});
                            targets.clear();
                            refs.clear();
                            for (std::size_t idx : chosen) {
                                items.insert(items.end(), pool[idx].parts.begin(), pool[idx].parts.end());
                                targets.push_back(pool[idx].n);
                                refs.push_back(&pool[idx].parts);
                            }
                            targets.push_back(nk);
                            refs.push_back(&b_last);
                            std::sort(items.begin(), items.end());
                            r.reset(&items, &targets, &refs);
                            if (r.solve()) {
                                PuzzleSolution s;
                                s.n = targets;
                                for (auto* ref : refs) s.b.push_back(*ref);
                                s.c = {c1, nk - c1};
                                s.blocks = r.blocks();
                                report.solutions.push_back(std::move(s));
                            }
                            return;
                        }
                        const int slots_after = k - 2 - static_cast<int>(chosen.size());
                        for (std::size_t idx = from; idx < pool.size(); ++idx) {
                            const auto& e = pool[idx];
                            if (e.n + 2 * slots_after > budget) break;
                            if (opts.distinct) {
                                if (!with_b.can_add(e.parts) || !with_c.can_add(e.parts)) continue;
                                with_b.add(e.parts, 1);
                                with_c.add(e.parts, 1);
                            }
                            chosen.push_back(idx);
                            pick(idx, budget - e.n);
                            chosen.pop_back();
                            if (opts.distinct) {
                                with_b.add(e.parts, -1);
                                with_c.add(e.parts, -1);
                            }
                        }
                    };
                    pick(0, rest);
                }
            }
        }
    }
    return report;
}

}  // namespace lexmorse
