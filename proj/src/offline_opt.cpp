#include "ohs/offline_opt.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <map>
#include <numeric>

namespace ohs {

namespace {

class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t n) : words_((n + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

    bool any() const {
        return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
    }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    std::size_t count_and(const Bits& o) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
        return c;
    }
    bool intersects(const Bits& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] & o.words_[i]) return true;
        }
        return false;
    }
    bool subset_of(const Bits& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] & ~o.words_[i]) return false;
        }
        return true;
    }
    void and_not(const Bits& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    }
    void or_with(const Bits& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    }
    Bits and_with(const Bits& o) const {
        Bits r = *this;
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
        return r;
    }
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                const int b = std::countr_zero(w);
                f(i * 64 + static_cast<std::size_t>(b));
                w &= w - 1;
            }
        }
    }
    friend bool operator==(const Bits&, const Bits&) = default;

private:
    std::vector<std::uint64_t> words_;
};

using Clock = std::chrono::steady_clock;

// Removes points whose incidence is contained in another point's incidence,
// then supersets, until nothing changes.
std::vector<std::vector<PointId>> shrink_by_dominance(std::size_t num_points, std::vector<std::vector<PointId>> sets) {
    for (;;) {
        HittingInstance reduced = reduce_sets(num_points, std::move(sets));
        sets = std::move(reduced.sets);
        std::vector<PointId> used;
        for (const auto& s : sets) used.insert(used.end(), s.begin(), s.end());
        std::sort(used.begin(), used.end());
        used.erase(std::unique(used.begin(), used.end()), used.end());

        std::vector<Bits> incidence(used.size(), Bits(sets.size()));
        for (std::size_t s = 0; s < sets.size(); ++s) {
            for (PointId p : sets[s]) {
                const auto k = static_cast<std::size_t>(std::lower_bound(used.begin(), used.end(), p) - used.begin());
                incidence[k].set(s);
            }
        }
        std::vector<bool> dropped(used.size(), false);
        bool changed = false;
        for (std::size_t a = 0; a < used.size(); ++a) {
            for (std::size_t b = 0; b < used.size() && !dropped[a]; ++b) {
                if (a == b || dropped[b]) continue;
                if (!incidence[a].subset_of(incidence[b])) continue;
                // Equal incidence keeps the smaller id.
                if (incidence[a] == incidence[b] && a < b) continue;
                dropped[a] = true;
                changed = true;
            }
        }
        if (!changed) return sets;
        for (auto& s : sets) {
            std::erase_if(s, [&](PointId p) {
                const auto k = static_cast<std::size_t>(std::lower_bound(used.begin(), used.end(), p) - used.begin());
                return dropped[k];
            });
        }
    }
}

class Solver {
public:
    Solver(const std::vector<std::vector<PointId>>& sets, Clock::time_point deadline, bool has_deadline)
        : deadline_(deadline), has_deadline_(has_deadline) {
        for (const auto& s : sets) points_.insert(points_.end(), s.begin(), s.end());
        std::sort(points_.begin(), points_.end());
        points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
        set_points_.assign(sets.size(), Bits(points_.size()));
        point_sets_.assign(points_.size(), Bits(sets.size()));
        for (std::size_t s = 0; s < sets.size(); ++s) {
            for (PointId p : sets[s]) {
                const std::size_t k = local(p);
                set_points_[s].set(k);
                point_sets_[k].set(s);
            }
        }
    }

    std::size_t root_bound() const {
        Bits uncovered(set_points_.size());
        for (std::size_t s = 0; s < set_points_.size(); ++s) uncovered.set(s);
        Bits allowed(points_.size());
        for (std::size_t k = 0; k < points_.size(); ++k) allowed.set(k);
        return packing(uncovered, allowed);
    }

    // Returns false on timeout.
    bool solve(std::vector<PointId> initial) {
        best_ = std::move(initial);
        Bits uncovered(set_points_.size());
        for (std::size_t s = 0; s < set_points_.size(); ++s) uncovered.set(s);
        Bits allowed(points_.size());
        for (std::size_t k = 0; k < points_.size(); ++k) allowed.set(k);
        std::vector<PointId> chosen;
        search(uncovered, allowed, chosen);
        return !timed_out_;
    }

    const std::vector<PointId>& best() const { return best_; }
    std::size_t nodes() const { return nodes_; }

private:
    std::vector<PointId> points_;
    std::vector<Bits> set_points_;
    std::vector<Bits> point_sets_;
    std::vector<PointId> best_;
    std::size_t nodes_ = 0;
    Clock::time_point deadline_;
    bool has_deadline_;
    bool timed_out_ = false;

    std::size_t local(PointId p) const {
        return static_cast<std::size_t>(std::lower_bound(points_.begin(), points_.end(), p) - points_.begin());
    }

    // Pairwise disjoint unhit sets (over the allowed points), smallest first.
    // Returns SIZE_MAX when some unhit set has no allowed point left.
    std::size_t packing(const Bits& uncovered, const Bits& allowed) const {
        std::vector<std::pair<std::size_t, std::size_t>> order;
        bool dead = false;
        uncovered.for_each([&](std::size_t s) {
            const std::size_t c = set_points_[s].count_and(allowed);
            if (c == 0) dead = true;
            order.emplace_back(c, s);
        });
        if (dead) return SIZE_MAX;
        std::sort(order.begin(), order.end());
        Bits used(points_.size());
        std::size_t packed = 0;
        for (const auto& [c, s] : order) {
            const Bits pts = set_points_[s].and_with(allowed);
            if (pts.intersects(used)) continue;
            used.or_with(pts);
            ++packed;
        }
        return packed;
    }

    void search(const Bits& uncovered, Bits allowed, std::vector<PointId>& chosen) {
        if (timed_out_) return;
        ++nodes_;
        if (has_deadline_ && (nodes_ & 1023U) == 0 && Clock::now() > deadline_) {
            timed_out_ = true;
            return;
        }
        if (!uncovered.any()) {
            if (chosen.size() < best_.size()) best_ = chosen;
            return;
        }
        const std::size_t lb = packing(uncovered, allowed);
        if (lb == SIZE_MAX || chosen.size() + lb >= best_.size()) return;

        std::size_t branch_set = SIZE_MAX;
        std::size_t branch_size = SIZE_MAX;
        uncovered.for_each([&](std::size_t s) {
            const std::size_t c = set_points_[s].count_and(allowed);
            if (c < branch_size) {
                branch_size = c;
                branch_set = s;
            }
        });
        std::vector<std::pair<std::size_t, std::size_t>> candidates;  // (-coverage, local id)
        set_points_[branch_set].and_with(allowed).for_each([&](std::size_t k) {
            candidates.emplace_back(SIZE_MAX - point_sets_[k].count_and(uncovered), k);
        });
        std::sort(candidates.begin(), candidates.end());
        for (const auto& [neg_cov, k] : candidates) {
            Bits next = uncovered;
            next.and_not(point_sets_[k]);
            chosen.push_back(points_[k]);
            search(next, allowed, chosen);
            chosen.pop_back();
            if (timed_out_) return;
            // Later branches exclude this point; some point of the set must be chosen.
            allowed.reset(k);
        }
    }
};

}  // namespace

HittingInstance reduce_sets(std::size_t num_points, std::vector<std::vector<PointId>> sets) {
    for (std::size_t i = 0; i < sets.size(); ++i) {
        auto& s = sets[i];
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (s.empty()) throw InfeasibleInstance(i);
        if (s.front() < 0 || static_cast<std::size_t>(s.back()) >= num_points) {
            throw std::invalid_argument("point id out of range");
        }
    }
    std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

    std::vector<Bits> bits(sets.size(), Bits(num_points));
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (PointId p : sets[i]) bits[i].set(static_cast<std::size_t>(p));
    }
    HittingInstance out;
    out.num_points = num_points;
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        // Sets are sorted by size, so only earlier kept sets can be subsets.
        const bool dominated = std::any_of(kept.begin(), kept.end(), [&](std::size_t k) {
            return sets[k].size() < sets[i].size() && bits[k].subset_of(bits[i]);
        });
        if (!dominated) kept.push_back(i);
    }
    for (std::size_t k : kept) out.sets.push_back(std::move(sets[k]));
    return out;
}

HittingInstance reduce(std::span<const AxisRect> objects, std::span<const Point> points) {
    std::vector<std::vector<PointId>> sets(objects.size());
    for (std::size_t i = 0; i < objects.size(); ++i) {
        for (std::size_t p = 0; p < points.size(); ++p) {
            if (rect_contains_point(objects[i], points[p])) sets[i].push_back(static_cast<PointId>(p));
        }
        if (sets[i].empty()) throw InfeasibleInstance(i);
    }
    return reduce_sets(points.size(), std::move(sets));
}

HittingInstance reduce(std::span<const Homothet> objects, const SimplePolygon& polygon, std::span<const Point> points) {
    std::vector<std::vector<PointId>> sets(objects.size());
    for (std::size_t i = 0; i < objects.size(); ++i) {
        for (std::size_t p = 0; p < points.size(); ++p) {
            if (point_in_homothet_of_polygon(points[p], polygon, objects[i])) sets[i].push_back(static_cast<PointId>(p));
        }
        if (sets[i].empty()) throw InfeasibleInstance(i);
    }
    return reduce_sets(points.size(), std::move(sets));
}

bool is_hitting_set(const HittingInstance& inst, std::span<const PointId> candidate) {
    std::vector<bool> chosen(inst.num_points, false);
    for (PointId p : candidate) chosen[static_cast<std::size_t>(p)] = true;
    return std::all_of(inst.sets.begin(), inst.sets.end(), [&](const auto& s) {
        return std::any_of(s.begin(), s.end(), [&](PointId p) { return chosen[static_cast<std::size_t>(p)]; });
    });
}

std::vector<PointId> greedy_hitting_set(const HittingInstance& inst) {
    std::vector<bool> hit(inst.sets.size(), false);
    std::vector<std::vector<std::size_t>> incidence(inst.num_points);
    for (std::size_t s = 0; s < inst.sets.size(); ++s) {
        for (PointId p : inst.sets[s]) incidence[static_cast<std::size_t>(p)].push_back(s);
    }
    std::vector<PointId> out;
    std::size_t remaining = inst.sets.size();
    while (remaining > 0) {
        std::size_t best_gain = 0;
        std::size_t best_point = 0;
        for (std::size_t p = 0; p < inst.num_points; ++p) {
            std::size_t gain = 0;
            for (std::size_t s : incidence[p]) gain += hit[s] ? 0 : 1;
            if (gain > best_gain) {
                best_gain = gain;
                best_point = p;
            }
        }
        for (std::size_t s : incidence[best_point]) {
            if (!hit[s]) {
                hit[s] = true;
                --remaining;
            }
        }
        out.push_back(static_cast<PointId>(best_point));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t disjoint_packing_bound(const HittingInstance& inst) {
    std::vector<std::size_t> order(inst.sets.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return inst.sets[a].size() < inst.sets[b].size(); });
    std::vector<bool> used(inst.num_points, false);
    std::size_t packed = 0;
    for (std::size_t s : order) {
        const auto& set = inst.sets[s];
        if (std::any_of(set.begin(), set.end(), [&](PointId p) { return used[static_cast<std::size_t>(p)]; })) continue;
        for (PointId p : set) used[static_cast<std::size_t>(p)] = true;
        ++packed;
    }
    return packed;
}

OptResult exact_min_hitting_set(const HittingInstance& inst, const OptOptions& options) {
    const auto start = Clock::now();
    const bool has_deadline = options.time_limit_seconds > 0.0;
    const auto deadline =
        start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(options.time_limit_seconds));

    OptResult result;
    result.greedy_upper_bound = greedy_hitting_set(inst).size();
    result.packing_lower_bound = disjoint_packing_bound(inst);
    if (inst.sets.empty()) {
        result.proven = true;
        return result;
    }

    std::vector<std::vector<PointId>> sets = shrink_by_dominance(inst.num_points, inst.sets);

    // Independent components: sets linked through shared points.
    std::map<PointId, std::size_t> owner;
    std::vector<std::size_t> parent(sets.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t s = 0; s < sets.size(); ++s) {
        for (PointId p : sets[s]) {
            auto [it, inserted] = owner.emplace(p, s);
            if (!inserted) parent[find(s)] = find(it->second);
        }
    }
    std::map<std::size_t, std::vector<std::vector<PointId>>> components;
    for (std::size_t s = 0; s < sets.size(); ++s) components[find(s)].push_back(sets[s]);

    bool all_closed = true;
    std::size_t lower = 0;
    for (auto& [root, comp] : components) {
        HittingInstance sub{inst.num_points, comp};
        Solver solver(comp, deadline, has_deadline);
        const std::size_t comp_lb = solver.root_bound();
        const bool closed = solver.solve(greedy_hitting_set(sub));
        result.nodes += solver.nodes();
        result.hitting_set.insert(result.hitting_set.end(), solver.best().begin(), solver.best().end());
        if (closed) {
            lower += solver.best().size();
        } else {
            all_closed = false;
            lower += comp_lb;
        }
    }
    std::sort(result.hitting_set.begin(), result.hitting_set.end());
    result.hitting_set.erase(std::unique(result.hitting_set.begin(), result.hitting_set.end()), result.hitting_set.end());
    result.upper_bound = result.hitting_set.size();
    result.lower_bound = lower;
    result.proven = all_closed && result.lower_bound == result.upper_bound;
    return result;
}

double competitive_ratio(std::size_t alg_size, std::size_t opt_size) {
    if (opt_size == 0) throw std::invalid_argument("optimum size must be positive");
    return static_cast<double>(alg_size) / static_cast<double>(opt_size);
}

}  // namespace ohs
