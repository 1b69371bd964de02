#include "mopsoplus/ndset.hpp"

#include <algorithm>
#include <cassert>

#include "mopsoplus/kernels.hpp"

namespace mopsoplus {

bool dominates(const ObjectivePair& a, const ObjectivePair& b) {
    return a.resilience >= b.resilience && a.cost <= b.cost &&
           (a.resilience > b.resilience || a.cost < b.cost);
}

bool constrained_dominates(const ObjectivePair& ao, const Feasibility& af,
                           const ObjectivePair& bo, const Feasibility& bf) {
    if (af.feasible != bf.feasible) return af.feasible;
    if (!af.feasible) return af.deficit < bf.deficit;
    return dominates(ao, bo);
}

bool constrained_dominates(const Solution& a, const Solution& b) {
    return constrained_dominates(a.objectives, a.feasibility, b.objectives, b.feasibility);
}

std::vector<Solution> NDSet::solutions() const {
    std::vector<Solution> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) out.push_back(solution(i));
    return out;
}

void NDSet::push(Solution&& s) {
    res_.push_back(s.objectives.resilience);
    cost_.push_back(s.objectives.cost);
    deficit_.push_back(s.feasibility.deficit);
    feasible_.push_back(s.feasibility.feasible ? 1 : 0);
    decisions_.push_back(std::move(s.decision));
}

void NDSet::erase_members(const std::vector<std::size_t>& idx) {
    if (idx.empty()) return;
    std::size_t w = 0, k = 0;
    for (std::size_t r = 0; r < size(); ++r) {
        if (k < idx.size() && idx[k] == r) {
            ++k;
            continue;
        }
        if (w != r) {
            res_[w] = res_[r];
            cost_[w] = cost_[r];
            deficit_[w] = deficit_[r];
            feasible_[w] = feasible_[r];
            decisions_[w] = std::move(decisions_[r]);
        }
        ++w;
    }
    res_.resize(w);
    cost_.resize(w);
    deficit_.resize(w);
    feasible_.resize(w);
    decisions_.resize(w);
}

InsertResult NDSet::insert(Solution s, std::vector<std::size_t>* removed_indices) {
    using Kind = InsertResult::Kind;
    if (removed_indices) removed_indices->clear();
    if (empty()) {
        push(std::move(s));
        return {Kind::accepted_new, 0};
    }
    // Mixed feasibility never persists: the set is either all-feasible or
    // all-infeasible (and then every member carries the same deficit).
    const bool set_feasible = feasible_[0] != 0;
    if (s.feasibility.feasible && !set_feasible) {
        std::size_t n = size();
        if (removed_indices) {
            removed_indices->resize(n);
            for (std::size_t i = 0; i < n; ++i) (*removed_indices)[i] = i;
        }
        clear();
        push(std::move(s));
        return {Kind::accepted_replacing, n};
    }
    if (!s.feasibility.feasible) {
        if (set_feasible) return {Kind::rejected_dominated, 0};
        double d0 = deficit_[0];
        if (s.feasibility.deficit > d0) return {Kind::rejected_dominated, 0};
        if (s.feasibility.deficit < d0) {
            std::size_t n = size();
            if (removed_indices) {
                removed_indices->resize(n);
                for (std::size_t i = 0; i < n; ++i) (*removed_indices)[i] = i;
            }
            clear();
            push(std::move(s));
            return {Kind::accepted_replacing, n};
        }
        for (std::size_t i = 0; i < size(); ++i)
            if (res_[i] == s.objectives.resilience && cost_[i] == s.objectives.cost)
                return {Kind::rejected_duplicate, 0};
        push(std::move(s));
        return {Kind::accepted_new, 0};
    }

    // Feasible candidate against an all-feasible set: one vectorised pass.
    std::size_t n = size();
    scratch_.assign((n + 63) / 64, 0);
    kernels::DomScan scan = kernels::dominance_scan(
        s.objectives.resilience, s.objectives.cost, res_.data(), cost_.data(), n, scratch_.data());
    if (scan.duplicate) return {Kind::rejected_duplicate, 0};
    if (scan.candidate_dominated) return {Kind::rejected_dominated, 0};

    std::vector<std::size_t> local;
    std::vector<std::size_t>& removed = removed_indices ? *removed_indices : local;
    for (std::size_t w = 0; w < scratch_.size(); ++w) {
        std::uint64_t bits = scratch_[w];
        while (bits) {
            unsigned b = static_cast<unsigned>(__builtin_ctzll(bits));
            removed.push_back(w * 64 + b);
            bits &= bits - 1;
        }
    }
    erase_members(removed);
    push(std::move(s));
    return removed.empty() ? InsertResult{Kind::accepted_new, 0}
                           : InsertResult{Kind::accepted_replacing, removed.size()};
}

void NDSet::clear() {
    res_.clear();
    cost_.clear();
    deficit_.clear();
    feasible_.clear();
    decisions_.clear();
}

NDSet update_nd_set(const NDSet& set, std::span<const Solution> candidates,
                    std::vector<std::uint8_t>* candidate_survived) {
    NDSet out = set;
    // origin[i]: -1 for an inherited member, else the candidate index.
    std::vector<std::ptrdiff_t> origin(out.size(), -1);
    std::vector<std::size_t> removed;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        InsertResult r = out.insert(candidates[c], &removed);
        if (!r.accepted()) continue;
        std::size_t w = 0, k = 0;
        for (std::size_t i = 0; i < origin.size(); ++i) {
            if (k < removed.size() && removed[k] == i) {
                ++k;
                continue;
            }
            origin[w++] = origin[i];
        }
        origin.resize(w);
        origin.push_back(static_cast<std::ptrdiff_t>(c));
    }
    if (candidate_survived) {
        candidate_survived->assign(candidates.size(), 0);
        for (std::ptrdiff_t o : origin)
            if (o >= 0) (*candidate_survived)[static_cast<std::size_t>(o)] = 1;
    }
    return out;
}

}  // namespace mopsoplus
