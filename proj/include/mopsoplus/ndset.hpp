#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mopsoplus/types.hpp"

namespace mopsoplus {

/// Pareto dominance on the (maximise resilience, minimise cost) pair.
/// True iff a is no worse in both objectives and strictly better in one.
bool dominates(const ObjectivePair& a, const ObjectivePair& b);

/// Feasibility-first dominance: feasible beats infeasible, two infeasible
/// solutions compare by smaller deficit, two feasible ones by dominates().
bool constrained_dominates(const Solution& a, const Solution& b);
bool constrained_dominates(const ObjectivePair& ao, const Feasibility& af,
                           const ObjectivePair& bo, const Feasibility& bf);

struct InsertResult {
    enum class Kind {
        accepted_new,
        accepted_replacing,
        rejected_dominated,
        rejected_duplicate,
    };
    Kind kind;
    std::size_t removed = 0;  // members evicted as dominated

    bool accepted() const {
        return kind == Kind::accepted_new || kind == Kind::accepted_replacing;
    }
};

/// Set of mutually non-dominated solutions under constrained dominance.
///
/// Invariants kept by insert(): no member dominates another, no two members
/// have bit-identical objective pairs (the first-inserted representative is
/// kept), and no infeasible member coexists with a feasible one. Objectives
/// are stored as structure-of-arrays so dominance scans vectorise.
class NDSet {
public:
    std::size_t size() const { return res_.size(); }
    bool empty() const { return res_.empty(); }

    const Decision& decision(std::size_t i) const { return decisions_[i]; }
    ObjectivePair objectives(std::size_t i) const { return {res_[i], cost_[i]}; }
    Feasibility feasibility(std::size_t i) const {
        return {feasible_[i] != 0, deficit_[i]};
    }
    Solution solution(std::size_t i) const {
        return {decisions_[i], objectives(i), feasibility(i)};
    }
    std::vector<Solution> solutions() const;

    const double* res_data() const { return res_.data(); }
    const double* cost_data() const { return cost_.data(); }

    /// Inserts under constrained dominance. When `removed_indices` is given
    /// it receives the (ascending, pre-removal) indices of evicted members.
    InsertResult insert(Solution s, std::vector<std::size_t>* removed_indices = nullptr);

    void clear();

private:
    std::vector<double> res_, cost_, deficit_;
    std::vector<std::uint8_t> feasible_;
    std::vector<Decision> decisions_;
    std::vector<std::uint64_t> scratch_;

    void erase_members(const std::vector<std::size_t>& idx);
    void push(Solution&& s);
};

/// Non-dominated subset of (set ∪ candidates) under constrained dominance,
/// duplicate objective vectors collapsed onto the first-inserted solution.
/// When `candidate_survived` is given it is resized to candidates.size() and
/// flags the candidates that are represented in the returned set.
NDSet update_nd_set(const NDSet& set, std::span<const Solution> candidates,
                    std::vector<std::uint8_t>* candidate_survived = nullptr);

}  // namespace mopsoplus
