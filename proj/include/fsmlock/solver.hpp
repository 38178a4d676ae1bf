#pragma once

#include <chrono>
#include <cstdint>
#include <span>
#include <vector>

#include "fsmlock/cnf.hpp"

namespace fsmlock {

enum class SatStatus { Sat, Unsat, Unknown };

/// Resource limits for one solve call. Exhaustion yields Unknown, which
/// callers must treat as "did not terminate" — never as Unsat.
struct SolveBudget {
    int64_t max_conflicts = -1;  // < 0: unlimited
    double max_seconds = -1.0;   // < 0: unlimited
};

struct SolveStats {
    uint64_t conflicts = 0;
    uint64_t decisions = 0;
    uint64_t propagations = 0;
    uint64_t restarts = 0;
    double seconds = 0.0;
};

/// Conflict-driven clause learning solver: two-watched-literal propagation,
/// activity-ordered decisions, first-UIP learning, Luby restarts, phase
/// saving. Clauses and variables may be added between solve calls; each call
/// takes a set of assumption literals.
class Solver {
  public:
    Solver();

    Var new_var();
    int num_vars() const { return static_cast<int>(assign_.size()); }

    /// Returns false if the clause makes the formula trivially unsatisfiable.
    bool add_clause(std::span<const Lit> lits);
    bool add_clause(std::initializer_list<Lit> lits) { return add_clause(std::span<const Lit>(lits.begin(), lits.size())); }

    SatStatus solve(std::span<const Lit> assumptions = {}, const SolveBudget& budget = {});

    bool model_value(Var v) const { return model_.at(static_cast<size_t>(v)) != 0; }
    const std::vector<uint8_t>& model() const { return model_; }

    const SolveStats& stats() const { return stats_; }
    bool ok() const { return ok_; }

    /// Re-checks every model against the clause database before reporting
    /// Sat. Always on in debug builds.
    void set_verify_models(bool v) { verify_models_ = v; }

  private:
    using ClauseRef = uint32_t;
    static constexpr ClauseRef kNoClause = UINT32_MAX;

    struct Clause {
        std::vector<Lit> lits;
        double activity = 0.0;
        bool learnt = false;
        bool deleted = false;
    };
    struct Watcher {
        ClauseRef cref;
        Lit blocker;
    };

    enum : uint8_t { kTrue = 0, kFalse = 1, kUndef = 2 };

    uint8_t value(Lit l) const {
        uint8_t a = assign_[static_cast<size_t>(lit_var(l))];
        return a == kUndef ? kUndef : static_cast<uint8_t>(a ^ (lit_sign(l) ? 1 : 0));
    }

    void attach_clause(ClauseRef cr);
    void enqueue(Lit l, ClauseRef reason);
    ClauseRef propagate();
    void analyze(ClauseRef confl, std::vector<Lit>& learnt, int& backtrack_level);
    bool lit_redundant(Lit l);
    void cancel_until(int level);
    void new_decision_level() { trail_lim_.push_back(static_cast<int>(trail_.size())); }
    int decision_level() const { return static_cast<int>(trail_lim_.size()); }
    Lit pick_branch_lit();
    void var_bump(Var v);
    void var_decay() { var_inc_ /= 0.95; }
    void clause_bump(Clause& c);
    void reduce_db();
    void rebuild_watches();
    SatStatus search(std::span<const Lit> assumptions, int64_t conflict_limit,
                     const std::chrono::steady_clock::time_point* deadline);

    // heap on variable activity
    void heap_insert(Var v);
    void heap_update(Var v);
    Var heap_pop();
    bool heap_empty() const { return heap_.empty(); }
    void heap_sift_up(int i);
    void heap_sift_down(int i);

    bool ok_ = true;
    std::vector<Clause> clauses_;
    std::vector<ClauseRef> learnts_;
    std::vector<std::vector<Watcher>> watches_;  // indexed by lit
    std::vector<uint8_t> assign_;                // indexed by var
    std::vector<uint8_t> polarity_;              // saved phase
    std::vector<int> level_;
    std::vector<ClauseRef> reason_;
    std::vector<Lit> trail_;
    std::vector<int> trail_lim_;
    std::size_t qhead_ = 0;

    std::vector<double> activity_;
    double var_inc_ = 1.0;
    double cla_inc_ = 1.0;
    std::vector<int> heap_;      // heap of vars
    std::vector<int> heap_pos_;  // var -> heap index or -1

    std::vector<uint8_t> seen_;
    std::vector<Lit> analyze_stack_;
    std::vector<Lit> analyze_clear_;

    std::vector<uint8_t> model_;
    SolveStats stats_;
    bool verify_models_ =
#ifndef NDEBUG
        true;
#else
        false;
#endif
    double learnt_cap_ = 0.0;
};

/// Complete decision procedure over a standalone formula.
struct SatOutcome {
    SatStatus status = SatStatus::Unknown;
    std::vector<bool> assignment;  // meaningful iff Sat
    SolveStats stats;
};

SatOutcome solve_formula(const CnfFormula& f, std::span<const Lit> assumptions = {},
                         const SolveBudget& budget = {});

/// Keeps an incremental Solver in sync with a growing CnfFormula.
class SolverSync {
  public:
    /// Pushes vars/clauses appended to `f` since the last call. Returns false
    /// if the database became trivially unsatisfiable.
    bool sync(Solver& s, const CnfFormula& f);

  private:
    int vars_done_ = 0;
    std::size_t clauses_done_ = 0;
};

}  // namespace fsmlock
