#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fsmlock/netlist.hpp"

namespace fsmlock {

using Var = int32_t;
using Lit = int32_t;  // 2*var + sign; sign 1 = negated
constexpr Lit kUndefLit = -1;

inline Lit mk_lit(Var v, bool neg = false) { return 2 * v + (neg ? 1 : 0); }
inline Var lit_var(Lit l) { return l >> 1; }
inline bool lit_sign(Lit l) { return l & 1; }
inline Lit lit_neg(Lit l) { return l ^ 1; }

/// Where a CNF variable came from: a concrete net in a concrete unrolled
/// time frame of a tagged circuit instance, or (-1 fields) a helper variable
/// introduced by the encoding.
struct VarOrigin {
    NetId net = kNullNet;
    int frame = -1;
    int instance = -1;
};

/// Clause database plus provenance. Serves as the exchange format between the
/// Tseitin encoder, the unroller and the solver; can be dumped as DIMACS.
struct CnfFormula {
    int num_vars = 0;
    std::vector<std::vector<Lit>> clauses;
    std::vector<VarOrigin> origin;  // indexed by var

    Var new_var(VarOrigin o = {}) {
        origin.push_back(o);
        return num_vars++;
    }

    void add_clause(std::vector<Lit> lits) {
        for (Lit l : lits)
            if (lit_var(l) < 0 || lit_var(l) >= num_vars)
                throw std::invalid_argument("clause literal out of range");
        clauses.push_back(std::move(lits));
    }

    void add_unit(Lit l) { add_clause({l}); }

    std::string to_dimacs() const;
};

/// True iff `assignment` (indexed by var) satisfies every clause. Used as the
/// independent check on solver models.
bool satisfies(const CnfFormula& f, const std::vector<bool>& assignment);

}  // namespace fsmlock
