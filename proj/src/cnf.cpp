#include "fsmlock/cnf.hpp"

#include <sstream>

namespace fsmlock {

std::string CnfFormula::to_dimacs() const {
    std::ostringstream os;
    os << "p cnf " << num_vars << " " << clauses.size() << "\n";
    for (const auto& c : clauses) {
        for (Lit l : c) os << (lit_sign(l) ? -(lit_var(l) + 1) : lit_var(l) + 1) << " ";
        os << "0\n";
    }
    return os.str();
}

bool satisfies(const CnfFormula& f, const std::vector<bool>& assignment) {
    for (const auto& c : f.clauses) {
        bool sat = false;
        for (Lit l : c) {
            if (assignment.at(static_cast<size_t>(lit_var(l))) != lit_sign(l)) {
                sat = true;
                break;
            }
        }
        if (!sat) return false;
    }
    return true;
}

}  // namespace fsmlock
