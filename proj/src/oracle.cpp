#include "lbcolor/oracle.hpp"

#include <cmath>

namespace lbcolor {

bool oracle_in_range(const Instance& inst, double cap) {
    return inst.element_count() * std::log(static_cast<double>(inst.k)) <= std::log(cap) + 1e-9;
}

SolveOutcome brute_force_solve(const Instance& inst, Objective objective, double cap) {
    if (objective != Objective::decide && !inst.profit)
        throw UsageError("optimization requires a profit matrix");
    if (!oracle_in_range(inst, cap))
        throw OracleLimitError("instance too large for oracle: k^elements exceeds the cap");

    const int m = inst.element_count();
    Coloring col{std::vector<int>(m, 0)};
    SolveOutcome best;

    // Odometer over all k^m assignments; the last element turns fastest.
    while (true) {
        if (validate_coloring(inst, col).ok) {
            if (objective == Objective::decide) {
                best.status = Status::feasible;
                best.witness = col;
                if (inst.profit) best.objective = coloring_profit(inst, col);
                return best;
            }
            const Weight value = coloring_profit(inst, col);
            const bool better = !best.feasible() ||
                                (objective == Objective::maximize ? value > *best.objective
                                                                  : value < *best.objective);
            if (better) {
                best.status = Status::feasible;
                best.witness = col;
                best.objective = value;
            }
        }
        int pos = m - 1;
        while (pos >= 0 && col.color_of[pos] == inst.k - 1) col.color_of[pos--] = 0;
        if (pos < 0) break;
        ++col.color_of[pos];
    }
    return best;
}

}  // namespace lbcolor
