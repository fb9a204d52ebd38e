#ifndef PLTOP_LP_HPP
#define PLTOP_LP_HPP

#include <optional>
#include <vector>

#include "pltop/linalg.hpp"
#include "pltop/rational.hpp"

namespace pltop {

// One linear condition a.x >= b (or a.x == b when equality).
struct LinCon {
    VecQ a;
    Rational b;
    bool equality = false;
};

struct LPResult {
    enum class Status { Optimal, Infeasible, Unbounded } status;
    Rational value;  // valid when Optimal
    VecQ point;      // valid when Optimal
};

// Exact two-phase simplex (Bland's rule) over the rationals. Variables are
// free; sized for the small systems the geometric kernel produces.
LPResult lp_minimize(int nvars, const std::vector<LinCon>& cons, const VecQ& objective);
LPResult lp_maximize(int nvars, const std::vector<LinCon>& cons, const VecQ& objective);

std::optional<VecQ> lp_feasible_point(int nvars, const std::vector<LinCon>& cons);

}  // namespace pltop

#endif
