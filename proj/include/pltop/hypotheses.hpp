#ifndef PLTOP_HYPOTHESES_HPP
#define PLTOP_HYPOTHESES_HPP

#include "pltop/degree.hpp"

namespace pltop {

enum class CheckStatus { Pass, Fail, Undecided };
enum class Theorem { T33, T35, T47, T48, Cor34, Cor36, Cor49 };
enum class Conclusion { FixedPointGuaranteed, NotApplicable };

const char* check_status_name(CheckStatus s);
const char* theorem_name(Theorem t);

struct Check {
    std::string name;
    CheckStatus status;
    std::string detail;
};

struct HypothesisReport {
    Theorem theorem;
    std::vector<Check> checks;
    Conclusion conclusion = Conclusion::NotApplicable;

    void finalize();  // conclusion = guaranteed iff every check passes
};

enum class BlockadingResult { Blockading, NotBlockading, Undecided };

struct BlockadingWitness {
    BlockadingResult result;
    std::optional<SimplicialComplex> witness_U;  // closed star of the preimage hull
    std::optional<VecQ> refutation;
    int depth_used = 0;
};

// V given as a list of (n-1)-simplices over X's vertex table (may be empty).
BlockadingWitness check_blockading(const PLMap& f, const SimplicialComplex& X,
                                   const std::vector<std::vector<int>>& V, int max_depth);

HypothesisReport check_T33(const PLMap& f, const SimplicialComplex& X, const SubBall& Y,
                           int max_depth);
HypothesisReport check_T35(const PLMap& f, const SimplicialComplex& X, const SubBall& Y,
                           int max_depth);
HypothesisReport check_T47(const PLMap& f, const SimplicialComplex& X, const SubBall& Y,
                           const SubBall& D, int max_depth);
HypothesisReport check_T48(const PLMap& f, const SimplicialComplex& X, const SubBall& Y,
                           int max_depth);

// Endpoints of an arc given by its edges (vertices of degree one).
std::vector<int> arc_endpoints(const std::vector<std::vector<int>>& edges);

}  // namespace pltop

#endif
