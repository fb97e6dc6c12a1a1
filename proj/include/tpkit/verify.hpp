#ifndef TPKIT_VERIFY_HPP
#define TPKIT_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tpkit/netfact.hpp"
#include "tpkit/positivity.hpp"

namespace tpkit {

enum class ReportStatus { Pass, Fail, HypothesisNotMet };

struct CheckLine {
    std::string name;
    std::string expected;
    std::string actual;
    bool ok;
    std::string witness; // reproduction hint for failures
};

struct Report {
    std::string caseName;
    ReportStatus status = ReportStatus::Pass;
    std::vector<CheckLine> details;
    std::uint64_t seed = 0;
    int trials = 0;

    void check(const std::string& name, const std::string& expected,
               const std::string& actual, const std::string& witness = "");
    void checkTrue(const std::string& name, bool condition,
                   const std::string& witness = "");
    void hypothesisNotMet(const std::string& name, const std::string& why);

    std::string toText() const;
    std::string toJson() const;
};

// Theorem: if A is TP_{k+2}, then C_k(A) is not TP_3.
Report verifyTheoremA(const ExactMatrix& a, int k);

// Theorem: A TP_{k+2} => D_k(A) TP_2; A TP_{k+3} => D_k(A) TP_3.
Report verifyTheoremB(const ExactMatrix& a, int k);

// Theorem: A TP_k and D_k(A) TP_2 => A TP_{k+2}; likewise with C_{k+1}(A).
Report verifyTheoremD(const ExactMatrix& a, int k);

// All 24 simultaneous row/column permutations of the S-matrix fail TP_3.
Report orderingInvarianceCheck(const ExactMatrix& s);

// The sixteen s_{i,j} polynomials from the S-matrix construction,
// evaluated at the labelled weights (valid when the diagonal factor is I).
ExactMatrix sMatrixFormulaValues(const SMatrixParams& p);

// The eight displayed 3x3 minors of S: index sets, polynomial value, and
// expected sign (-1 or +1).
struct DisplayedMinor {
    IndexSet rowSet;
    IndexSet colSet;
    Rational value;
    int sign;
};
std::vector<DisplayedMinor> sMatrixDisplayedMinors(const SMatrixParams& p);

// verify-paper driver. Case names: exampleA, exampleB, thmA, thmB, thmC,
// thmD, remark33, remark37, sylvester, lindstrom, all.
Report verifyPaper(const std::string& caseName, std::uint64_t seed, int trials);
std::vector<std::string> verifyPaperCases();

} // namespace tpkit

#endif
