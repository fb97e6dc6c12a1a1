#ifndef TPKIT_IO_HPP
#define TPKIT_IO_HPP

#include <iosfwd>
#include <string>

#include "tpkit/matrix.hpp"
#include "tpkit/netfact.hpp"

namespace tpkit {

enum class MatrixFormat { Json, Csv };

// JSON matrix document:
//   {"rows": m, "cols": n, "data": [["p", "p/q", ...], ...]}
// CSV: one row per line, comma-separated "p" / "p/q" tokens.
ExactMatrix parseMatrix(std::istream& in, MatrixFormat format);
ExactMatrix parseMatrixString(const std::string& text, MatrixFormat format);
ExactMatrix parseMatrixFile(const std::string& path, MatrixFormat format);

std::string emitMatrix(const ExactMatrix& a, MatrixFormat format);

// Parameter file: {"n": ..., "lowers": [["i", "p/q"], ...],
// "uppers": [...], "diag": ["p/q", ...]} in factor order.
FactorizationParams parseParams(std::istream& in);
FactorizationParams parseParamsFile(const std::string& path);
std::string emitParams(const FactorizationParams& params);

// Comma-separated 1-based indices, e.g. "1,3,4".
IndexSet parseIndexList(const std::string& text, int bound);
// Comma-separated rationals, e.g. "1,1/2,1/3".
std::vector<Rational> parseRationalList(const std::string& text);

} // namespace tpkit

#endif
