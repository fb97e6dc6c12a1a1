#ifndef TPKIT_FIXTURES_HPP
#define TPKIT_FIXTURES_HPP

#include "tpkit/matrix.hpp"

namespace tpkit::fixtures {

// 4x4 Hilbert-type matrix with entries 1/(i+j) and its published second
// compound; 6x6 integer matrix and its published first condensation.
const ExactMatrix& hilbertExample();
const ExactMatrix& hilbertExampleCompound2();
const ExactMatrix& condensationExample();
const ExactMatrix& condensationExampleD1();

} // namespace tpkit::fixtures

#endif
