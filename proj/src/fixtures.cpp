#include "tpkit/fixtures.hpp"

#include "tpkit/io.hpp"

namespace tpkit::fixtures {

namespace {

ExactMatrix fromCsv(const char* text) {
    return parseMatrixString(text, MatrixFormat::Csv);
}

} // namespace

const ExactMatrix& hilbertExample() {
    static const ExactMatrix a = fromCsv(
        "1/2,1/3,1/4,1/5\n"
        "1/3,1/4,1/5,1/6\n"
        "1/4,1/5,1/6,1/7\n"
        "1/5,1/6,1/7,1/8\n");
    return a;
}

const ExactMatrix& hilbertExampleCompound2() {
    static const ExactMatrix a = fromCsv(
        "1/72,1/60,1/60,1/240,1/180,1/600\n"
        "1/60,1/48,3/140,1/180,4/525,1/420\n"
        "1/60,3/140,9/400,1/168,1/120,3/1120\n"
        "1/240,1/180,1/168,1/600,1/420,1/1260\n"
        "1/180,4/525,1/120,1/420,1/288,1/840\n"
        "1/600,1/420,3/1120,1/1260,1/840,1/2352\n");
    return a;
}

const ExactMatrix& condensationExample() {
    static const ExactMatrix a = fromCsv(
        "1,18,192,924,2332,420\n"
        "32,577,6161,29692,75052,13524\n"
        "425,7682,82145,396687,1004887,181209\n"
        "2412,43807,469784,2277800,5795144,1046584\n"
        "3080,56720,613350,3009027,7751484,1406076\n"
        "1440,27360,301320,1515996,4007487,733594\n");
    return a;
}

const ExactMatrix& condensationExampleD1() {
    static const ExactMatrix a = fromCsv(
        "1,114,8100,106304,16128\n"
        "599,68863,4939267,64952080,10006080\n"
        "88991,10354673,752675392,9926679328,1566406912\n"
        "1883080,222874970,16504110168,218585490312,35833764288\n"
        "2592000,309614400,23156130960,307417847085,51610862484\n");
    return a;
}

} // namespace tpkit::fixtures
