// Exact reference data for the trivariate quadratic benchmark (four
// correlation cases): standardized basis polynomials, expansion
// coefficients, and second-moment statistics.  Values are exact
// radical expressions, independently derived and cross-checked.
#pragma once

#include <cmath>
#include <map>
#include <string>
#include <vector>

namespace gpce::reference {

struct BasisPolynomial {
    std::string index;
    std::map<std::string, double> terms; // monomial key -> coefficient
};

struct CaseData {
    std::vector<BasisPolynomial> basis;          // rank order, degrees 0..2
    std::vector<std::pair<std::string, double>> coefficients;
    double mean;
    double variance;
};

inline const std::vector<CaseData>& trivariate_cases() {
    static const std::vector<CaseData> cases = {
        CaseData{
            {
                {"0,0,0", {{"0,0,0", 1.0}}},
                {"1,0,0", {{"1,0,0", 1.0}}},
                {"0,1,0", {{"0,1,0", 1.0}}},
                {"0,0,1", {{"0,0,1", 1.0}}},
                {"2,0,0", {{"2,0,0", 1.0/2.0*std::sqrt(2.0)}, {"0,0,0", -1.0/2.0*std::sqrt(2.0)}}},
                {"1,1,0", {{"1,1,0", 1.0}}},
                {"1,0,1", {{"1,0,1", 1.0}}},
                {"0,2,0", {{"0,2,0", 1.0/2.0*std::sqrt(2.0)}, {"0,0,0", -1.0/2.0*std::sqrt(2.0)}}},
                {"0,1,1", {{"0,1,1", 1.0}}},
                {"0,0,2", {{"0,0,2", 1.0/2.0*std::sqrt(2.0)}, {"0,0,0", -1.0/2.0*std::sqrt(2.0)}}},
            },
            {{"0,0,0", 12.0}, {"1,0,0", 4.0}, {"0,1,0", 4.0}, {"0,0,1", 4.0}, {"2,0,0", 0.0}, {"1,1,0", 1.0}, {"1,0,1", 1.0}, {"0,2,0", 0.0}, {"0,1,1", 1.0}, {"0,0,2", 0.0}},
            12.0, 51.0,
        },
        CaseData{
            {
                {"0,0,0", {{"0,0,0", 1.0}}},
                {"1,0,0", {{"1,0,0", 1.0/14.0*std::sqrt(210.0)}, {"0,1,0", -1.0/84.0*std::sqrt(210.0)}, {"0,0,1", -1.0/84.0*std::sqrt(210.0)}}},
                {"0,1,0", {{"1,0,0", -1.0/84.0*std::sqrt(210.0)}, {"0,1,0", 1.0/14.0*std::sqrt(210.0)}, {"0,0,1", -1.0/84.0*std::sqrt(210.0)}}},
                {"0,0,1", {{"1,0,0", -1.0/84.0*std::sqrt(210.0)}, {"0,1,0", -1.0/84.0*std::sqrt(210.0)}, {"0,0,1", 1.0/14.0*std::sqrt(210.0)}}},
                {"2,0,0", {{"2,0,0", 15.0/28.0*std::sqrt(2.0)}, {"1,1,0", -5.0/28.0*std::sqrt(2.0)}, {"1,0,1", -5.0/28.0*std::sqrt(2.0)}, {"0,2,0", 5.0/336.0*std::sqrt(2.0)}, {"0,1,1", 5.0/168.0*std::sqrt(2.0)}, {"0,0,2", 5.0/336.0*std::sqrt(2.0)}, {"0,0,0", -1.0/2.0*std::sqrt(2.0)}}},
                {"1,1,0", {{"2,0,0", -15.0/518.0*std::sqrt(37.0)}, {"1,1,0", 5.0/28.0*std::sqrt(37.0)}, {"1,0,1", -25.0/1036.0*std::sqrt(37.0)}, {"0,2,0", -15.0/518.0*std::sqrt(37.0)}, {"0,1,1", -25.0/1036.0*std::sqrt(37.0)}, {"0,0,2", 5.0/1036.0*std::sqrt(37.0)}, {"0,0,0", 1.0/37.0*std::sqrt(37.0)}}},
                {"1,0,1", {{"2,0,0", -15.0/518.0*std::sqrt(37.0)}, {"1,1,0", -25.0/1036.0*std::sqrt(37.0)}, {"1,0,1", 5.0/28.0*std::sqrt(37.0)}, {"0,2,0", 5.0/1036.0*std::sqrt(37.0)}, {"0,1,1", -25.0/1036.0*std::sqrt(37.0)}, {"0,0,2", -15.0/518.0*std::sqrt(37.0)}, {"0,0,0", 1.0/37.0*std::sqrt(37.0)}}},
                {"0,2,0", {{"2,0,0", 5.0/336.0*std::sqrt(2.0)}, {"1,1,0", -5.0/28.0*std::sqrt(2.0)}, {"1,0,1", 5.0/168.0*std::sqrt(2.0)}, {"0,2,0", 15.0/28.0*std::sqrt(2.0)}, {"0,1,1", -5.0/28.0*std::sqrt(2.0)}, {"0,0,2", 5.0/336.0*std::sqrt(2.0)}, {"0,0,0", -1.0/2.0*std::sqrt(2.0)}}},
                {"0,1,1", {{"2,0,0", 5.0/1036.0*std::sqrt(37.0)}, {"1,1,0", -25.0/1036.0*std::sqrt(37.0)}, {"1,0,1", -25.0/1036.0*std::sqrt(37.0)}, {"0,2,0", -15.0/518.0*std::sqrt(37.0)}, {"0,1,1", 5.0/28.0*std::sqrt(37.0)}, {"0,0,2", -15.0/518.0*std::sqrt(37.0)}, {"0,0,0", 1.0/37.0*std::sqrt(37.0)}}},
                {"0,0,2", {{"2,0,0", 5.0/336.0*std::sqrt(2.0)}, {"1,1,0", 5.0/168.0*std::sqrt(2.0)}, {"1,0,1", -5.0/28.0*std::sqrt(2.0)}, {"0,2,0", 5.0/336.0*std::sqrt(2.0)}, {"0,1,1", -5.0/28.0*std::sqrt(2.0)}, {"0,0,2", 15.0/28.0*std::sqrt(2.0)}, {"0,0,0", -1.0/2.0*std::sqrt(2.0)}}},
            },
            {{"0,0,0", 63.0/5.0}, {"1,0,0", 2.0/5.0*std::sqrt(210.0)}, {"0,1,0", 2.0/5.0*std::sqrt(210.0)}, {"0,0,1", 2.0/5.0*std::sqrt(210.0)}, {"2,0,0", 33.0/70.0*std::sqrt(2.0)}, {"1,1,0", 19.0/70.0*std::sqrt(37.0)}, {"1,0,1", 19.0/70.0*std::sqrt(37.0)}, {"0,2,0", 33.0/70.0*std::sqrt(2.0)}, {"0,1,1", 19.0/70.0*std::sqrt(37.0)}, {"0,0,2", 33.0/70.0*std::sqrt(2.0)}},
            63.0/5.0, 1794.0/25.0,
        },
        CaseData{
            {
                {"0,0,0", {{"0,0,0", 1.0}}},
                {"1,0,0", {{"1,0,0", 1.0/2.0*std::sqrt(5.0)}, {"0,1,0", 1.0/6.0*std::sqrt(5.0)}, {"0,0,1", -1.0/3.0*std::sqrt(5.0)}}},
                {"0,1,0", {{"1,0,0", 1.0/42.0*std::sqrt(105.0)}, {"0,1,0", 1.0/6.0*std::sqrt(105.0)}, {"0,0,1", -1.0/7.0*std::sqrt(105.0)}}},
                {"0,0,1", {{"1,0,0", -1.0/12.0*std::sqrt(30.0)}, {"0,1,0", -1.0/4.0*std::sqrt(30.0)}, {"0,0,1", 1.0/3.0*std::sqrt(30.0)}}},
                {"2,0,0", {{"2,0,0", 5.0/8.0*std::sqrt(2.0)}, {"1,1,0", 5.0/12.0*std::sqrt(2.0)}, {"1,0,1", -5.0/6.0*std::sqrt(2.0)}, {"0,2,0", 5.0/72.0*std::sqrt(2.0)}, {"0,1,1", -5.0/18.0*std::sqrt(2.0)}, {"0,0,2", 5.0/18.0*std::sqrt(2.0)}, {"0,0,0", -1.0/2.0*std::sqrt(2.0)}}},
                {"1,1,0", {{"2,0,0", 5.0/88.0*std::sqrt(22.0)}, {"1,1,0", 5.0/12.0*std::sqrt(22.0)}, {"1,0,1", -25.0/66.0*std::sqrt(22.0)}, {"0,2,0", 35.0/264.0*std::sqrt(22.0)}, {"0,1,1", -25.0/66.0*std::sqrt(22.0)}, {"0,0,2", 5.0/22.0*std::sqrt(22.0)}, {"0,0,0", -1.0/22.0*std::sqrt(22.0)}}},
                {"1,0,1", {{"2,0,0", -5.0/28.0*std::sqrt(7.0)}, {"1,1,0", -25.0/42.0*std::sqrt(7.0)}, {"1,0,1", 5.0/6.0*std::sqrt(7.0)}, {"0,2,0", -5.0/28.0*std::sqrt(7.0)}, {"0,1,1", 25.0/42.0*std::sqrt(7.0)}, {"0,0,2", -10.0/21.0*std::sqrt(7.0)}, {"0,0,0", 1.0/7.0*std::sqrt(7.0)}}},
                {"0,2,0", {{"2,0,0", 5.0/168.0*std::sqrt(2.0)}, {"1,1,0", 5.0/12.0*std::sqrt(2.0)}, {"1,0,1", -5.0/14.0*std::sqrt(2.0)}, {"0,2,0", 35.0/24.0*std::sqrt(2.0)}, {"0,1,1", -5.0/2.0*std::sqrt(2.0)}, {"0,0,2", 15.0/14.0*std::sqrt(2.0)}, {"0,0,0", -1.0/2.0*std::sqrt(2.0)}}},
                {"0,1,1", {{"2,0,0", -5.0/276.0*std::sqrt(23.0)}, {"1,1,0", -25.0/138.0*std::sqrt(23.0)}, {"1,0,1", 25.0/138.0*std::sqrt(23.0)}, {"0,2,0", -35.0/92.0*std::sqrt(23.0)}, {"0,1,1", 5.0/6.0*std::sqrt(23.0)}, {"0,0,2", -10.0/23.0*std::sqrt(23.0)}, {"0,0,0", 3.0/23.0*std::sqrt(23.0)}}},
                {"0,0,2", {{"2,0,0", 5.0/48.0*std::sqrt(2.0)}, {"1,1,0", 5.0/8.0*std::sqrt(2.0)}, {"1,0,1", -5.0/6.0*std::sqrt(2.0)}, {"0,2,0", 15.0/16.0*std::sqrt(2.0)}, {"0,1,1", -5.0/2.0*std::sqrt(2.0)}, {"0,0,2", 5.0/3.0*std::sqrt(2.0)}, {"0,0,0", -1.0/2.0*std::sqrt(2.0)}}},
            },
            {{"0,0,0", 67.0/5.0}, {"1,0,0", 16.0/5.0*std::sqrt(5.0)}, {"0,1,0", 4.0/3.0*std::sqrt(105.0)}, {"0,0,1", 44.0/15.0*std::sqrt(30.0)}, {"2,0,0", 17.0/20.0*std::sqrt(2.0)}, {"1,1,0", 31.0/30.0*std::sqrt(22.0)}, {"1,0,1", 32.0/15.0*std::sqrt(7.0)}, {"0,2,0", 203.0/60.0*std::sqrt(2.0)}, {"0,1,1", 34.0/15.0*std::sqrt(23.0)}, {"0,0,2", 76.0/15.0*std::sqrt(2.0)}},
            67.0/5.0, 2514.0/25.0,
        },
        CaseData{
            {
                {"0,0,0", {{"0,0,0", 1.0}}},
                {"1,0,0", {{"1,0,0", 1.0/2.0*std::sqrt(5.0)}, {"0,1,0", -1.0/6.0*std::sqrt(5.0)}, {"0,0,1", -1.0/3.0*std::sqrt(5.0)}}},
                {"0,1,0", {{"1,0,0", -1.0/42.0*std::sqrt(105.0)}, {"0,1,0", 1.0/6.0*std::sqrt(105.0)}, {"0,0,1", 1.0/7.0*std::sqrt(105.0)}}},
                {"0,0,1", {{"1,0,0", -1.0/12.0*std::sqrt(30.0)}, {"0,1,0", 1.0/4.0*std::sqrt(30.0)}, {"0,0,1", 1.0/3.0*std::sqrt(30.0)}}},
                {"2,0,0", {{"2,0,0", 5.0/8.0*std::sqrt(2.0)}, {"1,1,0", -5.0/12.0*std::sqrt(2.0)}, {"1,0,1", -5.0/6.0*std::sqrt(2.0)}, {"0,2,0", 5.0/72.0*std::sqrt(2.0)}, {"0,1,1", 5.0/18.0*std::sqrt(2.0)}, {"0,0,2", 5.0/18.0*std::sqrt(2.0)}, {"0,0,0", -1.0/2.0*std::sqrt(2.0)}}},
                {"1,1,0", {{"2,0,0", -5.0/88.0*std::sqrt(22.0)}, {"1,1,0", 5.0/12.0*std::sqrt(22.0)}, {"1,0,1", 25.0/66.0*std::sqrt(22.0)}, {"0,2,0", -35.0/264.0*std::sqrt(22.0)}, {"0,1,1", -25.0/66.0*std::sqrt(22.0)}, {"0,0,2", -5.0/22.0*std::sqrt(22.0)}, {"0,0,0", 1.0/22.0*std::sqrt(22.0)}}},
                {"1,0,1", {{"2,0,0", -5.0/28.0*std::sqrt(7.0)}, {"1,1,0", 25.0/42.0*std::sqrt(7.0)}, {"1,0,1", 5.0/6.0*std::sqrt(7.0)}, {"0,2,0", -5.0/28.0*std::sqrt(7.0)}, {"0,1,1", -25.0/42.0*std::sqrt(7.0)}, {"0,0,2", -10.0/21.0*std::sqrt(7.0)}, {"0,0,0", 1.0/7.0*std::sqrt(7.0)}}},
                {"0,2,0", {{"2,0,0", 5.0/168.0*std::sqrt(2.0)}, {"1,1,0", -5.0/12.0*std::sqrt(2.0)}, {"1,0,1", -5.0/14.0*std::sqrt(2.0)}, {"0,2,0", 35.0/24.0*std::sqrt(2.0)}, {"0,1,1", 5.0/2.0*std::sqrt(2.0)}, {"0,0,2", 15.0/14.0*std::sqrt(2.0)}, {"0,0,0", -1.0/2.0*std::sqrt(2.0)}}},
                {"0,1,1", {{"2,0,0", 5.0/276.0*std::sqrt(23.0)}, {"1,1,0", -25.0/138.0*std::sqrt(23.0)}, {"1,0,1", -25.0/138.0*std::sqrt(23.0)}, {"0,2,0", 35.0/92.0*std::sqrt(23.0)}, {"0,1,1", 5.0/6.0*std::sqrt(23.0)}, {"0,0,2", 10.0/23.0*std::sqrt(23.0)}, {"0,0,0", -3.0/23.0*std::sqrt(23.0)}}},
                {"0,0,2", {{"2,0,0", 5.0/48.0*std::sqrt(2.0)}, {"1,1,0", -5.0/8.0*std::sqrt(2.0)}, {"1,0,1", -5.0/6.0*std::sqrt(2.0)}, {"0,2,0", 15.0/16.0*std::sqrt(2.0)}, {"0,1,1", 5.0/2.0*std::sqrt(2.0)}, {"0,0,2", 5.0/3.0*std::sqrt(2.0)}, {"0,0,0", -1.0/2.0*std::sqrt(2.0)}}},
            },
            {{"0,0,0", 57.0/5.0}, {"1,0,0", 12.0/5.0*std::sqrt(5.0)}, {"0,1,0", 0.0}, {"0,0,1", 4.0/5.0*std::sqrt(30.0)}, {"2,0,0", 3.0/20.0*std::sqrt(2.0)}, {"1,1,0", 3.0/10.0*std::sqrt(22.0)}, {"1,0,1", -1.0/5.0*std::sqrt(7.0)}, {"0,2,0", -49.0/20.0*std::sqrt(2.0)}, {"0,1,1", 7.0/5.0*std::sqrt(23.0)}, {"0,0,2", -12.0/5.0*std::sqrt(2.0)}},
            57.0/5.0, 774.0/25.0,
        },
    };
    return cases;
}

} // namespace gpce::reference
