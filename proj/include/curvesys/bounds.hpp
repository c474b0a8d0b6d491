#pragma once

// The N(1,g,n) bound table. Upper bounds grow like (g-1)(2^{2g}-1), which
// leaves 64-bit range around g = 32, so entries are arbitrary-precision.

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace curvesys {

using BigInt = boost::multiprecision::cpp_int;

struct BoundTable {
    BigInt lower = 0;
    BigInt upper = 0;
    bool exact = false;  // lower == upper and the value is a theorem
    std::string lower_formula;
    std::string upper_formula;
};

// Bounds for N(1,g,n); only k = 1 is tabulated.
// Closed case: exact 3 (g=1) and 12 (g=2); otherwise
//   lower = 6g (g=3) or ceil(g^2 + 5g/2) (g>=4), upper = (g-1)(2^{2g}-1).
// Boundary case: exact 3n for g=1; otherwise
//   (2g+1)(n+1) <= N(1,g,n) <= N_upper(1,g) + (2g+1)n.
inline BoundTable bounds(int g, int n, int k) {
    if (k != 1) throw std::invalid_argument("bounds: only k = 1 is supported");
    if (g < 1) throw std::invalid_argument("bounds: genus must be >= 1");
    if (n < 0) throw std::invalid_argument("bounds: boundary count must be >= 0");

    BoundTable t;
    if (n == 0) {
        if (g == 1) {
            t.lower = t.upper = 3;
            t.exact = true;
            t.lower_formula = t.upper_formula = "N(1,1) = 3";
        } else if (g == 2) {
            t.lower = t.upper = 12;
            t.exact = true;
            t.lower_formula = t.upper_formula = "N(1,2) = 12";
        } else {
            if (g == 3) {
                t.lower = 6 * g;
                t.lower_formula = "6g";
            } else {
                t.lower = (BigInt(2) * g * g + 5 * g + 1) / 2;  // ceil(g^2 + 5g/2)
                t.lower_formula = "g^2 + (5/2)g";
            }
            t.upper = BigInt(g - 1) * ((BigInt(1) << (2 * g)) - 1);
            t.upper_formula = "(g-1)(2^(2g) - 1)";
        }
        return t;
    }
    if (g == 1) {
        t.lower = t.upper = BigInt(3) * n;
        t.exact = true;
        t.lower_formula = t.upper_formula = "N(1,1,n) = 3n";
        return t;
    }
    BoundTable closed = bounds(g, 0, 1);
    t.lower = BigInt(2 * g + 1) * (n + 1);
    t.lower_formula = "(2g+1)(n+1)";
    t.upper = closed.upper + BigInt(2 * g + 1) * n;
    t.upper_formula = "N_upper(1,g) + (2g+1)n";
    return t;
}

}  // namespace curvesys
