#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>

namespace liscount {

// Exact nonnegative counts. All counting code stays in integer arithmetic;
// conversion to floating point happens only at the reporting boundary.
using Count = mpz_class;

inline std::string to_decimal(const Count& value) { return value.get_str(10); }

inline Count parse_count(const std::string& decimal) { return Count(decimal, 10); }

// Natural log of a positive Count via mantissa + binary exponent extraction,
// accurate to ~1 ulp even for counts with thousands of digits.
inline double log_count(const Count& value) {
    signed long int exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, value.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * M_LN2;
}

inline Count factorial(unsigned long n) {
    Count result;
    mpz_fac_ui(result.get_mpz_t(), n);
    return result;
}

inline Count binomial(unsigned long n, unsigned long k) {
    Count result;
    mpz_bin_uiui(result.get_mpz_t(), n, k);
    return result;
}

// (rn)! / (r!)^n: number of multiset permutations of 1^r 2^r ... n^r.
inline Count multiset_permutations(int r, int n) {
    Count result = factorial(static_cast<unsigned long>(r) * n);
    Count rfact = factorial(r);
    Count denom;
    mpz_pow_ui(denom.get_mpz_t(), rfact.get_mpz_t(), n);
    mpz_divexact(result.get_mpz_t(), result.get_mpz_t(), denom.get_mpz_t());
    return result;
}

}  // namespace liscount
