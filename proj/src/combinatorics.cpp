#include "eulerpoly/combinatorics.hpp"

#include <stdexcept>

namespace eulerpoly {

BigInt binomial(long n, long k) {
    if (n < 0) {
        throw std::invalid_argument("binomial: negative upper index");
    }
    if (k < 0 || k > n) {
        return 0;
    }
    BigInt result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return result;
}

BigInt falling_factorial(long n, long q) {
    if (n < 0 || q < 0) {
        throw std::invalid_argument("falling_factorial: negative argument");
    }
    BigInt result = 1;
    for (long i = 0; i < q; ++i) {
        result *= n - i;
    }
    return result;
}

BigInt factorial(long n) {
    if (n < 0) {
        throw std::invalid_argument("factorial: negative argument");
    }
    BigInt result;
    mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
    return result;
}

Rational int_pow(const Rational& base, unsigned long e) {
    BigInt num;
    BigInt den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), e);
    return Rational(num, den);
}

}  // namespace eulerpoly
