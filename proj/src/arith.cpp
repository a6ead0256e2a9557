#include "tropws/arith.hpp"

namespace trop {

Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return b;
}

std::string to_string(const Int& a) { return a.get_str(); }

}  // namespace trop
