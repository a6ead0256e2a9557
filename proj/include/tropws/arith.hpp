#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace trop {

// All arithmetic in this library is exact: arbitrary-precision integers
// and rationals. No floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

// Thrown on malformed input (files, CLI arguments, violated preconditions).
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when an external oracle invocation fails (timeout, bad exit,
// unparsable or invalid response).
struct oracle_error : std::runtime_error {
    explicit oracle_error(const std::string& msg) : std::runtime_error(msg) {}
};

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Int binomial(long n, long k);

inline int sign(const Int& a) { return sgn(a); }

// Floor division q = floor(a/b), b != 0. mpz_class operator/ truncates.
inline Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

std::string to_string(const Int& a);

inline long to_long(const Int& a) {
    if (!a.fits_slong_p()) throw input_error("integer out of machine range: " + a.get_str());
    return a.get_si();
}

}  // namespace trop
