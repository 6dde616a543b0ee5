#ifndef UVC_SRC_MODULAR_HPP
#define UVC_SRC_MODULAR_HPP

// Word-size prime field helpers shared by the multi-modular routines.

#include <cstdint>

#include <gmpxx.h>

namespace uvc::detail {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

inline u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
inline u64 add_mod(u64 a, u64 b, u64 p) { u64 s = a + b; return s >= p ? s - p : s; }
inline u64 sub_mod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

inline u64 pow_mod(u64 base, u64 exp, u64 p)
{
    u64 result = 1;
    base %= p;
    while (exp) {
        if (exp & 1)
            result = mul_mod(result, base, p);
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    return result;
}

inline u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

static_assert(sizeof(unsigned long) == sizeof(u64), "GMP ui routines must take 64-bit words");

/// x mod p in [0, p).
inline u64 residue(const mpz_class& x, u64 p) { return mpz_fdiv_ui(x.get_mpz_t(), p); }

inline mpz_class to_mpz(u64 v) { return mpz_class(static_cast<unsigned long>(v)); }

/// index-th prime above 2^61 (deterministic, thread-safe).
u64 word_prime(std::size_t index);

} // namespace uvc::detail

#endif // UVC_SRC_MODULAR_HPP
