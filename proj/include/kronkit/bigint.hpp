#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace kronkit {

using BigInt = mpz_class;

inline BigInt factorial(unsigned long n)
{
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline std::string to_string(const BigInt& v) { return v.get_str(10); }

inline bool fits_uint64(const BigInt& v)
{
  return v >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_uint64(const BigInt& v)
{
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

} // namespace kronkit
