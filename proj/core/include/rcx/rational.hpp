#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace rcx {

/// Exact rational scalar. All arithmetic in this library is exact; no value
/// is ever rounded. GMP keeps values in lowest terms with positive
/// denominator, which matches the representation invariant we rely on.
using Rat = mpq_class;

using LatticePoint = std::vector<long long>;
using RatPoint = std::vector<Rat>;

Rat make_rat(long long num, long long den = 1);

/// Parses "p", "-p" or "p/q" (q > 0 after normalization). Throws
/// std::invalid_argument on malformed input.
Rat parse_rat(const std::string& text);

/// Lowest-terms rendering: "p" when the denominator is 1, else "p/q".
std::string rat_str(const Rat& value);

long long floor_ll(const Rat& value);
long long ceil_ll(const Rat& value);

RatPoint to_rat_point(const LatticePoint& p);
long long to_ll(const mpz_class& z);

Rat factorial_rat(int n);

}  // namespace rcx
