#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace ctri {

using Int = mpz_class;
using Rat = mpq_class;

// Parses "p", "p/q" or a finite decimal such as "-2.5" into an exact rational.
Rat parse_rat(std::string_view text);

std::string to_string(const Int& v);
std::string to_string(const Rat& v);

int sign(const Int& v);
int sign(const Rat& v);

Int lcm(const Int& a, const Int& b);
Int gcd(const Int& a, const Int& b);

// Stable across platforms; used for hash containers keyed by exact values.
std::size_t hash_value(const Int& v);

// True iff v is the square of a rational; root receives the non-negative root.
bool rational_sqrt(const Rat& v, Rat& root);

}  // namespace ctri
