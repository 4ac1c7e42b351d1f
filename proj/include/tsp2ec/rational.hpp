#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace tsp2ec {

// All mathematical quantities in this library are exact rationals. No
// floating point ever enters a computation; doubles appear only in
// human-readable rendering, clearly marked as approximations.
using Rat = mpq_class;
using Int = mpz_class;

/// Parses "p/q" or "p" (optional leading '-'). Rejects zero denominators.
std::optional<Rat> parse_rational(const std::string& text);

/// Canonical rendering: "p/q", or just "p" when the denominator is 1.
std::string format_rational(const Rat& value);

/// Display-only decimal approximation.
double approx(const Rat& value);

inline Rat rat_abs(const Rat& value) { return value < 0 ? Rat(-value) : value; }

}  // namespace tsp2ec
