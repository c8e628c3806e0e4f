// Copyright (c) the parsolv contributors. All rights reserved.
// Licensed under the Apache 2.0 License.

#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace parsolv {

/// Exact rational scalar. All realization and exact-mode curvature
/// arithmetic runs on this type; there is no rounding anywhere in the
/// exact pipeline.
using Rational = mpq_class;

/// Renders as "p" or "p/q" in lowest terms.
std::string rational_to_string(const Rational& r);

/// Parses "p", "p/q", or "-p/q". Throws InputError on anything else.
Rational rational_from_string(std::string_view text);

inline double rational_to_double(const Rational& r) { return r.get_d(); }

inline Rational to_rational(long long v) { return Rational(mpz_class(static_cast<long>(v))); }

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_zero(double x) { return x == 0.0; }

}  // namespace parsolv
