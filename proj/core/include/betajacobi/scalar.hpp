#pragma once

// Glue that lets the evaluation code run on Rational (exact), Real
// (extended precision) and double (fast float mode) alike.

#include "betajacobi/rational.hpp"
#include "betajacobi/real.hpp"

namespace betajacobi {

// Converts an exact constant into the scalar type of `like`, at its precision.
inline Rational lift(const Rational& q, const Rational& /*like*/) { return q; }
inline Real lift(const Rational& q, const Real& like) { return Real(q, like.precision()); }
inline double lift(const Rational& q, double /*like*/) { return q.to_double(); }

inline Rational lift(long v, const Rational& /*like*/) { return Rational(v); }
inline Real lift(long v, const Real& like) { return Real(v, like.precision()); }
inline double lift(long v, double /*like*/) { return static_cast<double>(v); }

inline bool scalar_is_zero(const Rational& v) { return v.is_zero(); }
inline bool scalar_is_zero(const Real& v) { return v.is_zero(); }
inline bool scalar_is_zero(double v) { return v == 0.0; }

}  // namespace betajacobi
