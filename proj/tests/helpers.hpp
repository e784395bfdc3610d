#pragma once

#include <string>

#include "hint/hvalue.hpp"

// Short literals for the tests: H("(1, 3)").
inline hint::HValue H(const std::string& s) { return hint::parse_hvalue(s); }
inline hint::HNonNeg N(const std::string& s) { return hint::HNonNeg(hint::parse_hvalue(s)); }
inline hint::Rational Q(const std::string& s) { return hint::parse_rational(s); }
