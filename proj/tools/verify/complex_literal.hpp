#pragma once

#include <string>

#include "ellpl/numeric_core.hpp"

namespace ellpl::verify {

// Parses a+bi, a-bi, a, bi, i, -i (no spaces); throws DomainError on malformed input.
Complex parse_complex(const std::string& text);

// Parses a tau literal and rejects Im(tau) <= 0.
UpperHalfPoint parse_tau(const std::string& text);

// Shortest round-trip rendering as a+bi.
std::string format_complex(Complex z);

}  // namespace ellpl::verify
