#include "verify/complex_literal.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace ellpl::verify {

namespace {

[[noreturn]] void malformed(const std::string& text) {
    throw DomainError("malformed complex literal '" + text + "' (expected a+bi without spaces)");
}

double parse_real(const std::string& part, const std::string& text) {
    if (part.empty() || part == "+" || part == "-") malformed(text);
    const char* first = part.data();
    if (*first == '+') ++first;
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(first, part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size() || !std::isfinite(v)) malformed(text);
    return v;
}

// Coefficient of i: "i" -> 1, "-i" -> -1, "2.5i" -> 2.5.
double parse_imag(std::string part, const std::string& text) {
    part.pop_back();
    if (part.empty() || part == "+") return 1.0;
    if (part == "-") return -1.0;
    return parse_real(part, text);
}

}  // namespace

Complex parse_complex(const std::string& text) {
    if (text.empty()) malformed(text);
    if (text.back() != 'i') return {parse_real(text, text), 0.0};
    // Split at the last sign that does not start the literal or an exponent.
    std::size_t split = std::string::npos;
    for (std::size_t k = text.size() - 1; k > 0; --k) {
        if ((text[k] == '+' || text[k] == '-') && text[k - 1] != 'e' && text[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) return {0.0, parse_imag(text, text)};
    return {parse_real(text.substr(0, split), text), parse_imag(text.substr(split), text)};
}

UpperHalfPoint parse_tau(const std::string& text) { return UpperHalfPoint(parse_complex(text)); }

std::string format_complex(Complex z) {
    char re[32], im[32];
    auto r1 = std::to_chars(re, re + sizeof re, z.real());
    *r1.ptr = '\0';
    auto r2 = std::to_chars(im, im + sizeof im, std::abs(z.imag()));
    *r2.ptr = '\0';
    return std::string(re) + (std::signbit(z.imag()) ? "-" : "+") + im + "i";
}

}  // namespace ellpl::verify
