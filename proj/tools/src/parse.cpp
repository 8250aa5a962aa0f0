#include "parse.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace ghcs::cli {
namespace {

std::string strip(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    }
    return out;
}

double to_double(const std::string& s, const std::string& whole) {
    if (s.empty()) throw std::invalid_argument("empty number in '" + whole + "'");
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (*first == '+') ++first;
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) throw std::invalid_argument("malformed number '" + whole + "'");
    return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

cplx parse_complex(const std::string& text) {
    const std::string s = strip(text);
    if (s.empty()) throw std::invalid_argument("empty complex number");
    if (s.back() != 'i') return {to_double(s, text), 0.0};

    const std::string body = s.substr(0, s.size() - 1);
    // The real/imaginary split is the last sign that is neither leading nor an exponent sign.
    std::size_t split_at = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split_at = k;
            break;
        }
    }
    const std::string re = split_at == std::string::npos ? "" : body.substr(0, split_at);
    std::string im = split_at == std::string::npos ? body : body.substr(split_at);
    if (im.empty() || im == "+") im = "1";
    if (im == "-") im = "-1";
    return {re.empty() ? 0.0 : to_double(re, text), to_double(im, text)};
}

double parse_real(const std::string& text) {
    const cplx v = parse_complex(text);
    if (v.imag() != 0.0) throw std::invalid_argument("expected a real number, got '" + text + "'");
    return v.real();
}

std::vector<cplx> parse_complex_list(const std::string& text) {
    std::vector<cplx> out;
    if (strip(text).empty()) return out;
    for (const std::string& item : split(text, ',')) out.push_back(parse_complex(item));
    return out;
}

std::vector<double> parse_real_list(const std::string& text) {
    std::vector<double> out;
    if (strip(text).empty()) return out;
    for (const std::string& item : split(text, ',')) out.push_back(parse_real(item));
    return out;
}

std::vector<std::pair<double, double>> parse_pair_list(const std::string& text) {
    std::vector<std::pair<double, double>> out;
    if (strip(text).empty()) return out;
    for (const std::string& item : split(text, ',')) {
        const std::vector<std::string> parts = split(item, ':');
        if (parts.size() != 2) throw std::invalid_argument("expected a:b, got '" + item + "'");
        out.emplace_back(parse_real(parts[0]), parse_real(parts[1]));
    }
    return out;
}

std::string format_real(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

std::string format_complex(cplx v) {
    if (v.imag() == 0.0) return format_real(v.real());
    std::string im = format_real(v.imag());
    if (im.front() != '-') im = "+" + im;
    return format_real(v.real()) + im + "i";
}

}  // namespace ghcs::cli
