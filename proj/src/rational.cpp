#include "realcong/rational.hpp"

#include <cctype>

namespace realcong {

std::string rat_to_string(const Rational& x) {
    std::string s = x.get_num().get_str();
    if (x.get_den() != 1) {
        s += "/";
        s += x.get_den().get_str();
    }
    return s;
}

namespace {

bool is_int_token(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view s) {
    std::size_t slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    if (!is_int_token(num)) return std::nullopt;
    Integer n(std::string(num), 10);
    Integer d(1);
    if (slash != std::string_view::npos) {
        std::string_view den = s.substr(slash + 1);
        if (!is_int_token(den) || den[0] == '-' || den[0] == '+') return std::nullopt;
        d = Integer(std::string(den), 10);
        if (d == 0) return std::nullopt;
    }
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::size_t rat_weight(const Rational& x) {
    if (sgn(x) == 0) return 0;
    return mpz_sizeinbase(x.get_num().get_mpz_t(), 2) +
           mpz_sizeinbase(x.get_den().get_mpz_t(), 2);
}

std::string gaussian_to_string(const Gaussian& x) {
    std::string s = rat_to_string(x.re);
    s += sgn(x.im) < 0 ? "-" : "+";
    s += rat_to_string(abs_val(x.im));
    s += "i";
    return s;
}

std::optional<Gaussian> parse_gaussian(std::string_view s) {
    if (s.empty() || s.back() != 'i') return std::nullopt;
    s.remove_suffix(1);
    // Split at the sign of the imaginary part: last '+' or '-' that is not
    // the leading sign and not right after '/'.
    std::size_t split = std::string_view::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/') {
            split = i;
            break;
        }
    }
    if (split == std::string_view::npos) return std::nullopt;
    auto re = parse_rational(s.substr(0, split));
    auto im_mag = parse_rational(s.substr(split + 1));
    if (!re || !im_mag) return std::nullopt;
    Rational im = s[split] == '-' ? Rational(-*im_mag) : *im_mag;
    return Gaussian(*re, im);
}

int compare(const Rational& a, const Rational& b) {
    return mpq_cmp(a.get_mpq_t(), b.get_mpq_t());
}

int compare(const Gaussian& a, const Gaussian& b) {
    int c = compare(a.re, b.re);
    return c != 0 ? c : compare(a.im, b.im);
}

}  // namespace realcong
