#include "gr2/scalar.hpp"

#include <cctype>
#include <vector>

namespace gr2 {

namespace {

std::string strip(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

// Splits on '+'/'-' at depth zero, keeping the sign with each part.
// A leading sign belongs to the first part.
std::vector<std::string> split_signed_terms(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (size_t k = 0; k < text.size(); ++k) {
        const char ch = text[k];
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if ((ch == '+' || ch == '-') && depth == 0 && k > 0 && text[k - 1] != '^') {
            parts.push_back(cur);
            cur.clear();
            cur.push_back(ch);
            continue;
        }
        cur.push_back(ch);
    }
    parts.push_back(cur);
    return parts;
}

}  // namespace

std::string GaussianRational::to_string() const {
    if (im_ == 0) return gr2::to_string(re_);
    std::string imag = gr2::to_string(im_) + "*i";
    if (re_ == 0) return imag;
    if (im_ > 0) return gr2::to_string(re_) + "+" + imag;
    return gr2::to_string(re_) + imag;  // imag already starts with '-'
}

GaussianRational GaussianRational::from_string(const std::string& raw) {
    std::string text = strip(raw);
    if (text.empty()) throw std::invalid_argument("empty scalar literal");
    Rational re = make_rational(0);
    Rational im = make_rational(0);
    for (std::string part : split_signed_terms(text)) {
        part = strip(part);
        if (part.empty()) throw std::invalid_argument("malformed scalar literal: " + raw);
        bool imaginary = false;
        if (part.size() >= 2 && part.compare(part.size() - 2, 2, "*i") == 0) {
            imaginary = true;
            part = part.substr(0, part.size() - 2);
        } else if (part == "i" || part == "+i" || part == "-i") {
            imaginary = true;
            part = (part[0] == '-') ? "-1" : "1";
        }
        if (part.empty() || part == "+") part = "1";
        if (part == "-") part = "-1";
        if (part[0] == '+') part = part.substr(1);
        const Rational value = rational_from_string(part);
        if (imaginary)
            im += value;
        else
            re += value;
    }
    return {re, im};
}

std::string LaurentScalar::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string coeff = c.to_string();
        const bool complex = !c.is_real() && !(c.re() == 0);
        if (complex || (e != 0 && !c.is_real())) coeff = "(" + coeff + ")";
        std::string term = (e == 0) ? coeff : coeff + "*t^" + std::to_string(e);
        if (!first && term[0] != '-') out += "+";
        out += term;
        first = false;
    }
    return out;
}

LaurentScalar LaurentScalar::from_string(const std::string& raw) {
    std::string text = strip(raw);
    if (text.empty()) throw std::invalid_argument("empty Laurent literal");
    LaurentScalar result;
    for (std::string part : split_signed_terms(text)) {
        part = strip(part);
        if (part.empty()) throw std::invalid_argument("malformed Laurent literal: " + raw);
        int sign = 1;
        if (part[0] == '+') part = strip(part.substr(1));
        else if (part[0] == '-') {
            sign = -1;
            part = strip(part.substr(1));
        }
        int exponent = 0;
        std::string coeff_text = part;
        const auto tpos = part.rfind("t^");
        if (tpos != std::string::npos && (tpos == 0 || part[tpos - 1] == '*')) {
            exponent = std::stoi(part.substr(tpos + 2));
            coeff_text = (tpos == 0) ? "" : strip(part.substr(0, tpos - 1));
        } else if (!part.empty() && part.back() == 't' &&
                   (part.size() == 1 || part[part.size() - 2] == '*')) {
            exponent = 1;
            coeff_text = (part.size() == 1) ? "" : strip(part.substr(0, part.size() - 2));
        }
        if (coeff_text.empty()) coeff_text = "1";
        if (coeff_text.size() >= 2 && coeff_text.front() == '(' && coeff_text.back() == ')')
            coeff_text = coeff_text.substr(1, coeff_text.size() - 2);
        GaussianRational coeff = GaussianRational::from_string(coeff_text);
        if (sign < 0) coeff = -coeff;
        result = result + LaurentScalar::term(coeff, exponent);
    }
    return result;
}

ProjectivePoint laurent_limit_ratio(const LaurentScalar& f, const LaurentScalar& g) {
    if (g.is_zero()) throw std::domain_error("laurent_limit_ratio with zero denominator series");
    if (f.is_zero()) return ProjectivePoint::zero();
    const int vf = *f.valuation();
    const int vg = *g.valuation();
    if (vf > vg) return ProjectivePoint::zero();
    if (vf < vg) return ProjectivePoint::infinity();
    return {f.leading_coeff(), g.leading_coeff()};
}

}  // namespace gr2
