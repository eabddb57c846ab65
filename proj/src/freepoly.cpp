#include "homindex/freepoly.hpp"

#include <cctype>
#include <sstream>

namespace homindex {

std::string FreePoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        GaussQ coeff = c;
        bool negative = coeff.im().is_zero() && coeff.re() < Rational(0);
        if (first) {
            if (negative) { os << "-"; coeff = -coeff; }
        } else {
            if (negative) { os << " - "; coeff = -coeff; }
            else os << " + ";
        }
        first = false;
        if (w.is_unit()) {
            os << coeff.str();
        } else {
            os << coeff.str();
            for (char l : w.letters()) os << "*" << l;
        }
    }
    return os.str();
}

namespace {

// One term: coefficient [*letter]*  with coefficient "3", "1/2", "i", "(a+bi)".
GaussQ parse_coeff(const std::string& tok) {
    auto parse_rat = [](const std::string& r) -> Rational {
        auto slash = r.find('/');
        if (slash == std::string::npos) return Rational(std::stoll(r));
        return Rational(std::stoll(r.substr(0, slash)), std::stoll(r.substr(slash + 1)));
    };
    if (!tok.empty() && tok.front() == '(') {
        // (a+bi) or (a-bi)
        std::string body = tok.substr(1, tok.size() - 2);
        if (body.empty() || body.back() != 'i')
            throw std::invalid_argument("bad complex coefficient: " + tok);
        body.pop_back();
        std::size_t split = body.size();
        for (std::size_t k = 1; k < body.size(); ++k) {
            if ((body[k] == '+' || body[k] == '-') && body[k - 1] != '/') {
                split = k;
            }
        }
        if (split == body.size())
            throw std::invalid_argument("bad complex coefficient: " + tok);
        std::string im = body.substr(split);
        if (im == "+" ) im = "1";
        else if (im == "-") im = "-1";
        else if (im[0] == '+') im = im.substr(1);
        return GaussQ(parse_rat(body.substr(0, split)), parse_rat(im));
    }
    if (!tok.empty() && tok.back() == 'i') {
        std::string r = tok.substr(0, tok.size() - 1);
        if (r.empty() || r == "-") r += "1";
        return GaussQ(Rational(0), parse_rat(r));
    }
    return GaussQ(parse_rat(tok));
}

} // namespace

FreePoly FreePoly::parse(const std::string& s) {
    FreePoly out;
    std::string t;
    // normalize separators: split on " + " / " - " keeping signs
    std::vector<std::pair<int, std::string>> pieces;
    std::size_t i = 0;
    int sign = 1;
    if (s.rfind("-", 0) == 0) { sign = -1; i = 1; }
    std::size_t start = i;
    while (i <= s.size()) {
        if (i + 2 < s.size() && s[i] == ' ' && (s[i + 1] == '+' || s[i + 1] == '-') && s[i + 2] == ' ') {
            pieces.emplace_back(sign, s.substr(start, i - start));
            sign = (s[i + 1] == '+') ? 1 : -1;
            i += 3;
            start = i;
        } else if (i == s.size()) {
            pieces.emplace_back(sign, s.substr(start));
            break;
        } else {
            ++i;
        }
    }
    for (auto& [sg, piece] : pieces) {
        if (piece == "0") continue;
        std::string coeff_tok;
        std::string letters;
        std::size_t p = 0;
        if (piece[p] == '(') {
            auto close = piece.find(')');
            coeff_tok = piece.substr(0, close + 1);
            p = close + 1;
        } else {
            while (p < piece.size() && piece[p] != '*') ++p;
            coeff_tok = piece.substr(0, p);
        }
        while (p < piece.size()) {
            if (piece[p] == '*') { ++p; continue; }
            letters.push_back(piece[p]);
            ++p;
        }
        GaussQ c = parse_coeff(coeff_tok);
        if (sg < 0) c = -c;
        out.add_term(Word(letters), c);
    }
    return out;
}

FreePoly elem_v() { return FreePoly::one() - FreePoly::x() * FreePoly::y(); }

FreePoly elem_w() { return FreePoly::one() - FreePoly::y() * FreePoly::x(); }

FreePoly omega(unsigned n) {
    if (n == 0) throw std::invalid_argument("omega requires n >= 1");
    FreePoly v = elem_v();
    FreePoly vk = FreePoly::one();
    FreePoly acc;
    for (unsigned k = 0; k < n; ++k) {
        acc += vk * FreePoly::x();
        vk = vk * v;
    }
    return acc;
}

} // namespace homindex
