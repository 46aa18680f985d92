#include "lamop/poly.hpp"

#include <cctype>
#include <sstream>

namespace lamop {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

std::string strip_spaces(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string s = strip_spaces(text);
    bool negative = false;
    std::string_view body = s;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    mpz_class d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational r(mpz_class(std::string(num), 10), d);
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

namespace {

Rational reduced(Rational r) {
    r.canonicalize();
    return r;
}

}  // namespace

LambdaPoly::LambdaPoly(const Rational& constant) {
    if (constant != 0) terms_.emplace(0, reduced(constant));
}

LambdaPoly LambdaPoly::monomial(const Rational& coeff, Exponent exponent) {
    LambdaPoly p;
    if (coeff != 0) p.terms_.emplace(exponent, reduced(coeff));
    return p;
}

long LambdaPoly::degree() const {
    return terms_.empty() ? -1 : static_cast<long>(terms_.rbegin()->first);
}

long LambdaPoly::valuation() const {
    return terms_.empty() ? -1 : static_cast<long>(terms_.begin()->first);
}

Rational LambdaPoly::coefficient(Exponent exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational LambdaPoly::eval(const Rational& at) const {
    Rational sum = 0;
    for (const auto& [exp, c] : terms_) {
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), at.get_num_mpz_t(), exp);
        mpz_pow_ui(den.get_mpz_t(), at.get_den_mpz_t(), exp);
        Rational power(num, den);
        power.canonicalize();
        sum += c * power;
    }
    return sum;
}

void LambdaPoly::add_term(Exponent exponent, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, reduced(coeff));
    if (inserted) return;
    it->second += reduced(coeff);
    if (it->second == 0) terms_.erase(it);
}

LambdaPoly& LambdaPoly::operator+=(const LambdaPoly& other) {
    for (const auto& [exp, c] : other.terms_) add_term(exp, c);
    return *this;
}

LambdaPoly& LambdaPoly::operator-=(const LambdaPoly& other) {
    for (const auto& [exp, c] : other.terms_) add_term(exp, -c);
    return *this;
}

LambdaPoly& LambdaPoly::operator*=(const LambdaPoly& other) {
    *this = *this * other;
    return *this;
}

LambdaPoly LambdaPoly::operator-() const {
    LambdaPoly out;
    for (const auto& [exp, c] : terms_) out.terms_.emplace(exp, -c);
    return out;
}

LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b) {
    LambdaPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
}

std::string LambdaPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [exp, c] : terms_) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (exp == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << '*';
        os << 'L';
        if (exp != 1) os << '^' << exp;
    }
    return os.str();
}

LambdaPoly LambdaPoly::parse(std::string_view text) {
    // Normalise: drop whitespace, map the UTF-8 lambda to L.
    std::string s;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text.compare(i, 2, "\xCE\xBB") == 0) {
            s.push_back('L');
            ++i;
        } else if (!std::isspace(static_cast<unsigned char>(text[i]))) {
            s.push_back(text[i]);
        }
    }
    if (s.empty()) throw std::invalid_argument("empty polynomial");

    LambdaPoly out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        bool negative = false;
        bool saw_sign = false;
        while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            negative ^= s[pos] == '-';
            saw_sign = true;
            ++pos;
        }
        if (pos > 0 && !saw_sign) throw std::invalid_argument("expected '+' or '-' in polynomial '" + s + "'");
        std::size_t end = pos;
        while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
        std::string_view term(s.data() + pos, end - pos);
        if (term.empty()) throw std::invalid_argument("dangling sign in polynomial '" + s + "'");

        Rational coeff = 1;
        Exponent exp = 0;
        auto lpos = term.find('L');
        if (lpos == std::string_view::npos) {
            coeff = parse_rational(term);
        } else {
            std::string_view head = term.substr(0, lpos);
            std::string_view tail = term.substr(lpos + 1);
            if (!head.empty()) {
                if (head.back() != '*') throw std::invalid_argument("expected '*' before L in '" + std::string(term) + "'");
                head.remove_suffix(1);
                coeff = parse_rational(head);
            }
            exp = 1;
            if (!tail.empty()) {
                if (tail.front() != '^' || !all_digits(tail.substr(1)))
                    throw std::invalid_argument("malformed exponent in '" + std::string(term) + "'");
                exp = std::stoull(std::string(tail.substr(1)));
            }
        }
        out.add_term(exp, negative ? Rational(-coeff) : coeff);
        pos = end;
    }
    return out;
}

Rational poly_eval(const LambdaPoly& p, const Rational& at) { return p.eval(at); }

}  // namespace lamop
