#include "surfpoly/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>

#include "surfpoly/errors.hpp"

namespace surfpoly {

namespace {

std::int32_t checked_exp(std::int64_t value) {
    if (value < std::numeric_limits<std::int32_t>::min() ||
        value > std::numeric_limits<std::int32_t>::max())
        throw ExponentOverflow("exponent out of range");
    return static_cast<std::int32_t>(value);
}

std::int64_t total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), std::int64_t{0});
}

}  // namespace

VarSet::VarSet(std::initializer_list<std::string> names)
    : VarSet(std::vector<std::string>(names)) {}

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i)
        for (std::size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j])
                throw VarSetMismatch("duplicate variable name: " + names_[i]);
}

const VarSet& VarSet::krushkal() {
    static const VarSet v{"X", "Y", "A", "B"};
    return v;
}
const VarSet& VarSet::las_vergnas() {
    static const VarSet v{"x", "y", "z"};
    return v;
}
const VarSet& VarSet::bollobas_riordan() {
    static const VarSet v{"X", "Y", "Z"};
    return v;
}
const VarSet& VarSet::tutte() {
    static const VarSet v{"x", "y"};
    return v;
}

int VarSet::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return -1;
}

bool TermOrder::operator()(const Exponents& a, const Exponents& b) const {
    const std::int64_t da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
}

LaurentPoly LaurentPoly::constant(VarSet vars, mpz_class value) {
    LaurentPoly p(std::move(vars));
    p.add_term(Exponents(p.vars_.size(), 0), value);
    return p;
}

LaurentPoly LaurentPoly::monomial(VarSet vars, Exponents exps, mpz_class coeff) {
    if (exps.size() != vars.size())
        throw VarSetMismatch("exponent vector length does not match variable set");
    LaurentPoly p(std::move(vars));
    p.add_term(exps, coeff);
    return p;
}

LaurentPoly LaurentPoly::variable(const VarSet& vars, std::string_view name,
                                  std::int32_t power) {
    const int i = vars.index_of(name);
    if (i < 0) throw UnknownVariable("unknown variable: " + std::string(name));
    Exponents e(vars.size(), 0);
    e[static_cast<std::size_t>(i)] = power;
    return monomial(vars, std::move(e), 1);
}

bool LaurentPoly::is_polynomial() const {
    for (const auto& [exps, coeff] : terms_)
        for (std::int32_t e : exps)
            if (e < 0) return false;
    return true;
}

bool LaurentPoly::is_invertible_monomial() const {
    if (terms_.size() != 1) return false;
    const mpz_class& c = terms_.begin()->second;
    return c == 1 || c == -1;
}

mpz_class LaurentPoly::coefficient_sum() const {
    mpz_class s = 0;
    for (const auto& [exps, coeff] : terms_) s += coeff;
    return s;
}

mpz_class LaurentPoly::coefficient(const Exponents& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void LaurentPoly::add_term(const Exponents& exps, const mpz_class& coeff) {
    if (exps.size() != vars_.size())
        throw VarSetMismatch("exponent vector length does not match variable set");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exps, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    if (vars_ != rhs.vars_) throw VarSetMismatch("adding polynomials over different variables");
    for (const auto& [exps, coeff] : rhs.terms_) add_term(exps, coeff);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    if (vars_ != rhs.vars_)
        throw VarSetMismatch("subtracting polynomials over different variables");
    for (const auto& [exps, coeff] : rhs.terms_) add_term(exps, -coeff);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    if (lhs.vars_ != rhs.vars_)
        throw VarSetMismatch("multiplying polynomials over different variables");
    LaurentPoly out(lhs.vars_);
    Exponents e(lhs.vars_.size());
    for (const auto& [ea, ca] : lhs.terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = checked_exp(std::int64_t{ea[i]} + eb[i]);
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out(vars_);
    for (const auto& [exps, coeff] : terms_) out.terms_.emplace(exps, -coeff);
    return out;
}

LaurentPoly LaurentPoly::pow(std::int32_t k) const {
    if (k < 0) {
        if (!is_invertible_monomial())
            throw NonInvertibleSubstituentForNegativeExponent(
                "negative power of a non-invertible polynomial");
        const auto& [exps, coeff] = *terms_.begin();
        Exponents e(exps.size());
        for (std::size_t i = 0; i < e.size(); ++i)
            e[i] = checked_exp(std::int64_t{exps[i]} * k);
        return monomial(vars_, std::move(e), (k % 2 == 0) ? mpz_class(1) : coeff);
    }
    LaurentPoly result = constant(vars_, 1);
    LaurentPoly base = *this;
    while (k > 0) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k > 0) base *= base;
    }
    return result;
}

LaurentPoly LaurentPoly::substitute(
    const VarSet& target,
    const std::vector<std::pair<std::string, LaurentPoly>>& assignment) const {
    std::vector<const LaurentPoly*> image(vars_.size(), nullptr);
    for (const auto& [name, value] : assignment) {
        const int i = vars_.index_of(name);
        if (i < 0) continue;  // assignments for foreign variables are ignored
        if (value.vars() != target)
            throw VarSetMismatch("substituent for " + name +
                                 " is not over the target variable set");
        image[static_cast<std::size_t>(i)] = &value;
    }
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (image[i] == nullptr)
            throw MissingAssignment("no substituent for variable " + vars_.name(i));

    LaurentPoly out(target);
    for (const auto& [exps, coeff] : terms_) {
        LaurentPoly term = constant(target, coeff);
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            if (exps[i] < 0 && !image[i]->is_invertible_monomial())
                throw NonInvertibleSubstituentForNegativeExponent(
                    "variable " + vars_.name(i) +
                    " occurs with a negative exponent but its substituent is not an "
                    "invertible monomial");
            term *= image[i]->pow(exps[i]);
        }
        out += term;
    }
    return out;
}

mpq_class LaurentPoly::evaluate(
    const std::vector<std::pair<std::string, mpq_class>>& point) const {
    std::vector<const mpq_class*> value(vars_.size(), nullptr);
    for (const auto& [name, v] : point) {
        const int i = vars_.index_of(name);
        if (i >= 0) value[static_cast<std::size_t>(i)] = &v;
    }
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (value[i] == nullptr)
            throw MissingAssignment("no value for variable " + vars_.name(i));

    auto qpow = [](const mpq_class& q, std::int32_t e) {
        if (e == 0) return mpq_class(1);
        const bool invert = e < 0;
        const unsigned long k = static_cast<unsigned long>(invert ? -std::int64_t{e} : e);
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), q.get_num().get_mpz_t(), k);
        mpz_pow_ui(den.get_mpz_t(), q.get_den().get_mpz_t(), k);
        mpq_class out = invert ? mpq_class(den, num) : mpq_class(num, den);
        out.canonicalize();
        return out;
    };

    mpq_class total = 0;
    for (const auto& [exps, coeff] : terms_) {
        mpq_class term(coeff);
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            if (exps[i] < 0 && *value[i] == 0)
                throw ZeroAtNegativeExponent("variable " + vars_.name(i) +
                                             " is zero but occurs with a negative exponent");
            term *= qpow(*value[i], exps[i]);
        }
        total += term;
    }
    return total;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
    if (vars_ != divisor.vars_)
        throw VarSetMismatch("dividing polynomials over different variables");
    if (divisor.is_zero()) throw NotDivisible("division by zero polynomial");
    if (!is_polynomial() || !divisor.is_polynomial())
        throw NotDivisible("exact division requires ordinary polynomials");
    const auto& [lead_exps, lead_coeff] = *divisor.terms_.begin();
    if (lead_coeff != 1 && lead_coeff != -1)
        throw NotDivisible("divisor leading coefficient must be a unit");

    LaurentPoly quotient(vars_);
    LaurentPoly rem = *this;
    Exponents q_exps(vars_.size());
    while (!rem.is_zero()) {
        const auto& [r_exps, r_coeff] = *rem.terms_.begin();
        for (std::size_t i = 0; i < q_exps.size(); ++i) {
            q_exps[i] = checked_exp(std::int64_t{r_exps[i]} - lead_exps[i]);
            if (q_exps[i] < 0) throw NotDivisible("remainder is nonzero");
        }
        const mpz_class q_coeff = r_coeff * lead_coeff;  // lead_coeff is +-1
        LaurentPoly t = monomial(vars_, q_exps, q_coeff);
        quotient += t;
        rem -= t * divisor;
    }
    return quotient;
}

// -- text form ---------------------------------------------------------------

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [exps, coeff] : terms_) {
        const bool negative = coeff < 0;
        if (first) {
            if (negative) out << '-';
        } else {
            out << (negative ? '-' : '+');
        }
        first = false;
        mpz_class mag = abs(coeff);
        bool printed = false;
        const bool constant_term =
            std::all_of(exps.begin(), exps.end(), [](std::int32_t e) { return e == 0; });
        if (mag != 1 || constant_term) {
            out << mag.get_str();
            printed = true;
        }
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            if (printed) out << '*';
            out << vars_.name(i);
            if (exps[i] != 1) out << '^' << exps[i];
            printed = true;
        }
    }
    return out.str();
}

namespace {

struct Token {
    enum Kind { Plus, Minus, Star, Caret, Integer, Ident, End } kind;
    std::string text;
};

class Lexer {
  public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ >= text_.size()) return {Token::End, ""};
        const char c = text_[pos_];
        if (c == '+') return ++pos_, Token{Token::Plus, "+"};
        if (c == '-') return ++pos_, Token{Token::Minus, "-"};
        if (c == '*') return ++pos_, Token{Token::Star, "*"};
        if (c == '^') return ++pos_, Token{Token::Caret, "^"};
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            return {Token::Integer, std::string(text_.substr(start, pos_ - start))};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
                    text_[pos_] == '\''))
                ++pos_;
            return {Token::Ident, std::string(text_.substr(start, pos_ - start))};
        }
        throw SyntaxError(std::string("unexpected character '") + c + "' in polynomial");
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text, VarSet vars) {
    LaurentPoly result(vars);
    Lexer lexer(text);
    Token tok = lexer.next();
    if (tok.kind == Token::End) throw SyntaxError("empty polynomial text");

    bool expect_term = true;
    int sign = 1;
    while (tok.kind != Token::End) {
        if (expect_term) {
            // optional leading signs already folded into `sign`
            if (tok.kind == Token::Plus || tok.kind == Token::Minus) {
                if (tok.kind == Token::Minus) sign = -sign;
                tok = lexer.next();
                continue;
            }
            // one term: factors joined by '*'
            mpz_class coeff = sign;
            Exponents exps(vars.size(), 0);
            bool want_factor = true;
            while (true) {
                if (want_factor) {
                    if (tok.kind == Token::Integer) {
                        coeff *= mpz_class(tok.text);
                        tok = lexer.next();
                    } else if (tok.kind == Token::Ident) {
                        const int idx = vars.index_of(tok.text);
                        if (idx < 0) throw UnknownVariable("unknown variable: " + tok.text);
                        tok = lexer.next();
                        std::int64_t power = 1;
                        if (tok.kind == Token::Caret) {
                            tok = lexer.next();
                            int psign = 1;
                            if (tok.kind == Token::Minus) {
                                psign = -1;
                                tok = lexer.next();
                            }
                            if (tok.kind != Token::Integer)
                                throw SyntaxError("expected integer exponent after '^'");
                            power = psign * std::stoll(tok.text);
                            tok = lexer.next();
                        }
                        exps[static_cast<std::size_t>(idx)] = checked_exp(
                            std::int64_t{exps[static_cast<std::size_t>(idx)]} + power);
                    } else {
                        throw SyntaxError("expected a coefficient or variable");
                    }
                    want_factor = false;
                } else if (tok.kind == Token::Star) {
                    tok = lexer.next();
                    want_factor = true;
                } else {
                    break;
                }
            }
            result.add_term(exps, coeff);
            sign = 1;
            expect_term = false;
        } else {
            if (tok.kind == Token::Plus) {
                sign = 1;
            } else if (tok.kind == Token::Minus) {
                sign = -1;
            } else {
                throw SyntaxError("expected '+' or '-' between terms");
            }
            tok = lexer.next();
            expect_term = true;
        }
    }
    if (expect_term) throw SyntaxError("dangling sign at end of polynomial");
    return result;
}

}  // namespace surfpoly
