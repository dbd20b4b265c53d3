#ifndef SURFPOLY_LAURENT_HPP
#define SURFPOLY_LAURENT_HPP

#include <cstdint>
#include <gmpxx.h>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace surfpoly {

/// Ordered set of distinct variable names. The order is part of the value:
/// exponent vectors, canonical term order and the text form all refer to it.
class VarSet {
  public:
    VarSet() = default;
    VarSet(std::initializer_list<std::string> names);
    explicit VarSet(std::vector<std::string> names);

    static const VarSet& krushkal();         // (X, Y, A, B)
    static const VarSet& las_vergnas();      // (x, y, z)
    static const VarSet& bollobas_riordan(); // (X, Y, Z)
    static const VarSet& tutte();            // (x, y)

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    /// Index of a variable, -1 if absent.
    int index_of(std::string_view name) const;

    friend bool operator==(const VarSet&, const VarSet&) = default;

  private:
    std::vector<std::string> names_;
};

using Exponents = std::vector<std::int32_t>;

/// Canonical term order: higher total degree first, ties broken by the
/// lexicographically larger exponent vector.
struct TermOrder {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate Laurent polynomial with exact integer coefficients.
/// Exponents may be negative. No zero coefficient is ever stored, so equality
/// of canonical forms is plain structural equality.
class LaurentPoly {
  public:
    using TermMap = std::map<Exponents, mpz_class, TermOrder>;

    explicit LaurentPoly(VarSet vars = {}) : vars_(std::move(vars)) {}

    static LaurentPoly constant(VarSet vars, mpz_class value);
    static LaurentPoly monomial(VarSet vars, Exponents exps, mpz_class coeff);
    static LaurentPoly variable(const VarSet& vars, std::string_view name,
                                std::int32_t power = 1);
    /// Grammar: poly := ['+'|'-'] term (('+'|'-') term)*;
    ///          term := factor ('*' factor)*; factor := int | var ['^' int].
    static LaurentPoly parse(std::string_view text, VarSet vars);

    const VarSet& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    /// True when no exponent is negative (an ordinary polynomial).
    bool is_polynomial() const;
    bool is_invertible_monomial() const;
    mpz_class coefficient_sum() const;
    mpz_class coefficient(const Exponents& exps) const;

    /// Accumulates coeff onto the given exponent vector, dropping the term if
    /// the sum cancels.
    void add_term(const Exponents& exps, const mpz_class& coeff);

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);
    friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
    friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
    friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
    LaurentPoly operator-() const;

    /// p^k. Negative k requires an invertible monomial (single term with
    /// coefficient +-1).
    LaurentPoly pow(std::int32_t k) const;

    /// Simultaneous exact substitution. Every variable must be assigned; a
    /// variable occurring with a negative exponent must receive an invertible
    /// monomial. The result lives over `target`.
    LaurentPoly substitute(const VarSet& target,
                           const std::vector<std::pair<std::string, LaurentPoly>>&
                               assignment) const;

    /// Exact rational evaluation. Variables occurring with negative exponents
    /// must be given nonzero values.
    mpq_class evaluate(const std::vector<std::pair<std::string, mpq_class>>& point) const;

    /// Exact division: requires both operands to be ordinary polynomials, the
    /// divisor's leading coefficient to be +-1, and zero remainder.
    LaurentPoly divide_exact(const LaurentPoly& divisor) const;

    /// Canonical text: terms in canonical order, explicit '^' powers,
    /// negative exponents as e.g. "z^-1".
    std::string str() const;

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  private:
    VarSet vars_;
    TermMap terms_;
};

}  // namespace surfpoly

#endif
