#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

namespace flowpoly {

using Exponent = std::vector<int>;

// Integer polynomial in nvars variables, stored as exponent vector -> nonzero
// coefficient. Iteration order is the lexicographic order on exponents.
class SparsePolynomial {
  public:
    SparsePolynomial() = default;
    explicit SparsePolynomial(int nvars) : nvars_(nvars) {}

    static SparsePolynomial constant(int nvars, long long c);
    static SparsePolynomial monomial(int nvars, const Exponent& e, long long c = 1);

    int nvars() const { return nvars_; }
    const std::map<Exponent, long long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    long long coeff(const Exponent& e) const;
    void add_term(const Exponent& e, long long c);

    SparsePolynomial& operator+=(const SparsePolynomial& other);
    SparsePolynomial operator+(const SparsePolynomial& other) const;
    SparsePolynomial operator*(const SparsePolynomial& other) const;

    // Sum of coefficients: the evaluation at every variable = 1.
    long long eval_all_ones() const;

    // Degrees with at least one term, ascending.
    std::vector<int> degrees() const;
    SparsePolynomial homogeneous_component(int degree) const;
    SparsePolynomial lowest_component() const;

    // Remaps variable v -> phi(v) (0-based); phi values must stay in range.
    SparsePolynomial substitute_variables(const std::vector<int>& phi) const;

    std::set<Exponent> support() const;

    std::string to_string(const std::string& var = "t") const;

    bool operator==(const SparsePolynomial& other) const {
        return nvars_ == other.nvars_ && terms_ == other.terms_;
    }

  private:
    int nvars_ = 0;
    std::map<Exponent, long long> terms_;
};

}  // namespace flowpoly
