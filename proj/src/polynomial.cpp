#include "flowpoly/polynomial.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace flowpoly {

SparsePolynomial SparsePolynomial::constant(int nvars, long long c) {
    SparsePolynomial p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
}

SparsePolynomial SparsePolynomial::monomial(int nvars, const Exponent& e, long long c) {
    SparsePolynomial p(nvars);
    p.add_term(e, c);
    return p;
}

long long SparsePolynomial::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

void SparsePolynomial::add_term(const Exponent& e, long long c) {
    if (static_cast<int>(e.size()) != nvars_)
        throw std::invalid_argument("SparsePolynomial: exponent length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& other) {
    if (nvars_ != other.nvars_) throw std::invalid_argument("SparsePolynomial: variable count mismatch");
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& other) const {
    SparsePolynomial out = *this;
    out += other;
    return out;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& other) const {
    if (nvars_ != other.nvars_) throw std::invalid_argument("SparsePolynomial: variable count mismatch");
    SparsePolynomial out(nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : other.terms_) {
            Exponent e(nvars_);
            for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
            out.add_term(e, c1 * c2);
        }
    return out;
}

long long SparsePolynomial::eval_all_ones() const {
    long long s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

std::vector<int> SparsePolynomial::degrees() const {
    std::set<int> degs;
    for (const auto& [e, c] : terms_) degs.insert(std::accumulate(e.begin(), e.end(), 0));
    return {degs.begin(), degs.end()};
}

SparsePolynomial SparsePolynomial::homogeneous_component(int degree) const {
    SparsePolynomial out(nvars_);
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0) == degree) out.add_term(e, c);
    return out;
}

SparsePolynomial SparsePolynomial::lowest_component() const {
    auto degs = degrees();
    if (degs.empty()) return SparsePolynomial(nvars_);
    return homogeneous_component(degs.front());
}

SparsePolynomial SparsePolynomial::substitute_variables(const std::vector<int>& phi) const {
    if (static_cast<int>(phi.size()) != nvars_)
        throw std::invalid_argument("substitute_variables: map length mismatch");
    int target = nvars_;
    for (int v : phi)
        if (v < 0 || v >= target) throw std::invalid_argument("substitute_variables: image out of range");
    SparsePolynomial out(target);
    for (const auto& [e, c] : terms_) {
        Exponent mapped(target, 0);
        for (int i = 0; i < nvars_; ++i) mapped[phi[i]] += e[i];
        out.add_term(mapped, c);
    }
    return out;
}

std::set<Exponent> SparsePolynomial::support() const {
    std::set<Exponent> s;
    for (const auto& [e, c] : terms_) s.insert(e);
    return s;
}

std::string SparsePolynomial::to_string(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        long long a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            a = a < 0 ? -a : a;
        }
        first = false;
        bool any_var = false;
        std::ostringstream mono;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (any_var) mono << "*";
            any_var = true;
            mono << var << (i + 1);
            if (e[i] > 1) mono << "^" << e[i];
        }
        if (!any_var) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << mono.str();
        }
    }
    return os.str();
}

}  // namespace flowpoly
