#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "flowpoly/polynomial.hpp"

namespace flowpoly {

// Permutation of {1, ..., N} in one-line notation.
class Permutation {
  public:
    Permutation() = default;
    explicit Permutation(std::vector<int> one_line);
    static Permutation identity(int n);
    static Permutation from_string(const std::string& digits);  // "14523"

    int size() const { return static_cast<int>(values_.size()); }
    int operator()(int i) const { return values_[i - 1]; }  // 1-based
    const std::vector<int>& one_line() const { return values_; }
    long long inversions() const;
    std::string to_string() const;

    auto operator<=>(const Permutation&) const = default;

  private:
    std::vector<int> values_;
};

// Positions (row, col), 1-based, with row + col <= N in the N x N staircase.
using CrossSet = std::set<std::pair<int, int>>;

struct PipeDream {
    int size = 0;  // N
    CrossSet crosses;
};

struct TraceResult {
    Permutation perm;
    bool reduced = true;
};

// Follows the strands of the tiling: strands enter at the top moving down,
// exit on the left; a cross lets both strands pass straight through unless
// the pair has crossed before, in which case the tile acts as an elbow
// (second crossings are ignored at trace time). Reading the exits top to
// bottom gives the permutation.
TraceResult trace(int size, const CrossSet& crosses);

// Enumerates PD(pi) or RPD(pi) by row-by-row backtracking over cross
// placements; the partial trace of each completed row must exit pi(row).
// Guarded to N <= 8.
void for_each_pipe_dream(const Permutation& pi, bool reduced_only,
                         const std::function<void(const PipeDream&)>& visit);

std::vector<PipeDream> pipe_dreams(const Permutation& pi);
std::vector<PipeDream> reduced_pipe_dreams(const Permutation& pi);

// Grothendieck polynomial: sum over all pipe dreams of prod_{(i,j) in
// crosses} t_i (unsigned, the beta = 1 convention). The Schubert polynomial
// is the reduced-dream sum, the lowest-degree homogeneous component.
SparsePolynomial grothendieck(const Permutation& pi);
SparsePolynomial schubert(const Permutation& pi);

// If pi = 1 pi' with pi' dominant (weakly decreasing Lehmer code), the
// partition shape lambda(pi'); otherwise nullopt.
std::optional<std::vector<int>> is_one_dominant(const Permutation& pi);

// Transition recursion for pi = 1 pi' with pi' dominant. Throws
// std::invalid_argument when the rule does not apply.
SparsePolynomial transition(const Permutation& pi);

// Column counts of core(pi) u {(1,1)}: defined through an external
// construction this library does not provide.
std::vector<int> rd_core_column_counts(const Permutation& pi);

struct TheoremCReport {
    bool applicable = false;
    bool grothendieck_snp = false;
    bool components_gp = false;
    bool schubert_01_coefficients = false;
    bool schubert_saturated = false;
    std::string detail;

    bool ok() const {
        return applicable && grothendieck_snp && components_gp && schubert_01_coefficients &&
               schubert_saturated;
    }
};

TheoremCReport verify_theorem_C(const Permutation& pi);

struct ScanReport {
    int n = 0;
    long long permutations = 0;
    long long counterexamples = 0;
    std::vector<std::string> failures;  // one-line notations
};

// Checks every pi in S_n for polytopal support of the Grothendieck polynomial
// and the generalized-permutahedron property of its components.
ScanReport conjecture_scan(int n, int jobs = 1);

}  // namespace flowpoly
