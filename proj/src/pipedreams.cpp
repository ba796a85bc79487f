#include "flowpoly/pipedreams.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "flowpoly/genperm.hpp"

namespace flowpoly {

Permutation::Permutation(std::vector<int> one_line) : values_(std::move(one_line)) {
    std::vector<bool> seen(values_.size() + 1, false);
    for (int v : values_) {
        if (v < 1 || v > static_cast<int>(values_.size()) || seen[v])
            throw std::invalid_argument("Permutation: not a permutation of 1..n");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::from_string(const std::string& digits) {
    if (digits.empty()) throw std::invalid_argument("Permutation: empty one-line notation");
    std::vector<int> v;
    for (char c : digits) {
        if (c < '1' || c > '9') throw std::invalid_argument("Permutation: expected digits 1-9");
        v.push_back(c - '0');
    }
    return Permutation(std::move(v));
}

long long Permutation::inversions() const {
    long long inv = 0;
    for (size_t i = 0; i < values_.size(); ++i)
        for (size_t j = i + 1; j < values_.size(); ++j)
            if (values_[i] > values_[j]) ++inv;
    return inv;
}

std::string Permutation::to_string() const {
    std::string s;
    for (int v : values_) s += static_cast<char>('0' + v);
    return s;
}

namespace {

constexpr int kMaxPipeSize = 8;

struct RowSim {
    // Runs one row of the wiring given the strands descending into it.
    // down[j-1]: strand entering column j from above (0 = none).
    // Returns the strand exiting on the left.
    static int run(int size, int row, uint32_t cross_mask, std::vector<int>& down,
                   std::vector<std::vector<bool>>& crossed, bool& reduced) {
        int horiz = 0;
        for (int col = size; col >= 1; --col) {
            int top = down[col - 1];
            int right = horiz;
            bool is_cross = col + row <= size && (cross_mask >> (col - 1) & 1);
            int out_bottom, out_left;
            if (is_cross && top && right && crossed[top][right]) {
                reduced = false;  // second crossing: the tile acts as an elbow
                out_left = top;
                out_bottom = right;
            } else if (is_cross) {
                if (top && right) crossed[top][right] = crossed[right][top] = true;
                out_bottom = top;
                out_left = right;
            } else {
                out_left = top;
                out_bottom = right;
            }
            down[col - 1] = out_bottom;
            horiz = out_left;
        }
        return horiz;
    }
};

}  // namespace

TraceResult trace(int size, const CrossSet& crosses) {
    if (size < 1 || size > kMaxPipeSize) throw std::invalid_argument("trace: size must be in 1..8");
    std::vector<uint32_t> row_mask(size + 1, 0);
    for (const auto& [r, c] : crosses) {
        if (r < 1 || c < 1 || r + c > size)
            throw std::invalid_argument("trace: cross outside the staircase");
        row_mask[r] |= 1u << (c - 1);
    }
    std::vector<int> down(size);
    std::iota(down.begin(), down.end(), 1);
    std::vector<std::vector<bool>> crossed(size + 1, std::vector<bool>(size + 1, false));
    bool reduced = true;
    std::vector<int> exits(size);
    for (int row = 1; row <= size; ++row)
        exits[row - 1] = RowSim::run(size, row, row_mask[row], down, crossed, reduced);
    return {Permutation(std::move(exits)), reduced};
}

void for_each_pipe_dream(const Permutation& pi, bool reduced_only,
                         const std::function<void(const PipeDream&)>& visit) {
    const int size = pi.size();
    if (size < 1 || size > kMaxPipeSize)
        throw std::invalid_argument("pipe dream enumeration guarded to permutations of size 1..8");
    PipeDream current{size, {}};
    std::vector<int> down(size);
    std::iota(down.begin(), down.end(), 1);
    std::vector<std::vector<bool>> crossed(size + 1, std::vector<bool>(size + 1, false));

    std::function<void(int, std::vector<int>&, std::vector<std::vector<bool>>&)> rec =
        [&](int row, std::vector<int>& d, std::vector<std::vector<bool>>& cr) {
            if (row > size) {
                visit(current);
                return;
            }
            const int free_cols = std::max(size - row, 0);
            for (uint32_t mask = 0; mask < (1u << free_cols); ++mask) {
                std::vector<int> d2 = d;
                auto cr2 = cr;
                bool reduced = true;
                int exit = RowSim::run(size, row, mask, d2, cr2, reduced);
                if (exit != pi(row)) continue;
                if (reduced_only && !reduced) continue;
                for (int c = 0; c < free_cols; ++c)
                    if (mask >> c & 1) current.crosses.insert({row, c + 1});
                rec(row + 1, d2, cr2);
                for (int c = 0; c < free_cols; ++c)
                    if (mask >> c & 1) current.crosses.erase({row, c + 1});
            }
        };
    rec(1, down, crossed);
}

std::vector<PipeDream> pipe_dreams(const Permutation& pi) {
    std::vector<PipeDream> out;
    for_each_pipe_dream(pi, false, [&](const PipeDream& p) { out.push_back(p); });
    return out;
}

std::vector<PipeDream> reduced_pipe_dreams(const Permutation& pi) {
    std::vector<PipeDream> out;
    for_each_pipe_dream(pi, true, [&](const PipeDream& p) { out.push_back(p); });
    return out;
}

namespace {

SparsePolynomial dreams_polynomial(const Permutation& pi, bool reduced_only) {
    const int n = pi.size() - 1;
    SparsePolynomial p(n);
    for_each_pipe_dream(pi, reduced_only, [&](const PipeDream& d) {
        Exponent e(n, 0);
        for (const auto& [r, c] : d.crosses) ++e[r - 1];
        p.add_term(e, 1);
    });
    return p;
}

}  // namespace

SparsePolynomial grothendieck(const Permutation& pi) { return dreams_polynomial(pi, false); }

SparsePolynomial schubert(const Permutation& pi) { return dreams_polynomial(pi, true); }

namespace {

std::vector<int> lehmer_code(const std::vector<int>& v) {
    std::vector<int> code(v.size(), 0);
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j)
            if (v[j] < v[i]) ++code[i];
    return code;
}

std::vector<int> conjugate_partition(const std::vector<int>& lam) {
    std::vector<int> out;
    if (lam.empty()) return out;
    for (int j = 1; j <= lam[0]; ++j) {
        int c = 0;
        for (int part : lam)
            if (part >= j) ++c;
        out.push_back(c);
    }
    return out;
}

// Dominant permutation of {2, ..., N} with the given weakly decreasing code.
std::vector<int> dominant_of_code(int n_perm, const std::vector<int>& code) {
    std::vector<int> pool;
    for (int v = 2; v <= n_perm; ++v) pool.push_back(v);
    std::vector<int> out;
    for (size_t i = 0; i < pool.size(); ++i) {
        int c = i < code.size() ? code[i] : 0;
        std::vector<int> remaining;
        for (int v : pool)
            if (std::find(out.begin(), out.end(), v) == out.end()) remaining.push_back(v);
        if (c >= static_cast<int>(remaining.size()))
            throw std::invalid_argument("dominant_of_code: code too large for the alphabet");
        out.push_back(remaining[c]);
    }
    return out;
}

}  // namespace

std::optional<std::vector<int>> is_one_dominant(const Permutation& pi) {
    if (pi.size() < 1 || pi(1) != 1) return std::nullopt;
    std::vector<int> tail(pi.one_line().begin() + 1, pi.one_line().end());
    std::vector<int> code = lehmer_code(tail);
    for (size_t i = 1; i < code.size(); ++i)
        if (code[i] > code[i - 1]) return std::nullopt;
    while (!code.empty() && code.back() == 0) code.pop_back();
    return code;
}

SparsePolynomial transition(const Permutation& pi) {
    auto shape = is_one_dominant(pi);
    if (!shape) throw std::invalid_argument("transition: permutation is not 1*pi' with pi' dominant");
    const int n = pi.size() - 1;
    if (shape->empty()) return SparsePolynomial::constant(n, 1);
    // The rule indexes diagrams by column lengths: conjugate the code shape.
    std::vector<int> lam = conjugate_partition(*shape);
    const int z = static_cast<int>(lam.size());
    const int k = lam.back();
    SparsePolynomial result(n);
    for (int l = 0; l <= k; ++l) {
        std::vector<int> sub_diagram;
        for (int i = 0; i + 1 < z; ++i)
            if (lam[i] - (k - l) > 0) sub_diagram.push_back(lam[i] - (k - l));
        std::vector<int> w = dominant_of_code(pi.size(), conjugate_partition(sub_diagram));
        std::vector<int> one_line{1};
        one_line.insert(one_line.end(), w.begin(), w.end());
        SparsePolynomial sub = transition(Permutation(std::move(one_line)));
        std::vector<int> phi(n);
        for (int i = 1; i <= n; ++i) {
            int img = i <= l + 1 ? i : i + k - l;
            if (img > n) {
                // Out-of-range slots must be unused by the sub-polynomial.
                for (const auto& [e, c] : sub.terms())
                    if (e[i - 1] != 0)
                        throw std::logic_error("transition: variable substitution out of range");
                img = 1;
            }
            phi[i - 1] = img - 1;
        }
        SparsePolynomial term = sub.substitute_variables(phi);
        Exponent pre(n, 0);
        for (int m = 1; m <= l; ++m) pre[m - 1] += 1;
        for (int p = l + 2; p <= k + 1; ++p) {
            if (p > n) throw std::logic_error("transition: prefactor variable out of range");
            pre[p - 1] += z;
        }
        result += term * SparsePolynomial::monomial(n, pre, 1);
    }
    return result;
}

std::vector<int> rd_core_column_counts(const Permutation&) {
    throw std::logic_error("rd_core_column_counts: requires the external core construction");
}

TheoremCReport verify_theorem_C(const Permutation& pi) {
    TheoremCReport rep;
    auto shape = is_one_dominant(pi);
    if (!shape) {
        rep.detail = "not of the form 1*pi' with pi' dominant";
        return rep;
    }
    rep.applicable = true;
    SparsePolynomial g = grothendieck(pi);
    SnpVerdict v = snp_check(g);
    rep.grothendieck_snp = v.snp;
    rep.components_gp = v.components_gp;
    SparsePolynomial s = schubert(pi);
    rep.schubert_01_coefficients = true;
    for (const auto& [e, c] : s.terms())
        if (c != 1) rep.schubert_01_coefficients = false;
    int lowest = s.is_zero() ? 0 : s.degrees().front();
    auto it = v.level_saturated.find(lowest);
    rep.schubert_saturated = s.is_zero() || (it != v.level_saturated.end() && it->second);
    if (!rep.ok()) rep.detail = v.detail;
    return rep;
}

ScanReport conjecture_scan(int n, int jobs) {
    if (n < 1 || n > kMaxPipeSize) throw std::invalid_argument("conjecture_scan: n must be in 1..8");
    std::vector<Permutation> all;
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    do {
        all.push_back(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));

    ScanReport rep;
    rep.n = n;
    rep.permutations = static_cast<long long>(all.size());
    std::mutex mu;
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= all.size()) return;
            SnpVerdict verdict = snp_check(grothendieck(all[i]));
            if (!verdict.snp || !verdict.components_gp) {
                std::lock_guard<std::mutex> lock(mu);
                ++rep.counterexamples;
                rep.failures.push_back(all[i].to_string());
            }
        }
    };
    int threads = std::max(1, jobs);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    std::sort(rep.failures.begin(), rep.failures.end());
    return rep;
}

}  // namespace flowpoly
