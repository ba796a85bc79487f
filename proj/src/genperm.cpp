#include "flowpoly/genperm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "flowpoly/arrays.hpp"
#include "flowpoly/flows.hpp"

namespace flowpoly {

namespace {

std::string mask_to_string(uint32_t mask) {
    std::ostringstream os;
    bool first = true;
    os << "{";
    for (int i = 0; mask >> i; ++i)
        if (mask >> i & 1) {
            if (!first) os << ",";
            os << (i + 1);
            first = false;
        }
    os << "}";
    return os.str();
}

void check_spec(const GenPermSpec& spec) {
    if (spec.n < 0 || spec.n > 20) throw std::invalid_argument("GenPermSpec: n out of range");
    if (spec.z.size() != (size_t{1} << spec.n)) throw std::invalid_argument("GenPermSpec: z size mismatch");
    if (spec.z[0] != 0) throw std::invalid_argument("GenPermSpec: z of the empty set must be 0");
}

}  // namespace

std::optional<std::pair<uint32_t, uint32_t>> supermodularity_violation(const GenPermSpec& spec) {
    check_spec(spec);
    const uint32_t full = (1u << spec.n) - 1;
    for (uint32_t i = 0; i <= full; ++i)
        for (uint32_t j = i + 1; j <= full; ++j)
            if (spec.z[i | j] + spec.z[i & j] < spec.z[i] + spec.z[j]) return std::pair{i, j};
    return std::nullopt;
}

std::vector<Exponent> genperm_lattice_points(const GenPermSpec& spec) {
    check_spec(spec);
    if (auto v = supermodularity_violation(spec))
        throw std::invalid_argument("genperm_lattice_points: not supermodular at I=" +
                                    mask_to_string(v->first) + ", J=" + mask_to_string(v->second));
    const int n = spec.n;
    std::vector<Exponent> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    const uint32_t full = (1u << n) - 1;
    std::vector<long long> lb(n), ub(n);
    for (int i = 0; i < n; ++i) {
        lb[i] = spec.z[1u << i];
        ub[i] = spec.z[full] - spec.z[full ^ (1u << i)];
        if (lb[i] > ub[i]) return out;
    }
    std::vector<long long> suffix_lb(n + 1, 0), suffix_ub(n + 1, 0);
    for (int i = n - 1; i >= 0; --i) {
        suffix_lb[i] = suffix_lb[i + 1] + lb[i];
        suffix_ub[i] = suffix_ub[i + 1] + ub[i];
    }
    Exponent t(n, 0);
    std::function<void(int, long long)> rec = [&](int i, long long sum) {
        if (i == n) {
            if (sum != spec.z[full]) return;
            for (uint32_t mask = 1; mask < full; ++mask) {
                long long s = 0;
                for (int v = 0; v < n; ++v)
                    if (mask >> v & 1) s += t[v];
                if (s < spec.z[mask]) return;
            }
            out.push_back(t);
            return;
        }
        for (long long x = lb[i]; x <= ub[i]; ++x) {
            long long rest_lo = sum + x + suffix_lb[i + 1];
            long long rest_hi = sum + x + suffix_ub[i + 1];
            if (rest_lo > spec.z[full] || rest_hi < spec.z[full]) continue;
            t[i] = static_cast<int>(x);
            rec(i + 1, sum + x);
        }
        t[i] = 0;
    };
    rec(0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

GenPermSpec minkowski_to_z(const MinkowskiSpec& m) {
    if (m.y.size() != (size_t{1} << m.n)) throw std::invalid_argument("MinkowskiSpec: y size mismatch");
    GenPermSpec spec;
    spec.n = m.n;
    spec.z.assign(size_t{1} << m.n, 0);
    for (uint32_t mask = 0; mask < (1u << m.n); ++mask) {
        // Sum y over submasks of mask.
        long long s = 0;
        uint32_t sub = mask;
        while (true) {
            s += m.y[sub];
            if (sub == 0) break;
            sub = (sub - 1) & mask;
        }
        spec.z[mask] = s;
    }
    return spec;
}

SparsePolynomial ld_polynomial(const MultiGraph& g) {
    const long long m = g.edge_count();
    SparsePolynomial p(g.n());
    for (const auto& [seq, mult] : ld_aggregate(g, special_strategy())) {
        long long cd = m - std::accumulate(seq.begin(), seq.end(), 0ll);
        p.add_term(seq, (cd % 2 == 0 ? 1 : -1) * mult);
    }
    return p;
}

SparsePolynomial ld_component(const MultiGraph& g, int k) {
    return ld_polynomial(g).homogeneous_component(g.edge_count() - k);
}

SparsePolynomial ld_F_polynomial(const MultiGraph& g, const EdgeSubset& f) {
    SparsePolynomial p(g.n());
    long long sign = f.size() % 2 == 0 ? 1 : -1;
    for (const auto& [seq, mult] : ld_for_subset(ld_multiset(g, special_strategy()), f))
        p.add_term(seq, sign * mult);
    return p;
}

SparsePolynomial rd_polynomial(const MultiGraph& g) {
    SparsePolynomial lp = ld_polynomial(g.mirror());
    std::vector<int> phi(lp.nvars());
    for (int i = 0; i < lp.nvars(); ++i) phi[i] = lp.nvars() - 1 - i;
    return lp.substitute_variables(phi);
}

SparsePolynomial reduced_rd(const MultiGraph& g) {
    SparsePolynomial r = rd_polynomial(g);
    const int n = r.nvars();
    std::vector<int> keep;
    for (int v = 0; v < n; ++v)
        if (g.outdeg(v) > 0) keep.push_back(v);
    for (const auto& [e, c] : r.terms())
        for (int v = 0; v < n; ++v)
            if (g.outdeg(v) == 0 && e[v] != 0)
                throw std::logic_error("reduced_rd: zero-outdegree vertex carries a nonzero exponent");
    SparsePolynomial out(static_cast<int>(keep.size()));
    for (const auto& [e, c] : r.terms()) {
        Exponent proj;
        proj.reserve(keep.size());
        for (int v : keep) proj.push_back(e[v]);
        out.add_term(proj, c);
    }
    return out;
}

namespace {

// psi-images of integer flows: the values on the listed edges, with counts.
std::map<std::vector<int>, long long> flow_images(const MultiGraph& g, const Netflow& a,
                                                  const UnitCapEdges& caps,
                                                  const std::vector<size_t>& edges) {
    std::map<std::vector<int>, long long> images;
    for_each_flow(g, a, caps, [&](const std::vector<long long>& f) {
        std::vector<int> img(edges.size());
        for (size_t i = 0; i < edges.size(); ++i) img[i] = static_cast<int>(f[edges[i]]);
        ++images[img];
    });
    return images;
}

GenPermSpec z_from_images(int n, const std::map<std::vector<int>, long long>& images) {
    GenPermSpec spec;
    spec.n = n;
    spec.z.assign(size_t{1} << n, 0);
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        long long best = 0;
        bool first = true;
        for (const auto& [img, cnt] : images) {
            long long s = 0;
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1) s += img[i];
            if (first || s < best) best = s;
            first = false;
        }
        spec.z[mask] = best;
    }
    return spec;
}

}  // namespace

uint32_t largest_closed_subset(const MultiGraph& g, uint32_t mask) {
    // Remove any vertex with an edge leaving the current set; the valid
    // subsets are closed under union, so the fixed point is the largest one.
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Edge& e : g.edges()) {
            if (e.tail < 1) continue;
            bool tail_in = e.tail <= g.n() && (mask >> (e.tail - 1) & 1);
            bool head_in = e.head >= 1 && (mask >> (e.head - 1) & 1);
            if (tail_in && !head_in) {
                mask &= ~(1u << (e.tail - 1));
                changed = true;
            }
        }
    }
    return mask;
}

std::optional<GenPermSpec> z_parameters(const MultiGraph& g, const EdgeSubset& f) {
    if (g.n() > 20) throw std::invalid_argument("z_parameters: subset enumeration guarded to n <= 20");
    TildeMinusS0 ts = tilde_minus_s0(g);
    Netflow b = b_vector(g, f);
    if (!feasible(ts.graph, b)) return std::nullopt;
    auto images = flow_images(ts.graph, b, {}, ts.terminal_edges);
    GenPermSpec spec = z_from_images(g.n(), images);
    // Closed-form cross-check: z_I = sum of b over the largest closed subset.
    for (uint32_t mask = 1; mask < (1u << g.n()); ++mask) {
        uint32_t closed = largest_closed_subset(g, mask);
        long long s = 0;
        for (int i = 0; i < g.n(); ++i)
            if (closed >> i & 1) s += b[i];
        if (s != spec.z[mask])
            throw std::logic_error("z_parameters: closed form disagrees with the flow minimum at I=" +
                                   mask_to_string(mask));
    }
    return spec;
}

std::optional<GenPermSpec> z_parameters_level(const MultiGraph& g, long long k) {
    if (g.n() > 20) throw std::invalid_argument("z_parameters_level: subset enumeration guarded to n <= 20");
    LevelEncoding enc = level_graph(g, k);
    auto images = flow_images(enc.graph, enc.b_k, enc.caps, enc.a_edges);
    if (images.empty()) return std::nullopt;
    return z_from_images(g.n(), images);
}

YParameters y_parameters(const MultiGraph& g, const EdgeSubset& f) {
    YParameters out;
    auto z = z_parameters(g, f);
    if (!z) {
        out.detail = "empty flow polytope";
        return out;
    }
    Netflow b = b_vector(g, f);
    const int n = g.n();
    // The lattice of subsets of [n] with no edge leaving them.
    std::vector<uint32_t> lattice;
    for (uint32_t mask = 0; mask < (1u << n); ++mask)
        if (largest_closed_subset(g, mask) == mask) lattice.push_back(mask);
    MinkowskiSpec m;
    m.n = n;
    m.y.assign(size_t{1} << n, 0);
    for (uint32_t j : lattice) {
        if (j == 0) continue;
        std::vector<uint32_t> covers;  // maximal proper lattice subsets of j
        for (uint32_t cand : lattice) {
            if (cand == j || (cand & j) != cand) continue;
            bool maximal = true;
            for (uint32_t other : lattice)
                if (other != j && other != cand && (other & j) == other && (cand & other) == cand) {
                    maximal = false;
                    break;
                }
            if (maximal) covers.push_back(cand);
        }
        if (covers.size() != 1) continue;  // join-reducible
        uint32_t diff = j ^ covers[0];
        if (__builtin_popcount(diff) != 1) {
            out.cover_violation = true;
            out.detail = "join-irreducible " + mask_to_string(j) + " covers " + mask_to_string(covers[0]) +
                         " dropping more than one vertex";
            return out;
        }
        int k = __builtin_ctz(diff);
        m.y[j] = b[k];
        if (m.y[j] < 0) {
            out.detail = "negative y at " + mask_to_string(j);
            return out;
        }
    }
    out.agrees_with_z = minkowski_to_z(m).z == z->z;
    if (!out.agrees_with_z) out.detail = "Minkowski form disagrees with the z-parameters";
    out.y = std::move(m);
    return out;
}

bool hull_membership(const Exponent& q, const std::vector<Exponent>& points) {
    if (points.empty()) throw std::invalid_argument("hull_membership: empty point set");
    const size_t n = q.size();
    for (const auto& p : points)
        if (p.size() != n) throw std::invalid_argument("hull_membership: dimension mismatch");

    // Phase-1 simplex for: lambda >= 0, sum lambda = 1, sum lambda p = q.
    const size_t rows = n + 1;
    const size_t nl = points.size();
    const size_t cols = nl + rows;  // lambdas then artificials
    std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(cols + 1, 0));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < nl; ++j) t[i][j] = points[j][i];
        t[i][cols] = q[i];
    }
    for (size_t j = 0; j < nl; ++j) t[n][j] = 1;
    t[n][cols] = 1;
    for (size_t i = 0; i < rows; ++i) {
        if (t[i][cols] < 0)
            for (size_t j = 0; j <= cols; ++j) t[i][j] = -t[i][j];
        t[i][nl + i] = 1;
    }
    std::vector<size_t> basis(rows);
    for (size_t i = 0; i < rows; ++i) basis[i] = nl + i;
    // Reduced cost row for minimizing the artificial sum.
    std::vector<Rational> obj(cols + 1, 0);
    for (size_t j = 0; j <= cols; ++j) {
        Rational s = 0;
        for (size_t i = 0; i < rows; ++i) s += t[i][j];
        bool artificial = j >= nl && j < cols;
        obj[j] = (artificial ? Rational(1) : Rational(0)) - s;
    }
    while (true) {
        size_t enter = cols;
        for (size_t j = 0; j < cols; ++j)
            if (obj[j] < 0) {  // Bland: smallest eligible index
                enter = j;
                break;
            }
        if (enter == cols) break;
        size_t leave = rows;
        Rational best = 0;
        for (size_t i = 0; i < rows; ++i) {
            if (t[i][enter] <= 0) continue;
            Rational ratio = t[i][cols] / t[i][enter];
            if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                best = ratio;
                leave = i;
            }
        }
        if (leave == rows) return false;  // unbounded phase-1 cannot happen; defensive
        Rational piv = t[leave][enter];
        for (size_t j = 0; j <= cols; ++j) t[leave][j] /= piv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rational factor = t[i][enter];
            for (size_t j = 0; j <= cols; ++j) t[i][j] -= factor * t[leave][j];
        }
        if (obj[enter] != 0) {
            Rational factor = obj[enter];
            for (size_t j = 0; j <= cols; ++j) obj[j] -= factor * t[leave][j];
        }
        basis[leave] = enter;
    }
    Rational objective = 0;
    for (size_t i = 0; i < rows; ++i)
        if (basis[i] >= nl && basis[i] < cols) objective += t[i][cols];
    return objective == 0;
}

namespace {

// Candidate lattice points of conv(support) beyond the support: bounding box
// intersected with the level range, prefiltered by all subset-sum bounds.
std::optional<Exponent> find_missing_hull_point(const SparsePolynomial& p) {
    const int n = p.nvars();
    auto sup = p.support();
    if (sup.empty() || n == 0) return std::nullopt;
    std::vector<Exponent> pts(sup.begin(), sup.end());
    std::vector<int> lo(n, INT32_MAX), hi(n, INT32_MIN);
    long long lev_lo = INT64_MAX, lev_hi = INT64_MIN;
    for (const auto& e : pts) {
        long long s = std::accumulate(e.begin(), e.end(), 0ll);
        lev_lo = std::min(lev_lo, s);
        lev_hi = std::max(lev_hi, s);
        for (int i = 0; i < n; ++i) {
            lo[i] = std::min(lo[i], e[i]);
            hi[i] = std::max(hi[i], e[i]);
        }
    }
    std::vector<long long> zmin, zmax;
    const uint32_t full = n <= 20 ? (1u << n) - 1 : 0;
    if (full) {
        zmin.assign(full + 1, 0);
        zmax.assign(full + 1, 0);
        for (uint32_t mask = 1; mask <= full; ++mask) {
            long long mn = INT64_MAX, mx = INT64_MIN;
            for (const auto& e : pts) {
                long long s = 0;
                for (int i = 0; i < n; ++i)
                    if (mask >> i & 1) s += e[i];
                mn = std::min(mn, s);
                mx = std::max(mx, s);
            }
            zmin[mask] = mn;
            zmax[mask] = mx;
        }
    }
    std::vector<long long> suf_lo(n + 1, 0), suf_hi(n + 1, 0);
    for (int i = n - 1; i >= 0; --i) {
        suf_lo[i] = suf_lo[i + 1] + lo[i];
        suf_hi[i] = suf_hi[i + 1] + hi[i];
    }
    Exponent q(n, 0);
    std::optional<Exponent> found;
    std::function<void(int, long long)> rec = [&](int i, long long sum) {
        if (found) return;
        if (sum + suf_lo[i] > lev_hi || sum + suf_hi[i] < lev_lo) return;
        if (i == n) {
            if (sup.count(q)) return;
            if (full)
                for (uint32_t mask = 1; mask <= full; ++mask) {
                    long long s = 0;
                    for (int v = 0; v < n; ++v)
                        if (mask >> v & 1) s += q[v];
                    if (s < zmin[mask] || s > zmax[mask]) return;
                }
            if (hull_membership(q, pts)) found = q;
            return;
        }
        for (int x = lo[i]; x <= hi[i]; ++x) {
            q[i] = x;
            rec(i + 1, sum + x);
        }
        q[i] = 0;
    };
    rec(0, 0);
    return found;
}

}  // namespace

SnpVerdict snp_check(const SparsePolynomial& p) {
    SnpVerdict verdict;
    if (p.is_zero()) return verdict;
    const int n = p.nvars();
    for (int deg : p.degrees()) {
        SparsePolynomial comp = p.homogeneous_component(deg);
        auto sup = comp.support();
        std::vector<Exponent> pts(sup.begin(), sup.end());
        GenPermSpec spec;
        spec.n = n;
        spec.z.assign(size_t{1} << n, 0);
        for (uint32_t mask = 1; mask < (1u << n); ++mask) {
            long long best = INT64_MAX;
            for (const auto& e : pts) {
                long long s = 0;
                for (int i = 0; i < n; ++i)
                    if (mask >> i & 1) s += e[i];
                best = std::min(best, s);
            }
            spec.z[mask] = best;
        }
        if (auto v = supermodularity_violation(spec)) {
            verdict.components_gp = false;
            verdict.level_saturated[deg] = false;
            if (!verdict.violation_level) {
                verdict.violation_level = deg;
                verdict.detail = "supermodularity fails at degree " + std::to_string(deg) + " for I=" +
                                 mask_to_string(v->first) + ", J=" + mask_to_string(v->second);
            }
            continue;
        }
        auto lattice = genperm_lattice_points(spec);
        bool saturated = std::set<Exponent>(lattice.begin(), lattice.end()) == sup;
        verdict.level_saturated[deg] = saturated;
        if (!saturated && !verdict.violation_level) {
            verdict.violation_level = deg;
            verdict.detail = "component hull at degree " + std::to_string(deg) + " is not saturated";
        }
    }
    if (auto missing = find_missing_hull_point(p)) {
        verdict.snp = false;
        verdict.missing_point = missing;
        if (verdict.detail.empty())
            verdict.detail = "Newton polytope contains a lattice point with zero coefficient";
    }
    return verdict;
}

long long volume(const MultiGraph& g) {
    TildeMinusS0 ts = tilde_minus_s0(g);
    return kostant(ts.graph, b_vector(g, {}));
}

namespace {

std::vector<Rational> poly_mul_linear(const std::vector<Rational>& p, long long r) {
    // p(t) * (t + r)
    std::vector<Rational> out(p.size() + 1, 0);
    for (size_t i = 0; i < p.size(); ++i) {
        out[i + 1] += p[i];
        out[i] += p[i] * r;
    }
    return out;
}

}  // namespace

std::vector<Rational> ehrhart(const MultiGraph& g) {
    const int n = g.n();
    const long long d = g.edge_count() + n;
    std::vector<Edge> pool = g.edges_avoiding_zero();
    if (pool.size() > 22) throw std::invalid_argument("ehrhart: 2^#E(G\\0) subset guard exceeded");
    TildeMinusS0 ts = tilde_minus_s0(g);
    std::vector<long long> count_by_size(pool.size() + 1, 0);
    for (uint32_t mask = 0; mask < (1u << pool.size()); ++mask) {
        EdgeSubset f;
        for (size_t i = 0; i < pool.size(); ++i)
            if (mask >> i & 1) f.insert(pool[i]);
        count_by_size[f.size()] += kostant(ts.graph, b_vector(g, f));
    }
    std::vector<Rational> total(d + 1, 0);
    for (long long i = 0; i <= d; ++i) {
        long long size = d - i;
        if (size > static_cast<long long>(pool.size())) continue;
        long long c = count_by_size[size];
        if (c == 0) continue;
        // binom(t+i, i) = prod_{r=1..i} (t+r) / i!
        std::vector<Rational> binom{1};
        Rational fact = 1;
        for (long long r = 1; r <= i; ++r) {
            binom = poly_mul_linear(binom, r);
            fact *= r;
        }
        Rational scale = Rational(((d + i) % 2 == 0) ? c : -c) / fact;
        for (size_t j = 0; j < binom.size(); ++j) total[j] += binom[j] * scale;
    }
    return total;
}

Rational ehrhart_eval(const std::vector<Rational>& coeffs, long long t) {
    Rational v = 0;
    for (size_t i = coeffs.size(); i-- > 0;) v = v * t + coeffs[i];
    return v;
}

}  // namespace flowpoly
