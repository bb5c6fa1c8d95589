#include "nilfibre/invariant.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace nilfibre {

namespace {

// Horizontal composite lines of the rectangle: per row t, the initial
// entries of row t across [C,C'], chained left to right.
std::vector<Coord> rectangle_horizontal_segments(const Diagram& d, const NeighbouringPair& p) {
    std::vector<Coord> segs;
    for (int row = 1; row <= p.height; ++row) {
        int prev = 0;
        for (int col = p.left; col <= p.right; ++col) {
            if (d.height(col) < row) continue;
            int v = d.value_at(col, row);
            if (prev != 0) segs.push_back({prev, v});
            prev = v;
        }
    }
    return segs;
}

}  // namespace

BsInvariant::BsInvariant(DiagramPtr diag, NeighbouringPair pair) : diag_(std::move(diag)), pair_(pair) {
    diag_->pair_index(pair_);  // validates
    start_ = diag_->first_value(pair_.left);
    N_ = 0;
    for (int col = pair_.left; col <= pair_.right; ++col) N_ += diag_->height(col);
    s_ = pair_.height;
    degree_ = diag_->left_rectangle(pair_).degree();
    c_power_ = (N_ - s_) - degree_;
    for (int i = start_; i < start_ + N_; ++i)
        for (int j = i + 1; j < start_ + N_; ++j)
            if (diag_->in_nilradical(i, j)) support_.push_back({i, j});

    sign_ = 1;
    int raw = monomial_coefficient(*this, rectangle_horizontal_segments(*diag_, pair_));
    if (raw != 1 && raw != -1) throw StructuralError("distinguished monomial has coefficient " + std::to_string(raw));
    sign_ = raw;  // multiplying by this makes the distinguished coefficient +1
}

int monomial_coefficient(const BsInvariant& inv, const std::vector<Coord>& segments) {
    const int R = inv.N_ - inv.s_;
    // Minor row i (1..R) carries global value start-1+i, minor column i the
    // value start-1+s+i; c sits where the two coincide.
    std::vector<int> perm(static_cast<size_t>(R) + 1, 0);
    std::vector<bool> col_used(static_cast<size_t>(R) + 1, false);
    for (auto [a, b] : segments) {
        int ri = a - inv.start_ + 1;
        int ci = b - inv.start_ - inv.s_ + 1;
        if (ri < 1 || ri > R || ci < 1 || ci > R) return 0;
        if (!(a < b) || !inv.diag_->in_nilradical(a, b)) return 0;
        if (perm[static_cast<size_t>(ri)] != 0 || col_used[static_cast<size_t>(ci)]) return 0;
        perm[static_cast<size_t>(ri)] = ci;
        col_used[static_cast<size_t>(ci)] = true;
    }
    // Remaining rows must pair with equal global values through c.
    for (int ri = 1; ri <= R; ++ri) {
        if (perm[static_cast<size_t>(ri)] != 0) continue;
        int ci = ri - inv.s_;  // same global value
        if (ci < 1 || ci > R || col_used[static_cast<size_t>(ci)]) return 0;
        perm[static_cast<size_t>(ri)] = ci;
        col_used[static_cast<size_t>(ci)] = true;
    }
    int inversions = 0;
    for (int i = 1; i <= R; ++i)
        for (int j = i + 1; j <= R; ++j)
            if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) ++inversions;
    return (inversions % 2 == 0 ? 1 : -1) * inv.sign_;
}

SparsePolynomial BsInvariant::symbolic(int size_bound) const {
    if (N_ > size_bound)
        throw CapacityError("sub-diagram of " + pair_.str() + " has " + std::to_string(N_) +
                            " boxes, beyond the symbolic bound " + std::to_string(size_bound) +
                            "; use blackbox evaluation");
    const int R = N_ - s_;
    // Entries of the minor as tiny polynomials.
    auto entry = [&](int ri, int ci) -> SparsePolynomial {
        int gi = start_ + ri - 1;
        int gj = start_ + s_ + ci - 1;
        if (gi == gj) return SparsePolynomial::variable(kAuxVar);
        if (gi < gj && diag_->in_nilradical(gi, gj)) return SparsePolynomial::coordinate(gi, gj);
        return SparsePolynomial();
    };
    // Expansion along rows with memoized column masks.
    std::vector<std::map<std::uint32_t, SparsePolynomial>> memo(static_cast<size_t>(R) + 1);
    std::function<SparsePolynomial(int, std::uint32_t)> det = [&](int row, std::uint32_t mask) {
        if (row > R) return SparsePolynomial::constant(1);
        auto it = memo[static_cast<size_t>(row)].find(mask);
        if (it != memo[static_cast<size_t>(row)].end()) return it->second;
        SparsePolynomial out;
        int seen = 0;
        for (int ci = 1; ci <= R; ++ci) {
            if (!(mask & (1u << ci))) continue;
            ++seen;
            SparsePolynomial e = entry(row, ci);
            if (e.is_zero()) continue;
            SparsePolynomial sub = det(row + 1, mask & ~(1u << ci));
            SparsePolynomial term = e * sub;
            out = (seen % 2 == 1) ? out + term : out - term;
        }
        memo[static_cast<size_t>(row)].emplace(mask, out);
        return out;
    };
    std::uint32_t full = 0;
    for (int ci = 1; ci <= R; ++ci) full |= (1u << ci);
    SparsePolynomial minor = det(1, full);

    int power = 0;
    SparsePolynomial low = minor.lowest_aux_coefficient(&power);
    if (power != c_power_)
        throw StructuralError("lowest aux power " + std::to_string(power) + " disagrees with degree bookkeeping");
    low = low.scaled(sign_);
    if (!low.is_multilinear()) throw StructuralError("invariant is not multilinear");
    if (low.total_degree() != degree_) throw StructuralError("invariant degree disagrees with the left rectangle");
    return low;
}

std::uint64_t BsInvariant::evaluate_fp(const std::function<std::uint64_t(Coord)>& point) const {
    const int R = N_ - s_;
    if (R == 0) return 0;
    const int samples = R + 1;
    std::vector<std::uint64_t> xs, ys;
    for (int t = 0; t < samples; ++t) {
        std::uint64_t c = static_cast<std::uint64_t>(t);
        // Build the minor at c and eliminate.
        std::vector<std::vector<std::uint64_t>> m(static_cast<size_t>(R), std::vector<std::uint64_t>(static_cast<size_t>(R), 0));
        for (int ri = 1; ri <= R; ++ri)
            for (int ci = 1; ci <= R; ++ci) {
                int gi = start_ + ri - 1;
                int gj = start_ + s_ + ci - 1;
                std::uint64_t v = 0;
                if (gi == gj)
                    v = c;
                else if (gi < gj && diag_->in_nilradical(gi, gj))
                    v = point({gi, gj}) % Fp::P;
                m[static_cast<size_t>(ri - 1)][static_cast<size_t>(ci - 1)] = v;
            }
        std::uint64_t det = 1;
        for (int col = 0; col < R && det != 0; ++col) {
            int pivot = -1;
            for (int row = col; row < R; ++row)
                if (m[static_cast<size_t>(row)][static_cast<size_t>(col)] != 0) {
                    pivot = row;
                    break;
                }
            if (pivot < 0) {
                det = 0;
                break;
            }
            if (pivot != col) {
                std::swap(m[static_cast<size_t>(pivot)], m[static_cast<size_t>(col)]);
                det = Fp::sub(0, det);
            }
            std::uint64_t d = m[static_cast<size_t>(col)][static_cast<size_t>(col)];
            det = Fp::mul(det, d);
            std::uint64_t dinv = Fp::inv(d);
            for (int row = col + 1; row < R; ++row) {
                std::uint64_t f = Fp::mul(m[static_cast<size_t>(row)][static_cast<size_t>(col)], dinv);
                if (f == 0) continue;
                for (int cc = col; cc < R; ++cc)
                    m[static_cast<size_t>(row)][static_cast<size_t>(cc)] = Fp::sub(
                        m[static_cast<size_t>(row)][static_cast<size_t>(cc)],
                        Fp::mul(f, m[static_cast<size_t>(col)][static_cast<size_t>(cc)]));
            }
        }
        xs.push_back(c);
        ys.push_back(det);
    }
    // Lagrange interpolation, dense in c.
    std::vector<std::uint64_t> coeffs(static_cast<size_t>(samples), 0);
    for (int t = 0; t < samples; ++t) {
        std::vector<std::uint64_t> num{1};  // product of (x - xs[u]), u != t
        std::uint64_t denom = 1;
        for (int u = 0; u < samples; ++u) {
            if (u == t) continue;
            std::vector<std::uint64_t> next(num.size() + 1, 0);
            for (size_t i = 0; i < num.size(); ++i) {
                next[i + 1] = Fp::add(next[i + 1], num[i]);
                next[i] = Fp::sub(next[i], Fp::mul(num[i], xs[static_cast<size_t>(u)]));
            }
            num = std::move(next);
            denom = Fp::mul(denom, Fp::sub(xs[static_cast<size_t>(t)], xs[static_cast<size_t>(u)]));
        }
        std::uint64_t w = Fp::mul(ys[static_cast<size_t>(t)], Fp::inv(denom));
        for (size_t i = 0; i < num.size() && i < coeffs.size(); ++i)
            coeffs[i] = Fp::add(coeffs[i], Fp::mul(w, num[i]));
    }
    for (int k = 0; k < c_power_; ++k)
        if (coeffs[static_cast<size_t>(k)] != 0)
            throw StructuralError("nonzero coefficient below the structural aux power");
    std::uint64_t out = coeffs[static_cast<size_t>(c_power_)];
    if (sign_ < 0) out = Fp::sub(0, out);
    return out;
}

long long BsInvariant::evaluate_exact(const std::function<long long(Coord)>& point) const {
    const int R = N_ - s_;
    using CPoly = std::vector<__int128>;  // dense in c
    auto entry = [&](int ri, int ci) -> CPoly {
        int gi = start_ + ri - 1;
        int gj = start_ + s_ + ci - 1;
        if (gi == gj) return CPoly{0, 1};
        if (gi < gj && diag_->in_nilradical(gi, gj)) return CPoly{static_cast<__int128>(point({gi, gj}))};
        return CPoly{};
    };
    std::vector<std::map<std::uint32_t, CPoly>> memo(static_cast<size_t>(R) + 1);
    std::function<CPoly(int, std::uint32_t)> det = [&](int row, std::uint32_t mask) -> CPoly {
        if (row > R) return CPoly{1};
        auto it = memo[static_cast<size_t>(row)].find(mask);
        if (it != memo[static_cast<size_t>(row)].end()) return it->second;
        CPoly out;
        int seen = 0;
        for (int ci = 1; ci <= R; ++ci) {
            if (!(mask & (1u << ci))) continue;
            ++seen;
            CPoly e = entry(row, ci);
            if (e.empty()) continue;
            CPoly sub = det(row + 1, mask & ~(1u << ci));
            if (sub.empty()) continue;
            CPoly term(e.size() + sub.size() - 1, 0);
            for (size_t i = 0; i < e.size(); ++i)
                for (size_t j = 0; j < sub.size(); ++j) term[i + j] += e[i] * sub[j];
            if (out.size() < term.size()) out.resize(term.size(), 0);
            for (size_t i = 0; i < term.size(); ++i) out[i] += (seen % 2 == 1) ? term[i] : -term[i];
        }
        memo[static_cast<size_t>(row)].emplace(mask, out);
        return out;
    };
    std::uint32_t full = 0;
    for (int ci = 1; ci <= R; ++ci) full |= (1u << ci);
    CPoly minor = det(1, full);
    for (int k = 0; k < c_power_ && k < static_cast<int>(minor.size()); ++k)
        if (minor[static_cast<size_t>(k)] != 0) throw StructuralError("nonzero coefficient below the structural aux power");
    __int128 out = c_power_ < static_cast<int>(minor.size()) ? minor[static_cast<size_t>(c_power_)] : 0;
    out *= sign_;
    long long folded = static_cast<long long>(out);
    if (static_cast<__int128>(folded) != out) throw StructuralError("exact evaluation overflows long long");
    return folded;
}

ZeroTestReport is_zero_on_subspace(const BsInvariant& inv, const std::set<Coord>& excluded, int trials,
                                   std::uint64_t seed) {
    if (trials < 1) throw StructuralError("at least one trial required");
    ZeroTestReport report;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> dist(0, Fp::P - 1);
    for (int t = 0; t < trials; ++t) {
        std::map<Coord, std::uint64_t> assignment;
        for (const Coord& c : inv.support()) assignment[c] = excluded.count(c) ? 0 : dist(rng);
        std::uint64_t value = inv.evaluate_fp([&](Coord c) { return assignment.at(c); });
        ++report.trials;
        if (value != 0) {
            report.is_zero = false;
            report.witness = value;
            return report;
        }
    }
    report.is_zero = true;
    report.failure_bound = 1.0L;
    for (int t = 0; t < trials; ++t)
        report.failure_bound *= static_cast<long double>(inv.degree()) / static_cast<long double>(Fp::P);
    return report;
}

WeierstrassReport weierstrass_check(const ComponentTableau& ct, int size_bound) {
    WeierstrassReport report;
    const Diagram& d = *ct.diagram;
    auto S = ct.one_coords();
    auto Y = ct.star_coords();
    Substitution sub;
    for (auto [i, j] : d.nilradical_coords()) {
        Coord c{i, j};
        if (S.count(c))
            sub.set_one(c);
        else if (!Y.count(c))
            sub.set_zero(c);
    }
    std::set<Coord> seen;
    for (const auto& p : d.pairs()) {
        BsInvariant inv(ct.diagram, p);
        SparsePolynomial restricted = inv.symbolic(size_bound).substitute(sub);
        if (restricted.term_count() != 1) {
            report.detail = p.str() + " restricts to " + restricted.str() + ", not a single coordinate";
            return report;
        }
        auto [mono, coeff] = *restricted.terms().begin();
        if (mono.size() != 1 || (coeff != 1 && coeff != -1)) {
            report.detail = p.str() + " restricts to " + restricted.str() + ", not +-1 times a coordinate";
            return report;
        }
        Coord y = coord_of(mono[0]);
        if (!Y.count(y)) {
            report.detail = p.str() + " restricts to a coordinate outside Y";
            return report;
        }
        if (!seen.insert(y).second) {
            report.detail = p.str() + " repeats a Y coordinate";
            return report;
        }
        report.images.push_back({p, y});
    }
    report.pass = seen.size() == static_cast<size_t>(d.g());
    if (!report.pass) report.detail = "invariants reach fewer Y coordinates than generators";
    return report;
}

HorizontalCheck horizontal_monomial_check(const ReverseState& state, const NeighbouringPair& p) {
    HorizontalCheck check;
    TrapeziumState ts = trapezium(state, p);
    if (ts.red_in_row_s) {
        check.detail = "red entry in R_s of the left trapezium; check not applicable";
        return check;
    }
    check.applicable = true;

    const Tableau& t = state.tab;
    for (int row = 1; row <= p.height; ++row) {
        const Box& lb = ts.left_boundary[static_cast<size_t>(row - 1)];
        int prev = t.cell(lb.col, lb.row).entry;
        int last = prev;
        for (const Box& b : ts.left_trapezium) {
            if (b.row != row) continue;
            if (t.cell(b.col, b.row).color != Color::Black) continue;  // interior reds are skipped
            int v = t.cell(b.col, b.row).entry;
            check.segments.push_back({last, v});
            last = v;
        }
        if (!state.pair_implemented(state.diagram().pair_index(p))) {
            const Box& rb = ts.right_boundary[static_cast<size_t>(row - 1)];
            if (last != t.cell(rb.col, rb.row).entry) {
                check.detail = "horizontal line of row " + std::to_string(row) + " misses the right boundary";
                return check;
            }
        }
    }

    BsInvariant inv(state.tab.diagram_ptr(), p);
    check.coefficient = monomial_coefficient(inv, check.segments);
    if (check.coefficient == 0) {
        check.detail = "horizontal monomial is not a monomial of the invariant";
        return check;
    }
    auto excluded = excluded_roots_reverse(state.tab);
    for (const Coord& c : check.segments)
        if (excluded.count(c)) {
            check.detail = "horizontal segment x" + std::to_string(c.first) + "," + std::to_string(c.second) +
                           " is excluded";
            return check;
        }
    if (static_cast<int>(check.segments.size()) != inv.degree()) {
        check.detail = "horizontal monomial degree " + std::to_string(check.segments.size()) +
                       " differs from the invariant degree " + std::to_string(inv.degree());
        return check;
    }
    check.pass = true;
    return check;
}

}  // namespace nilfibre
