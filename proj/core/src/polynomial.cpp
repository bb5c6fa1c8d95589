#include "nilfibre/polynomial.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace nilfibre {

Substitution::Action Substitution::action(Coord c) const {
    auto it = map.find(c);
    return it == map.end() ? Action{Kind::Keep, 0} : it->second;
}

bool Substitution::homogeneous() const {
    for (auto& [c, a] : map)
        if (a.kind == Kind::One || (a.kind == Kind::Value && a.value != 0)) return false;
    return true;
}

std::optional<Substitution> Substitution::parse(const std::string& text) {
    Substitution sub;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t end = text.find(';', pos);
        if (end == std::string::npos) end = text.size();
        std::string item = text.substr(pos, end - pos);
        pos = end + 1;
        if (item.empty()) continue;
        if (item[0] == 'x') item.erase(0, 1);
        size_t comma = item.find(',');
        size_t eq = item.find('=');
        if (comma == std::string::npos || eq == std::string::npos || comma > eq) return std::nullopt;
        try {
            int i = std::stoi(item.substr(0, comma));
            int j = std::stoi(item.substr(comma + 1, eq - comma - 1));
            long long v = std::stoll(item.substr(eq + 1));
            if (i < 1 || j < 1) return std::nullopt;
            sub.set_value({i, j}, v);
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    return sub;
}

std::string Substitution::str() const {
    std::ostringstream s;
    bool first = true;
    for (auto& [c, a] : map) {
        if (!first) s << ';';
        first = false;
        s << 'x' << c.first << ',' << c.second << '=';
        switch (a.kind) {
            case Kind::Zero: s << 0; break;
            case Kind::One: s << 1; break;
            case Kind::Value: s << a.value; break;
            case Kind::Keep: s << "keep"; break;
        }
    }
    return s.str();
}

SparsePolynomial SparsePolynomial::constant(long long c) {
    SparsePolynomial p;
    p.add_term({}, c);
    return p;
}

SparsePolynomial SparsePolynomial::variable(VarId v) {
    SparsePolynomial p;
    p.add_term({v}, 1);
    return p;
}

void SparsePolynomial::add_term(Monomial m, long long coeff) {
    if (coeff == 0) return;
    std::sort(m.begin(), m.end());
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(std::move(m), coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

long long SparsePolynomial::coefficient(const Monomial& m) const {
    Monomial key = m;
    std::sort(key.begin(), key.end());
    auto it = terms_.find(key);
    return it == terms_.end() ? 0 : it->second;
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& o) const {
    SparsePolynomial out = *this;
    for (auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& o) const {
    SparsePolynomial out = *this;
    for (auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& o) const {
    SparsePolynomial out;
    for (auto& [m1, c1] : terms_)
        for (auto& [m2, c2] : o.terms_) {
            Monomial m = m1;
            m.insert(m.end(), m2.begin(), m2.end());
            out.add_term(std::move(m), c1 * c2);
        }
    return out;
}

SparsePolynomial SparsePolynomial::negated() const { return scaled(-1); }

SparsePolynomial SparsePolynomial::scaled(long long k) const {
    SparsePolynomial out;
    if (k == 0) return out;
    for (auto& [m, c] : terms_) out.terms_.emplace(m, c * k);
    return out;
}

int SparsePolynomial::total_degree() const {
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max<int>(d, static_cast<int>(m.size()));
    return d;
}

int SparsePolynomial::degree_in(VarId v) const {
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max<int>(d, static_cast<int>(std::count(m.begin(), m.end(), v)));
    return d;
}

bool SparsePolynomial::is_multilinear() const {
    for (auto& [m, c] : terms_) {
        for (size_t i = 0; i + 1 < m.size(); ++i)
            if (m[i] == m[i + 1]) return false;
        if (!m.empty() && m[0] == kAuxVar) return false;
    }
    return true;
}

std::set<VarId> SparsePolynomial::variables() const {
    std::set<VarId> out;
    for (auto& [m, c] : terms_) out.insert(m.begin(), m.end());
    return out;
}

SparsePolynomial SparsePolynomial::substitute(const Substitution& sub) const {
    SparsePolynomial out;
    for (auto& [m, c] : terms_) {
        long long coeff = c;
        Monomial kept;
        for (VarId v : m) {
            if (v == kAuxVar) {
                kept.push_back(v);
                continue;
            }
            auto a = sub.action(coord_of(v));
            switch (a.kind) {
                case Substitution::Kind::Keep: kept.push_back(v); break;
                case Substitution::Kind::Zero: coeff = 0; break;
                case Substitution::Kind::One: break;
                case Substitution::Kind::Value: coeff *= a.value; break;
            }
            if (coeff == 0) break;
        }
        if (coeff != 0) out.add_term(std::move(kept), coeff);
    }
    return out;
}

SparsePolynomial SparsePolynomial::lowest_aux_coefficient(int* power) const {
    int best = -1;
    for (auto& [m, c] : terms_) {
        int k = static_cast<int>(std::count(m.begin(), m.end(), kAuxVar));
        if (best < 0 || k < best) best = k;
    }
    SparsePolynomial out;
    if (best < 0) {
        if (power) *power = 0;
        return out;
    }
    for (auto& [m, c] : terms_) {
        if (std::count(m.begin(), m.end(), kAuxVar) != best) continue;
        Monomial stripped;
        for (VarId v : m)
            if (v != kAuxVar) stripped.push_back(v);
        out.add_term(std::move(stripped), c);
    }
    if (power) *power = best;
    return out;
}

long long SparsePolynomial::evaluate(const std::function<long long(Coord)>& point) const {
    long long total = 0;
    for (auto& [m, c] : terms_) {
        long long t = c;
        for (VarId v : m) {
            if (v == kAuxVar) throw StructuralError("evaluate() does not assign the aux variable");
            t *= point(coord_of(v));
            if (t == 0) break;
        }
        total += t;
    }
    return total;
}

std::string SparsePolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream s;
    bool first = true;
    for (auto& [m, c] : terms_) {
        long long coeff = c;
        if (first) {
            if (coeff < 0) {
                s << '-';
                coeff = -coeff;
            }
        } else {
            s << (coeff < 0 ? " - " : " + ");
            coeff = std::abs(coeff);
        }
        first = false;
        bool printed = false;
        if (coeff != 1 || m.empty()) {
            s << coeff;
            printed = true;
        }
        VarId prev = 0;
        int run = 0;
        auto flush = [&](VarId v, int count) {
            if (count == 0) return;
            if (printed) s << '*';
            if (v == kAuxVar)
                s << 'c';
            else
                s << 'x' << coord_of(v).first << ',' << coord_of(v).second;
            if (count > 1) s << '^' << count;
            printed = true;
        };
        for (VarId v : m) {
            if (run && v == prev) {
                ++run;
            } else {
                flush(prev, run);
                prev = v;
                run = 1;
            }
        }
        flush(prev, run);
    }
    return s.str();
}

std::vector<SparsePolynomial> multilinear_factor(const SparsePolynomial& q) {
    if (!q.is_multilinear()) throw StructuralError("multilinear_factor expects a multilinear polynomial");
    if (q.is_zero()) return {};

    std::vector<VarId> vars(q.variables().begin(), q.variables().end());
    if (vars.empty()) return {q};
    std::map<VarId, size_t> idx;
    for (size_t i = 0; i < vars.size(); ++i) idx[vars[i]] = i;

    // Union-find over variables co-occurring in a monomial.
    std::vector<size_t> parent(vars.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<size_t(size_t)> find = [&](size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (auto& [m, c] : q.terms())
        for (size_t i = 1; i < m.size(); ++i) parent[find(idx[m[i - 1]])] = find(idx[m[i]]);

    std::map<size_t, std::vector<VarId>> groups;
    for (size_t i = 0; i < vars.size(); ++i) groups[find(i)].push_back(vars[i]);
    if (groups.size() == 1) {
        std::vector<SparsePolynomial> out{q};
        return out;
    }

    // Extract each factor by freezing the other components at a reference
    // monomial, then confirm the product rebuilds the input.
    const auto& ref = q.terms().begin()->first;
    std::vector<SparsePolynomial> out;
    for (auto& [root, group] : groups) {
        std::set<VarId> mine(group.begin(), group.end());
        SparsePolynomial::Monomial ref_rest;
        for (VarId v : ref)
            if (!mine.count(v)) ref_rest.push_back(v);
        SparsePolynomial factor;
        for (auto& [m, c] : q.terms()) {
            SparsePolynomial::Monomial rest, part;
            for (VarId v : m) (mine.count(v) ? part : rest).push_back(v);
            if (rest == ref_rest) factor.add_term(std::move(part), c);
        }
        // Normalize: content 1, leading coefficient positive.
        long long content = 0;
        for (auto& [m, c] : factor.terms()) content = std::gcd(content, std::abs(c));
        if (content > 1) {
            SparsePolynomial scaled;
            for (auto& [m, c] : factor.terms()) scaled.add_term(m, c / content);
            factor = scaled;
        }
        if (!factor.terms().empty() && factor.terms().begin()->second < 0) factor = factor.negated();
        out.push_back(std::move(factor));
    }
    std::sort(out.begin(), out.end(), [](const SparsePolynomial& a, const SparsePolynomial& b) {
        return a.terms().begin()->first < b.terms().begin()->first;
    });

    SparsePolynomial product = SparsePolynomial::constant(1);
    for (const auto& f : out) product = product * f;
    // The input is product times an integer scalar; recover and verify it.
    const auto& lead = product.terms().begin()->first;
    long long num = q.coefficient(lead);
    long long den = product.terms().begin()->second;
    if (den == 0 || num % den != 0 || !(product.scaled(num / den) == q))
        throw StructuralError("factor product does not rebuild the polynomial");
    if (num / den != 1 && num / den != -1) {
        // Fold the scalar into the first factor to keep the product exact.
        out[0] = out[0].scaled(num / den);
    } else if (num / den == -1) {
        out[0] = out[0].negated();
    }
    return out;
}

std::uint64_t Fp::add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a + b;
    if (s >= P) s -= P;
    return s;
}

std::uint64_t Fp::sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + P - b; }

std::uint64_t Fp::mul(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % P);
}

std::uint64_t Fp::pow(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    a %= P;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t Fp::inv(std::uint64_t a) {
    if (a % P == 0) throw StructuralError("inverse of zero");
    return pow(a, P - 2);
}

}  // namespace nilfibre
