#include "troph/monideal.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <unordered_map>

namespace troph {

namespace {

bool divides(const ExpVec& a, const ExpVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

ExpVec lcm_exp(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

}  // namespace

MonIdeal::MonIdeal(int n, std::vector<ExpVec> gens) : n_(n), gens_(std::move(gens)) {
    for (const auto& g : gens_) {
        if (static_cast<int>(g.size()) != n_ + 1)
            throw dimension_mismatch("generator has wrong variable count");
        for (int e : g)
            if (e < 0) throw invalid_input("negative exponent");
    }
    minimalize();
}

MonIdeal MonIdeal::unit(int n) {
    return MonIdeal(n, {ExpVec(static_cast<std::size_t>(n) + 1, 0)});
}

bool MonIdeal::is_unit() const {
    return gens_.size() == 1 && degree(gens_[0]) == 0;
}

void MonIdeal::minimalize() {
    // canonical order: x0-major, matching the display convention
    std::sort(gens_.begin(), gens_.end(), std::greater<ExpVec>());
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    std::vector<ExpVec> keep;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens_.size() && !redundant; ++j)
            if (i != j && divides(gens_[j], gens_[i]) && gens_[j] != gens_[i])
                redundant = true;
        if (!redundant) keep.push_back(gens_[i]);
    }
    gens_ = std::move(keep);
}

bool MonIdeal::contains(const ExpVec& mono) const {
    for (const auto& g : gens_)
        if (divides(g, mono)) return true;
    return false;
}

bool MonIdeal::contains(const MonIdeal& other) const {
    for (const auto& g : other.gens_)
        if (!contains(g)) return false;
    return true;
}

bool MonIdeal::operator==(const MonIdeal& o) const {
    return n_ == o.n_ && gens_ == o.gens_;  // minimal generators are canonical
}

MonIdeal MonIdeal::plus(const ExpVec& mono) const {
    auto g = gens_;
    g.push_back(mono);
    return MonIdeal(n_, std::move(g));
}

MonIdeal MonIdeal::intersect(const MonIdeal& o) const {
    if (n_ != o.n_) throw dimension_mismatch("intersect: mixed rings");
    std::vector<ExpVec> g;
    for (const auto& a : gens_)
        for (const auto& b : o.gens_) g.push_back(lcm_exp(a, b));
    return MonIdeal(n_, std::move(g));
}

MonIdeal MonIdeal::colon(const ExpVec& f) const {
    std::vector<ExpVec> g;
    for (const auto& m : gens_) {
        ExpVec r(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) r[i] = std::max(m[i] - f[i], 0);
        g.push_back(std::move(r));
    }
    return MonIdeal(n_, std::move(g));
}

Int MonIdeal::std_monomial_count(long d) const {
    if (d < 0) return 0;
    int nv = nvars();
    // inclusion-exclusion over generator subsets via lcm degrees
    if (gens_.size() <= 16) {
        Int total = binom(d + nv - 1, static_cast<unsigned>(nv - 1));
        std::size_t g = gens_.size();
        for (std::size_t mask = 1; mask < (std::size_t{1} << g); ++mask) {
            ExpVec l(static_cast<std::size_t>(nv), 0);
            for (std::size_t i = 0; i < g; ++i)
                if (mask & (std::size_t{1} << i)) l = lcm_exp(l, gens_[i]);
            long dl = degree(l);
            if (dl > d) continue;
            Int c = binom(d - dl + nv - 1, static_cast<unsigned>(nv - 1));
            if (__builtin_popcountll(mask) % 2)
                total -= c;
            else
                total += c;
        }
        return total;
    }
    // fallback: direct enumeration
    Int count(0);
    ExpVec acc(static_cast<std::size_t>(nv), 0);
    auto rec = [&](auto&& self, int var, long rem) -> void {
        if (var == nv - 1) {
            acc[static_cast<std::size_t>(var)] = static_cast<int>(rem);
            if (!contains(acc)) ++count;
            return;
        }
        for (long e = 0; e <= rem; ++e) {
            acc[static_cast<std::size_t>(var)] = static_cast<int>(e);
            self(self, var + 1, rem - e);
        }
    };
    rec(rec, 0, d);
    return count;
}

std::string MonIdeal::str() const {
    if (gens_.empty()) return "(0)";
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) os << ", ";
        os << monomial_str(gens_[i]);
    }
    os << ")";
    return os.str();
}

Saturation saturate(const MonIdeal& I, const ExpVec& f) {
    MonIdeal cur = I;
    long ell = 0;
    for (;;) {
        MonIdeal next = cur.colon(f);
        if (next == cur) return {cur, ell};
        cur = next;
        ++ell;
    }
}

MonIdeal saturate_irrelevant(const MonIdeal& I) {
    // (I : m^infty) = intersection of the variable-wise saturations
    MonIdeal out = MonIdeal::unit(I.n());
    for (int i = 0; i <= I.n(); ++i) {
        ExpVec xi(static_cast<std::size_t>(I.nvars()), 0);
        xi[static_cast<std::size_t>(i)] = 1;
        out = out.intersect(saturate(I, xi).ideal);
    }
    return out;
}

namespace {

MonPrime radical_of_pure_power_ideal(const MonIdeal& I) {
    MonPrime vars;
    for (const auto& g : I.gens())
        for (std::size_t i = 0; i < g.size(); ++i)
            if (g[i] > 0) vars.push_back(static_cast<int>(i));
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

void split_recursive(const MonIdeal& I, std::vector<MonIdeal>& out) {
    if (I.is_unit()) return;
    for (const auto& g : I.gens()) {
        int first = -1;
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (g[i] == 0) continue;
            if (first < 0) {
                first = static_cast<int>(i);
            } else {
                // g = u * w with u the pure power of the first variable
                ExpVec u(g.size(), 0), w = g;
                u[static_cast<std::size_t>(first)] = g[static_cast<std::size_t>(first)];
                w[static_cast<std::size_t>(first)] = 0;
                split_recursive(I.plus(u), out);
                split_recursive(I.plus(w), out);
                return;
            }
        }
    }
    out.push_back(I);  // all generators are pure powers: primary
}

}  // namespace

std::vector<PrimaryPiece> primary_decomposition(const MonIdeal& I) {
    std::vector<PrimaryPiece> pieces;
    if (I.is_zero()) return pieces;

    std::vector<MonIdeal> raw;
    split_recursive(I, raw);

    // group by radical, intersect pieces with equal radical
    std::map<MonPrime, MonIdeal> by_prime;
    for (const auto& q : raw) {
        MonPrime p = radical_of_pure_power_ideal(q);
        auto it = by_prime.find(p);
        if (it == by_prime.end())
            by_prime.emplace(p, q);
        else
            it->second = it->second.intersect(q);
    }

    std::vector<std::pair<MonPrime, MonIdeal>> comps(by_prime.begin(), by_prime.end());
    // drop redundant components until irredundant
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < comps.size(); ++i) {
            MonIdeal rest = MonIdeal::unit(I.n());
            for (std::size_t j = 0; j < comps.size(); ++j)
                if (j != i) rest = rest.intersect(comps[j].second);
            if (comps.size() > 1 && comps[i].second.contains(rest)) {
                comps.erase(comps.begin() + static_cast<long>(i));
                changed = true;
                break;
            }
        }
    }

    for (auto& [p, q] : comps)
        pieces.push_back(PrimaryPiece{q, p, multiplicity(I, p)});
    return pieces;
}

namespace {

// I with the variables outside P set to 1; exponents stay indexed by the
// full variable list
MonIdeal restrict_to_prime(const MonIdeal& I, const MonPrime& P) {
    std::vector<bool> in_p(static_cast<std::size_t>(I.nvars()), false);
    for (int v : P) in_p[static_cast<std::size_t>(v)] = true;
    std::vector<ExpVec> gens;
    for (const auto& g : I.gens()) {
        ExpVec r(g.size(), 0);
        for (std::size_t i = 0; i < g.size(); ++i)
            if (in_p[i]) r[i] = g[i];
        gens.push_back(std::move(r));
    }
    return MonIdeal(I.n(), std::move(gens));
}

}  // namespace

long multiplicity(const MonIdeal& I, const MonPrime& P) {
    if (P.empty()) throw invalid_input("multiplicity: empty prime");
    MonIdeal local = restrict_to_prime(I, P);
    if (local.is_unit())
        throw invalid_input("multiplicity: P is not associated to I");

    // torsion part (local : m_P^infty) / local
    MonIdeal torsion = MonIdeal::unit(I.n());
    for (int v : P) {
        ExpVec xv(static_cast<std::size_t>(I.nvars()), 0);
        xv[static_cast<std::size_t>(v)] = 1;
        torsion = torsion.intersect(saturate(local, xv).ideal);
    }

    // monomials of the quotient live under the generator exponent bounds
    ExpVec bound(static_cast<std::size_t>(I.nvars()), 0);
    for (const auto& g : local.gens())
        bound = lcm_exp(bound, g);

    long count = 0;
    ExpVec u(static_cast<std::size_t>(I.nvars()), 0);
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == P.size()) {
            if (!local.contains(u) && torsion.contains(u)) ++count;
            return;
        }
        std::size_t var = static_cast<std::size_t>(P[k]);
        for (int e = 0; e < std::max(bound[var], 1); ++e) {
            u[var] = e;
            self(self, k + 1);
        }
        u[var] = 0;
    };
    rec(rec, 0);
    return count;
}

bool prime_is_isolated(const MonIdeal& I, const MonPrime& P) {
    for (const auto& piece : primary_decomposition(I)) {
        if (piece.P == P) continue;
        if (std::includes(P.begin(), P.end(), piece.P.begin(), piece.P.end()))
            return false;
    }
    return true;
}

long multiplicity_chain_steps(const MonIdeal& I, const MonPrime& P, std::size_t budget) {
    auto pieces = primary_decomposition(I);
    const PrimaryPiece* mine = nullptr;
    MonIdeal ii = MonIdeal::unit(I.n());
    for (const auto& piece : pieces) {
        if (piece.P == P) {
            mine = &piece;
        } else if (std::includes(P.begin(), P.end(), piece.P.begin(), piece.P.end())) {
            ii = ii.intersect(piece.Q);
        }
    }
    if (!mine) throw invalid_input("multiplicity_chain_steps: P not associated");
    const MonIdeal& Q = mine->Q;

    // standard monomials of Q in the variables of P, excluding 1
    ExpVec bound(static_cast<std::size_t>(I.nvars()), 0);
    for (const auto& g : Q.gens()) bound = lcm_exp(bound, g);
    std::vector<ExpVec> D;
    ExpVec u(static_cast<std::size_t>(I.nvars()), 0);
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == P.size()) {
            if (!Q.contains(u) && degree(u) > 0) D.push_back(u);
            return;
        }
        std::size_t var = static_cast<std::size_t>(P[k]);
        for (int e = 0; e < std::max(bound[var], 1); ++e) {
            u[var] = e;
            self(self, k + 1);
        }
        u[var] = 0;
    };
    rec(rec, 0);
    if (D.size() > 22) throw budget_exceeded("chain search space too large");

    // upward-closed subsets of D; adding one monomial at a time
    std::vector<std::vector<std::size_t>> multiples(D.size());
    for (std::size_t i = 0; i < D.size(); ++i)
        for (std::size_t j = 0; j < D.size(); ++j)
            if (i != j && divides(D[i], D[j])) multiples[i].push_back(j);

    auto value = [&](std::uint64_t mask) {
        MonIdeal R = Q;
        for (std::size_t i = 0; i < D.size(); ++i)
            if (mask & (std::uint64_t{1} << i)) R = R.plus(D[i]);
        return R.intersect(ii);
    };

    std::unordered_map<std::uint64_t, long> memo;
    std::size_t visited = 0;
    auto dfs = [&](auto&& self, std::uint64_t mask, const MonIdeal& val) -> long {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        if (++visited > budget) throw budget_exceeded("chain search budget exceeded");
        long best = 0;
        for (std::size_t i = 0; i < D.size(); ++i) {
            if (mask & (std::uint64_t{1} << i)) continue;
            bool addable = true;
            for (std::size_t j : multiples[i])
                if (!(mask & (std::uint64_t{1} << j))) { addable = false; break; }
            if (!addable) continue;
            std::uint64_t next = mask | (std::uint64_t{1} << i);
            MonIdeal nval = value(next);
            long step = (nval == val) ? 0 : 1;
            best = std::max(best, step + self(self, next, nval));
        }
        memo[mask] = best;
        return best;
    };
    return dfs(dfs, 0, value(0));
}

ArithDegree adeg(const MonIdeal& I) {
    ArithDegree out;
    out.by_dim.assign(static_cast<std::size_t>(I.n()) + 1, 0);
    for (const auto& piece : primary_decomposition(I)) {
        long r = I.n() - static_cast<long>(piece.P.size());  // deg of a monomial prime is 1
        out.by_dim.at(static_cast<std::size_t>(r + 1)) += piece.multiplicity;
    }
    for (long r = 0; r <= I.n() - 1; ++r) out.total += out.at(r);
    return out;
}

MVector fit_hilbert_polynomial(const MonIdeal& I, long d_max) {
    std::size_t g = I.gens().size();
    if (g == 0) return MVector(static_cast<std::size_t>(I.nvars()), 1);  // I = (0)
    if (g > 20)
        return fit_hilbert_sequence(
            [&I](long d) { return I.std_monomial_count(d); }, I.n(), d_max);

    // subset lcm degrees, computed once
    std::vector<long> lcmdeg(std::size_t{1} << g, 0);
    {
        std::vector<ExpVec> lcms(std::size_t{1} << g,
                                 ExpVec(static_cast<std::size_t>(I.nvars()), 0));
        for (std::size_t mask = 1; mask < lcms.size(); ++mask) {
            std::size_t low = static_cast<std::size_t>(__builtin_ctzll(mask));
            lcms[mask] = lcm_exp(lcms[mask & (mask - 1)], I.gens()[low]);
            lcmdeg[mask] = degree(lcms[mask]);
        }
    }
    // For d beyond every lcm degree, each count binom(d - L + n, n) equals
    // the shifted binomial polynomial, so the alternating sum is the Hilbert
    // polynomial in closed form; no window fitting is needed.
    unsigned n = static_cast<unsigned>(I.n());
    NumPoly p;
    for (std::size_t mask = 0; mask < lcmdeg.size(); ++mask) {
        NumPoly term = binom_poly(static_cast<long>(n) - lcmdeg[mask], n);
        p = (__builtin_popcountll(mask) % 2) ? p - term : p + term;
    }
    return decompose(p);
}

BoundedMonomial bounded_monomial(const MonIdeal& I) {
    auto pieces = primary_decomposition(I);
    BoundedMonomial out;
    out.alpha.assign(static_cast<std::size_t>(I.nvars()), 0);
    out.degree_bound = 0;

    std::vector<bool> assigned(pieces.size(), false);
    for (int i = 0; i <= I.n(); ++i) {
        long a = 0;
        for (std::size_t j = 0; j < pieces.size(); ++j) {
            if (assigned[j]) continue;
            if (std::binary_search(pieces[j].P.begin(), pieces[j].P.end(), i)) {
                a += pieces[j].multiplicity;
                assigned[j] = true;
            }
        }
        out.alpha[static_cast<std::size_t>(i)] = static_cast<int>(a);
    }
    for (const auto& piece : pieces) out.degree_bound += piece.multiplicity;

    ExpVec prod(static_cast<std::size_t>(I.nvars()), 1);
    MonIdeal lhs = I.colon(out.alpha);
    MonIdeal rhs = saturate(I, prod).ideal;
    if (!(lhs == rhs))
        throw internal_inconsistency("bounded_monomial: colon identity failed");
    out.contains_monomial = lhs.is_unit();
    return out;
}

// ----------------------------------------------------------------- parsing

ExpVec parse_monomial(std::string_view text, int nvars) {
    ExpVec e(static_cast<std::size_t>(nvars), 0);
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip();
    if (pos < text.size() && text[pos] == '1' ) {
        ++pos;
        skip();
        if (pos == text.size()) return e;
        throw parse_error("bad monomial: " + std::string(text));
    }
    bool expect_factor = true;
    while (pos < text.size()) {
        skip();
        if (pos >= text.size()) break;
        if (!expect_factor) {
            if (text[pos] != '*') throw parse_error("expected '*' in monomial");
            ++pos;
            skip();
        }
        if (pos >= text.size() || text[pos] != 'x')
            throw parse_error("expected variable in monomial: " + std::string(text));
        ++pos;
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw parse_error("expected variable index");
        int idx = std::stoi(std::string(text.substr(start, pos - start)));
        if (idx < 0 || idx >= nvars) throw parse_error("variable index out of range");
        int exp = 1;
        skip();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            skip();
            std::size_t es = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (es == pos) throw parse_error("expected exponent");
            exp = std::stoi(std::string(text.substr(es, pos - es)));
        }
        e[static_cast<std::size_t>(idx)] += exp;
        expect_factor = false;
        skip();
    }
    if (expect_factor) throw parse_error("empty monomial");
    return e;
}

MonIdeal parse_mon_ideal(std::string_view gens, int nvars) {
    std::vector<ExpVec> out;
    std::size_t start = 0;
    while (start <= gens.size()) {
        std::size_t comma = gens.find(',', start);
        std::string_view piece =
            gens.substr(start, comma == std::string_view::npos ? gens.size() - start
                                                               : comma - start);
        bool blank = true;
        for (char c : piece)
            if (!std::isspace(static_cast<unsigned char>(c))) { blank = false; break; }
        if (!blank) out.push_back(parse_monomial(piece, nvars));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return MonIdeal(nvars - 1, std::move(out));
}

std::string monomial_str(const ExpVec& e) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!first) os << "*";
        first = false;
        os << "x" << i;
        if (e[i] > 1) os << "^" << e[i];
    }
    if (first) os << "1";
    return os.str();
}

}  // namespace troph
