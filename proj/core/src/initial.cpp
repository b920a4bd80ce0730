#include "troph/initial.hpp"

#include <algorithm>
#include <sstream>

namespace troph {

void ResiduePoly::set_term(const ExpVec& e, const Rat& c) {
    if (static_cast<int>(e.size()) != nvars_)
        throw dimension_mismatch("term has wrong variable count");
    if (c == 0)
        terms_.erase(e);
    else
        terms_[e] = c;
}

Rat ResiduePoly::coeff(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

ResiduePoly ResiduePoly::operator*(const ResiduePoly& o) const {
    if (nvars_ != o.nvars_) throw dimension_mismatch("mixed rings");
    ResiduePoly r(nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            ExpVec e(e1);
            for (int i = 0; i < nvars_; ++i) e[i] += e2[i];
            r.set_term(e, r.coeff(e) + c1 * c2);
        }
    return r;
}

std::string ResiduePoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c << ")";
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            os << "*x" << i;
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

namespace {

Rat pairing(const std::vector<Rat>& omega, const ExpVec& e) {
    Rat v(0);
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i]) v += omega[i] * e[i];
    return v;
}

}  // namespace

ResiduePoly initial_form(const KPoly& f, const std::vector<Rat>& omega) {
    if (static_cast<std::size_t>(f.nvars()) != omega.size())
        throw dimension_mismatch("initial_form: omega has wrong dimension");
    ResiduePoly r(f.nvars());
    if (f.is_zero()) return r;
    // H = tau(f)(omega)
    bool have = false;
    Rat H(0);
    for (const auto& [e, c] : f.terms()) {
        Rat v = c.tropicalize() + pairing(omega, e);
        if (!have || v > H) { H = v; have = true; }
    }
    // coefficient of x^a in t^H f(t^-omega x) is f_a t^(H - <omega,a>)
    for (const auto& [e, c] : f.terms()) {
        PuiseuxRat scaled = c * PuiseuxRat::section(H - pairing(omega, e));
        if (scaled.valuation() == 0) r.set_term(e, scaled.residue());
    }
    return r;
}

ResidueSpace reduce_space(const ComponentBasis& B, const std::vector<Rat>& omega) {
    if (static_cast<std::size_t>(B.nvars) != omega.size())
        throw dimension_mismatch("reduce_space: omega has wrong dimension");
    ResidueSpace V;
    V.nvars = B.nvars;
    V.d = B.d;
    V.monomials = B.monomials;
    std::size_t ncols = B.monomials.size();
    if (B.basis.rows.empty()) return V;

    // rescale coordinate a by t^(-<omega,a>) so omega-initial data becomes
    // 0-initial data
    std::vector<PuiseuxRat> colscale(ncols);
    for (std::size_t j = 0; j < ncols; ++j)
        colscale[j] = PuiseuxRat::section(-pairing(omega, B.monomials[j]));
    std::vector<std::vector<PuiseuxRat>> rows = B.basis.rows;
    for (auto& row : rows)
        for (std::size_t j = 0; j < ncols; ++j)
            if (!row[j].is_zero()) row[j] = row[j] * colscale[j];

    // Gaussian elimination over the valuation ring: each step picks the
    // entry of minimal valuation among the remaining rows (ties broken by
    // column order, then row order) and eliminates its column from the rows
    // below; multipliers stay integral over O.
    std::size_t n = rows.size();
    std::vector<bool> used(n, false);
    std::vector<std::size_t> order;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t bi = n, bj = 0;
        Rat bv;
        for (std::size_t i = 0; i < n; ++i) {
            if (used[i]) continue;
            for (std::size_t j = 0; j < ncols; ++j) {
                if (rows[i][j].is_zero()) continue;
                Rat v = rows[i][j].valuation();
                if (bi == n || v < bv || (v == bv && j < bj)) {
                    bi = i; bj = j; bv = v;
                }
            }
        }
        if (bi == n) throw internal_inconsistency("reduce_space: dependent rows");
        used[bi] = true;
        order.push_back(bi);
        PuiseuxRat pivot = rows[bi][bj];
        for (std::size_t i = 0; i < n; ++i) {
            if (used[i] || rows[i][bj].is_zero()) continue;
            PuiseuxRat factor = rows[i][bj] / pivot;
            for (std::size_t j = 0; j < ncols; ++j)
                if (!rows[bi][j].is_zero()) rows[i][j] = rows[i][j] - factor * rows[bi][j];
        }
        // normalize the pivot row to valuation 0 now, while its minimal
        // valuation entry is known
        PuiseuxRat inv = pivot.inv();
        for (auto& x : rows[bi])
            if (!x.is_zero()) x = x * inv;
    }

    for (std::size_t i : order) {
        std::vector<Rat> res(ncols, Rat(0));
        for (std::size_t j = 0; j < ncols; ++j) {
            if (rows[i][j].is_zero()) continue;
            if (rows[i][j].valuation() == 0) res[j] = rows[i][j].residue();
        }
        V.rows.push_back(std::move(res));
    }
    return V;
}

ResidueSpace initial_space(const GradedIdeal& I, const std::vector<Rat>& omega, long d) {
    return reduce_space(component_basis(I, d), omega);
}

std::optional<ExpVec> find_monomial(const ResidueSpace& V) {
    if (V.rows.empty()) return std::nullopt;
    Echelon<Rat> ech = rref(V.rows);
    ech.ncols = V.monomials.size();
    for (std::size_t j = 0; j < V.monomials.size(); ++j) {
        std::vector<Rat> e(V.monomials.size(), Rat(0));
        e[j] = 1;
        if (ech.contains(e)) return V.monomials[j];
    }
    return std::nullopt;
}

bool member(const GradedIdeal& I, const MVector& m, const std::vector<Rat>& omega) {
    if (m.empty()) throw invalid_input("member: empty Hilbert data");
    long m0 = m.front();
    return !find_monomial(initial_space(I, omega, m0)).has_value();
}

KPoly witness_polynomial(const GradedIdeal& I, const MVector& m,
                         const std::vector<Rat>& omega) {
    if (m.empty()) throw invalid_input("witness: empty Hilbert data");
    long m0 = m.front();
    ComponentBasis B = component_basis(I, m0);
    ResidueSpace V = reduce_space(B, omega);
    auto mono = find_monomial(V);
    if (!mono) throw no_witness("witness_polynomial called at a member point");

    std::size_t N = V.monomials.size();
    std::map<ExpVec, std::size_t> index;
    for (std::size_t j = 0; j < N; ++j) index[V.monomials[j]] = j;
    std::size_t a = index.at(*mono);

    // extend a basis of the initial space by unit vectors e_b; those
    // monomials then represent a basis of S_{m0} / I_{m0}
    std::vector<std::vector<Rat>> span = V.rows;
    Echelon<Rat> ech = rref(span);
    ech.ncols = N;
    std::vector<std::size_t> ext;
    for (std::size_t j = 0; j < N && ech.rank() < N; ++j) {
        std::vector<Rat> e(N, Rat(0));
        e[j] = 1;
        if (ech.contains(e)) continue;
        ext.push_back(j);
        span.push_back(std::move(e));
        ech = rref(span);
        ech.ncols = N;
    }

    // solve  e_a = sum_i lambda_i B_i + sum_j c_j e_{b_j}  over K
    std::size_t h = B.dim();
    if (h + ext.size() != N)
        throw internal_inconsistency("witness: basis extension has wrong size");
    std::vector<std::vector<PuiseuxRat>> A(N, std::vector<PuiseuxRat>(N));
    for (std::size_t p = 0; p < N; ++p) {
        for (std::size_t i = 0; i < h; ++i) A[p][i] = B.basis.rows[i][p];
        for (std::size_t j = 0; j < ext.size(); ++j)
            A[p][h + j] = (ext[j] == p) ? PuiseuxRat(1) : PuiseuxRat();
    }
    std::vector<PuiseuxRat> rhs(N);
    rhs[a] = PuiseuxRat(1);
    auto sol = solve_square(std::move(A), std::move(rhs));
    if (!sol) throw internal_inconsistency("witness: singular system");

    // f = x^a - sum_j c_j x^{b_j} = sum_i lambda_i B_i lies in I_{m0}
    KPoly f(B.nvars);
    f.set_term(*mono, PuiseuxRat(1));
    for (std::size_t j = 0; j < ext.size(); ++j)
        f.set_term(V.monomials[ext[j]], -(*sol)[h + j]);

    ResiduePoly in = initial_form(f, omega);
    ResiduePoly expect(B.nvars);
    expect.set_term(*mono, Rat(1));
    if (!(in == expect))
        throw internal_inconsistency("witness: initial form is not the chosen monomial");
    return f;
}

bool extension_invariance_check(const GradedIdeal& I, const MVector& m,
                                const std::vector<std::vector<Rat>>& grid) {
    for (const auto& g : I.generators)
        for (const auto& [e, c] : g.terms())
            if (c.scale() != 1)
                throw invalid_input("extension check expects scale-1 coefficients");
    GradedIdeal J = I;
    for (auto& g : J.generators) {
        KPoly g2(g.nvars());
        for (const auto& [e, c] : g.terms()) g2.set_term(e, c.inflate_scale(2));
        g = g2;
    }
    for (const auto& omega : grid)
        if (member(I, m, omega) != member(J, m, omega)) return false;
    return true;
}

}  // namespace troph
