#include "troph/polyring.hpp"

#include <algorithm>
#include <sstream>

namespace troph {

void KPoly::set_term(const ExpVec& e, const PuiseuxRat& c) {
    if (static_cast<int>(e.size()) != nvars_)
        throw dimension_mismatch("term has wrong variable count");
    for (int x : e)
        if (x < 0) throw invalid_input("negative exponent");
    if (c.is_zero())
        terms_.erase(e);
    else
        terms_[e] = c;
}

PuiseuxRat KPoly::coeff(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? PuiseuxRat() : it->second;
}

long KPoly::total_degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<long>(degree(e)));
    return d;
}

bool KPoly::is_homogeneous() const {
    long d = -1;
    for (const auto& [e, c] : terms_) {
        if (d == -1) d = degree(e);
        else if (d != degree(e)) return false;
    }
    return true;
}

KPoly KPoly::operator+(const KPoly& o) const {
    if (nvars_ != o.nvars_) throw dimension_mismatch("adding polynomials of different rings");
    KPoly r = *this;
    for (const auto& [e, c] : o.terms_) {
        PuiseuxRat s = r.coeff(e) + c;
        r.set_term(e, s);
    }
    return r;
}

KPoly KPoly::operator-(const KPoly& o) const { return *this + (-o); }

KPoly KPoly::operator-() const {
    KPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

KPoly KPoly::operator*(const KPoly& o) const {
    if (nvars_ != o.nvars_) throw dimension_mismatch("multiplying polynomials of different rings");
    KPoly r(nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            ExpVec e(e1);
            for (int i = 0; i < nvars_; ++i) e[i] += e2[i];
            PuiseuxRat s = r.coeff(e) + c1 * c2;
            r.set_term(e, s);
        }
    return r;
}

KPoly KPoly::scaled(const PuiseuxRat& c) const {
    KPoly r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
    return r;
}

KPoly KPoly::shifted(const ExpVec& beta) const {
    KPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        ExpVec e2(e);
        for (int i = 0; i < nvars_; ++i) e2[i] += beta[i];
        r.terms_[e2] = c;
    }
    return r;
}

std::string KPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            os << "*x" << i;
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

TropPoly tropicalize(const KPoly& f) {
    TropPoly phi(f.nvars());
    for (const auto& [e, c] : f.terms())
        if (!c.is_zero()) phi.set_term(e, TropVal(c.tropicalize()));
    return phi;
}

GradedIdeal::GradedIdeal(int n_, std::vector<KPoly> gens)
    : n(n_), generators(std::move(gens)) {
    for (const auto& g : generators) {
        if (g.nvars() != n + 1)
            throw dimension_mismatch("generator has wrong variable count");
        if (g.is_zero()) throw invalid_input("zero generator");
        if (!g.is_homogeneous()) throw invalid_input("non-homogeneous generator");
    }
}

namespace {

void enumerate_grlex(int nvars, long d, ExpVec& acc, int var, std::vector<ExpVec>& out) {
    if (var == nvars - 1) {
        acc[var] = static_cast<int>(d);
        out.push_back(acc);
        return;
    }
    for (long e = d; e >= 0; --e) {
        acc[var] = static_cast<int>(e);
        enumerate_grlex(nvars, d - e, acc, var + 1, out);
    }
}

}  // namespace

std::vector<ExpVec> monomials_of_degree(int nvars, long d) {
    if (d < 0) return {};
    if (nvars == 3 && d == 2) {
        return {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
    }
    std::vector<ExpVec> out;
    ExpVec acc(nvars, 0);
    enumerate_grlex(nvars, d, acc, 0, out);
    return out;
}

long dim_degree_part(int nvars, long d) {
    if (d < 0) return 0;
    Int b = binom(d + nvars - 1, static_cast<unsigned>(nvars - 1));
    return b.get_si();
}

KPoly ComponentBasis::row_poly(std::size_t r) const {
    KPoly f(nvars);
    for (std::size_t j = 0; j < monomials.size(); ++j)
        if (!basis.rows[r][j].is_zero()) f.set_term(monomials[j], basis.rows[r][j]);
    return f;
}

ComponentBasis component_basis(const GradedIdeal& I, long d) {
    ComponentBasis cb;
    cb.nvars = I.nvars();
    cb.d = d;
    cb.monomials = monomials_of_degree(cb.nvars, d);
    std::map<ExpVec, std::size_t> index;
    for (std::size_t j = 0; j < cb.monomials.size(); ++j) index[cb.monomials[j]] = j;

    std::vector<std::vector<PuiseuxRat>> rows;
    for (const auto& g : I.generators) {
        long e = g.total_degree();
        if (e > d) continue;
        for (const auto& beta : monomials_of_degree(cb.nvars, d - e)) {
            KPoly p = g.shifted(beta);
            std::vector<PuiseuxRat> row(cb.monomials.size());
            for (const auto& [exp, c] : p.terms()) row[index.at(exp)] = c;
            rows.push_back(std::move(row));
        }
    }
    cb.basis = rref(std::move(rows));
    cb.basis.ncols = cb.monomials.size();
    return cb;
}

long hilbert_function(const GradedIdeal& I, long d) {
    if (d < 0) return 0;
    return dim_degree_part(I.nvars(), d) -
           static_cast<long>(component_basis(I, d).dim());
}

MVector fit_hilbert_polynomial(const GradedIdeal& I, long d_max) {
    return fit_hilbert_sequence(
        [&I](long d) { return Int(hilbert_function(I, d)); }, I.n, d_max);
}

ComponentBasis colon_component(const GradedIdeal& I, const KPoly& f, long d) {
    if (f.is_zero() || !f.is_homogeneous())
        throw invalid_input("colon_component: f must be nonzero homogeneous");
    long e = f.total_degree();
    ComponentBasis target = component_basis(I, d + e);
    std::map<ExpVec, std::size_t> index;
    for (std::size_t j = 0; j < target.monomials.size(); ++j)
        index[target.monomials[j]] = j;

    auto mons = monomials_of_degree(I.nvars(), d);
    // residual of m_j * f modulo I_{d+e}; g = sum gamma_j m_j lands in the
    // ideal iff sum gamma_j residual_j = 0
    std::vector<std::vector<PuiseuxRat>> residuals;
    for (const auto& mexp : mons) {
        KPoly p = f.shifted(mexp);
        std::vector<PuiseuxRat> w(target.monomials.size());
        for (const auto& [exp, c] : p.terms()) w[index.at(exp)] = c;
        residuals.push_back(target.basis.reduce(std::move(w)));
    }
    std::vector<std::vector<PuiseuxRat>> equations(
        target.monomials.size(), std::vector<PuiseuxRat>(mons.size()));
    for (std::size_t j = 0; j < residuals.size(); ++j)
        for (std::size_t p = 0; p < target.monomials.size(); ++p)
            equations[p][j] = residuals[j][p];
    auto sol = kernel(equations, mons.size());

    ComponentBasis cb;
    cb.nvars = I.nvars();
    cb.d = d;
    cb.monomials = std::move(mons);
    cb.basis = rref(std::move(sol));
    cb.basis.ncols = cb.monomials.size();
    return cb;
}

std::vector<std::vector<std::size_t>> subsets_lex(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    if (k == 0) return {{}};
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        out.push_back(idx);
        std::size_t i = k;
        while (i-- > 0) {
            if (idx[i] != i + n - k) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return out;
        }
    }
}

std::vector<PuiseuxRat> wedge_coordinates(const std::vector<std::vector<PuiseuxRat>>& rows) {
    if (rows.empty()) throw invalid_input("wedge_coordinates: no rows");
    std::size_t k = rows.size(), N = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != N) throw dimension_mismatch("ragged matrix");
    if (k > N) throw invalid_input("wedge_coordinates: more rows than columns");

    std::vector<PuiseuxRat> out;
    bool any_nonzero = false;
    for (const auto& cols : subsets_lex(N, k)) {
        std::vector<std::vector<PuiseuxRat>> minor(k, std::vector<PuiseuxRat>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) minor[i][j] = rows[i][cols[j]];
        PuiseuxRat d = det(std::move(minor));
        if (!d.is_zero()) any_nonzero = true;
        out.push_back(std::move(d));
    }
    if (!any_nonzero) throw invalid_input("wedge_coordinates: dependent rows");
    return out;
}

}  // namespace troph
