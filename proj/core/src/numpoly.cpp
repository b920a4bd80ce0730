#include "troph/numpoly.hpp"

#include <algorithm>

namespace troph {

void NumPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

NumPoly::NumPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Rat NumPoly::eval(const Rat& x) const {
    Rat v(0);
    for (std::size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
    return v;
}

NumPoly NumPoly::operator+(const NumPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return NumPoly(std::move(r));
}

NumPoly NumPoly::operator-(const NumPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return NumPoly(std::move(r));
}

NumPoly NumPoly::operator*(const NumPoly& o) const {
    if (is_zero() || o.is_zero()) return NumPoly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return NumPoly(std::move(r));
}

bool NumPoly::is_numerical(long x0) const {
    long pts = degree() + 2;
    for (long x = x0; x < x0 + pts; ++x)
        if (eval(x).get_den() != 1) return false;
    return true;
}

Int binom(const Int& a, unsigned k) {
    Int num(1);
    for (unsigned i = 0; i < k; ++i) num *= a - static_cast<long>(i);
    Int fact(1);
    for (unsigned i = 2; i <= k; ++i) fact *= i;
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), fact.get_mpz_t());
    // product of k consecutive integers is divisible by k!
    if (r != 0) throw internal_inconsistency("binom: non-exact division");
    return q;
}

Int binom(long a, unsigned k) { return binom(Int(a), k); }

NumPoly binom_poly(long shift, unsigned k) {
    if (k == 0) return NumPoly({Rat(1)});
    NumPoly p({Rat(1)});
    for (unsigned j = 0; j < k; ++j)
        p = p * NumPoly({Rat(shift - static_cast<long>(j)), Rat(1)});
    Int fact(1);
    for (unsigned i = 2; i <= k; ++i) fact *= i;
    std::vector<Rat> c = p.coeffs();
    for (auto& x : c) x /= Rat(fact);
    return NumPoly(std::move(c));
}

Int g_eval(const MVector& m, long x) {
    Int total(0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        unsigned k = static_cast<unsigned>(i + 1);
        total += binom(x + static_cast<long>(i), k) -
                 binom(x + static_cast<long>(i) - m[i], k);
    }
    return total;
}

NumPoly g_to_polynomial(const MVector& m) {
    if (m.empty()) throw invalid_input("g_to_polynomial: empty m-vector");
    if (m.back() == 0) throw invalid_input("g_to_polynomial: m_s must be nonzero");
    NumPoly total;
    for (std::size_t i = 0; i < m.size(); ++i) {
        unsigned k = static_cast<unsigned>(i + 1);
        total = total + (binom_poly(static_cast<long>(i), k) -
                         binom_poly(static_cast<long>(i) - m[i], k));
    }
    return total;
}

MVector decompose(const NumPoly& p) {
    if (p.is_zero()) return {};
    if (!p.is_numerical())
        throw invalid_input("decompose: polynomial is not numerical");
    long s = p.degree();
    MVector m(static_cast<std::size_t>(s) + 1, 0);
    NumPoly rest = p;
    Int fact(1);
    for (long i = 2; i <= s; ++i) fact *= i;
    for (long i = s; i >= 0; --i) {
        if (rest.degree() == i) {
            Rat lead = rest.coeff(static_cast<std::size_t>(i)) * Rat(fact);
            if (lead.get_den() != 1)
                throw invalid_input("decompose: leading coefficient is not of the form m/s!");
            if (!lead.get_num().fits_slong_p())
                throw invalid_input("decompose: m entry out of range");
            long mi = lead.get_num().get_si();
            m[static_cast<std::size_t>(i)] = mi;
            unsigned k = static_cast<unsigned>(i + 1);
            rest = rest - (binom_poly(i, k) - binom_poly(i - mi, k));
        }
        // rest.degree() < i means m_i = 0; the layer contributes nothing
        if (i > 0) fact /= i;
    }
    if (!rest.is_zero()) throw internal_inconsistency("decompose: nonzero remainder");
    return m;
}

bool is_admissible(const MVector& m, int n) {
    if (m.empty()) return false;
    if (static_cast<long>(m.size()) - 1 >= n) return false;  // s < n
    for (std::size_t i = 0; i + 1 < m.size(); ++i)
        if (m[i] < m[i + 1]) return false;
    return m.back() > 0;
}

DimDeg hilbert_dim_deg(const MVector& m) {
    if (m.empty() || m.back() == 0)
        throw invalid_input("hilbert_dim_deg: m_s must be nonzero");
    return {static_cast<long>(m.size()) - 1, m.back()};
}

namespace {

NumPoly lagrange(const std::vector<long>& xs, const std::vector<Rat>& ys) {
    NumPoly p;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        NumPoly li({Rat(1)});
        Rat denom(1);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (i == j) continue;
            li = li * NumPoly({Rat(-xs[j]), Rat(1)});
            denom *= Rat(xs[i] - xs[j]);
        }
        std::vector<Rat> c = li.coeffs();
        for (auto& x : c) x *= ys[i] / denom;
        p = p + NumPoly(std::move(c));
    }
    return p;
}

}  // namespace

MVector fit_hilbert_sequence(const std::function<Int(long)>& h, int n, long d_max) {
    const long window = n + 2;
    std::vector<Rat> values;
    auto value = [&](long d) -> Rat {
        while (static_cast<long>(values.size()) <= d) {
            long next = static_cast<long>(values.size());
            values.push_back(Rat(h(next)));
        }
        return values[static_cast<std::size_t>(d)];
    };
    // two agreeing windows can still be a pre-stabilization accident
    // (h = 1,2,3,4,4,... fits x+1 twice); require three in a row
    NumPoly prev;
    int agreement = 0;
    for (long k = 0; k + window - 1 <= d_max; ++k) {
        std::vector<long> xs(static_cast<std::size_t>(window));
        std::vector<Rat> ys(static_cast<std::size_t>(window));
        for (long j = 0; j < window; ++j) {
            xs[static_cast<std::size_t>(j)] = k + j;
            ys[static_cast<std::size_t>(j)] = value(k + j);
        }
        NumPoly p = lagrange(xs, ys);
        agreement = (k > 0 && p == prev) ? agreement + 1 : 0;
        if (agreement >= 2 && p.degree() <= n) return decompose(p);
        prev = p;
    }
    throw no_stabilization("Hilbert function did not stabilize; increase d_max");
}

}  // namespace troph
