#include "troph/valfield.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>

namespace troph {

Rat parse_rat(std::string_view s) {
    std::string buf(s);
    buf.erase(std::remove_if(buf.begin(), buf.end(),
                             [](unsigned char c) { return std::isspace(c); }),
              buf.end());
    if (buf.empty()) throw parse_error("empty rational literal");
    mpq_class q;
    if (q.set_str(buf, 10) != 0) throw parse_error("bad rational literal: " + buf);
    q.canonicalize();
    if (q.get_den() == 0) throw parse_error("zero denominator: " + buf);
    return q;
}

std::string rat_str(const Rat& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

// ---------------------------------------------------------------- QPoly

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly::QPoly(const Rat& c) {
    if (c != 0) c_.push_back(c);
}

QPoly QPoly::monomial(const Rat& c, std::size_t e) {
    QPoly p;
    if (c != 0) {
        p.c_.assign(e + 1, Rat(0));
        p.c_[e] = c;
    }
    return p;
}

std::size_t QPoly::ord() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return i;
    return 0;
}

Rat QPoly::coeff(std::size_t e) const {
    return e < c_.size() ? c_[e] : Rat(0);
}

const Rat& QPoly::trailing() const { return c_[ord()]; }

const Rat& QPoly::leading() const { return c_.back(); }

QPoly QPoly::operator+(const QPoly& o) const {
    QPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
    r.trim();
    return r;
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    QPoly r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            if (o.c_[j] != 0) r.c_[i + j] += c_[i] * o.c_[j];
    }
    r.trim();
    return r;
}

QPoly QPoly::scaled(const Rat& c) const {
    if (c == 0) return {};
    QPoly r = *this;
    for (auto& x : r.c_) x *= c;
    return r;
}

QPoly QPoly::shifted_down(std::size_t k) const {
    if (is_zero()) return {};
    QPoly r;
    r.c_.assign(c_.begin() + static_cast<long>(k), c_.end());
    return r;
}

QPoly QPoly::stretched(unsigned long k) const {
    if (k == 1 || is_zero()) return *this;
    QPoly r;
    r.c_.assign((c_.size() - 1) * k + 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * k] = c_[i];
    return r;
}

QPoly QPoly::compressed(unsigned long k) const {
    if (k == 1 || is_zero()) return *this;
    QPoly r;
    r.c_.assign((c_.size() - 1) / k + 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) r.c_[i / k] = c_[i];
    return r;
}

unsigned long QPoly::exponent_gcd(unsigned long k) const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) k = std::gcd(k, static_cast<unsigned long>(i));
    return k;
}

QPoly QPoly::divrem(const QPoly& a, const QPoly& b, QPoly* rem) {
    if (b.is_zero()) throw division_by_zero();
    QPoly q, r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        Rat c = r.leading() / b.leading();
        std::size_t e = static_cast<std::size_t>(r.degree() - b.degree());
        QPoly m = QPoly::monomial(c, e);
        q = q + m;
        r = r - m * b;
    }
    if (rem) *rem = r;
    return q;
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly r;
        divrem(a, b, &r);
        a = b;
        b = r;
    }
    if (!a.is_zero()) a = a.scaled(1 / a.leading());  // monic
    return a;
}

// ------------------------------------------------------------ PuiseuxRat

PuiseuxRat::PuiseuxRat() : num_(), den_(Rat(1)), scale_(1) {}

PuiseuxRat::PuiseuxRat(long n) : num_(Rat(n)), den_(Rat(1)), scale_(1) {}

PuiseuxRat::PuiseuxRat(const Rat& c) : num_(c), den_(Rat(1)), scale_(1) {}

PuiseuxRat::PuiseuxRat(QPoly num, QPoly den, unsigned long scale)
    : num_(std::move(num)), den_(std::move(den)), scale_(scale) {
    if (den_.is_zero()) throw division_by_zero();
    if (scale_ == 0) throw invalid_input("scale must be positive");
    normalize();
}

PuiseuxRat::PuiseuxRat(QPoly num, QPoly den, unsigned long scale, raw_tag)
    : num_(std::move(num)), den_(std::move(den)), scale_(scale) {}

PuiseuxRat PuiseuxRat::section(const Rat& w_in) {
    Rat w = w_in;
    w.canonicalize();
    Int p = w.get_num(), q = w.get_den();  // q > 0, gcd(p,q) = 1
    if (!q.fits_ulong_p()) throw invalid_input("section: exponent denominator too large");
    unsigned long scale = q.get_ui();
    if (!p.fits_slong_p()) throw invalid_input("section: exponent too large");
    long e = p.get_si();
    QPoly num = QPoly::monomial(1, e >= 0 ? static_cast<std::size_t>(e) : 0);
    QPoly den = QPoly::monomial(1, e >= 0 ? 0 : static_cast<std::size_t>(-e));
    return PuiseuxRat(std::move(num), std::move(den), scale);
}

PuiseuxRat PuiseuxRat::t() { return section(Rat(1)); }

void PuiseuxRat::normalize() {
    if (num_.is_zero()) {
        den_ = QPoly(Rat(1));
        scale_ = 1;
        return;
    }
    // cancel common powers of u, then the full polynomial gcd
    std::size_t k = std::min(num_.ord(), den_.ord());
    if (k > 0) {
        num_ = num_.shifted_down(k);
        den_ = den_.shifted_down(k);
    }
    QPoly g = QPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = QPoly::divrem(num_, g, nullptr);
        den_ = QPoly::divrem(den_, g, nullptr);
    }
    // trailing coefficient of den normalized to 1
    Rat tc = den_.trailing();
    if (tc != 1) {
        Rat inv = 1 / tc;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
    // minimal scale
    unsigned long g2 = den_.exponent_gcd(num_.exponent_gcd(scale_));
    g2 = std::gcd(g2, scale_);
    if (g2 > 1) {
        num_ = num_.compressed(g2);
        den_ = den_.compressed(g2);
        scale_ /= g2;
    }
}

namespace {
unsigned long lcm_scale(unsigned long a, unsigned long b) {
    return a / std::gcd(a, b) * b;
}
}  // namespace

PuiseuxRat PuiseuxRat::operator+(const PuiseuxRat& o) const {
    unsigned long L = lcm_scale(scale_, o.scale_);
    QPoly an = num_.stretched(L / scale_), ad = den_.stretched(L / scale_);
    QPoly bn = o.num_.stretched(L / o.scale_), bd = o.den_.stretched(L / o.scale_);
    return PuiseuxRat(an * bd + bn * ad, ad * bd, L);
}

PuiseuxRat PuiseuxRat::operator-(const PuiseuxRat& o) const { return *this + (-o); }

PuiseuxRat PuiseuxRat::operator*(const PuiseuxRat& o) const {
    unsigned long L = lcm_scale(scale_, o.scale_);
    QPoly an = num_.stretched(L / scale_), ad = den_.stretched(L / scale_);
    QPoly bn = o.num_.stretched(L / o.scale_), bd = o.den_.stretched(L / o.scale_);
    return PuiseuxRat(an * bn, ad * bd, L);
}

PuiseuxRat PuiseuxRat::operator/(const PuiseuxRat& o) const { return *this * o.inv(); }

PuiseuxRat PuiseuxRat::operator-() const {
    PuiseuxRat r = *this;
    r.num_ = -r.num_;
    return r;
}

PuiseuxRat PuiseuxRat::inv() const {
    if (is_zero()) throw division_by_zero();
    return PuiseuxRat(den_, num_, scale_);
}

PuiseuxRat PuiseuxRat::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    PuiseuxRat r(1), base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

bool PuiseuxRat::operator==(const PuiseuxRat& o) const {
    // cross-multiplied comparison; valid for non-minimal representations too
    unsigned long L = lcm_scale(scale_, o.scale_);
    QPoly an = num_.stretched(L / scale_), ad = den_.stretched(L / scale_);
    QPoly bn = o.num_.stretched(L / o.scale_), bd = o.den_.stretched(L / o.scale_);
    return an * bd == bn * ad;
}

Rat PuiseuxRat::valuation() const {
    if (is_zero()) throw undefined_valuation();
    Rat v(static_cast<long>(num_.ord()) - static_cast<long>(den_.ord()),
          static_cast<long>(scale_));
    v.canonicalize();
    return v;
}

Rat PuiseuxRat::tropicalize() const { return -valuation(); }

Rat PuiseuxRat::residue() const {
    if (is_zero()) return 0;
    if (valuation() != 0)
        throw not_a_unit("residue: element has valuation " + rat_str(valuation()));
    return num_.trailing() / den_.trailing();
}

Rat PuiseuxRat::residue_of_unit_part() const {
    if (is_zero()) return 0;
    return num_.trailing() / den_.trailing();
}

PuiseuxRat PuiseuxRat::inflate_scale(unsigned long k) const {
    if (k == 0) throw invalid_input("inflate_scale: factor must be positive");
    return PuiseuxRat(num_.stretched(k), den_.stretched(k), scale_ * k, raw_tag{});
}

std::size_t PuiseuxRat::repr_size() const {
    std::size_t s = 1;
    for (const auto& piece : {num_, den_})
        for (const auto& c : piece.coeffs())
            if (c != 0)
                s += mpz_sizeinbase(c.get_num().get_mpz_t(), 2) +
                     mpz_sizeinbase(c.get_den().get_mpz_t(), 2);
    return s;
}

// ---------------------------------------------------------------- render

namespace {

void append_exponent(std::ostream& os, long e, unsigned long scale) {
    Rat w(e, static_cast<long>(scale));
    w.canonicalize();
    if (w == 1) {
        os << "t";
    } else if (w.get_den() == 1) {
        os << "t^" << w.get_num();
    } else {
        os << "t^(" << w << ")";
    }
}

void render_qpoly(std::ostream& os, const QPoly& p, unsigned long scale) {
    bool first = true;
    const auto& c = p.coeffs();
    for (std::size_t e = 0; e < c.size(); ++e) {
        if (c[e] == 0) continue;
        Rat a = c[e];
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (e == 0) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            append_exponent(os, static_cast<long>(e), scale);
        }
    }
    if (first) os << "0";
}

}  // namespace

std::string PuiseuxRat::str() const {
    std::ostringstream os;
    if (den_ == QPoly(Rat(1))) {
        render_qpoly(os, num_, scale_);
    } else {
        os << "(";
        render_qpoly(os, num_, scale_);
        os << ")/(";
        render_qpoly(os, den_, scale_);
        os << ")";
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const PuiseuxRat& x) {
    return os << x.str();
}

// ----------------------------------------------------------------- parse

namespace {

struct Parser {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw parse_error(msg + " at position " + std::to_string(pos));
    }

    Int integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        std::size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits) fail("expected integer");
        return Int(std::string(s.substr(start, pos - start)), 10);
    }

    Rat exponent() {
        // integer, or parenthesized p/q
        if (eat('(')) {
            Int p = integer();
            Rat w(p);
            if (eat('/')) {
                Int q = integer();
                if (q == 0) fail("zero denominator in exponent");
                w = Rat(p, q);
                w.canonicalize();
            }
            if (!eat(')')) fail("expected ')' in exponent");
            return w;
        }
        return Rat(integer());
    }

    PuiseuxRat atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            PuiseuxRat v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (c == 't') {
            ++pos;
            return PuiseuxRat::t();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return PuiseuxRat(Rat(integer()));
        }
        fail("unexpected character");
    }

    PuiseuxRat power() {
        PuiseuxRat base = atom();
        if (eat('^')) {
            Rat w = exponent();
            if (w.get_den() == 1) {
                if (!w.get_num().fits_slong_p()) fail("exponent too large");
                return base.pow(w.get_num().get_si());
            }
            // fractional exponents only for pure powers of t
            if (base.is_zero()) fail("0 raised to fractional exponent");
            PuiseuxRat mono = PuiseuxRat::section(base.valuation());
            if (base != mono) fail("fractional exponent on a non-monomial");
            Rat e = base.valuation() * w;
            return PuiseuxRat::section(e);
        }
        return base;
    }

    PuiseuxRat unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    PuiseuxRat term() {
        PuiseuxRat v = unary();
        for (;;) {
            if (eat('*')) v = v * unary();
            else if (eat('/')) v = v / unary();
            else return v;
        }
    }

    PuiseuxRat expr() {
        PuiseuxRat v = term();
        for (;;) {
            if (eat('+')) v = v + term();
            else if (eat('-')) v = v - term();
            else return v;
        }
    }
};

}  // namespace

PuiseuxRat PuiseuxRat::parse(std::string_view text) {
    Parser p{text};
    PuiseuxRat v = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return v;
}

}  // namespace troph
