#include "fpq/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace fpq {

namespace {

// x^p = x, applied to a single exponent.
std::uint8_t reduce_exp(std::uint32_t p, std::uint32_t e) {
    if (e < p) return static_cast<std::uint8_t>(e);
    return static_cast<std::uint8_t>((e - 1) % (p - 1) + 1);
}

}  // namespace

Polynomial Polynomial::constant(const PrimeField& f, std::uint32_t n, Scalar c) {
    Polynomial out(f, n);
    out.add_term(Monomial{std::vector<std::uint8_t>(n, 0)}, c % f.p());
    return out;
}

Polynomial Polynomial::variable(const PrimeField& f, std::uint32_t n, std::uint32_t i) {
    if (i >= n) throw UsageError("variable index out of range");
    Polynomial out(f, n);
    Monomial m{std::vector<std::uint8_t>(n, 0)};
    m.exps[i] = 1;
    out.add_term(std::move(m), 1);
    return out;
}

Polynomial Polynomial::from_form(const PrimeField& f, const LinearForm& form) {
    Polynomial out(f, form.n());
    for (std::uint32_t i = 0; i < form.n(); ++i) {
        Monomial m{std::vector<std::uint8_t>(form.n(), 0)};
        m.exps[i] = 1;
        out.add_term(std::move(m), form.coeffs[i]);
    }
    out.add_term(Monomial{std::vector<std::uint8_t>(form.n(), 0)}, form.constant);
    return out;
}

void Polynomial::add_term(Monomial m, Scalar c) {
    if (m.exps.size() != n_) throw UsageError("add_term: exponent arity mismatch");
    c %= p();
    if (c == 0) return;
    for (auto& e : m.exps) e = reduce_exp(p(), e);
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(std::move(m), c);
    } else {
        it->second = field_.add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

Scalar Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (p() != o.p() || n_ != o.n_) throw UsageError("polynomial add: mismatch");
    Polynomial out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    if (p() != o.p() || n_ != o.n_) throw UsageError("polynomial sub: mismatch");
    Polynomial out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, field_.neg(c));
    return out;
}

Polynomial Polynomial::scaled(Scalar c) const {
    Polynomial out(field_, n_);
    c %= p();
    if (c == 0) return out;
    for (const auto& [m, k] : terms_) out.add_term(m, field_.mul(k, c));
    return out;
}

Scalar Polynomial::evaluate(const Vec& x) const {
    if (x.size() != n_) throw UsageError("evaluate: dimension mismatch");
    std::uint32_t acc = 0;
    for (const auto& [m, c] : terms_) {
        std::uint32_t v = c;
        for (std::uint32_t i = 0; i < n_; ++i) {
            std::uint8_t e = m.exps[i];
            if (e == 0) continue;
            std::uint32_t b = x[i];
            if (b == 0) {
                v = 0;
                break;
            }
            std::uint32_t pw = b;
            for (std::uint8_t k = 1; k < e; ++k) pw = field_.mul(pw, b);
            v = field_.mul(v, pw);
        }
        acc = field_.add(acc, v);
    }
    return acc;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        const auto& [m, c] = *it;
        bool wrote = false;
        if (c != 1 || m.degree() == 0) {
            os << c;
            wrote = true;
        }
        for (std::uint32_t i = 0; i < n_; ++i) {
            if (m.exps[i] == 0) continue;
            if (wrote) os << "*";
            os << "x" << (i + 1);
            if (m.exps[i] > 1) os << "^" << static_cast<int>(m.exps[i]);
            wrote = true;
        }
    }
    return os.str();
}

Polynomial multiply(const Polynomial& f, const Polynomial& g, std::uint32_t degree_cap) {
    if (f.p() != g.p() || f.nvars() != g.nvars()) throw UsageError("multiply: mismatch");
    Polynomial out(f.field(), f.nvars());
    if (f.is_zero() || g.is_zero()) return out;
    const std::uint32_t dsum = static_cast<std::uint32_t>(f.degree() + g.degree());
    if (dsum > degree_cap)
        throw UsageError("multiply: degree budget exceeded (" + std::to_string(dsum) + " > " +
                         std::to_string(degree_cap) + ")");
    if (dsum >= f.p())
        throw UsageError("multiply: product degree " + std::to_string(dsum) +
                         " not below p = " + std::to_string(f.p()));
    const PrimeField& fld = f.field();
    for (const auto& [ma, ca] : f.terms()) {
        for (const auto& [mb, cb] : g.terms()) {
            Monomial m{std::vector<std::uint8_t>(f.nvars())};
            for (std::uint32_t i = 0; i < f.nvars(); ++i)
                m.exps[i] = static_cast<std::uint8_t>(ma.exps[i] + mb.exps[i]);
            out.add_term(std::move(m), fld.mul(ca, cb));
        }
    }
    return out;
}

Polynomial shift(const Polynomial& f, const Vec& h) {
    if (h.size() != f.nvars()) throw UsageError("shift: dimension mismatch");
    const PrimeField& fld = f.field();
    // Binomial expansion per variable; exponents stay <= p-1, so no x^p = x
    // reduction can occur here.
    const std::uint32_t p = f.p();
    std::vector<std::vector<Scalar>> binom(p, std::vector<Scalar>(p, 0));
    for (std::uint32_t a = 0; a < p; ++a) {
        binom[a][0] = 1;
        for (std::uint32_t b = 1; b <= a; ++b)
            binom[a][b] = fld.add(b <= a - 1 ? binom[a - 1][b] : 0, binom[a - 1][b - 1]);
    }
    Polynomial out(fld, f.nvars());
    std::vector<std::pair<Monomial, Scalar>> acc, next;
    for (const auto& [m, c] : f.terms()) {
        acc.assign(1, {Monomial{std::vector<std::uint8_t>(f.nvars(), 0)}, c});
        for (std::uint32_t i = 0; i < f.nvars(); ++i) {
            std::uint8_t e = m.exps[i];
            if (e == 0) continue;
            if (h[i] == 0) {
                for (auto& [mm, cc] : acc) mm.exps[i] = e;
                continue;
            }
            next.clear();
            for (const auto& [mm, cc] : acc) {
                Scalar hp = 1;  // h^(e-k)
                for (std::uint32_t k = e + 1; k-- > 0;) {
                    // iterate k = e..0, maintaining hp = h^(e-k)
                    Monomial m2 = mm;
                    m2.exps[i] = static_cast<std::uint8_t>(k);
                    next.emplace_back(std::move(m2), fld.mul(cc, fld.mul(binom[e][k], hp)));
                    hp = fld.mul(hp, h[i]);
                }
            }
            acc.swap(next);
        }
        for (auto& [mm, cc] : acc) out.add_term(std::move(mm), cc);
    }
    return out;
}

Polynomial discrete_derivative(const Polynomial& f, const Vec& h) {
    return shift(f, h) - f;
}

Polynomial iterated_derivative(const Polynomial& f, const std::vector<Vec>& hs) {
    if (hs.size() > 5) throw UsageError("iterated_derivative: more than 5 directions");
    Polynomial g = f;
    for (const auto& h : hs) g = discrete_derivative(g, h);
    return g;
}

Polynomial homogeneous_part(const Polynomial& f, std::uint32_t d) {
    Polynomial out(f.field(), f.nvars());
    for (const auto& [m, c] : f.terms())
        if (m.degree() == d) out.add_term(m, c);
    return out;
}

Polynomial compose_linear(const Polynomial& f, const std::vector<LinearForm>& subs,
                          std::uint32_t m) {
    if (subs.size() != f.nvars()) throw UsageError("compose_linear: substitution arity");
    ensure_degree_semantics(f);
    const PrimeField& fld = f.field();
    std::vector<Polynomial> sub_polys;
    sub_polys.reserve(subs.size());
    for (const auto& s : subs) {
        if (s.n() != m) throw UsageError("compose_linear: form arity");
        sub_polys.push_back(Polynomial::from_form(fld, s));
    }
    Polynomial out(fld, m);
    for (const auto& [mono, c] : f.terms()) {
        Polynomial term = Polynomial::constant(fld, m, c);
        for (std::uint32_t i = 0; i < f.nvars(); ++i)
            for (std::uint8_t k = 0; k < mono.exps[i]; ++k)
                term = multiply(term, sub_polys[i], fld.p() - 1);
        out = out + term;
    }
    return out;
}

Polynomial restrict_to(const Polynomial& f, const AffineSubspace& s) {
    if (s.ambient_dim() != f.nvars()) throw UsageError("restrict: dimension mismatch");
    const std::uint32_t k = s.dim();
    std::vector<LinearForm> subs(f.nvars());
    for (std::uint32_t i = 0; i < f.nvars(); ++i) {
        subs[i].coeffs.assign(k, 0);
        subs[i].constant = s.offset[i];
        for (std::uint32_t j = 0; j < k; ++j) subs[i].coeffs[j] = s.direction.basis()[j][i];
    }
    return compose_linear(f, subs, k);
}

Polynomial restrict_to(const Polynomial& f, const Subspace& s) {
    return restrict_to(f, AffineSubspace(Vec(s.ambient_dim(), 0), s));
}

void ensure_degree_semantics(const Polynomial& f) {
    if (f.degree() >= static_cast<int>(f.p()))
        throw UsageError("operation requires deg(f) < p; got degree " +
                         std::to_string(f.degree()) + " over p = " + std::to_string(f.p()));
}

namespace {

// Substitute the first variable by a constant; result has one variable less.
Polynomial bind_first_var(const Polynomial& f, Scalar v) {
    const PrimeField& fld = f.field();
    Polynomial out(fld, f.nvars() - 1);
    for (const auto& [m, c] : f.terms()) {
        Scalar cc = c;
        if (m.exps[0] > 0) {
            if (v == 0) continue;
            Scalar pw = v;
            for (std::uint8_t k = 1; k < m.exps[0]; ++k) pw = fld.mul(pw, v);
            cc = fld.mul(cc, pw);
        }
        Monomial m2{std::vector<std::uint8_t>(m.exps.begin() + 1, m.exps.end())};
        out.add_term(std::move(m2), cc);
    }
    return out;
}

void fill_table(const Polynomial& f, std::vector<Scalar>& out) {
    if (f.nvars() == 0) {
        out.push_back(f.is_zero() ? 0 : f.terms().begin()->second);
        return;
    }
    for (Scalar v = 0; v < f.p(); ++v) fill_table(bind_first_var(f, v), out);
}

}  // namespace

ValueTable to_table(const Polynomial& f, std::uint64_t budget) {
    std::uint64_t size = checked_pow(f.p(), f.nvars(), budget);
    ValueTable t;
    t.p = f.p();
    t.n = f.nvars();
    t.values.reserve(size);
    fill_table(f, t.values);
    return t;
}

Polynomial interpolate_from_table(const ValueTable& t, std::uint64_t budget) {
    PrimeField fld(t.p);
    const std::uint64_t size = checked_pow(t.p, t.n, budget);
    if (t.values.size() != size) throw UsageError("table size is not p^n");

    // Inverse of the p x p evaluation matrix V[v][e] = v^e.
    Mat vand(t.p, Vec(2 * t.p, 0));
    for (std::uint32_t v = 0; v < t.p; ++v) {
        for (std::uint32_t e = 0; e < t.p; ++e) vand[v][e] = fld.pow(v, e);
        vand[v][t.p + v] = 1;
    }
    rref(fld, vand);
    Mat vinv(t.p, Vec(t.p));
    for (std::uint32_t i = 0; i < t.p; ++i)
        for (std::uint32_t j = 0; j < t.p; ++j) vinv[i][j] = vand[i][t.p + j];

    // Transform along each axis; axis i has stride p^(n-1-i).
    std::vector<Scalar> data(t.values.begin(), t.values.end());
    std::uint64_t stride = size / (t.n ? t.p : 1);
    for (std::uint32_t axis = 0; axis < t.n; ++axis) {
        std::uint64_t block = stride * t.p;
        for (std::uint64_t base = 0; base < size; base += block) {
            for (std::uint64_t off = 0; off < stride; ++off) {
                Vec slice(t.p);
                for (std::uint32_t v = 0; v < t.p; ++v)
                    slice[v] = data[base + off + v * stride];
                for (std::uint32_t e = 0; e < t.p; ++e) {
                    std::uint64_t acc = 0;
                    for (std::uint32_t v = 0; v < t.p; ++v)
                        acc += static_cast<std::uint64_t>(vinv[e][v]) * slice[v];
                    data[base + off + e * stride] = static_cast<Scalar>(acc % t.p);
                }
            }
        }
        stride /= t.p;
    }

    Polynomial out(fld, t.n);
    for (std::uint64_t idx = 0; idx < size; ++idx) {
        if (data[idx] == 0) continue;
        Vec e = point_unrank(fld, t.n, idx);
        Monomial m{std::vector<std::uint8_t>(t.n)};
        for (std::uint32_t i = 0; i < t.n; ++i) m.exps[i] = static_cast<std::uint8_t>(e[i]);
        out.add_term(std::move(m), data[idx]);
    }
    return out;
}

Polynomial parse_polynomial(const PrimeField& f, std::uint32_t n, const std::string& text) {
    Polynomial out(f, n);
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i == text.size()) throw UsageError("empty polynomial text");
    bool negate = false;
    bool expect_term = true;
    while (i < text.size()) {
        skip_ws();
        if (i == text.size()) break;
        char ch = text[i];
        if (ch == '+' || ch == '-') {
            if (expect_term && ch == '-') negate = !negate;
            else if (expect_term) { /* unary plus */ }
            else {
                negate = (ch == '-');
                expect_term = true;
            }
            ++i;
            continue;
        }
        if (!expect_term) throw UsageError("expected '+' or '-' in polynomial text");
        // term: [coef] { '*'? x<i> ['^' e] }*
        std::uint64_t coef = 1;
        bool saw_any = false;
        Monomial m{std::vector<std::uint8_t>(n, 0)};
        std::vector<std::uint32_t> raw_exps(n, 0);
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            coef = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                coef = coef * 10 + (text[i++] - '0');
            saw_any = true;
        }
        while (true) {
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip_ws();
            }
            if (i >= text.size() || (text[i] != 'x' && text[i] != 'X')) break;
            ++i;
            if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                throw UsageError("expected variable index after 'x'");
            std::uint32_t var = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                var = var * 10 + (text[i++] - '0');
            if (var < 1 || var > n)
                throw UsageError("variable x" + std::to_string(var) + " out of range (n = " +
                                 std::to_string(n) + ")");
            std::uint32_t e = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                    throw UsageError("expected exponent after '^'");
                e = 0;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                    e = e * 10 + (text[i++] - '0');
            }
            raw_exps[var - 1] += e;
            saw_any = true;
        }
        if (!saw_any) throw UsageError("malformed term in polynomial text");
        for (std::uint32_t v = 0; v < n; ++v) {
            std::uint32_t e = raw_exps[v];
            while (e >= f.p()) e = (e - 1) % (f.p() - 1) + 1;
            m.exps[v] = static_cast<std::uint8_t>(e);
        }
        Scalar c = static_cast<Scalar>(coef % f.p());
        if (negate) c = f.neg(c);
        out.add_term(std::move(m), c);
        negate = false;
        expect_term = false;
    }
    if (expect_term) throw UsageError("dangling sign in polynomial text");
    return out;
}

}  // namespace fpq
