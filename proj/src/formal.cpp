#include "zmds/formal.hpp"

#include <algorithm>
#include <sstream>

namespace zmds {
namespace {

uint64_t mono_total(const Mono& m) {
    uint64_t d = 0;
    for (uint32_t e : m) d += e;
    return d;
}

uint32_t pow_mod(uint32_t base, uint32_t exp, uint32_t p) {
    uint64_t acc = 1, b = base % p;
    while (exp) {
        if (exp & 1) acc = acc * b % p;
        b = b * b % p;
        exp >>= 1;
    }
    return uint32_t(acc);
}

}  // namespace

FormalPoly FormalPoly::constant(uint32_t nvars, const mpz_class& c) {
    FormalPoly out(nvars);
    if (c != 0) out.terms_.emplace(Mono(nvars + 1, 0), c);
    return out;
}

FormalPoly FormalPoly::var_a(uint32_t nvars, uint32_t j) {
    if (j >= nvars) fail(errc::bad_input, "point-variable index out of range");
    FormalPoly out(nvars);
    Mono m(nvars + 1, 0);
    m[j] = 1;
    out.terms_.emplace(std::move(m), 1);
    return out;
}

FormalPoly FormalPoly::var_x(uint32_t nvars) {
    FormalPoly out(nvars);
    Mono m(nvars + 1, 0);
    m[nvars] = 1;
    out.terms_.emplace(std::move(m), 1);
    return out;
}

uint32_t FormalPoly::deg_x() const {
    uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[nvars_]);
    return d;
}

uint64_t FormalPoly::total_degree() const {
    uint64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, mono_total(m));
    return d;
}

void FormalPoly::add_term(const Mono& m, const mpz_class& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

FormalPoly FormalPoly::operator-() const {
    FormalPoly out(nvars_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

FormalPoly FormalPoly::operator+(const FormalPoly& o) const {
    check_same(o);
    FormalPoly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

FormalPoly FormalPoly::operator-(const FormalPoly& o) const {
    check_same(o);
    FormalPoly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

FormalPoly FormalPoly::operator*(const FormalPoly& o) const {
    check_same(o);
    FormalPoly out(nvars_);
    Mono prod(nvars_ + 1);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            for (uint32_t i = 0; i <= nvars_; ++i) prod[i] = ma[i] + mb[i];
            out.add_term(prod, ca * cb);
        }
    return out;
}

FormalPoly FormalPoly::coeff_x(uint32_t e) const {
    FormalPoly out(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m[nvars_] != e) continue;
        Mono flat = m;
        flat[nvars_] = 0;
        out.terms_.emplace(std::move(flat), c);
    }
    return out;
}

FormalPoly FormalPoly::merge_last_vars() const {
    if (nvars_ < 2) fail(errc::ambient_too_small, "need two point variables to merge");
    FormalPoly out(nvars_ - 1);
    Mono merged(nvars_);
    for (const auto& [m, c] : terms_) {
        for (uint32_t i = 0; i + 2 < nvars_; ++i) merged[i] = m[i];
        merged[nvars_ - 2] = m[nvars_ - 2] + m[nvars_ - 1];
        merged[nvars_ - 1] = m[nvars_];  // x slot moves down by one
        out.add_term(merged, c);
    }
    return out;
}

std::vector<uint32_t> FormalPoly::eval_coeffs_mod(const std::vector<uint32_t>& avals, uint32_t p,
                                                  uint32_t slots) const {
    if (avals.size() != nvars_) fail(errc::shape_mismatch, "one value per point variable");
    if (p < 2) fail(errc::bad_input, "modulus must be at least 2");
    std::vector<uint32_t> out(slots, 0);
    for (const auto& [m, c] : terms_) {
        if (m[nvars_] >= slots) fail(errc::shape_mismatch, "x-degree exceeds the slot count");
        uint64_t t = mpz_fdiv_ui(c.get_mpz_t(), p);  // floor remainder: already in [0, p)
        for (uint32_t j = 0; j < nvars_; ++j) {
            if (!t) break;
            t = t * pow_mod(avals[j] % p, m[j], p) % p;
        }
        out[m[nvars_]] = uint32_t((out[m[nvars_]] + t) % p);
    }
    return out;
}

std::string FormalPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // leading term first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = a == 1;
        bool bare = mono_total(m) == 0;
        if (!unit || bare) os << a.get_str();
        bool lead = unit && !bare;
        for (uint32_t j = 0; j <= nvars_; ++j) {
            if (!m[j]) continue;
            if (!lead) os << "*";
            lead = false;
            if (j < nvars_)
                os << "a" << (j + 1);
            else
                os << "x";
            if (m[j] > 1) os << "^" << m[j];
        }
    }
    return os.str();
}

std::optional<FormalPoly> exact_div(const FormalPoly& f, const FormalPoly& g) {
    if (f.nvars() != g.nvars())
        fail(errc::shape_mismatch, "polynomials live over different variable sets");
    if (g.is_zero()) fail(errc::division_by_zero, "division by the zero polynomial");
    uint32_t nv = f.nvars();
    FormalPoly rem = f, quot(nv);
    const auto& glead = *g.terms().rbegin();
    Mono qm(nv + 1);
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms().rbegin();
        mpz_class qc, r;
        mpz_tdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), rlead.second.get_mpz_t(),
                    glead.second.get_mpz_t());
        if (r != 0) return std::nullopt;
        for (uint32_t i = 0; i <= nv; ++i) {
            if (rlead.first[i] < glead.first[i]) return std::nullopt;
            qm[i] = rlead.first[i] - glead.first[i];
        }
        FormalPoly t(nv);
        t.add_term(qm, qc);
        quot = quot + t;
        rem = rem - t * g;  // kills the leading term of rem
    }
    return quot;
}

bool formal_less(const FormalPoly& a, const FormalPoly& b) {
    if (a.nvars() != b.nvars()) return a.nvars() < b.nvars();
    MonoLess less;
    auto ia = a.terms().begin(), ib = b.terms().begin();
    for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
        if (less(ia->first, ib->first)) return true;
        if (less(ib->first, ia->first)) return false;
        int c = cmp(ia->second, ib->second);
        if (c != 0) return c < 0;
    }
    return ia == a.terms().end() && ib != b.terms().end();
}

}  // namespace zmds
