#include "zmds/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace zmds {

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; uint64_t(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool prime_power_split(uint32_t q, uint32_t& p, uint32_t& m) {
    if (q < 2) return false;
    uint32_t f = q;
    uint32_t d = 2;
    while (uint64_t(d) * d <= f && f % d != 0) ++d;
    uint32_t base = (uint64_t(d) * d <= f) ? d : f;
    uint32_t rem = q, deg = 0;
    while (rem % base == 0) {
        rem /= base;
        ++deg;
    }
    if (rem != 1) return false;
    p = base;
    m = deg;
    return true;
}

namespace {

// --- polynomial helpers over GF(p), coefficients ascending, used only at
// --- field construction time

std::vector<uint32_t> decode_digits(uint32_t code, uint32_t p, uint32_t len) {
    std::vector<uint32_t> d(len, 0);
    for (uint32_t i = 0; i < len && code; ++i) {
        d[i] = code % p;
        code /= p;
    }
    return d;
}

// remainder of a / b, b monic with deg(b) >= 1
std::vector<uint32_t> poly_rem(std::vector<uint32_t> a, const std::vector<uint32_t>& b,
                               uint32_t p) {
    size_t db = b.size() - 1;
    while (a.size() > db) {
        uint32_t c = a.back();
        size_t shift = a.size() - 1 - db;
        if (c != 0)
            for (size_t i = 0; i <= db; ++i) {
                uint64_t t = uint64_t(c) * b[i] % p;
                a[shift + i] = uint32_t((a[shift + i] + p - t) % p);
            }
        a.pop_back();
    }
    return a;
}

bool is_zero(const std::vector<uint32_t>& a) {
    return std::all_of(a.begin(), a.end(), [](uint32_t c) { return c == 0; });
}

// trial division by every monic polynomial of degree 1..m/2
bool irreducible(const std::vector<uint32_t>& f, uint32_t p) {
    uint32_t m = uint32_t(f.size()) - 1;
    for (uint32_t d = 1; 2 * d <= m; ++d) {
        uint64_t count = 1;
        for (uint32_t i = 0; i < d; ++i) count *= p;  // p^d monic candidates
        for (uint64_t lo = 0; lo < count; ++lo) {
            std::vector<uint32_t> g = decode_digits(uint32_t(lo), p, d + 1);
            g[d] = 1;
            if (is_zero(poly_rem(f, g, p))) return false;
        }
    }
    return true;
}

uint32_t find_modulus(uint32_t p, uint32_t m) {
    // smallest code = lexicographically first coefficient vector (low-to-high
    // digits of the code, leading coefficient fixed to 1)
    uint64_t base = 1;
    for (uint32_t i = 0; i < m; ++i) base *= p;
    for (uint64_t low = 0; low < base; ++low) {
        std::vector<uint32_t> f = decode_digits(uint32_t(low), p, m + 1);
        f[m] = 1;
        if (irreducible(f, p)) return uint32_t(low + base);
    }
    fail(errc::internal, "no irreducible polynomial found");  // unreachable
}

std::vector<uint32_t> prime_factors(uint32_t n) {
    std::vector<uint32_t> fs;
    for (uint32_t d = 2; uint64_t(d) * d <= n; ++d)
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) fs.push_back(n);
    return fs;
}

std::shared_ptr<const detail::FieldImpl> build_impl(uint32_t p, uint32_t m) {
    auto impl = std::make_shared<detail::FieldImpl>();
    impl->p = p;
    impl->m = m;
    uint64_t q = 1;
    for (uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxFieldOrder) fail(errc::degree_out_of_range, "field order exceeds cap");
    }
    impl->q = uint32_t(q);

    if (m > 1) {
        impl->modulus = find_modulus(p, m);

        // raw power, independent of the tables being built
        auto pw = [&](uint32_t x, uint32_t e) {
            uint32_t r = 1;
            while (e) {
                if (e & 1) r = impl->poly_mul_mod(r, x);
                x = impl->poly_mul_mod(x, x);
                e >>= 1;
            }
            return r;
        };

        if (impl->q <= kTableOrderLimit) {
            uint32_t n1 = impl->q - 1;
            std::vector<uint32_t> fs = prime_factors(n1);
            for (uint32_t g = 1; g < impl->q; ++g) {
                bool prim = true;
                for (uint32_t f : fs)
                    if (pw(g, n1 / f) == 1) {
                        prim = false;
                        break;
                    }
                if (prim) {
                    impl->generator = g;
                    break;
                }
            }
            impl->exp_tbl.resize(size_t(2) * n1);
            impl->log_tbl.assign(impl->q, 0);
            uint32_t cur = 1;
            for (uint32_t i = 0; i < n1; ++i) {
                impl->exp_tbl[i] = cur;
                impl->exp_tbl[i + n1] = cur;
                impl->log_tbl[cur] = uint16_t(i);
                cur = impl->poly_mul_mod(cur, impl->generator);
            }
        }
    }

    if (impl->byte_sized_char2()) {
        impl->nib_tbl.assign(size_t(impl->q) * 32, 0);
        for (uint32_t c = 0; c < impl->q; ++c) {
            uint8_t* t = impl->nib_tbl.data() + size_t(c) * 32;
            for (uint32_t x = 0; x < 16; ++x) {
                if (x < impl->q) t[x] = uint8_t(impl->mul(c, x));
                if ((x << 4) < impl->q) t[16 + x] = uint8_t(impl->mul(c, x << 4));
            }
        }
    }
    return impl;
}

std::shared_ptr<const detail::FieldImpl> cached_impl(uint32_t p, uint32_t m) {
    static std::mutex mu;
    static std::map<uint64_t, std::shared_ptr<const detail::FieldImpl>> cache;
    uint64_t key = (uint64_t(p) << 8) | m;
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto impl = build_impl(p, m);
    std::lock_guard<std::mutex> lk(mu);
    auto [it, ins] = cache.emplace(key, std::move(impl));
    (void)ins;
    return it->second;
}

}  // namespace

namespace detail {

uint32_t FieldImpl::digit_add(uint32_t x, uint32_t y) const {
    uint32_t r = 0, mult = 1;
    for (uint32_t i = 0; i < m; ++i) {
        uint32_t s = x % p + y % p;
        if (s >= p) s -= p;
        r += s * mult;
        mult *= p;
        x /= p;
        y /= p;
    }
    return r;
}

uint32_t FieldImpl::digit_neg(uint32_t x) const {
    uint32_t r = 0, mult = 1;
    for (uint32_t i = 0; i < m; ++i) {
        uint32_t d = x % p;
        r += (d == 0 ? 0 : p - d) * mult;
        mult *= p;
        x /= p;
    }
    return r;
}

uint32_t FieldImpl::poly_mul_mod(uint32_t x, uint32_t y) const {
    uint64_t xd[32], yd[32], md[32], acc[63] = {0};
    uint32_t t = x;
    for (uint32_t i = 0; i < m; ++i) {
        xd[i] = t % p;
        t /= p;
    }
    t = y;
    for (uint32_t i = 0; i < m; ++i) {
        yd[i] = t % p;
        t /= p;
    }
    t = modulus;
    for (uint32_t i = 0; i < m; ++i) {
        md[i] = t % p;
        t /= p;
    }
    for (uint32_t i = 0; i < m; ++i) {
        if (!xd[i]) continue;
        for (uint32_t j = 0; j < m; ++j) acc[i + j] += xd[i] * yd[j] % p;
    }
    // x^m = -(low part of modulus); fold down from the top
    for (int i = 2 * int(m) - 2; i >= int(m); --i) {
        uint64_t c = acc[i] % p;
        if (!c) continue;
        for (uint32_t j = 0; j < m; ++j) acc[i - m + j] += (p - md[j] % p) * c % p;
    }
    uint32_t r = 0, mult = 1;
    for (uint32_t i = 0; i < m; ++i) {
        r += uint32_t(acc[i] % p) * mult;
        mult *= p;
    }
    return r;
}

uint32_t FieldImpl::inv(uint32_t x) const {
    if (x == 0) fail(errc::division_by_zero, "inverse of zero");
    if (has_tables()) return exp_tbl[(q - 1) - log_tbl[x]];
    return pow(x, q - 2);
}

uint32_t FieldImpl::pow(uint32_t x, uint64_t e) const {
    if (e == 0) return 1;
    if (x == 0) return 0;
    e %= q - 1;
    if (e == 0) return 1;
    if (has_tables()) {
        uint64_t l = uint64_t(log_tbl[x]) * e % (q - 1);
        return exp_tbl[l];
    }
    uint32_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, x);
        x = mul(x, x);
        e >>= 1;
    }
    return r;
}

}  // namespace detail

Field Field::make(uint32_t p, uint32_t m) {
    if (!is_prime_u32(p)) fail(errc::non_prime_characteristic, "characteristic must be prime");
    if (m == 0 || m > 20) fail(errc::degree_out_of_range, "extension degree out of range");
    return Field(cached_impl(p, m));
}

Field Field::smallest_at_least(uint32_t t) {
    if (t > kMaxFieldOrder) fail(errc::degree_out_of_range, "no supported field that large");
    uint32_t p, m;
    for (uint32_t q = std::max<uint32_t>(t, 2);; ++q)
        if (prime_power_split(q, p, m)) return make(p, m);
}

Field Field::parse(const std::string& s) {
    size_t caret = s.find('^');
    auto to_u32 = [](const std::string& part) -> uint32_t {
        if (part.empty() || part.size() > 9) fail(errc::bad_input, "bad field spec");
        uint64_t v = 0;
        for (char c : part) {
            if (c < '0' || c > '9') fail(errc::bad_input, "bad field spec");
            v = v * 10 + uint64_t(c - '0');
        }
        return uint32_t(v);
    };
    if (caret == std::string::npos) return make(to_u32(s), 1);
    return make(to_u32(s.substr(0, caret)), to_u32(s.substr(caret + 1)));
}

std::string Field::to_string() const {
    if (impl_->m == 1) return std::to_string(impl_->p);
    return std::to_string(impl_->p) + "^" + std::to_string(impl_->m);
}

}  // namespace zmds
