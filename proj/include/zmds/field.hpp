#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "zmds/errors.hpp"

namespace zmds {

// Field order cap. Element codes stay in 32 bits and all tables stay small.
inline constexpr uint32_t kMaxFieldOrder = 1u << 20;
// Extension fields up to this order get log/antilog tables.
inline constexpr uint32_t kTableOrderLimit = 1u << 16;
// Characteristic-2 fields up to this order additionally get per-scalar
// nibble product tables (32 bytes per scalar) for the byte kernels.
inline constexpr uint32_t kByteOrderLimit = 256;

namespace detail {

// Immutable arithmetic data for GF(p^m). Elements are encoded as integers in
// [0, q): the base-p digits of the code are the coefficients of the residue
// polynomial, least significant digit = constant term.
struct FieldImpl {
    uint32_t p = 0;             // characteristic, prime
    uint32_t m = 1;             // extension degree
    uint32_t q = 0;             // order p^m
    uint32_t modulus = 0;       // monic modulus code (degree m), only m > 1
    uint32_t generator = 0;     // fixed multiplicative generator (m > 1, q <= table limit)

    std::vector<uint16_t> log_tbl;  // index: element code 1..q-1 -> discrete log
    std::vector<uint32_t> exp_tbl;  // 2(q-1) entries so add of two logs needs no reduction
    std::vector<uint8_t> nib_tbl;   // q * 32 bytes; see nib() (char 2, q <= 256 only)

    bool prime_field() const { return m == 1; }
    bool has_tables() const { return !log_tbl.empty(); }
    bool byte_sized_char2() const { return p == 2 && q <= kByteOrderLimit; }

    uint32_t add(uint32_t x, uint32_t y) const {
        if (m == 1) {
            uint32_t s = x + y;
            return s >= q ? s - q : s;
        }
        if (p == 2) return x ^ y;
        return digit_add(x, y);
    }

    uint32_t neg(uint32_t x) const {
        if (m == 1) return x == 0 ? 0 : q - x;
        if (p == 2) return x;
        return digit_neg(x);
    }

    uint32_t sub(uint32_t x, uint32_t y) const { return add(x, neg(y)); }

    uint32_t mul(uint32_t x, uint32_t y) const {
        if (m == 1) return uint32_t((uint64_t(x) * y) % q);
        if (x == 0 || y == 0) return 0;
        if (has_tables()) return exp_tbl[log_tbl[x] + log_tbl[y]];
        return poly_mul_mod(x, y);
    }

    uint32_t inv(uint32_t x) const;
    uint32_t pow(uint32_t x, uint64_t e) const;

    // 32-byte lo/hi nibble product table for scalar c (char 2, q <= 256).
    const uint8_t* nib(uint32_t c) const { return nib_tbl.data() + size_t(c) * 32; }

    uint32_t digit_add(uint32_t x, uint32_t y) const;
    uint32_t digit_neg(uint32_t x) const;
    uint32_t poly_mul_mod(uint32_t x, uint32_t y) const;
};

}  // namespace detail

// Handle to an immutable field specification. Cheap to copy; all operations
// are pure and safe to share across threads. Two handles denote the same
// field iff characteristic, degree and modulus agree.
class Field {
  public:
    Field() = default;

    // GF(p^m) with the fixed deterministic modulus: the lexicographically
    // first monic irreducible of degree m over GF(p).
    static Field make(uint32_t p, uint32_t m);

    // GF(q) for the least prime power q >= t.
    static Field smallest_at_least(uint32_t t);

    // Accepts "7" or "2^4".
    static Field parse(const std::string& s);

    bool valid() const { return impl_ != nullptr; }
    uint32_t characteristic() const { return impl_->p; }
    uint32_t degree() const { return impl_->m; }
    uint32_t order() const { return impl_->q; }
    uint32_t modulus_code() const { return impl_->modulus; }
    std::string to_string() const;

    uint32_t add(uint32_t x, uint32_t y) const { return impl_->add(x, y); }
    uint32_t sub(uint32_t x, uint32_t y) const { return impl_->sub(x, y); }
    uint32_t neg(uint32_t x) const { return impl_->neg(x); }
    uint32_t mul(uint32_t x, uint32_t y) const { return impl_->mul(x, y); }
    uint32_t inv(uint32_t x) const { return impl_->inv(x); }
    uint32_t pow(uint32_t x, uint64_t e) const { return impl_->pow(x, e); }

    bool same_as(const Field& o) const {
        if (impl_ == o.impl_) return true;
        if (!impl_ || !o.impl_) return false;
        return impl_->p == o.impl_->p && impl_->m == o.impl_->m &&
               impl_->modulus == o.impl_->modulus;
    }

    const detail::FieldImpl& impl() const { return *impl_; }

  private:
    explicit Field(std::shared_ptr<const detail::FieldImpl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const detail::FieldImpl> impl_;
};

// Checked element value. Mixing elements of different fields is a usage
// error and throws field_mismatch.
class Elem {
  public:
    Elem() = default;
    Elem(Field f, uint32_t code) : f_(std::move(f)), v_(code) {
        if (!f_.valid()) fail(errc::bad_input, "element of an empty field handle");
        if (v_ >= f_.order()) fail(errc::bad_input, "element code out of range");
    }

    uint32_t code() const { return v_; }
    const Field& field() const { return f_; }

    friend Elem operator+(const Elem& a, const Elem& b) {
        check(a, b);
        return Elem(a.f_, a.f_.add(a.v_, b.v_), 0);
    }
    friend Elem operator-(const Elem& a, const Elem& b) {
        check(a, b);
        return Elem(a.f_, a.f_.sub(a.v_, b.v_), 0);
    }
    friend Elem operator*(const Elem& a, const Elem& b) {
        check(a, b);
        return Elem(a.f_, a.f_.mul(a.v_, b.v_), 0);
    }
    friend Elem operator/(const Elem& a, const Elem& b) {
        check(a, b);
        return Elem(a.f_, a.f_.mul(a.v_, b.f_.inv(b.v_)), 0);
    }
    Elem operator-() const { return Elem(f_, f_.neg(v_), 0); }
    Elem inverse() const { return Elem(f_, f_.inv(v_), 0); }
    Elem pow(uint64_t e) const { return Elem(f_, f_.pow(v_, e), 0); }

    friend bool operator==(const Elem& a, const Elem& b) {
        check(a, b);
        return a.v_ == b.v_;
    }
    friend bool operator!=(const Elem& a, const Elem& b) { return !(a == b); }

  private:
    Elem(Field f, uint32_t v, int) : f_(std::move(f)), v_(v) {}
    static void check(const Elem& a, const Elem& b) {
        if (!a.f_.same_as(b.f_)) fail(errc::field_mismatch, "operands from different fields");
    }
    Field f_;
    uint32_t v_ = 0;
};

// true iff q is a prime power; on success sets p and m.
bool prime_power_split(uint32_t q, uint32_t& p, uint32_t& m);
bool is_prime_u32(uint32_t n);

}  // namespace zmds
