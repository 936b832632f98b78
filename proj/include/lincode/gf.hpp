#pragma once

#include <cstdint>

#include "lincode/errors.hpp"

namespace lincode {

class FieldElement;

/// The prime field GF(q), 2 <= q < 2^16. Residues are plain uint32_t in
/// [0, q); every product fits in 64 bits, so arithmetic is exact.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t q);

    std::uint32_t order() const noexcept { return q_; }

    // Raw residue arithmetic. Arguments must already be reduced mod q.
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
        std::uint32_t s = a + b;
        return s >= q_ ? s - q_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
        return a >= b ? a - b : a + q_ - b;
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
        return static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(a) * b) % q_);
    }
    std::uint32_t neg(std::uint32_t a) const noexcept {
        return a == 0 ? 0 : q_ - a;
    }
    std::uint32_t reduce(std::uint64_t a) const noexcept {
        return static_cast<std::uint32_t>(a % q_);
    }
    /// Multiplicative inverse via extended Euclid. Throws division_by_zero
    /// when a == 0.
    std::uint32_t inv(std::uint32_t a) const;

    FieldElement element(std::uint32_t value) const;

    friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept {
        return a.q_ == b.q_;
    }

private:
    std::uint32_t q_;
};

/// A residue tagged with its field. Mixing elements of different fields
/// throws field_mismatch.
class FieldElement {
public:
    FieldElement(std::uint32_t value, PrimeField field)
        : value_(value % field.order()), field_(field) {}

    std::uint32_t value() const noexcept { return value_; }
    PrimeField field() const noexcept { return field_; }

    friend FieldElement operator+(FieldElement a, FieldElement b) {
        check_same(a, b);
        return {a.field_.add(a.value_, b.value_), a.field_};
    }
    friend FieldElement operator-(FieldElement a, FieldElement b) {
        check_same(a, b);
        return {a.field_.sub(a.value_, b.value_), a.field_};
    }
    friend FieldElement operator*(FieldElement a, FieldElement b) {
        check_same(a, b);
        return {a.field_.mul(a.value_, b.value_), a.field_};
    }
    FieldElement operator-() const { return {field_.neg(value_), field_}; }
    FieldElement inv() const { return {field_.inv(value_), field_}; }

    friend bool operator==(FieldElement a, FieldElement b) {
        check_same(a, b);
        return a.value_ == b.value_;
    }

private:
    static void check_same(FieldElement a, FieldElement b) {
        if (!(a.field_ == b.field_))
            throw field_mismatch("operands belong to different fields");
    }

    std::uint32_t value_;
    PrimeField field_;
};

inline FieldElement PrimeField::element(std::uint32_t value) const {
    return {value, *this};
}

} // namespace lincode
