#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cmlab {

/// Fixed-width bit vector, most significant bit first.
///
/// The MSB-first convention matches the binary reading of control values,
/// to_int() = sum_j 2^(width-j) * bit_j, and is used consistently for
/// states, circuit inputs/outputs and binary numbers. Width is explicit
/// and never inferred; leading zeros are significant.
class BitString {
public:
    BitString() = default;

    /// All-zero string of the given width.
    explicit BitString(std::size_t width) : bits_(width, 0) {}

    BitString(std::initializer_list<int> bits) {
        bits_.reserve(bits.size());
        for (int b : bits) {
            if (b != 0 && b != 1) throw std::invalid_argument("BitString: bits must be 0 or 1");
            bits_.push_back(static_cast<std::uint8_t>(b));
        }
    }

    /// Binary expansion of `value` into `width` bits, MSB first.
    /// Throws std::overflow_error if value does not fit.
    static BitString from_int(std::uint64_t value, std::size_t width) {
        if (width > 64) throw std::invalid_argument("BitString: width > 64 unsupported");
        if (width < 64 && value >= (std::uint64_t{1} << width))
            throw std::overflow_error("BitString::from_int: value does not fit in width");
        BitString out(width);
        for (std::size_t i = 0; i < width; ++i)
            out.bits_[i] = static_cast<std::uint8_t>((value >> (width - 1 - i)) & 1u);
        return out;
    }

    /// Parses a string of '0'/'1' characters, MSB first.
    static BitString parse(std::string_view text) {
        if (text.empty()) throw std::runtime_error("BitString::parse: empty string");
        BitString out(text.size());
        for (std::size_t i = 0; i < text.size(); ++i) {
            const char c = text[i];
            if (c != '0' && c != '1')
                throw std::runtime_error(std::string("BitString::parse: invalid character '") + c +
                                         "' at position " + std::to_string(i));
            out.bits_[i] = static_cast<std::uint8_t>(c - '0');
        }
        return out;
    }

    std::size_t width() const { return bits_.size(); }
    std::uint8_t operator[](std::size_t i) const { return bits_[i]; }

    void set(std::size_t i, bool value) { bits_.at(i) = value ? 1 : 0; }

    void flip(std::size_t i) { bits_.at(i) ^= 1u; }

    /// Value as a binary number, MSB first: sum_j 2^(width-j) * bit_j.
    std::uint64_t to_int() const {
        if (width() > 64) throw std::invalid_argument("BitString::to_int: width > 64");
        std::uint64_t v = 0;
        for (std::uint8_t b : bits_) v = (v << 1) | b;
        return v;
    }

    /// Slice [begin, begin+count).
    BitString slice(std::size_t begin, std::size_t count) const {
        if (begin + count > width()) throw std::out_of_range("BitString::slice: out of range");
        BitString out(count);
        for (std::size_t i = 0; i < count; ++i) out.bits_[i] = bits_[begin + i];
        return out;
    }

    std::string str() const {
        std::string s(width(), '0');
        for (std::size_t i = 0; i < width(); ++i) s[i] = static_cast<char>('0' + bits_[i]);
        return s;
    }

    const std::vector<std::uint8_t>& raw() const { return bits_; }

    bool operator==(const BitString&) const = default;

private:
    std::vector<std::uint8_t> bits_;
};

inline std::uint64_t to_int(const BitString& x) { return x.to_int(); }

inline BitString concat(const BitString& a, const BitString& b) {
    BitString out(a.width() + b.width());
    for (std::size_t i = 0; i < a.width(); ++i) out.set(i, a[i]);
    for (std::size_t i = 0; i < b.width(); ++i) out.set(a.width() + i, b[i]);
    return out;
}

/// Number of positions where a and b differ. Widths must match.
inline std::size_t hamming(const BitString& a, const BitString& b) {
    if (a.width() != b.width()) throw std::invalid_argument("hamming: width mismatch");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.width(); ++i) d += static_cast<std::size_t>(a[i] != b[i]);
    return d;
}

/// Sum of bits mod 2.
inline int parity(const BitString& x) {
    int p = 0;
    for (std::size_t i = 0; i < x.width(); ++i) p ^= x[i];
    return p;
}

/// 1 iff strictly more than half of the bits are set.
inline int majority(const BitString& x) {
    std::size_t ones = 0;
    for (std::size_t i = 0; i < x.width(); ++i) ones += x[i];
    return 2 * ones > x.width() ? 1 : 0;
}

}  // namespace cmlab
