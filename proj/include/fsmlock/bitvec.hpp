#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fsmlock {

/// Fixed-width vector of bits. Used for input frames, keys and register
/// states alike; width 0 is legal (zero-input circuits, stateless circuits).
class BitVector {
  public:
    BitVector() = default;
    explicit BitVector(std::size_t width, bool fill = false) : bits_(width, fill) {}

    static BitVector from_string(const std::string& s);
    static BitVector from_uint(uint64_t value, std::size_t width);

    std::size_t width() const { return bits_.size(); }

    bool get(std::size_t i) const {
        if (i >= bits_.size()) throw std::out_of_range("BitVector index " + std::to_string(i));
        return bits_[i] != 0;
    }
    void set(std::size_t i, bool v) {
        if (i >= bits_.size()) throw std::out_of_range("BitVector index " + std::to_string(i));
        bits_[i] = v ? 1 : 0;
    }

    /// Packs bit 0 into the LSB. Requires width <= 64.
    uint64_t to_uint() const;
    std::string to_string() const;

    bool operator==(const BitVector& o) const = default;

  private:
    std::vector<uint8_t> bits_;
};

inline BitVector BitVector::from_string(const std::string& s) {
    BitVector v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '0')
            v.set(i, false);
        else if (s[i] == '1')
            v.set(i, true);
        else
            throw std::invalid_argument("bit string may contain only 0/1: \"" + s + "\"");
    }
    return v;
}

inline BitVector BitVector::from_uint(uint64_t value, std::size_t width) {
    if (width > 64) throw std::invalid_argument("from_uint supports width <= 64");
    BitVector v(width);
    for (std::size_t i = 0; i < width; ++i) v.set(i, (value >> i) & 1u);
    return v;
}

inline uint64_t BitVector::to_uint() const {
    if (width() > 64) throw std::invalid_argument("to_uint supports width <= 64");
    uint64_t x = 0;
    for (std::size_t i = 0; i < width(); ++i)
        if (bits_[i]) x |= uint64_t{1} << i;
    return x;
}

inline std::string BitVector::to_string() const {
    std::string s(width(), '0');
    for (std::size_t i = 0; i < width(); ++i)
        if (bits_[i]) s[i] = '1';
    return s;
}

inline std::size_t hamming(const BitVector& a, const BitVector& b) {
    if (a.width() != b.width()) throw std::invalid_argument("hamming: width mismatch");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.width(); ++i)
        if (a.get(i) != b.get(i)) ++d;
    return d;
}

/// One BitVector per clock cycle, all the same width.
using InputSequence = std::vector<BitVector>;
using OutputSequence = std::vector<BitVector>;

using State = BitVector;
using Key = BitVector;

}  // namespace fsmlock
