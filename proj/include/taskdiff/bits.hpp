#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace taskdiff {

// A finite bit sequence, MSB-first within each stored byte.
class BitString {
public:
    BitString() = default;

    static BitString from_string(const std::string& zeros_ones) {
        BitString b;
        for (char c : zeros_ones) {
            if (c == '0' || c == '1') b.push_back(c == '1');
            else if (c != ' ' && c != '_') throw std::invalid_argument("bad bit char");
        }
        return b;
    }

    void push_back(bool bit) {
        size_t byte = nbits_ / 8, off = nbits_ % 8;
        if (off == 0) bytes_.push_back(0);
        if (bit) bytes_[byte] = static_cast<uint8_t>(bytes_[byte] | (0x80u >> off));
        ++nbits_;
    }

    // Appends `width` bits of `value`, most significant field bit first.
    void append_bits(uint32_t value, int width) {
        for (int i = width - 1; i >= 0; --i) push_back((value >> i) & 1u);
    }

    bool bit(size_t i) const { return (bytes_[i / 8] >> (7 - i % 8)) & 1u; }
    size_t size() const { return nbits_; }
    bool empty() const { return nbits_ == 0; }

    // Reads `width` bits starting at `pos` as an unsigned value.
    uint32_t read_bits(size_t pos, int width) const {
        uint32_t v = 0;
        for (int i = 0; i < width; ++i) v = (v << 1) | (bit(pos + i) ? 1u : 0u);
        return v;
    }

    std::string to_string() const {
        std::string s;
        s.reserve(nbits_);
        for (size_t i = 0; i < nbits_; ++i) s.push_back(bit(i) ? '1' : '0');
        return s;
    }

    // Byte serialization pads with a single 1 bit then zeros to the byte
    // boundary, so arbitrary bit lengths survive a round trip.
    std::vector<uint8_t> to_padded_bytes() const {
        BitString padded = *this;
        padded.push_back(true);
        while (padded.size() % 8 != 0) padded.push_back(false);
        return padded.bytes_;
    }

    static BitString from_padded_bytes(const std::vector<uint8_t>& bytes) {
        BitString all;
        all.bytes_ = bytes;
        all.nbits_ = bytes.size() * 8;
        size_t end = all.nbits_;
        while (end > 0 && !all.bit(end - 1)) --end;
        if (end == 0) throw std::invalid_argument("missing pad marker");
        BitString out;
        for (size_t i = 0; i + 1 < end; ++i) out.push_back(all.bit(i));
        return out;
    }

    std::string to_hex() const {
        static const char* digits = "0123456789abcdef";
        std::string s;
        for (uint8_t b : to_padded_bytes()) {
            s.push_back(digits[b >> 4]);
            s.push_back(digits[b & 0xf]);
        }
        return s;
    }

    static BitString from_hex(const std::string& hex) {
        if (hex.size() % 2 != 0) throw std::invalid_argument("odd hex length");
        auto nib = [](char c) -> int {
            if (c >= '0' && c <= '9') return c - '0';
            if (c >= 'a' && c <= 'f') return c - 'a' + 10;
            if (c >= 'A' && c <= 'F') return c - 'A' + 10;
            throw std::invalid_argument("bad hex char");
        };
        std::vector<uint8_t> bytes;
        for (size_t i = 0; i < hex.size(); i += 2)
            bytes.push_back(static_cast<uint8_t>(nib(hex[i]) * 16 + nib(hex[i + 1])));
        return from_padded_bytes(bytes);
    }

    bool operator==(const BitString& o) const {
        if (nbits_ != o.nbits_) return false;
        for (size_t i = 0; i < nbits_; ++i)
            if (bit(i) != o.bit(i)) return false;
        return true;
    }
    bool operator!=(const BitString& o) const { return !(*this == o); }

    // (length, lexicographic) order — the program enumeration order.
    bool length_lex_less(const BitString& o) const {
        if (nbits_ != o.nbits_) return nbits_ < o.nbits_;
        for (size_t i = 0; i < nbits_; ++i) {
            if (bit(i) != o.bit(i)) return !bit(i);
        }
        return false;
    }

    bool is_prefix_of(const BitString& o) const {
        if (nbits_ > o.nbits_) return false;
        for (size_t i = 0; i < nbits_; ++i)
            if (bit(i) != o.bit(i)) return false;
        return true;
    }

private:
    std::vector<uint8_t> bytes_;
    size_t nbits_ = 0;
};

} // namespace taskdiff
