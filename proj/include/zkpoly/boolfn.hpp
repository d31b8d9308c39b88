#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

namespace zkpoly {

/// A Boolean function on {0,1}^n as a packed truth table. Input x is encoded
/// as an integer with x_1 the least significant bit; bit x of the table is
/// F(x). 1 <= n <= 30.
class BoolFn {
public:
    static constexpr unsigned kMaxVars = 30;

    explicit BoolFn(unsigned n);

    /// Each table bit independently fair, drawn from the SplitMix64 stream of
    /// `seed`. Identical seed, identical function.
    static BoolFn random(unsigned n, std::uint64_t seed);

    unsigned n() const { return n_; }
    std::uint64_t size() const { return std::uint64_t(1) << n_; }

    bool get(std::uint32_t x) const {
        return (words_[x >> 6] >> (x & 63)) & 1;
    }
    void set(std::uint32_t x, bool v) {
        const std::uint64_t bit = std::uint64_t(1) << (x & 63);
        if (v)
            words_[x >> 6] |= bit;
        else
            words_[x >> 6] &= ~bit;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

    std::uint64_t count_ones() const;

    bool operator==(const BoolFn& other) const = default;

    /// Truth-table container: magic "BFN1", one byte n, then ceil(2^n/8)
    /// bytes; the bit for input x sits at byte x>>3, bit x&7.
    void save(std::ostream& os) const;
    static BoolFn load(std::istream& is);
    void save_file(const std::filesystem::path& path) const;
    static BoolFn load_file(const std::filesystem::path& path);

private:
    unsigned n_;
    std::vector<std::uint64_t> words_;
};

}  // namespace zkpoly
