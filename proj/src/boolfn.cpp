#include "zkpoly/boolfn.hpp"

#include <bit>
#include <fstream>
#include <istream>
#include <ostream>

#include "zkpoly/errors.hpp"
#include "zkpoly/rng.hpp"

namespace zkpoly {

namespace {

constexpr char kMagic[4] = {'B', 'F', 'N', '1'};

std::size_t word_count(unsigned n) {
    return n >= 6 ? (std::size_t(1) << (n - 6)) : 1;
}

}  // namespace

BoolFn::BoolFn(unsigned n) : n_(n) {
    if (n < 1 || n > kMaxVars) throw Error("BoolFn: n must be in [1, 30]");
    words_.assign(word_count(n), 0);
}

BoolFn BoolFn::random(unsigned n, std::uint64_t seed) {
    BoolFn f(n);
    for (std::size_t i = 0; i < f.words_.size(); ++i) {
        f.words_[i] = SplitMix64::at(seed, i);
    }
    if (n < 6) f.words_[0] &= (std::uint64_t(1) << (std::uint64_t(1) << n)) - 1;
    return f;
}

std::uint64_t BoolFn::count_ones() const {
    std::uint64_t total = 0;
    for (std::uint64_t w : words_) total += std::popcount(w);
    return total;
}

void BoolFn::save(std::ostream& os) const {
    os.write(kMagic, 4);
    const unsigned char nb = static_cast<unsigned char>(n_);
    os.write(reinterpret_cast<const char*>(&nb), 1);
    const std::uint64_t nbytes = (size() + 7) / 8;
    for (std::uint64_t i = 0; i < nbytes; ++i) {
        const unsigned char byte =
            static_cast<unsigned char>((words_[i >> 3] >> ((i & 7) * 8)) & 0xFF);
        os.write(reinterpret_cast<const char*>(&byte), 1);
    }
    if (!os) throw Error("BFN1 write failed");
}

BoolFn BoolFn::load(std::istream& is) {
    char magic[4];
    is.read(magic, 4);
    if (!is || !std::equal(magic, magic + 4, kMagic))
        throw Error("not a BFN1 truth-table file");
    unsigned char nb = 0;
    is.read(reinterpret_cast<char*>(&nb), 1);
    if (!is || nb < 1 || nb > kMaxVars) throw Error("BFN1: bad variable count");
    BoolFn f(nb);
    const std::uint64_t nbytes = (f.size() + 7) / 8;
    for (std::uint64_t i = 0; i < nbytes; ++i) {
        unsigned char byte = 0;
        is.read(reinterpret_cast<char*>(&byte), 1);
        if (!is) throw Error("BFN1: truncated table");
        f.words_[i >> 3] |= std::uint64_t(byte) << ((i & 7) * 8);
    }
    return f;
}

void BoolFn::save_file(const std::filesystem::path& path) const {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw Error("cannot open " + path.string() + " for writing");
    save(os);
}

BoolFn BoolFn::load_file(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw Error("cannot open " + path.string());
    return load(is);
}

}  // namespace zkpoly
