#ifndef OCP_BITSET_HPP
#define OCP_BITSET_HPP

#include <cstdint>
#include <vector>

namespace ocp {

/// Fixed-width bitset sized at runtime; element index -> bit.
class CoverSet {
public:
    CoverSet() = default;
    explicit CoverSet(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }

    bool test(std::size_t i) const { return words_[i >> 6] >> (i & 63) & 1; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

    CoverSet& operator|=(const CoverSet& o) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
        return *this;
    }

    /// this ⊇ other
    bool contains(const CoverSet& o) const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if ((o.words_[w] & ~words_[w]) != 0) return false;
        return true;
    }

    friend bool operator==(const CoverSet& a, const CoverSet& b) { return a.words_ == b.words_; }

    friend bool operator<(const CoverSet& a, const CoverSet& b) { return a.words_ < b.words_; }

    struct Hash {
        std::size_t operator()(const CoverSet& s) const {
            std::size_t h = 0xcbf29ce484222325ull;
            for (std::uint64_t w : s.words_) {
                h ^= w;
                h *= 0x100000001b3ull;
            }
            return h;
        }
    };

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace ocp

#endif
