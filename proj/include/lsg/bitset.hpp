#ifndef LSG_BITSET_HPP
#define LSG_BITSET_HPP

#include <cstdint>
#include <vector>

namespace lsg {

// Set of small nonnegative indices (points or arrows of one fixed universe).
// All iteration is in increasing index order, which keeps every derived
// output canonical.
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(int universe) : size_(universe), words_((universe + 63) / 64, 0) {}

    static IndexSet full(int universe) {
        IndexSet s(universe);
        for (int i = 0; i < universe; ++i) s.insert(i);
        return s;
    }

    int universe() const { return size_; }

    bool contains(int i) const {
        return (words_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1u;
    }
    void insert(int i) { words_[static_cast<size_t>(i) >> 6] |= uint64_t{1} << (i & 63); }
    void erase(int i) { words_[static_cast<size_t>(i) >> 6] &= ~(uint64_t{1} << (i & 63)); }

    int count() const {
        int n = 0;
        for (uint64_t w : words_) n += __builtin_popcountll(w);
        return n;
    }
    bool empty() const {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }

    bool subset_of(const IndexSet& other) const {
        for (size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~other.words_[k]) return false;
        return true;
    }

    IndexSet& operator|=(const IndexSet& other) {
        for (size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
        return *this;
    }
    IndexSet& operator&=(const IndexSet& other) {
        for (size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
        return *this;
    }
    IndexSet& operator-=(const IndexSet& other) {
        for (size_t k = 0; k < words_.size(); ++k) words_[k] &= ~other.words_[k];
        return *this;
    }

    friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
    friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
    friend IndexSet operator-(IndexSet a, const IndexSet& b) { return a -= b; }

    bool operator==(const IndexSet& other) const {
        return size_ == other.size_ && words_ == other.words_;
    }
    bool operator!=(const IndexSet& other) const { return !(*this == other); }

    // Lexicographic on the bit sequence; used only to get stable orderings.
    bool operator<(const IndexSet& other) const {
        if (size_ != other.size_) return size_ < other.size_;
        for (size_t k = 0; k < words_.size(); ++k) {
            // Compare reversed bits so that index 0 is the most significant.
            uint64_t a = reverse_bits(words_[k]), b = reverse_bits(other.words_[k]);
            if (a != b) return a < b;
        }
        return false;
    }

    int first() const {  // -1 when empty
        for (size_t k = 0; k < words_.size(); ++k)
            if (words_[k]) return static_cast<int>(k * 64) + __builtin_ctzll(words_[k]);
        return -1;
    }

    int next(int i) const {  // smallest member > i, or -1
        ++i;
        if (i >= size_) return -1;
        size_t k = static_cast<size_t>(i) >> 6;
        uint64_t w = words_[k] & (~uint64_t{0} << (i & 63));
        while (true) {
            if (w) return static_cast<int>(k * 64) + __builtin_ctzll(w);
            if (++k >= words_.size()) return -1;
            w = words_[k];
        }
    }

    std::vector<int> members() const {
        std::vector<int> out;
        for (int i = first(); i >= 0; i = next(i)) out.push_back(i);
        return out;
    }

private:
    static uint64_t reverse_bits(uint64_t v) {
        uint64_t r = 0;
        for (int i = 0; i < 64; ++i) r |= ((v >> i) & 1u) << (63 - i);
        return r;
    }

    int size_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace lsg

#endif
