#pragma once

#include <bit>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "clawbound/errors.hpp"

namespace clawbound {

// Fixed-width set of vertex indices backed by 64-bit words.  All solver loops
// run on whole-word operations; the universe size is fixed at construction.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : n_(universe), w_(words_for(universe), 0) {}

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int i = 0; i < universe; ++i) s.set(i);
        return s;
    }

    int universe_size() const { return n_; }

    bool test(int i) const {
        check(i);
        return (w_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
    }
    void set(int i) {
        check(i);
        w_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
    }
    void reset(int i) {
        check(i);
        w_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    int count() const {
        int c = 0;
        for (std::uint64_t w : w_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (std::uint64_t w : w_)
            if (w) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        check_same(o);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    // o ⊆ *this
    bool contains_all(const VertexSet& o) const {
        check_same(o);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (o.w_[i] & ~w_[i]) return false;
        return true;
    }

    VertexSet& operator|=(const VertexSet& o) {
        check_same(o);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        check_same(o);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    // set difference
    VertexSet& operator-=(const VertexSet& o) {
        check_same(o);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool operator==(const VertexSet& o) const = default;

    // Smallest member, -1 when empty.
    int first() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return static_cast<int>(i * 64) + std::countr_zero(w_[i]);
        return -1;
    }

    // Smallest member strictly greater than v, -1 when none.
    int next_after(int v) const {
        int i = v + 1;
        if (i >= n_) return -1;
        std::size_t word = static_cast<std::size_t>(i) >> 6;
        std::uint64_t cur = w_[word] & (~std::uint64_t{0} << (i & 63));
        while (true) {
            if (cur) return static_cast<int>(word * 64) + std::countr_zero(cur);
            if (++word >= w_.size()) return -1;
            cur = w_[word];
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (int v = first(); v >= 0; v = next_after(v)) out.push_back(v);
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (int v = first(); v >= 0; v = next_after(v)) f(v);
    }

    // Order by smallest differing element; used for deterministic tie-breaks.
    bool precedes(const VertexSet& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t diff = w_[i] ^ o.w_[i];
            if (diff) {
                std::uint64_t low = diff & (~diff + 1);
                return (w_[i] & low) != 0;
            }
        }
        return false;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << '{';
        bool sep = false;
        for (int v = first(); v >= 0; v = next_after(v)) {
            if (sep) os << ',';
            os << v;
            sep = true;
        }
        os << '}';
        return os.str();
    }

private:
    static std::size_t words_for(int n) {
        if (n < 0) throw input_error("VertexSet: negative universe size");
        return (static_cast<std::size_t>(n) + 63) / 64;
    }

    void check(int i) const {
        if (i < 0 || i >= n_)
            throw input_error("VertexSet: index " + std::to_string(i) + " outside universe of " +
                              std::to_string(n_));
    }
    void check_same(const VertexSet& o) const {
        if (o.n_ != n_) throw input_error("VertexSet: universe size mismatch");
    }

    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace clawbound
