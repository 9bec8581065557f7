#pragma once

#include <cstdint>
#include <cstddef>
#include <functional>
#include <vector>

namespace nfkit {

// Fixed-width bit vector. Width is set at construction and never changes;
// all binary ops require equal widths.
class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t width) : width_(width), w_((width + 63) / 64, 0) {}

    static Bits of_uint(std::size_t width, std::uint64_t v) {
        Bits b(width);
        if (!b.w_.empty()) b.w_[0] = v;
        b.trim();
        return b;
    }

    [[nodiscard]] std::size_t width() const { return width_; }

    [[nodiscard]] bool get(std::size_t i) const {
        return (w_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i, bool v = true) {
        if (v) w_[i >> 6] |= (std::uint64_t{1} << (i & 63));
        else   w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    [[nodiscard]] std::size_t count() const {
        std::size_t n = 0;
        for (auto w : w_) n += static_cast<std::size_t>(__builtin_popcountll(w));
        return n;
    }
    [[nodiscard]] bool any() const {
        for (auto w : w_) if (w) return true;
        return false;
    }
    [[nodiscard]] bool none() const { return !any(); }

    // Index value of the bit pattern, valid while it fits in 64 bits.
    // Callers only use this when width() <= 64 guarantees the fit.
    [[nodiscard]] std::uint64_t to_uint() const {
        return w_.empty() ? 0 : w_[0];
    }

    Bits& operator|=(const Bits& o) { for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i]; return *this; }
    Bits& operator&=(const Bits& o) { for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i]; return *this; }

    [[nodiscard]] friend Bits operator|(Bits a, const Bits& b) { a |= b; return a; }
    [[nodiscard]] friend Bits operator&(Bits a, const Bits& b) { a &= b; return a; }

    // a minus b, as sets
    [[nodiscard]] friend Bits diff(Bits a, const Bits& b) {
        for (std::size_t i = 0; i < a.w_.size(); ++i) a.w_[i] &= ~b.w_[i];
        return a;
    }

    [[nodiscard]] bool subset_of(const Bits& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    [[nodiscard]] bool disjoint_with(const Bits& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return false;
        return true;
    }

    friend bool operator==(const Bits& a, const Bits& b) {
        return a.width_ == b.width_ && a.w_ == b.w_;
    }
    friend bool operator!=(const Bits& a, const Bits& b) { return !(a == b); }

    // Deterministic order: by width, then lexicographic on words from the top.
    friend bool operator<(const Bits& a, const Bits& b) {
        if (a.width_ != b.width_) return a.width_ < b.width_;
        for (std::size_t i = a.w_.size(); i-- > 0;)
            if (a.w_[i] != b.w_[i]) return a.w_[i] < b.w_[i];
        return false;
    }

    template <class F>
    void for_each_set(F&& f) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t w = w_[wi];
            while (w) {
                unsigned b = static_cast<unsigned>(__builtin_ctzll(w));
                f(wi * 64 + b);
                w &= w - 1;
            }
        }
    }

    [[nodiscard]] std::size_t hash() const {
        std::size_t h = width_;
        for (auto w : w_) h = h * 1099511628211ull ^ static_cast<std::size_t>(w);
        return h;
    }

private:
    void trim() {
        if (w_.empty()) return;
        unsigned rem = width_ & 63;
        if (rem) w_.back() &= (std::uint64_t{1} << rem) - 1;
    }

    std::size_t width_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace nfkit
