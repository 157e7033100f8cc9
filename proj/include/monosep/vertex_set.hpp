#ifndef MONOSEP_VERTEX_SET_HPP_
#define MONOSEP_VERTEX_SET_HPP_

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "monosep/errors.hpp"

namespace monosep {

/// A subset of the vertices 0..n-1 of a fixed universe, stored as a bitset.
/// Set algebra is only defined between sets over the same universe; mixing
/// universes throws ContractError. Immutable sharing across threads is safe.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : n_(universe), bits_(words(universe), 0) {
        if (universe < 0) throw ContractError("VertexSet: negative universe");
    }
    VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe) {
        for (int v : members) insert(v);
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (auto& w : s.bits_) w = ~uint64_t{0};
        s.trim();
        return s;
    }

    int universe() const { return n_; }

    bool contains(int v) const {
        return v >= 0 && v < n_ && (bits_[v >> 6] >> (v & 63)) & 1;
    }

    void insert(int v) {
        check_vertex(v);
        bits_[v >> 6] |= uint64_t{1} << (v & 63);
    }

    void erase(int v) {
        check_vertex(v);
        bits_[v >> 6] &= ~(uint64_t{1} << (v & 63));
    }

    VertexSet with(int v) const {
        VertexSet s = *this;
        s.insert(v);
        return s;
    }

    VertexSet without(int v) const {
        VertexSet s = *this;
        s.erase(v);
        return s;
    }

    int size() const {
        int c = 0;
        for (uint64_t w : bits_) c += __builtin_popcountll(w);
        return c;
    }

    bool empty() const {
        for (uint64_t w : bits_) {
            if (w) return false;
        }
        return true;
    }

    /// Smallest member, or -1 when empty.
    int first() const {
        for (size_t i = 0; i < bits_.size(); ++i) {
            if (bits_[i]) return int(i * 64 + __builtin_ctzll(bits_[i]));
        }
        return -1;
    }

    bool intersects(const VertexSet& o) const {
        check_universe(o);
        for (size_t i = 0; i < bits_.size(); ++i) {
            if (bits_[i] & o.bits_[i]) return true;
        }
        return false;
    }

    bool is_subset_of(const VertexSet& o) const {
        check_universe(o);
        for (size_t i = 0; i < bits_.size(); ++i) {
            if (bits_[i] & ~o.bits_[i]) return false;
        }
        return true;
    }

    VertexSet& operator|=(const VertexSet& o) {
        check_universe(o);
        for (size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        check_universe(o);
        for (size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
        return *this;
    }

    VertexSet& operator-=(const VertexSet& o) {
        check_universe(o);
        for (size_t i = 0; i < bits_.size(); ++i) bits_[i] &= ~o.bits_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const {
        VertexSet s(n_);
        for (size_t i = 0; i < bits_.size(); ++i) s.bits_[i] = ~bits_[i];
        s.trim();
        return s;
    }

    bool operator==(const VertexSet& o) const = default;

    /// Members in ascending order.
    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(size());
        for (int v : *this) out.push_back(v);
        return out;
    }

    class Iterator {
    public:
        Iterator(const VertexSet* s, int v) : set_(s), v_(v) {}
        int operator*() const { return v_; }
        Iterator& operator++() {
            v_ = set_->next_after(v_);
            return *this;
        }
        bool operator!=(const Iterator& o) const { return v_ != o.v_; }

    private:
        const VertexSet* set_;
        int v_;
    };

    Iterator begin() const { return Iterator(this, first() < 0 ? n_ : first()); }
    Iterator end() const { return Iterator(this, n_); }

private:
    static size_t words(int n) { return size_t(n + 63) / 64; }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw ContractError("vertex id out of universe");
    }

    void check_universe(const VertexSet& o) const {
        if (n_ != o.n_) throw ContractError("VertexSet universes differ");
    }

    void trim() {
        if (n_ % 64 != 0 && !bits_.empty()) {
            bits_.back() &= (uint64_t{1} << (n_ % 64)) - 1;
        }
    }

    int next_after(int v) const {
        ++v;
        if (v >= n_) return n_;
        size_t i = size_t(v) >> 6;
        uint64_t w = bits_[i] >> (v & 63);
        if (w) return v + __builtin_ctzll(w);
        for (++i; i < bits_.size(); ++i) {
            if (bits_[i]) return int(i * 64 + __builtin_ctzll(bits_[i]));
        }
        return n_;
    }

    int n_ = 0;
    std::vector<uint64_t> bits_;
};

}  // namespace monosep

#endif  // MONOSEP_VERTEX_SET_HPP_
