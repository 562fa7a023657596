#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace coolnum {

using NodeId = int;

/// Fixed-universe set of node ids 0..universe-1, stored as a bitset.
class NodeSet {
public:
    NodeSet() = default;
    explicit NodeSet(int universe) :
        universe_(universe), words_((static_cast<std::size_t>(universe) + 63) / 64, 0)
    {
    }

    static NodeSet full(int universe)
    {
        NodeSet s(universe);
        for (NodeId v = 0; v < universe; ++v)
            s.insert(v);
        return s;
    }

    int universe() const noexcept { return universe_; }

    bool contains(NodeId v) const noexcept
    {
        return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
    }

    /// Returns true if v was newly inserted.
    bool insert(NodeId v) noexcept
    {
        auto & w = words_[static_cast<std::size_t>(v) >> 6];
        const std::uint64_t bit = std::uint64_t{1} << (v & 63);
        const bool fresh = (w & bit) == 0;
        w |= bit;
        return fresh;
    }

    void erase(NodeId v) noexcept
    {
        words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    int count() const noexcept
    {
        int c = 0;
        for (auto w : words_)
            c += std::popcount(w);
        return c;
    }

    bool empty() const noexcept { return count() == 0; }
    bool is_full() const noexcept { return count() == universe_; }

    std::vector<NodeId> to_vector() const
    {
        std::vector<NodeId> out;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            auto w = words_[i];
            while (w) {
                out.push_back(static_cast<NodeId>(i * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
        return out;
    }

    NodeSet & operator|=(const NodeSet & other) noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= other.words_[i];
        return *this;
    }

    friend bool operator==(const NodeSet &, const NodeSet &) = default;

private:
    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

template <typename Range>
NodeSet make_node_set(int universe, const Range & ids)
{
    NodeSet s(universe);
    for (auto v : ids)
        s.insert(static_cast<NodeId>(v));
    return s;
}

} // namespace coolnum
