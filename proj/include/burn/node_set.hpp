#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace burn {

using NodeId = std::uint32_t;

/// Fixed-universe bit set over dense node ids [0, universe).
class NodeSet {
public:
    NodeSet() = default;
    explicit NodeSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

    static NodeSet full(std::size_t universe)
    {
        NodeSet s(universe);
        for (auto & w : s.words_)
            w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    [[nodiscard]] std::size_t universe() const noexcept { return universe_; }

    void insert(NodeId v) noexcept { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(NodeId v) noexcept { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    [[nodiscard]] bool contains(NodeId v) const noexcept { return (words_[v >> 6] >> (v & 63)) & 1U; }

    [[nodiscard]] std::size_t count() const noexcept
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    [[nodiscard]] bool empty() const noexcept
    {
        for (auto w : words_)
            if (w != 0)
                return false;
        return true;
    }

    [[nodiscard]] bool is_full() const noexcept { return count() == universe_; }

    /// |this \ other|
    [[nodiscard]] std::size_t count_outside(const NodeSet & other) const noexcept
    {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & ~other.words_[i]));
        return c;
    }

    [[nodiscard]] bool is_subset_of(const NodeSet & other) const noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((words_[i] & ~other.words_[i]) != 0)
                return false;
        return true;
    }

    NodeSet & operator|=(const NodeSet & other) noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= other.words_[i];
        return *this;
    }

    NodeSet & operator&=(const NodeSet & other) noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= other.words_[i];
        return *this;
    }

    NodeSet & subtract(const NodeSet & other) noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~other.words_[i];
        return *this;
    }

    [[nodiscard]] NodeSet complement() const
    {
        NodeSet s(universe_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            s.words_[i] = ~words_[i];
        s.trim();
        return s;
    }

    /// Lowest member, if any.
    [[nodiscard]] std::optional<NodeId> first() const noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] != 0)
                return static_cast<NodeId>(i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i])));
        return std::nullopt;
    }

    template <typename F>
    void for_each(F && f) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            auto w = words_[i];
            while (w != 0) {
                f(static_cast<NodeId>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
                w &= w - 1;
            }
        }
    }

    [[nodiscard]] std::vector<NodeId> to_vector() const
    {
        std::vector<NodeId> out;
        out.reserve(count());
        for_each([&](NodeId v) { out.push_back(v); });
        return out;
    }

    friend bool operator==(const NodeSet &, const NodeSet &) = default;

private:
    void trim() noexcept
    {
        if (universe_ % 64 != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
    }

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace burn
