#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace graphring {

/// Fixed-universe bitset over the vertices {0, ..., size-1} of some graph.
class VertexSet {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    VertexSet() = default;

    explicit VertexSet(std::size_t universe) : _size(universe), _words((universe + 63) / 64, 0) {}

    VertexSet(std::size_t universe, std::initializer_list<std::size_t> members) : VertexSet(universe)
    {
        for (auto v : members)
            set(v);
    }

    static auto full(std::size_t universe) -> VertexSet
    {
        VertexSet s(universe);
        for (auto & w : s._words)
            w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    [[nodiscard]] auto universe() const noexcept -> std::size_t { return _size; }

    void set(std::size_t v) { _words[v >> 6] |= bit(v); }
    void reset(std::size_t v) { _words[v >> 6] &= ~bit(v); }
    [[nodiscard]] auto test(std::size_t v) const -> bool { return (_words[v >> 6] & bit(v)) != 0; }

    [[nodiscard]] auto count() const -> std::size_t
    {
        std::size_t c = 0;
        for (auto w : _words)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    [[nodiscard]] auto empty() const -> bool
    {
        return std::all_of(_words.begin(), _words.end(), [](auto w) { return w == 0; });
    }
    [[nodiscard]] auto any() const -> bool { return ! empty(); }

    /// First member at index >= from, or npos.
    [[nodiscard]] auto next(std::size_t from) const -> std::size_t
    {
        if (from >= _size)
            return npos;
        std::size_t wi = from >> 6;
        std::uint64_t w = _words[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w != 0)
                return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi == _words.size())
                return npos;
            w = _words[wi];
        }
    }
    [[nodiscard]] auto first() const -> std::size_t { return next(0); }

    template <typename F>
    void for_each(F && f) const
    {
        for (std::size_t wi = 0; wi < _words.size(); ++wi) {
            std::uint64_t w = _words[wi];
            while (w != 0) {
                f((wi << 6) + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    [[nodiscard]] auto members() const -> std::vector<std::size_t>
    {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t v) { out.push_back(v); });
        return out;
    }

    auto operator&=(const VertexSet & o) -> VertexSet &
    {
        for (std::size_t i = 0; i < _words.size(); ++i)
            _words[i] &= o._words[i];
        return *this;
    }
    auto operator|=(const VertexSet & o) -> VertexSet &
    {
        for (std::size_t i = 0; i < _words.size(); ++i)
            _words[i] |= o._words[i];
        return *this;
    }
    /// Set difference.
    auto operator-=(const VertexSet & o) -> VertexSet &
    {
        for (std::size_t i = 0; i < _words.size(); ++i)
            _words[i] &= ~o._words[i];
        return *this;
    }

    friend auto operator&(VertexSet a, const VertexSet & b) -> VertexSet { return a &= b; }
    friend auto operator|(VertexSet a, const VertexSet & b) -> VertexSet { return a |= b; }
    friend auto operator-(VertexSet a, const VertexSet & b) -> VertexSet { return a -= b; }

    [[nodiscard]] auto complement() const -> VertexSet
    {
        VertexSet c = *this;
        for (auto & w : c._words)
            w = ~w;
        c.trim();
        return c;
    }

    [[nodiscard]] auto is_subset_of(const VertexSet & o) const -> bool
    {
        for (std::size_t i = 0; i < _words.size(); ++i)
            if ((_words[i] & ~o._words[i]) != 0)
                return false;
        return true;
    }

    [[nodiscard]] auto intersects(const VertexSet & o) const -> bool
    {
        for (std::size_t i = 0; i < _words.size(); ++i)
            if ((_words[i] & o._words[i]) != 0)
                return true;
        return false;
    }

    [[nodiscard]] auto intersection_count(const VertexSet & o) const -> std::size_t
    {
        std::size_t c = 0;
        for (std::size_t i = 0; i < _words.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(_words[i] & o._words[i]));
        return c;
    }

    [[nodiscard]] auto words() const noexcept -> const std::vector<std::uint64_t> & { return _words; }

    friend auto operator==(const VertexSet &, const VertexSet &) -> bool = default;

    /// Lexicographic order on the increasing member sequences; a proper prefix sorts first.
    [[nodiscard]] static auto lex_less(const VertexSet & a, const VertexSet & b) -> bool
    {
        std::size_t x = a.first(), y = b.first();
        while (x != npos && y != npos) {
            if (x != y)
                return x < y;
            x = a.next(x + 1);
            y = b.next(y + 1);
        }
        return x == npos && y != npos;
    }

    [[nodiscard]] auto to_string() const -> std::string
    {
        std::string s = "{";
        bool first_member = true;
        for_each([&](std::size_t v) {
            if (! first_member)
                s += ",";
            s += std::to_string(v);
            first_member = false;
        });
        return s + "}";
    }

    [[nodiscard]] auto hash() const noexcept -> std::size_t
    {
        std::size_t h = _size * 0x9e3779b97f4a7c15ULL;
        for (auto w : _words)
            h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

private:
    static constexpr auto bit(std::size_t v) -> std::uint64_t { return std::uint64_t{1} << (v & 63); }

    void trim()
    {
        if (_size % 64 != 0 && ! _words.empty())
            _words.back() &= (std::uint64_t{1} << (_size % 64)) - 1;
    }

    std::size_t _size = 0;
    std::vector<std::uint64_t> _words;
};

struct VertexSetHash {
    auto operator()(const VertexSet & s) const noexcept -> std::size_t { return s.hash(); }
};

} // namespace graphring
