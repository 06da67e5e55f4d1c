#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace fgl {

// A finite subset of {0, .., 31}, used both for variable supports of series
// monomials and for faces D^J of an s.n.c. configuration. Indices are
// 0-based in the API; serializations print them 1-based.
class Face
{
public:
    static constexpr int max_index = 32;

    constexpr Face() = default;
    Face(std::initializer_list<int> indices)
    {
        for (int i : indices)
            bits_ |= bit(i);
    }

    static Face from_indices(const std::vector<int>& indices)
    {
        Face f;
        for (int i : indices)
            f.bits_ |= bit(i);
        return f;
    }
    static constexpr Face from_bits(std::uint32_t bits)
    {
        Face f;
        f.bits_ = bits;
        return f;
    }
    static Face singleton(int i) { return from_bits(bit(i)); }

    std::uint32_t bits() const { return bits_; }
    int size() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }
    bool contains(int i) const { return (bits_ >> i) & 1u; }
    bool is_subset_of(Face other) const { return (bits_ & ~other.bits_) == 0; }

    Face operator|(Face o) const { return from_bits(bits_ | o.bits_); }
    Face operator&(Face o) const { return from_bits(bits_ & o.bits_); }
    Face without(int i) const { return from_bits(bits_ & ~bit(i)); }
    Face with(int i) const { return from_bits(bits_ | bit(i)); }

    // Ascending 0-based indices.
    std::vector<int> indices() const
    {
        std::vector<int> out;
        for (std::uint32_t b = bits_; b != 0; b &= b - 1)
            out.push_back(std::countr_zero(b));
        return out;
    }

    // "{1,2}" with 1-based indices.
    std::string to_string() const
    {
        std::string s = "{";
        bool first = true;
        for (int i : indices()) {
            if (!first)
                s += ",";
            s += std::to_string(i + 1);
            first = false;
        }
        return s + "}";
    }

    // Canonical order: by cardinality, then lexicographically on the sorted
    // index lists.
    friend std::strong_ordering operator<=>(const Face& a, const Face& b)
    {
        if (auto c = a.size() <=> b.size(); c != 0)
            return c;
        // Equal sizes: the first differing position of the sorted lists is
        // the smallest element of the symmetric difference.
        const std::uint32_t diff = a.bits_ ^ b.bits_;
        if (diff == 0)
            return std::strong_ordering::equal;
        const std::uint32_t lowest = diff & (~diff + 1);
        return (a.bits_ & lowest) != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    friend bool operator==(const Face&, const Face&) = default;

private:
    static std::uint32_t bit(int i) { return std::uint32_t{1} << i; }

    std::uint32_t bits_ = 0;
};

} // namespace fgl
