#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weierforge::numsg
{

// A cofinite additive submonoid of the nonnegative integers, stored by its
// gap set. Everything else is derived once at construction.
class NumericalSemigroup
{
public:
    // The semigroup of all nonnegative integers (no gaps).
    NumericalSemigroup();

    // Throws NotCofinite when the gcd of the generators is not 1.
    static NumericalSemigroup from_generators(std::vector<int> generators);
    // Validates that the complement of the gaps is closed under addition.
    static NumericalSemigroup from_gaps(std::vector<int> gaps);
    static NumericalSemigroup naturals()
    {
        return NumericalSemigroup();
    }
    // Generator lists such as "<3,4>", "⟨3,4⟩" or "3,4"; "N" for the naturals.
    static NumericalSemigroup parse(const std::string &text);

    const std::vector<int> &gaps() const noexcept
    {
        return gaps_;
    }
    // Least c with c + N contained in S; 0 for the naturals.
    int conductor() const noexcept
    {
        return gaps_.empty() ? 0 : gaps_.back() + 1;
    }
    int genus() const noexcept
    {
        return static_cast<int>(gaps_.size());
    }
    // The elements n_0 = 0 < n_1 < ... below the conductor.
    const std::vector<int> &small_elements() const noexcept
    {
        return small_;
    }
    // The first `count` elements of S in increasing order.
    std::vector<int> first_elements(std::size_t count) const;
    bool contains(long long n) const;
    const std::vector<int> &generators() const noexcept
    {
        return generators_;
    }

    // m in S iff c - 1 - m not in S for 0 <= m < c. Also verifies c = 2 delta
    // gives the same answer and raises Internal if not.
    bool is_symmetric() const;
    // sum over j of (l_j - j).
    long long weight() const;

    std::string to_string() const;

    friend bool operator==(const NumericalSemigroup &a, const NumericalSemigroup &b)
    {
        return a.gaps_ == b.gaps_;
    }
    friend bool operator!=(const NumericalSemigroup &a, const NumericalSemigroup &b)
    {
        return !(a == b);
    }

private:
    explicit NumericalSemigroup(std::vector<int> gaps);

    std::vector<int> gaps_;
    std::vector<int> small_;
    std::vector<int> generators_;
};

// Every numerical semigroup of the given genus, by the usual tree in which
// the children of S remove one minimal generator at or above the conductor.
// Sorted by gap set.
std::vector<NumericalSemigroup> semigroups_of_genus(int genus);

std::ostream &operator<<(std::ostream &os, const NumericalSemigroup &s);

} // namespace weierforge::numsg
