#include <weierforge/numsg/semigroup.hpp>

#include <algorithm>
#include <numeric>
#include <ostream>
#include <regex>
#include <set>
#include <sstream>

#include <weierforge/error.hpp>

namespace weierforge::numsg
{

NumericalSemigroup::NumericalSemigroup() : NumericalSemigroup(std::vector<int>{}) {}

NumericalSemigroup::NumericalSemigroup(std::vector<int> gaps) : gaps_(std::move(gaps))
{
    const int c = conductor();
    for (int n = 0; n < c; ++n) {
        if (contains(n)) {
            small_.push_back(n);
        }
    }
    // Every minimal generator is at most c + m, m the multiplicity.
    const int m = small_.size() > 1 ? small_[1] : std::max(c, 1);
    std::vector<int> elems;
    for (int n = 1; n <= c + m; ++n) {
        if (!contains(n)) {
            continue;
        }
        bool decomposable = false;
        for (int a : elems) {
            if (2 * a > n) {
                break;
            }
            if (contains(n - a)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) {
            generators_.push_back(n);
        }
        elems.push_back(n);
    }
}

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<int> generators)
{
    ensure(!generators.empty(), ErrorCode::not_cofinite, "no generators given");
    int g = 0;
    for (int x : generators) {
        ensure(x > 0, ErrorCode::invalid_argument, "generators must be positive");
        g = std::gcd(g, x);
    }
    ensure(g == 1, ErrorCode::not_cofinite, "generators have gcd " + std::to_string(g) + ", the semigroup is not cofinite");
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    const int least = generators.front();
    // Once `least` consecutive integers are in S, everything after is.
    std::vector<bool> in{true};
    std::vector<int> gaps;
    int run = 1;
    for (int n = 1; run < least; ++n) {
        bool member = false;
        for (int a : generators) {
            if (a > n) {
                break;
            }
            if (in[static_cast<std::size_t>(n - a)]) {
                member = true;
                break;
            }
        }
        in.push_back(member);
        if (member) {
            ++run;
        } else {
            run = 0;
            gaps.push_back(n);
        }
    }
    return NumericalSemigroup(std::move(gaps));
}

NumericalSemigroup NumericalSemigroup::from_gaps(std::vector<int> gaps)
{
    std::sort(gaps.begin(), gaps.end());
    ensure(std::adjacent_find(gaps.begin(), gaps.end()) == gaps.end(), ErrorCode::invalid_argument, "repeated gap");
    ensure(gaps.empty() || gaps.front() > 0, ErrorCode::invalid_argument, "gaps must be positive");
    NumericalSemigroup s(std::move(gaps));
    const int c = s.conductor();
    for (int a : s.small_) {
        for (int b : s.small_) {
            if (a + b < c && !s.contains(a + b)) {
                fail(ErrorCode::not_closed, std::to_string(a) + " + " + std::to_string(b) + " is declared a gap");
            }
        }
    }
    return s;
}

NumericalSemigroup NumericalSemigroup::parse(const std::string &text)
{
    std::string body;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const unsigned char ch = static_cast<unsigned char>(text[i]);
        if (ch >= 0x80) {
            continue; // the angle brackets of "⟨a,b⟩"
        }
        if (ch != '<' && ch != '>' && ch != ' ') {
            body += text[i];
        }
    }
    if (body == "N" || body.empty()) {
        return naturals();
    }
    static const std::regex list(R"(\d+(,\d+)*)");
    if (!std::regex_match(body, list)) {
        fail(ErrorCode::parse_error, "cannot parse semigroup generators '" + text + "'");
    }
    std::vector<int> gens;
    std::stringstream ss(body);
    for (std::string item; std::getline(ss, item, ',');) {
        ensure(item.size() < 9, ErrorCode::invalid_argument, "generator too large: " + item);
        gens.push_back(std::stoi(item));
    }
    return from_generators(std::move(gens));
}

std::vector<int> NumericalSemigroup::first_elements(std::size_t count) const
{
    std::vector<int> out;
    for (int n = 0; out.size() < count; ++n) {
        if (contains(n)) {
            out.push_back(n);
        }
    }
    return out;
}

bool NumericalSemigroup::contains(long long n) const
{
    if (n < 0) {
        return false;
    }
    if (n >= conductor()) {
        return true;
    }
    return !std::binary_search(gaps_.begin(), gaps_.end(), static_cast<int>(n));
}

bool NumericalSemigroup::is_symmetric() const
{
    const int c = conductor();
    bool by_reflection = true;
    for (int m = 0; m < c; ++m) {
        if (contains(m) == contains(c - 1 - m)) {
            by_reflection = false;
            break;
        }
    }
    const bool by_count = c == 2 * genus();
    ensure(by_reflection == by_count, ErrorCode::internal, "symmetry tests disagree for " + to_string());
    return by_reflection;
}

long long NumericalSemigroup::weight() const
{
    long long w = 0;
    for (std::size_t j = 0; j < gaps_.size(); ++j) {
        w += gaps_[j] - static_cast<long long>(j + 1);
    }
    return w;
}

std::string NumericalSemigroup::to_string() const
{
    if (gaps_.empty()) {
        return "N";
    }
    std::ostringstream os;
    os << '<';
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        os << (i ? "," : "") << generators_[i];
    }
    os << '>';
    return os.str();
}

std::vector<NumericalSemigroup> semigroups_of_genus(int genus)
{
    ensure(genus >= 0, ErrorCode::invalid_argument, "negative genus");
    std::vector<NumericalSemigroup> level{NumericalSemigroup::naturals()};
    for (int g = 0; g < genus; ++g) {
        std::vector<NumericalSemigroup> next;
        for (const auto &s : level) {
            for (int m : s.generators()) {
                if (m < s.conductor()) {
                    continue;
                }
                std::vector<int> gaps = s.gaps();
                gaps.push_back(m);
                next.push_back(NumericalSemigroup::from_gaps(std::move(gaps)));
            }
        }
        level = std::move(next);
    }
    std::sort(level.begin(), level.end(),
              [](const NumericalSemigroup &a, const NumericalSemigroup &b) { return a.gaps() < b.gaps(); });
    return level;
}

std::ostream &operator<<(std::ostream &os, const NumericalSemigroup &s)
{
    return os << s.to_string();
}

} // namespace weierforge::numsg
