#ifndef OCP_COST_HPP
#define OCP_COST_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace ocp {

/// Exact nonnegative integer kept as a normalized sum of powers of two.
/// Exponents are stored strictly decreasing; the empty list is zero.
/// Costs in this problem are sums of few terms 2^u with potentially huge u,
/// so a sparse exponent list beats a positional bignum.
class BigCost {
public:
    BigCost() = default;

    static BigCost zero() { return BigCost{}; }

    static BigCost pow2(std::uint64_t exponent) {
        BigCost c;
        c.terms_.push_back(exponent);
        return c;
    }

    /// Builds from an arbitrary (unsorted, possibly duplicated) exponent list.
    static BigCost from_exponents(std::vector<std::uint64_t> exponents) {
        std::sort(exponents.begin(), exponents.end());
        BigCost c;
        for (std::uint64_t e : exponents) c.add_term(e);
        return c;
    }

    static BigCost from_uint(std::uint64_t value) {
        BigCost c;
        for (int bit = 63; bit >= 0; --bit)
            if (value >> bit & 1) c.terms_.push_back(static_cast<std::uint64_t>(bit));
        return c;
    }

    /// Parses a decimal digit string (no sign, no separators).
    static BigCost from_decimal(const std::string& decimal);

    bool is_zero() const { return terms_.empty(); }

    /// floor(log2(value)); invalid on zero.
    std::uint64_t max_exponent() const {
        if (terms_.empty()) throw std::domain_error("BigCost: log2 of zero");
        return terms_.front();
    }

    std::size_t term_count() const { return terms_.size(); }

    /// Exponents in decreasing order.
    const std::vector<std::uint64_t>& exponents() const { return terms_; }

    BigCost& operator+=(const BigCost& other) {
        for (auto it = other.terms_.rbegin(); it != other.terms_.rend(); ++it)
            add_term(*it);
        return *this;
    }

    friend BigCost operator+(BigCost a, const BigCost& b) {
        a += b;
        return a;
    }

    /// Integer comparison. Normal form makes it lexicographic on term lists.
    int compare(const BigCost& other) const {
        std::size_t n = std::min(terms_.size(), other.terms_.size());
        for (std::size_t i = 0; i < n; ++i) {
            if (terms_[i] != other.terms_[i]) return terms_[i] < other.terms_[i] ? -1 : 1;
        }
        if (terms_.size() != other.terms_.size())
            return terms_.size() < other.terms_.size() ? -1 : 1;
        return 0;
    }

    friend bool operator==(const BigCost& a, const BigCost& b) { return a.compare(b) == 0; }
    friend bool operator!=(const BigCost& a, const BigCost& b) { return a.compare(b) != 0; }
    friend bool operator<(const BigCost& a, const BigCost& b) { return a.compare(b) < 0; }
    friend bool operator<=(const BigCost& a, const BigCost& b) { return a.compare(b) <= 0; }
    friend bool operator>(const BigCost& a, const BigCost& b) { return a.compare(b) > 0; }
    friend bool operator>=(const BigCost& a, const BigCost& b) { return a.compare(b) >= 0; }

    /// Value as uint64; throws if it does not fit.
    std::uint64_t to_uint() const {
        std::uint64_t v = 0;
        for (std::uint64_t e : terms_) {
            if (e > 63) throw std::overflow_error("BigCost: value exceeds 64 bits");
            v |= std::uint64_t{1} << e;
        }
        return v;
    }

    std::string to_decimal() const;

    /// log2 of the value as a double (0 maps to -inf). Approximate; for reports only.
    double log2_approx() const {
        if (terms_.empty()) return -std::numeric_limits<double>::infinity();
        double frac = 0.0;
        std::uint64_t top = terms_.front();
        for (std::uint64_t e : terms_) {
            if (top - e > 60) break;
            frac += std::ldexp(1.0, -static_cast<int>(top - e));
        }
        return static_cast<double>(top) + std::log2(frac);
    }

private:
    // Inserts 2^e, carrying while the exponent collides with an existing term.
    void add_term(std::uint64_t e) {
        auto it = std::lower_bound(terms_.rbegin(), terms_.rend(), e).base();
        // it points past the last term >= e in decreasing order
        while (it != terms_.begin() && *(it - 1) == e) {
            it = terms_.erase(it - 1);
            ++e;
        }
        terms_.insert(it, e);
    }

    std::vector<std::uint64_t> terms_;
};

namespace detail {

// value *= 2 (+ carry_in) on a decimal digit string
inline std::string decimal_double(const std::string& dec, int carry_in) {
    std::string out;
    out.reserve(dec.size() + 1);
    int carry = carry_in;
    for (auto it = dec.rbegin(); it != dec.rend(); ++it) {
        int d = (*it - '0') * 2 + carry;
        out.push_back(static_cast<char>('0' + d % 10));
        carry = d / 10;
    }
    if (carry) out.push_back(static_cast<char>('0' + carry));
    std::reverse(out.begin(), out.end());
    return out;
}

// value /= 2, returns remainder bit
inline int decimal_halve(std::string& dec) {
    std::string out;
    out.reserve(dec.size());
    int rem = 0;
    for (char ch : dec) {
        int d = rem * 10 + (ch - '0');
        out.push_back(static_cast<char>('0' + d / 2));
        rem = d % 2;
    }
    std::size_t nz = out.find_first_not_of('0');
    dec = nz == std::string::npos ? "0" : out.substr(nz);
    return rem;
}

} // namespace detail

inline BigCost BigCost::from_decimal(const std::string& decimal) {
    if (decimal.empty() || decimal.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("BigCost: bad decimal string '" + decimal + "'");
    std::string work = decimal;
    std::vector<std::uint64_t> exps;
    std::uint64_t bit = 0;
    while (work != "0") {
        if (detail::decimal_halve(work)) exps.push_back(bit);
        ++bit;
    }
    return from_exponents(std::move(exps));
}

inline std::string BigCost::to_decimal() const {
    if (terms_.empty()) return "0";
    std::string dec = "0";
    std::uint64_t top = terms_.front();
    std::size_t next = 0;
    for (std::uint64_t bit = top + 1; bit-- > 0;) {
        int set = next < terms_.size() && terms_[next] == bit ? 1 : 0;
        if (set) ++next;
        dec = detail::decimal_double(dec, set);
    }
    return dec;
}

} // namespace ocp

#endif
