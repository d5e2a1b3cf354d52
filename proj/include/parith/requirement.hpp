#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace parith {

struct EncodingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DuplicateVariable : EncodingError {
    using EncodingError::EncodingError;
};
struct ArityError : EncodingError {
    using EncodingError::EncodingError;
};
struct RangeError : EncodingError {
    using EncodingError::EncodingError;
};
struct PolarityError : EncodingError {
    using EncodingError::EncodingError;
};

// A literal is the signed shortcut for "X_k = 1" (k) or "X_k = 0" (-k),
// k being a 1-based global variable index.
using Literal = std::int32_t;

inline std::int32_t var_of(Literal l) { return l < 0 ? -l : l; }
inline bool is_positive(Literal l) { return l > 0; }

// A conjunction of 1..3 literals over distinct variables, stored sorted by
// variable index so that (4;2;7) and (2;4;7) name the same LP unknown.
class Requirement {
  public:
    Requirement() = default;

    explicit Requirement(std::span<const Literal> lits) { init(lits); }
    Requirement(std::initializer_list<Literal> lits) {
        init({lits.begin(), lits.size()});
    }

    int arity() const { return arity_; }
    Literal lit(int i) const { return lits_[static_cast<std::size_t>(i)]; }
    std::span<const Literal> literals() const {
        return {lits_.data(), static_cast<std::size_t>(arity_)};
    }

    bool contains_var(std::int32_t v) const {
        for (int i = 0; i < arity_; ++i)
            if (var_of(lits_[static_cast<std::size_t>(i)]) == v) return true;
        return false;
    }

    // Literal on variable v; throws if v is absent.
    Literal literal_on(std::int32_t v) const {
        for (int i = 0; i < arity_; ++i)
            if (var_of(lits_[static_cast<std::size_t>(i)]) == v)
                return lits_[static_cast<std::size_t>(i)];
        throw RangeError("variable not in requirement");
    }

    // Requirement with the literal on variable v removed; arity must be >= 2.
    Requirement without_var(std::int32_t v) const {
        std::vector<Literal> rest;
        for (int i = 0; i < arity_; ++i)
            if (var_of(lits_[static_cast<std::size_t>(i)]) != v)
                rest.push_back(lits_[static_cast<std::size_t>(i)]);
        if (rest.size() == static_cast<std::size_t>(arity_))
            throw RangeError("variable not in requirement");
        return Requirement(std::span<const Literal>{rest});
    }

    bool all_positive() const {
        for (int i = 0; i < arity_; ++i)
            if (lits_[static_cast<std::size_t>(i)] < 0) return false;
        return true;
    }

    // Packed form for hashing / ordering keys: 21 signed bits per literal.
    std::uint64_t packed() const {
        std::uint64_t key = 0;
        for (int i = 0; i < 3; ++i) {
            std::int64_t l = i < arity_ ? lits_[static_cast<std::size_t>(i)] : 0;
            key |= (static_cast<std::uint64_t>(l) & 0x1FFFFF) << (21 * i);
        }
        return key;
    }

    // Serialized form "(k1;k2;k3)".
    std::string str() const {
        std::string s = "(";
        for (int i = 0; i < arity_; ++i) {
            if (i) s += ';';
            s += std::to_string(lits_[static_cast<std::size_t>(i)]);
        }
        return s + ")";
    }

    friend bool operator==(const Requirement& a, const Requirement& b) {
        return a.arity_ == b.arity_ && a.lits_ == b.lits_;
    }

    // Total order: arity first, then variables, then signs (+ before -).
    // Deterministic unknown tables across runs depend on this.
    friend std::strong_ordering operator<=>(const Requirement& a,
                                            const Requirement& b) {
        if (a.arity_ != b.arity_) return a.arity_ <=> b.arity_;
        for (int i = 0; i < a.arity_; ++i) {
            Literal la = a.lits_[static_cast<std::size_t>(i)];
            Literal lb = b.lits_[static_cast<std::size_t>(i)];
            if (var_of(la) != var_of(lb)) return var_of(la) <=> var_of(lb);
            if (la != lb) return lb <=> la;  // positive sorts first
        }
        return std::strong_ordering::equal;
    }

  private:
    void init(std::span<const Literal> lits) {
        if (lits.empty() || lits.size() > 3)
            throw ArityError("requirement must have 1 to 3 literals");
        arity_ = static_cast<int>(lits.size());
        std::array<Literal, 3> tmp{0, 0, 0};
        for (std::size_t i = 0; i < lits.size(); ++i) {
            if (lits[i] == 0) throw RangeError("literal index must be nonzero");
            tmp[i] = lits[i];
        }
        for (int i = 1; i < arity_; ++i)
            for (int j = i; j > 0 && var_of(tmp[static_cast<std::size_t>(j - 1)]) >
                                        var_of(tmp[static_cast<std::size_t>(j)]);
                 --j)
                std::swap(tmp[static_cast<std::size_t>(j - 1)],
                          tmp[static_cast<std::size_t>(j)]);
        for (int i = 1; i < arity_; ++i)
            if (var_of(tmp[static_cast<std::size_t>(i - 1)]) ==
                var_of(tmp[static_cast<std::size_t>(i)]))
                throw DuplicateVariable("duplicate variable in requirement");
        lits_ = tmp;
    }

    std::array<Literal, 3> lits_{0, 0, 0};
    int arity_ = 0;
};

inline Requirement canonicalize(std::span<const Literal> lits) {
    return Requirement(lits);
}

// Closure of r under literal removal and polarity switch, r included,
// the empty requirement excluded.  |result| is 2, 8 or 26 for arity 1, 2, 3.
std::vector<Requirement> variants(const Requirement& r);

}  // namespace parith

template <>
struct std::hash<parith::Requirement> {
    std::size_t operator()(const parith::Requirement& r) const noexcept {
        return std::hash<std::uint64_t>{}(r.packed());
    }
};
