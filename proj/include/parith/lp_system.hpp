#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "parith/rational.hpp"
#include "parith/requirement.hpp"

namespace parith {

struct ContradictoryData : EncodingError {
    using EncodingError::EncodingError;
};

enum class ConstraintKind { Data, Structural, Universal };

inline const char* kind_name(ConstraintKind k) {
    switch (k) {
        case ConstraintKind::Data: return "data";
        case ConstraintKind::Structural: return "structural";
        case ConstraintKind::Universal: return "universal";
    }
    return "?";
}

using UnknownId = std::int32_t;

// One sparse equation sum(coef * unknown) = rhs.
struct LinearConstraint {
    struct Term {
        UnknownId unknown;
        Rational coef;
    };
    std::vector<Term> terms;
    Rational rhs = 0;
    ConstraintKind kind = ConstraintKind::Structural;
};

// Deterministic Requirement -> id table: ids follow the total order on
// requirements (arity, then variables, then signs), so two builds of the
// same spec number unknowns identically.
class UnknownTable {
  public:
    void insert(const Requirement& r) { reqs_.push_back(r); }

    // Sorts, dedupes and freezes the table.  insert() is invalid afterwards.
    void freeze();

    bool frozen() const { return frozen_; }
    std::size_t size() const { return reqs_.size(); }
    const Requirement& requirement(UnknownId id) const {
        return reqs_[static_cast<std::size_t>(id)];
    }
    UnknownId id_of(const Requirement& r) const;
    std::optional<UnknownId> find(const Requirement& r) const;

    const std::vector<Requirement>& requirements() const { return reqs_; }

  private:
    std::vector<Requirement> reqs_;
    bool frozen_ = false;
};

enum class EnvironmentKind { Addition, ShiftedAddition, Multiplication };

struct Environment {
    EnvironmentKind kind = EnvironmentKind::Addition;
    std::int32_t n = 0;
    std::int32_t m = 0;  // unused for plain addition
};

struct SystemCounts {
    std::size_t data = 0;
    std::size_t structural = 0;
    std::size_t universal = 0;
    std::size_t total() const { return data + structural + universal; }
};

struct LpSystem {
    Environment env;
    UnknownTable unknowns;
    std::vector<LinearConstraint> constraints;

    SystemCounts counts() const {
        SystemCounts c;
        for (const auto& row : constraints) {
            switch (row.kind) {
                case ConstraintKind::Data: ++c.data; break;
                case ConstraintKind::Structural: ++c.structural; break;
                case ConstraintKind::Universal: ++c.universal; break;
            }
        }
        return c;
    }
};

}  // namespace parith
