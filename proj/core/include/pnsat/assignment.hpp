#pragma once

#include <cstdint>
#include <vector>

#include "pnsat/formula.hpp"

namespace pnsat {

enum class Value : std::int8_t { False = -1, Unassigned = 0, True = 1 };

// Per-variable truth values, 1-based.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(int num_vars)
      : values_(static_cast<std::size_t>(num_vars) + 1, Value::Unassigned) {}

  int num_vars() const { return static_cast<int>(values_.size()) - 1; }
  Value value(int var) const { return values_[var]; }
  bool assigned(int var) const { return values_[var] != Value::Unassigned; }

  bool is_true(Lit l) const {
    return values_[l.var()] == (l.negated() ? Value::False : Value::True);
  }
  bool is_false(Lit l) const {
    return values_[l.var()] == (l.negated() ? Value::True : Value::False);
  }

  // Makes l true.
  void set(Lit l) {
    values_[l.var()] = l.negated() ? Value::False : Value::True;
    ++assigned_count_;
  }
  void clear(int var) {
    values_[var] = Value::Unassigned;
    --assigned_count_;
  }

  int assigned_count() const { return assigned_count_; }

 private:
  std::vector<Value> values_;
  int assigned_count_ = 0;
};

}  // namespace pnsat
