#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace monopro {

/// Domain error: malformed shapes, tag mismatches, out-of-range arities.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

[[noreturn]] inline void fail(const std::string& msg) { throw Error(msg); }

/// A dynamically typed value: the closed algebra every mapping in this
/// library works over. Variants: unit, integer, string, tuple (arity >= 2),
/// list, option, function.
///
/// Tuples of arity 2 double as the pairs produced by splits and parallel
/// composition; wider tuples are the sources/targets of the each-N optics.
class Value {
public:
  using Fn = std::function<Value(const Value&)>;

  Value() : repr_(Unit{}) {}

  static Value unit() { return Value(); }
  static Value num(std::int64_t n);
  static Value str(std::string s);
  static Value pair(Value a, Value b);
  static Value tuple(std::vector<Value> parts);
  static Value list(std::vector<Value> items);
  static Value some(Value v);
  static Value none();
  static Value fn(Fn f);

  bool is_unit() const { return std::holds_alternative<Unit>(repr_); }
  bool is_num() const { return std::holds_alternative<std::int64_t>(repr_); }
  bool is_str() const { return std::holds_alternative<std::string>(repr_); }
  bool is_tuple() const { return std::holds_alternative<Tuple>(repr_); }
  bool is_list() const { return std::holds_alternative<ListV>(repr_); }
  bool is_option() const { return std::holds_alternative<OptV>(repr_); }
  bool is_fn() const { return std::holds_alternative<Fn>(repr_); }

  std::int64_t as_num() const;
  const std::string& as_str() const;
  const std::vector<Value>& parts() const;  // any tuple
  const std::vector<Value>& items() const;  // list

  /// Components of a 2-tuple.
  const Value& first() const;
  const Value& second() const;

  /// Option observers.
  bool is_some() const;
  const Value& content() const;

  /// Apply a function value.
  Value call(const Value& arg) const;

  bool operator==(const Value& rhs) const;
  bool operator!=(const Value& rhs) const { return !(*this == rhs); }

  std::string show() const;

private:
  struct Unit {};
  struct Tuple {
    std::vector<Value> parts;
  };
  struct ListV {
    std::vector<Value> items;
  };
  struct OptV {
    std::shared_ptr<const Value> v;  // null means none
  };
  using Repr = std::variant<Unit, std::int64_t, std::string, Tuple, ListV, OptV, Fn>;

  explicit Value(Repr r) : repr_(std::move(r)) {}

  Repr repr_;
};

}  // namespace monopro
