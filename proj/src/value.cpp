#include "monopro/value.hpp"

#include <sstream>

namespace monopro {

Value Value::num(std::int64_t n) { return Value(Repr(n)); }

Value Value::str(std::string s) { return Value(Repr(std::move(s))); }

Value Value::pair(Value a, Value b) {
  return tuple({std::move(a), std::move(b)});
}

Value Value::tuple(std::vector<Value> parts) {
  if (parts.size() < 2) fail("Value::tuple: arity must be at least 2");
  return Value(Repr(Tuple{std::move(parts)}));
}

Value Value::list(std::vector<Value> items) {
  return Value(Repr(ListV{std::move(items)}));
}

Value Value::some(Value v) {
  return Value(Repr(OptV{std::make_shared<const Value>(std::move(v))}));
}

Value Value::none() { return Value(Repr(OptV{nullptr})); }

Value Value::fn(Fn f) {
  if (!f) fail("Value::fn: empty function");
  return Value(Repr(std::move(f)));
}

std::int64_t Value::as_num() const {
  if (const auto* n = std::get_if<std::int64_t>(&repr_)) return *n;
  fail("Value: expected an integer, got " + show());
}

const std::string& Value::as_str() const {
  if (const auto* s = std::get_if<std::string>(&repr_)) return *s;
  fail("Value: expected a string, got " + show());
}

const std::vector<Value>& Value::parts() const {
  if (const auto* t = std::get_if<Tuple>(&repr_)) return t->parts;
  fail("Value: expected a tuple, got " + show());
}

const std::vector<Value>& Value::items() const {
  if (const auto* l = std::get_if<ListV>(&repr_)) return l->items;
  fail("Value: expected a list, got " + show());
}

const Value& Value::first() const {
  const auto& p = parts();
  if (p.size() != 2) fail("Value: expected a pair, got " + show());
  return p[0];
}

const Value& Value::second() const {
  const auto& p = parts();
  if (p.size() != 2) fail("Value: expected a pair, got " + show());
  return p[1];
}

bool Value::is_some() const {
  if (const auto* o = std::get_if<OptV>(&repr_)) return o->v != nullptr;
  fail("Value: expected an option, got " + show());
}

const Value& Value::content() const {
  if (const auto* o = std::get_if<OptV>(&repr_)) {
    if (o->v) return *o->v;
    fail("Value: content() on none");
  }
  fail("Value: expected an option, got " + show());
}

Value Value::call(const Value& arg) const {
  if (const auto* f = std::get_if<Fn>(&repr_)) return (*f)(arg);
  fail("Value: expected a function, got " + show());
}

bool Value::operator==(const Value& rhs) const {
  if (repr_.index() != rhs.repr_.index()) return false;
  if (is_unit()) return true;
  if (is_num()) return as_num() == rhs.as_num();
  if (is_str()) return as_str() == rhs.as_str();
  if (is_tuple()) return parts() == rhs.parts();
  if (is_list()) return items() == rhs.items();
  if (is_option()) {
    if (is_some() != rhs.is_some()) return false;
    return !is_some() || content() == rhs.content();
  }
  fail("Value: function values are not comparable");
}

namespace {

void quote_into(std::ostringstream& os, const std::string& s) {
  os << '"';
  for (char c : s) {
    if (c == '"' || c == '\\') os << '\\';
    os << c;
  }
  os << '"';
}

}  // namespace

std::string Value::show() const {
  std::ostringstream os;
  if (is_unit()) {
    os << "()";
  } else if (is_num()) {
    os << as_num();
  } else if (is_str()) {
    quote_into(os, as_str());
  } else if (is_tuple()) {
    os << '(';
    bool sep = false;
    for (const auto& v : parts()) {
      if (sep) os << ',';
      os << v.show();
      sep = true;
    }
    os << ')';
  } else if (is_list()) {
    os << '[';
    bool sep = false;
    for (const auto& v : items()) {
      if (sep) os << ',';
      os << v.show();
      sep = true;
    }
    os << ']';
  } else if (is_option()) {
    if (is_some())
      os << "Some " << content().show();
    else
      os << "None";
  } else {
    os << "<fn>";
  }
  return os.str();
}

}  // namespace monopro
