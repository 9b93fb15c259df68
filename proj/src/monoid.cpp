#include "monopro/monoid.hpp"

namespace monopro {

Value Monoid::empty() const {
  switch (kind_) {
    case Kind::string_concat: return Value::str("");
    case Kind::list_concat: return Value::list({});
    case Kind::int_sum: return Value::num(0);
  }
  fail("Monoid::empty: bad kind");
}

Value Monoid::combine(const Value& a, const Value& b) const {
  switch (kind_) {
    case Kind::string_concat: return Value::str(a.as_str() + b.as_str());
    case Kind::list_concat: {
      std::vector<Value> out = a.items();
      out.insert(out.end(), b.items().begin(), b.items().end());
      return Value::list(std::move(out));
    }
    case Kind::int_sum: return Value::num(a.as_num() + b.as_num());
  }
  fail("Monoid::combine: bad kind");
}

}  // namespace monopro
