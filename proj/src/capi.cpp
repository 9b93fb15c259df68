#include "monopro/monopro.h"

#include <cctype>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "monopro/effect.hpp"
#include "monopro/monocle.hpp"

namespace {

using namespace monopro;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<std::string> collect(const char* const* values, size_t count) {
  std::vector<std::string> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) out.emplace_back(values ? values[i] : "");
  return out;
}

bool arity_ok(size_t arity, size_t count) { return arity >= 2 && arity <= 4 && count == arity; }

Value tuple_of(const std::vector<std::string>& values) {
  std::vector<Value> parts;
  parts.reserve(values.size());
  for (const auto& v : values) parts.push_back(Value::str(v));
  return Value::tuple(std::move(parts));
}

}  // namespace

extern "C" {

monopro_status monopro_monocle_fold(size_t arity, const char* const* values, size_t count,
                                    char** out) {
  if (!out) return MONOPRO_ERR_USAGE;
  *out = nullptr;
  if (!arity_ok(arity, count)) return MONOPRO_ERR_USAGE;
  try {
    Value folded = fold_of(each(static_cast<int>(arity)), Monoid::string_concat(),
                           tuple_of(collect(values, count)));
    *out = dup_string(folded.as_str());
    return *out ? MONOPRO_OK : MONOPRO_ERR_INTERNAL;
  } catch (...) {
    return MONOPRO_ERR_INTERNAL;
  }
}

monopro_status monopro_monocle_foldmap(size_t arity, const char* map_name,
                                       const char* const* values, size_t count, char** out) {
  if (!out) return MONOPRO_ERR_USAGE;
  *out = nullptr;
  if (!arity_ok(arity, count) || !map_name) return MONOPRO_ERR_USAGE;
  const std::string name(map_name);
  try {
    Value source = tuple_of(collect(values, count));
    std::string rendered;
    if (name == "len") {
      Transform len([](const Value& v) {
        return Value::num(static_cast<std::int64_t>(v.as_str().size()));
      });
      Value total =
          fold_map_of(each(static_cast<int>(arity)), Monoid::int_sum(), len, source);
      rendered = std::to_string(total.as_num());
    } else if (name == "upper") {
      Transform upper([](const Value& v) {
        std::string s = v.as_str();
        for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        return Value::str(s);
      });
      Value joined = fold_map_of(each(static_cast<int>(arity)), Monoid::string_concat(),
                                 upper, source);
      rendered = joined.as_str();
    } else {
      return MONOPRO_ERR_USAGE;
    }
    *out = dup_string(rendered);
    return *out ? MONOPRO_OK : MONOPRO_ERR_INTERNAL;
  } catch (...) {
    return MONOPRO_ERR_INTERNAL;
  }
}

void monopro_string_free(char* s) { std::free(s); }

struct monopro_qsort {
  bool ok = false;
  std::vector<std::string> log;
  std::vector<std::string> result;
};

monopro_qsort* monopro_qsort_run(const char* const* words, size_t count) {
  auto* handle = new (std::nothrow) monopro_qsort();
  if (!handle) return nullptr;
  try {
    Container out = qsort_logged(collect(words, count));
    handle->log = out.log();
    if (out.value().is_some()) {
      handle->ok = true;
      handle->result = value_words(out.value().content());
    }
  } catch (...) {
    delete handle;
    return nullptr;
  }
  return handle;
}

int monopro_qsort_succeeded(const monopro_qsort* q) { return q && q->ok ? 1 : 0; }

size_t monopro_qsort_log_count(const monopro_qsort* q) { return q ? q->log.size() : 0; }

const char* monopro_qsort_log_line(const monopro_qsort* q, size_t i) {
  if (!q || i >= q->log.size()) return nullptr;
  return q->log[i].c_str();
}

size_t monopro_qsort_result_count(const monopro_qsort* q) {
  return q ? q->result.size() : 0;
}

const char* monopro_qsort_result_word(const monopro_qsort* q, size_t i) {
  if (!q || i >= q->result.size()) return nullptr;
  return q->result[i].c_str();
}

void monopro_qsort_free(monopro_qsort* q) { delete q; }

}  // extern "C"
