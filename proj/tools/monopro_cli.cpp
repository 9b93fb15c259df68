// Demo CLI over the C API. Subcommands:
//   monopro monocle fold    --arity N --values v1,v2,...
//   monopro monocle foldmap --arity N --map NAME --values v1,v2,...
//   monopro qsort W1 W2 ...
// Exit codes: 0 success, 1 stopped quicksort, 2 usage error.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "monopro/monopro.h"

namespace {

void usage() {
  std::fprintf(stderr,
               "usage: monopro monocle fold --arity N --values v1,v2,...\n"
               "       monopro monocle foldmap --arity N --map NAME --values v1,v2,...\n"
               "       monopro qsort [WORD ...]\n");
}

int usage_error() {
  usage();
  return 2;
}

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<const char*> c_view(const std::vector<std::string>& values) {
  std::vector<const char*> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.c_str());
  return out;
}

struct MonocleArgs {
  long arity = -1;
  std::string map_name;
  bool has_values = false;
  std::vector<std::string> values;
};

bool parse_monocle_args(int argc, char** argv, int from, MonocleArgs* args) {
  for (int i = from; i < argc; ++i) {
    const std::string flag = argv[i];
    if (i + 1 >= argc) return false;
    const std::string value = argv[++i];
    if (flag == "--arity") {
      char* end = nullptr;
      args->arity = std::strtol(value.c_str(), &end, 10);
      if (!end || *end != '\0') return false;
    } else if (flag == "--map") {
      args->map_name = value;
    } else if (flag == "--values") {
      args->values = split_csv(value);
      args->has_values = true;
    } else {
      return false;
    }
  }
  return args->arity >= 0 && args->has_values;
}

int run_monocle(int argc, char** argv) {
  if (argc < 3) return usage_error();
  const std::string action = argv[2];
  MonocleArgs args;
  if (!parse_monocle_args(argc, argv, 3, &args)) return usage_error();
  auto values = c_view(args.values);

  char* out = nullptr;
  monopro_status status;
  if (action == "fold") {
    if (!args.map_name.empty()) return usage_error();
    status = monopro_monocle_fold(static_cast<size_t>(args.arity), values.data(),
                                  values.size(), &out);
  } else if (action == "foldmap") {
    if (args.map_name.empty()) return usage_error();
    status = monopro_monocle_foldmap(static_cast<size_t>(args.arity), args.map_name.c_str(),
                                     values.data(), values.size(), &out);
  } else {
    return usage_error();
  }

  if (status == MONOPRO_ERR_USAGE) return usage_error();
  if (status != MONOPRO_OK || !out) {
    std::fprintf(stderr, "monopro: internal error\n");
    return 2;
  }
  std::printf("%s\n", out);
  monopro_string_free(out);
  return 0;
}

int run_qsort(int argc, char** argv) {
  std::vector<std::string> words;
  for (int i = 2; i < argc; ++i) words.emplace_back(argv[i]);
  auto values = c_view(words);

  monopro_qsort* q = monopro_qsort_run(values.data(), values.size());
  if (!q) {
    std::fprintf(stderr, "monopro: internal error\n");
    return 2;
  }
  for (size_t i = 0; i < monopro_qsort_log_count(q); ++i)
    std::printf("%s\n", monopro_qsort_log_line(q, i));

  int code;
  if (monopro_qsort_succeeded(q)) {
    std::string joined;
    for (size_t i = 0; i < monopro_qsort_result_count(q); ++i) {
      if (i > 0) joined += ' ';
      joined += monopro_qsort_result_word(q, i);
    }
    std::printf("RESULT: %s\n", joined.c_str());
    code = 0;
  } else {
    std::printf("FAIL\n");
    code = 1;
  }
  monopro_qsort_free(q);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) return usage_error();
  const std::string command = argv[1];
  if (command == "monocle") return run_monocle(argc, argv);
  if (command == "qsort") return run_qsort(argc, argv);
  return usage_error();
}
