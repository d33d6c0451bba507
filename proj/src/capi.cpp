#include "otwb.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "serialization.hpp"
#include "verifier.hpp"

struct otwb_session {
  otwb::Workspace workspace;
  std::string cache_dir;
  std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

std::vector<std::string> split_ids(const char* checks) {
  std::vector<std::string> out;
  if (!checks) return out;
  std::string all(checks);
  if (all.empty() || all == "all") return out;
  std::stringstream ss(all);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

extern "C" {

otwb_session* otwb_session_new(void) { return new otwb_session{}; }

void otwb_session_free(otwb_session* s) { delete s; }

otwb_status otwb_set_cache_dir(otwb_session* s, const char* dir) {
  if (!s) return OTWB_ERR_INVALID_ARGUMENT;
  s->last_error.clear();
  s->cache_dir = dir ? dir : "";
  // the workspace holds the cache directory, so rebuild it
  s->workspace = otwb::Workspace(s->cache_dir);
  return OTWB_OK;
}

otwb_status otwb_list_checks(otwb_session* s, char** out) {
  if (!s || !out) return OTWB_ERR_INVALID_ARGUMENT;
  s->last_error.clear();
  std::string joined;
  for (const auto& id : otwb::all_check_ids()) {
    if (!joined.empty()) joined += ",";
    joined += id;
  }
  *out = dup_string(joined);
  return OTWB_OK;
}

otwb_status otwb_run(otwb_session* s, const char* checks, int n_lo, int n_hi, unsigned flags,
                     char** out_reports, int* out_exit_code) {
  if (!s || !out_reports || !out_exit_code) return OTWB_ERR_INVALID_ARGUMENT;
  s->last_error.clear();
  if (n_lo < 1 || n_hi < n_lo) {
    s->last_error = "invalid n range";
    return OTWB_ERR_INVALID_ARGUMENT;
  }
  otwb::RunOptions opts;
  opts.n_lo = n_lo;
  opts.n_hi = n_hi;
  opts.long_run = (flags & OTWB_RUN_LONG) != 0;
  opts.inject_fault = (flags & OTWB_RUN_INJECT_FAULT) != 0;
  opts.checks = split_ids(checks);
  for (const auto& id : opts.checks) {
    const auto& known = otwb::all_check_ids();
    if (std::find(known.begin(), known.end(), id) == known.end()) {
      s->last_error = "unknown check id: " + id;
      return OTWB_ERR_INVALID_ARGUMENT;
    }
  }
  try {
    otwb::RunResult res = otwb::run_all(s->workspace, opts);
    std::string lines;
    for (const auto& r : res.reports) lines += r.to_json() + "\n";
    *out_reports = dup_string(lines);
    *out_exit_code = res.exit_code;
    return OTWB_OK;
  } catch (const std::exception& e) {
    s->last_error = e.what();
    return OTWB_ERR_INTERNAL;
  }
}

otwb_status otwb_character_table_csv(otwb_session* s, int n, char** out) {
  if (!s || !out) return OTWB_ERR_INVALID_ARGUMENT;
  s->last_error.clear();
  if (n < 1 || n > 8) {
    s->last_error = "n out of range 1..8";
    return OTWB_ERR_INVALID_ARGUMENT;
  }
  try {
    *out = dup_string(otwb::character_table_csv(n));
    return OTWB_OK;
  } catch (const std::exception& e) {
    s->last_error = e.what();
    return OTWB_ERR_INTERNAL;
  }
}

const char* otwb_last_error(const otwb_session* s) {
  return s ? s->last_error.c_str() : "null session";
}

void otwb_string_free(char* p) { std::free(p); }

}  // extern "C"
