#ifndef OTWB_H
#define OTWB_H

/* C interface to the verification workbench.  All functions returning
 * otwb_status report OTWB_OK on success; on failure a message is
 * retrievable via otwb_last_error until the next call on the same
 * session.  Strings handed out must be released with otwb_string_free.
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef struct otwb_session otwb_session;

typedef enum {
  OTWB_OK = 0,
  OTWB_ERR_INVALID_ARGUMENT = 1,
  OTWB_ERR_INTERNAL = 2
} otwb_status;

/* Bit flags for otwb_run. */
#define OTWB_RUN_LONG 0x1
#define OTWB_RUN_INJECT_FAULT 0x2

otwb_session* otwb_session_new(void);
void otwb_session_free(otwb_session* s);

/* Directory for cached idempotent JSON; empty or NULL disables caching. */
otwb_status otwb_set_cache_dir(otwb_session* s, const char* dir);

/* Comma-separated check ids understood by otwb_run. */
otwb_status otwb_list_checks(otwb_session* s, char** out);

/* Runs checks for n_lo..n_hi.  `checks` is a comma-separated id list,
 * NULL or "" or "all" for everything.  *out_reports receives one JSON
 * object per line; *out_exit_code is 0 iff every asserting non-skipped
 * check passed (the conjecture report and skips never count).
 */
otwb_status otwb_run(otwb_session* s, const char* checks, int n_lo, int n_hi, unsigned flags,
                     char** out_reports, int* out_exit_code);

/* CSV of the full irreducible character table of the symmetric group. */
otwb_status otwb_character_table_csv(otwb_session* s, int n, char** out);

const char* otwb_last_error(const otwb_session* s);
void otwb_string_free(char* p);

#ifdef __cplusplus
}
#endif

#endif /* OTWB_H */
