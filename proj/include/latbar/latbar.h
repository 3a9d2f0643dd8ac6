#ifndef LATBAR_H
#define LATBAR_H

/* C interface for the lattice-ideal toolkit. A job bundles one command with
 * its input document and options; running it produces a status code plus a
 * textual (or machine-readable) report. All strings are UTF-8 and owned by
 * the job; they stay valid until the job is freed or run again. */

#ifdef __cplusplus
extern "C" {
#endif

typedef struct latbar_job latbar_job;

/* Status codes returned by latbar_job_run. */
#define LATBAR_OK 0
#define LATBAR_BAD_INPUT 1       /* malformed input or unknown kind/command */
#define LATBAR_VERIFY_FAILED 2   /* a verification or consistency check failed */
#define LATBAR_RESOURCE_LIMIT 3  /* a configured work ceiling was hit */

/* kind: matrix-kernel | lattice-basis | graph | determinantal.
 * command: circuits | complex | bounds | markov | graph | det |
 * verify-witness. input: document text, or a generator name such as
 * wheel:5 for graph inputs. Returns NULL only on allocation failure. */
latbar_job* latbar_job_new(const char* kind, const char* command, const char* input);

/* Auxiliary document (witness polynomials for verify-witness). */
void latbar_job_set_aux(latbar_job* job, const char* aux);

/* Numeric options: degree-bound, face-cap, orders, seed, limit-states,
 * machine (nonzero selects machine-readable reports). Returns 0 on success,
 * nonzero for an unknown name or out-of-range value. */
int latbar_job_set_option(latbar_job* job, const char* name, long value);

/* Executes the job; returns one of the status codes above. Safe to call
 * repeatedly; each run replaces the previous report. */
int latbar_job_run(latbar_job* job);

/* Report text of the last run ("" before the first run). */
const char* latbar_job_report(const latbar_job* job);

/* Error message of the last run ("" when it succeeded). */
const char* latbar_job_error(const latbar_job* job);

void latbar_job_free(latbar_job* job);

const char* latbar_version(void);

#ifdef __cplusplus
}
#endif

#endif /* LATBAR_H */
