#include "latbar/latbar.h"

#include <limits>
#include <new>
#include <string>

#include "pipeline.hpp"

struct latbar_job {
  std::string kind, command, input, aux;
  latbar::pipeline::Options opt;
  latbar::pipeline::Outcome outcome;
};

extern "C" {

latbar_job* latbar_job_new(const char* kind, const char* command, const char* input) {
  auto* job = new (std::nothrow) latbar_job;
  if (!job) return nullptr;
  if (kind) job->kind = kind;
  if (command) job->command = command;
  if (input) job->input = input;
  return job;
}

void latbar_job_set_aux(latbar_job* job, const char* aux) {
  if (job) job->aux = aux ? aux : "";
}

int latbar_job_set_option(latbar_job* job, const char* name, long value) {
  if (!job || !name) return 1;
  std::string n = name;
  if (n == "degree-bound") {
    if (value < 0) return 1;
    job->opt.degree_bound = int(value);
  } else if (n == "face-cap") {
    if (value < 1) return 1;
    job->opt.face_cap = int(value);
  } else if (n == "orders") {
    if (value < 0) return 1;
    job->opt.orders = int(value);
  } else if (n == "seed") {
    if (value < 0) return 1;
    job->opt.seed = unsigned(value);
  } else if (n == "limit-states") {
    if (value < 1) return 1;
    job->opt.limit_states = size_t(value);
  } else if (n == "machine") {
    job->opt.machine = value != 0;
  } else {
    return 1;
  }
  return 0;
}

int latbar_job_run(latbar_job* job) {
  if (!job) return LATBAR_BAD_INPUT;
  job->outcome = latbar::pipeline::run(job->kind, job->command, job->input, job->aux, job->opt);
  return job->outcome.status;
}

const char* latbar_job_report(const latbar_job* job) {
  return job ? job->outcome.report.c_str() : "";
}

const char* latbar_job_error(const latbar_job* job) {
  return job ? job->outcome.error.c_str() : "";
}

void latbar_job_free(latbar_job* job) { delete job; }

const char* latbar_version(void) { return "0.1.0"; }

}  // extern "C"
