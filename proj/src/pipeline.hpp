#pragma once
#include <string>

namespace latbar::pipeline {

struct Options {
  int degree_bound = 0;       // 0 selects the automatic bound
  int face_cap = 4;           // largest vertex-set size examined for faces
  int orders = 20;            // random term-order samples
  unsigned seed = 0;          // seed for all randomized sampling
  size_t limit_states = 1000000;  // fiber/search state ceiling
  bool machine = false;       // emit machine-readable output
};

struct Outcome {
  int status = 0;  // 0 ok, 1 parse error, 2 verification failure, 3 resource bound
  std::string report;
  std::string error;  // set when status != 0
};

// Runs one batch job. kind: matrix-kernel | lattice-basis | graph |
// determinantal. command: circuits | complex | bounds | markov | graph |
// det | verify-witness. input: document text or generator name. aux: witness
// polynomials for verify-witness. Never throws; failures land in Outcome.
Outcome run(const std::string& kind, const std::string& command, const std::string& input,
            const std::string& aux, const Options& opt);

}  // namespace latbar::pipeline
