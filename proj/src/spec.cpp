#include "circforest/spec.hpp"

#include <sstream>

#include "circforest/errors.hpp"

namespace circforest {

CirculantSpec CirculantSpec::validate(std::vector<unsigned long> steps, bool half_step,
                                      unsigned long n) {
  unsigned long vertices = half_step ? 2 * n : n;
  if (vertices < 3) throw InputError("TooSmall", "vertex count below 3");
  if (steps.empty()) throw InputError("InvalidStepSet", "at least one step is required");
  unsigned long prev = 0;
  for (unsigned long s : steps) {
    if (s == 0) throw InputError("InvalidStepSet", "steps must be positive");
    if (s <= prev) throw InputError("InvalidStepSet", "steps must be strictly increasing");
    prev = s;
  }
  unsigned long sk = steps.back();
  if (half_step) {
    if (sk >= n) throw InputError("InvalidStepSet", "largest step must satisfy s_k < n");
  } else {
    // Strict s_k < n/2: the theorems exclude the repeated-adjacency case
    // s_k = n/2, which is rejected rather than reinterpreted.
    if (2 * sk >= n)
      throw InputError("InvalidStepSet", "largest step must satisfy s_k < n/2 (strict)");
  }
  return CirculantSpec(std::move(steps), half_step, n);
}

std::string CirculantSpec::name() const {
  std::ostringstream os;
  os << "C_" << vertex_count() << "(";
  for (size_t i = 0; i < steps_.size(); ++i) {
    if (i) os << ",";
    os << steps_[i];
  }
  if (half_step_) os << "," << n_;
  os << ")";
  return os.str();
}

}  // namespace circforest
