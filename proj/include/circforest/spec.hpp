#ifndef CIRCFOREST_SPEC_HPP
#define CIRCFOREST_SPEC_HPP

#include <string>
#include <vector>

namespace circforest {

/// Validated description of a circulant graph.
///
/// Without a half step this is C_n(s_1..s_k) with 1 <= s_1 < ... < s_k < n/2
/// (strict), every vertex of even degree 2k.  With a half step it is
/// C_{2n}(s_1..s_k, n) with s_k < n, every vertex of odd degree 2k+1; the
/// parameter n is then the half order and the graph has 2n vertices.
class CirculantSpec {
 public:
  /// Throws InputError with kind TooSmall when the vertex count is below 3
  /// and InvalidStepSet for any other violation.
  static CirculantSpec validate(std::vector<unsigned long> steps, bool half_step,
                                unsigned long n);

  const std::vector<unsigned long>& steps() const { return steps_; }
  bool half_step() const { return half_step_; }
  unsigned long n() const { return n_; }

  unsigned long vertex_count() const { return half_step_ ? 2 * n_ : n_; }
  unsigned long k() const { return steps_.size(); }
  unsigned long valency() const { return 2 * k() + (half_step_ ? 1 : 0); }

  /// "C_10(1,2)" or "C_6(1,3)" style label for messages and output.
  std::string name() const;

  /// Same step set and parity family at a different order parameter.
  CirculantSpec with_n(unsigned long n) const { return validate(steps_, half_step_, n); }

 private:
  CirculantSpec(std::vector<unsigned long> steps, bool half_step, unsigned long n)
      : steps_(std::move(steps)), half_step_(half_step), n_(n) {}

  std::vector<unsigned long> steps_;
  bool half_step_;
  unsigned long n_;
};

}  // namespace circforest

#endif
