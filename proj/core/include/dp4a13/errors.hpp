#ifndef DP4A13_ERRORS_HPP
#define DP4A13_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dp4a13 {

// Error conditions surfaced by the library. Kept as one enum so callers
// (and the CLI) can map them to exit codes.
enum class Errc {
    zero_vector,
    not_on_surface,
    bound_too_large,
    not_divisible,
    zero_leading_coefficient,
    all_sections_zero,
    boundary_not_unit,
    unbounded_polytope,
    quadrature_non_convergence,
    not_prime,
    internal_mismatch,
    method_disagreement,
    bad_argument,
    overflow,
};

class DomainError : public std::runtime_error {
  public:
    DomainError(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
    throw DomainError(code, what);
}

} // namespace dp4a13

#endif
