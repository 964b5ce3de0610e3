// Prints how the Alice-Rob entanglement degrades as Rob's acceleration grows,
// and how Alice's own acceleration degrades it further.

#include <cstdio>
#include <initializer_list>

#include "rqi/measures.hpp"
#include "rqi/unruh.hpp"

int main() {
  std::printf("%8s %10s %10s %10s %10s\n", "Omega", "r", "C_AI", "N_AI", "N_dual");
  for (double omega : {5.0, 1.0, 0.5, 0.2, 0.1, 0.0}) {
    const auto r = rqi::r_from_omega_ratio(omega);
    const auto rho = rqi::accelerate(rqi::bell_state(), r);
    const auto rho_ai = rqi::partial_trace(rho, {"A", "I"});
    const auto both = rqi::dual_acceleration(r, r);
    std::printf("%8.2f %10.6f %10.6f %10.6f %10.6f\n", omega, r.r(), rqi::concurrence(rho_ai),
                rqi::log_negativity(rho_ai), rqi::log_negativity(both));
  }
}
