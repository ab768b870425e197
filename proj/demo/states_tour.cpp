// Builds one state of every family and prints its basic statistics.
//
//   demo_states_tour [alpha] [m] [chi]
#include <cstdio>
#include <cstdlib>
#include <optional>

#include "kerrcs/kerrcs.hpp"

using namespace kerrcs;

int main(int argc, char** argv) {
  const double alpha = argc > 1 ? std::atof(argv[1]) : 1.1;
  const std::size_t m = argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 1;
  const double chi = argc > 3 ? std::atof(argv[3]) : 0.15;

  std::printf("alpha = %g, m = %zu, chi/omega0 = %g\n\n", alpha, m, chi);
  std::printf("%-10s %6s %12s %12s %12s %12s\n", "family", "dim", "<n>", "Var n", "Q", "W(0)");
  for (Family f : {Family::kCoherent, Family::kPacs, Family::kNlcs, Family::kDocs,
                   Family::kDpancsA, Family::kDpancsD}) {
    const std::optional<KerrParams> params =
        is_deformed(f) ? std::optional(KerrParams(chi)) : std::nullopt;
    const FockState s = make_state(f, alpha, takes_photon_count(f) ? m : 0, params);
    const PhotonDistribution d = photon_distribution(s);
    std::printf("%-10s %6zu %12.6f %12.6f %12.6f %12.6f\n",
                std::string(to_string(f)).c_str(), s.dim(), d.mean(), d.variance(),
                mandel_q(d), wigner(s, 0.0));
  }
  // Q = Var n / <n>: 1 for Poisson light, below 1 sub-Poissonian.
  return 0;
}
