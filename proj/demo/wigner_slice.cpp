// Wigner function along the real axis for both photon-added Kerr families,
// from the generic overlap route and from the closed-form series.
//
//   demo_wigner_slice [alpha] [m] [chi] > slice.csv
#include <cstdio>
#include <cstdlib>

#include "kerrcs/kerrcs.hpp"

using namespace kerrcs;

int main(int argc, char** argv) {
  const double alpha = argc > 1 ? std::atof(argv[1]) : 1.1;
  const std::size_t m = argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 1;
  const KerrParams p(argc > 3 ? std::atof(argv[3]) : 0.15);

  const FockState a = dpancs_a(alpha, m, p);
  const FockState d = dpancs_d(alpha, m, p);
  std::printf("x,w_a,w_a_closed,w_d,w_d_closed\n");
  for (int i = -40; i <= 40; ++i) {
    const complex z(0.1 * i, 0.0);
    std::printf("%.2f,%.10f,%.10f,%.10f,%.10f\n", z.real(), wigner(a, z),
                wigner_closed_a(z, alpha, m, p), wigner(d, z), wigner_closed_d(z, alpha, m, p));
  }
  return 0;
}
