// Lists F_n + F_m that are perfect squares for small indices and shows the
// product form F_N * L_M of the parity-matched ones.

#include "fibsum/fibsum.hpp"

#include <iostream>

int main() {
  fibsum::SearchConfig config;
  config.max_n = 60;
  config.minus = false;
  config.include_degenerate = false;

  for (const auto& r : fibsum::search(config)) {
    if (r.p % 2 != 0) continue;
    std::cout << fibsum::to_table_row(r);
    if ((r.n - r.m) % 2 == 0) {
      const auto f = fibsum::sum_factorization(r.n, r.m, r.sign);
      std::cout << "  = F_" << f.N << " * L_" << f.M;
    }
    std::cout << '\n';
  }
}
