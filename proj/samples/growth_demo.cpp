// Prints the first few classical and modular growth numbers for ell = 3 and
// the tilting decomposition of T(1)^{(x)6}.

#include "tiltwalk/tiltwalk.hpp"

#include <iostream>

int main() {
    using namespace tiltwalk;
    const auto seqs = walks::streamed_sequences(3, 12);
    std::cout << "n  a_n  b_n  w_n\n";
    for (std::size_t n = 0; n <= 12; ++n)
        std::cout << n << "  " << seqs.a[n] << "  " << seqs.b[n] << "  " << seqs.walls[n] << '\n';

    const auto p = sl2::tensor_power(1, 6, 3);
    std::cout << "\nT(1)^6 at ell=3:";
    for (const auto& [k, m] : p.tilting) std::cout << "  " << m << " x T(" << k << ")";
    std::cout << "\nsummands=" << sl2::count_summands(p.tilting) << " weyl=" << sl2::count_weyl(p.weyl) << '\n';
}
