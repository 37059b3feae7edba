// Builds E_4, prints every element, and re-checks the defining identities.

#include <iostream>

#include "sepinv/sepinv.hpp"

int main() {
    using namespace sepinv;
    const int n = 4;
    const SeparatingSet set = build_E(n);
    std::cout << "E_" << n << " has " << set.count() << " elements, max degree " << set.max_degree() << ":\n";
    for (const auto& e : set.elements) std::cout << "  " << e.label.to_string() << " = " << e.poly.pretty() << "\n";

    std::cout << "\nkernel membership: " << (verify_kernel_membership(set).ok() ? "ok" : "FAILED") << "\n";
    std::cout << "stratum properties: " << (check_stratum_properties(set).ok() ? "ok" : "FAILED") << "\n";
    for (int m = 0; 2 * m + 1 <= n; ++m)
        std::cout << "D s_" << m << " = f_" << m << ": "
                  << (derive(DerivationKind::Weitzenboeck, n, build_s(n, m)) == build_f(n, m) ? "ok" : "FAILED")
                  << "\n";
    return 0;
}
