// Separation and orbit decisions on a few points of V_2, including the
// classic pair that no invariant can tell apart.

#include <iostream>

#include "sepinv/sepinv.hpp"

namespace {
void report(int n, const sepinv::RationalPoint& v, const sepinv::RationalPoint& w) {
    using namespace sepinv;
    const auto sep = decide_separated(n, v, w);
    const auto orb = same_orbit(n, v, w);
    std::cout << "v vs w: ";
    if (sep.separated)
        std::cout << "separated by " << sep.witness->label.to_string() << " ("
                  << format_rational(sep.witness->at_v) << " vs " << format_rational(sep.witness->at_w) << ")";
    else
        std::cout << "not separated";
    std::cout << "; same orbit: " << (orb.same_orbit ? "yes" : "no");
    if (orb.translation) std::cout << " (a = " << format_rational(*orb.translation) << ")";
    std::cout << "\n";
}
}  // namespace

int main() {
    using namespace sepinv;
    const RationalPoint v{Rational(1), Rational(2), Rational(3)};
    report(2, v, flow_point(2, Rational(1), v));
    report(2, {Rational(1), Rational(0), Rational(0)}, {Rational(1), Rational(0), Rational(1)});
    // Different orbits, yet every invariant agrees on them.
    report(2, {Rational(0), Rational(1), Rational(0)}, {Rational(0), Rational(-1), Rational(0)});
    return 0;
}
