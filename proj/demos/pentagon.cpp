// Shannon capacity of the pentagon, pinned from both sides.

#include <graphring/graphring.hpp>

#include <cmath>
#include <iostream>

int main()
{
    using namespace graphring;
    auto c5 = cycle(5);

    std::cout << "omega(C5)        = " << omega(c5) << '\n';
    std::cout << "omega(C5 * C5)   = " << omega(disjunctive(c5, c5)) << '\n';
    std::cout << "chi(C5)          = " << chi(c5) << '\n';
    std::cout << "chi_f(C5)        = " << fractional_chromatic(c5) << '\n';

    auto t = theta_bar(c5);
    std::cout << "theta_bar(C5)    in [" << t.lower << ", " << t.upper << "]\n";

    auto b = shannon_bounds(c5);
    std::cout << "capacity         in [" << b.lower.value << ", " << b.upper.value << "]\n";
    std::cout << "  lower: " << b.lower.certificate << '\n';
    std::cout << "  upper: " << b.upper.certificate << '\n';
    std::cout << "sqrt(5)          = " << std::sqrt(5.0) << '\n';
}
