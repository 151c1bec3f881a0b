// KG(6,2) does not map to K3, but its blowup maps to the blowup of K3.

#include <graphring/graphring.hpp>

#include <iostream>

int main()
{
    using namespace graphring;
    auto kg = kneser(6, 2);
    auto labels = k_subsets(6, 2);

    std::cout << "KG(6,2): " << kg.size() << " vertices, " << kg.edge_count() << " edges\n";
    std::cout << "K6/2 == KG(6,2): " << (fractionalize(complete(6), 2) == kg ? "yes" : "no") << '\n';
    std::cout << "chi = " << chi(kg) << ", chi_f = " << fractional_chromatic(kg) << '\n';
    std::cout << "KG(6,2) -> K3: " << to_string(exists_hom(kg, complete(3)).answer) << '\n';

    auto f = frachom(kg, complete(3), 2);
    std::cout << "KG(6,2) lex 2 -> K3 lex 2: " << to_string(f.answer) << " at d=" << f.d << '\n';
    // a vertex (S, i) of the blowup goes to colour c(S, i) of K3 lex 2 = K6
    for (std::size_t v = 0; v < kg.size(); ++v) {
        std::cout << "  " << labels[v].to_string() << " -> {" << f.witness->map[2 * v] << "," << f.witness->map[2 * v + 1]
                  << "}\n";
    }
}
