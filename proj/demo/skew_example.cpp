// Positive and signed expressions for x_{w/v}, and what they do to a Schubert polynomial.

#include <skewdd/fk_canonical.hpp>
#include <skewdd/skew.hpp>

#include <iostream>

int main() {
    using namespace skewdd;
    const Permutation w = from_word({2, 1, 3, 2}, 4);
    const Permutation v = from_word({2}, 4);

    const FKElement positive = skew_explicit(w, v);
    const FKElement signed_form = skew_signed(w, v);
    std::cout << "w = " << to_one_line_string(w) << ", v = " << to_one_line_string(v) << '\n';
    std::cout << "explicit: " << to_string(positive) << '\n';
    std::cout << "signed:   " << to_string(signed_form) << '\n';
    std::cout << "equal in FK_4: " << std::boolalpha << fk_equal(4, positive, signed_form) << '\n';

    const Permutation u = from_word({1, 3, 2}, 4);
    std::cout << "S_u = " << to_string(schubert(u)) << '\n';
    std::cout << "c_{uv}^w = " << structure_constant(u, v, w) << '\n';
}
