#pragma once

#include "poly.hpp"

namespace artin {

// [m]_q = 1 + q + ... + q^{m-1}
UnivariatePoly q_analog(int m);

// [m]_q! = prod_{i=1..m} [i]_q
UnivariatePoly q_factorial(int m);

// [m i]_q = [m]_q! / ([i]_q! [m-i]_q!), exact division; 0 <= i <= m.
UnivariatePoly q_binomial(int m, int i);

// [2m]_{q,t}!! = [m]_q! * prod_{i=0..m-1} (1 + t q^i)
BivariatePoly qt_double_factorial(int m);

// [m i]'_{q,t} = [2m]!!/([2i]!! [m-i]!) = [m i]_q * prod_{j=i..m-1}(1+t q^j).
// Computed both ways and asserted equal.
BivariatePoly qt_primed_binomial(int m, int i);

}  // namespace artin
