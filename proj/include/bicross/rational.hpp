#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace bicross {

// Exact rational scalar. All arithmetic in the library is exact; there is no
// floating point anywhere on the computation path.
using Rat = mpq_class;

inline Rat rat_from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

// Canonical form: "p" when the denominator is 1, otherwise "p/q".
inline std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace bicross
