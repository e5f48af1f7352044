#pragma once

#include "resum/real.hpp"

#include <string>

namespace resum {

// A coupling value or the g -> infinity sentinel.
struct Coupling {
    Real value = 0;
    bool infinite = false;

    Coupling() = default;
    Coupling(const Real& g) : value(g) {}
    Coupling(int g) : value(g) {}
    static Coupling infinity()
    {
        Coupling c;
        c.infinite = true;
        return c;
    }

    // "inf" / "infinity" or a decimal
    static Coupling parse(const std::string& text);
    std::string str() const;
};

}  // namespace resum
