#include "resum/coupling.hpp"

namespace resum {

Coupling Coupling::parse(const std::string& text)
{
    if (text == "inf" || text == "infinity" || text == "Inf" || text == "INF")
        return infinity();
    return Coupling(parse_real(text));
}

std::string Coupling::str() const
{
    return infinite ? std::string("inf") : to_string(value, 20);
}

}  // namespace resum
