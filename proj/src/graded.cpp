#include "liecoh/graded.hpp"

#include <sstream>

namespace liecoh {

std::string GradedAbelianGroup::str() const
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, p] : by_degree) {
        if (!first) os << "; ";
        first = false;
        os << "H^" << d << " = ";
        bool any = false;
        if (p.free_rank > 0) {
            os << "Z";
            if (p.free_rank > 1) os << "^" << p.free_rank;
            any = true;
        }
        for (const auto& t : p.torsion) {
            if (any) os << " + ";
            os << "Z/" << t;
            any = true;
        }
        if (!any) os << "0";
    }
    if (first) os << "0";
    return os.str();
}

} // namespace liecoh
