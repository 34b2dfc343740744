#ifndef LIECOH_EMIT_HPP
#define LIECOH_EMIT_HPP

#include "liecoh/assemble.hpp"
#include "liecoh/graded.hpp"

#include <json.hpp>

#include <string>

namespace liecoh {

inline constexpr const char* kSchema = "liecoh/1";

nlohmann::json poly_to_json(const Poly& p);
nlohmann::json matrix_to_json(const IntegerMatrix& m);
nlohmann::json graded_to_json(const GradedAbelianGroup& g);
nlohmann::json modp_ring_to_json(const ModPRing& r);
nlohmann::json integral_ring_to_json(const IntegralRing& r);
nlohmann::json theta_to_json(const ThetaExpression& t);

std::string poly_to_latex(const Poly& p);
std::string graded_to_latex(const GradedAbelianGroup& g);
std::string modp_ring_to_latex(const ModPRing& r);
std::string integral_ring_to_latex(const IntegralRing& r);

} // namespace liecoh

#endif
