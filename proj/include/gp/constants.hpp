#ifndef GP_CONSTANTS_HPP
#define GP_CONSTANTS_HPP

#include <complex>

namespace gp {

using Complex = std::complex<double>;

inline constexpr double pi          = 3.14159265358979323846264338327950288;
inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;
inline constexpr double ln_two_pi   = 1.83787706640934548356065947281123527;

} // namespace gp

#endif
