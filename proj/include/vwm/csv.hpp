#ifndef VWM_CSV_HPP_
#define VWM_CSV_HPP_

#include <string>

namespace vwm {

// Shortest "%.10g" rendering; the fixed precision keeps golden files stable.
std::string format_real(double x);

}  // namespace vwm

#endif  // VWM_CSV_HPP_
