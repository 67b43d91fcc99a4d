#ifndef HYPOEXP_ERRORS_HPP
#define HYPOEXP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hypoexp {

struct NonPositiveScale : std::invalid_argument {
    explicit NonPositiveScale(const std::string& what) : std::invalid_argument(what) {}
};

struct NegativeThreshold : std::invalid_argument {
    explicit NegativeThreshold(const std::string& what) : std::invalid_argument(what) {}
};

struct DuplicateScales : std::invalid_argument {
    explicit DuplicateScales(const std::string& what) : std::invalid_argument(what) {}
};

struct DuplicateValue : std::invalid_argument {
    explicit DuplicateValue(const std::string& what) : std::invalid_argument(what) {}
};

struct DimensionTooLarge : std::invalid_argument {
    explicit DimensionTooLarge(const std::string& what) : std::invalid_argument(what) {}
};

// Adaptive quadrature could not meet the requested tolerance. Never returned
// as a silently wrong value.
struct ToleranceNotAchieved : std::runtime_error {
    explicit ToleranceNotAchieved(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hypoexp

#endif
