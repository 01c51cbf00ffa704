#pragma once

#include <stdexcept>
#include <string>

namespace qdn {

/// Register rank outside the supported range.
struct RankError : std::invalid_argument {
    explicit RankError(const std::string& what) : std::invalid_argument(what) {}
};

/// Container length inconsistent with the declared shape.
struct ShapeError : std::invalid_argument {
    explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

/// Detector index outside 1..rank, duplicated where distinct indices are required,
/// or an empty detector subset where a nonempty one is required.
struct DetectorError : std::out_of_range {
    explicit DetectorError(const std::string& what) : std::out_of_range(what) {}
};

/// Operation requires a normalized labstate and got one that is not.
struct NormalizationError : std::invalid_argument {
    explicit NormalizationError(const std::string& what) : std::invalid_argument(what) {}
};

/// Coefficient matrix fails the semi-unitarity conditions.
struct SemiUnitarityError : std::invalid_argument {
    explicit SemiUnitarityError(const std::string& what) : std::invalid_argument(what) {}
};

/// Two operations (or two roles of one operation) claim the same detector.
struct OverlapError : std::invalid_argument {
    explicit OverlapError(const std::string& what) : std::invalid_argument(what) {}
};

/// Non-finite or otherwise out-of-domain numeric input.
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace qdn
