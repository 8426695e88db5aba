// Typed error conditions shared across the library.

#pragma once

#include <stdexcept>
#include <string>

namespace hpt {

struct DegreeOverflow : std::runtime_error {
    explicit DegreeOverflow(const std::string& what) : std::runtime_error(what) {}
};

struct DegreeError : std::runtime_error {
    explicit DegreeError(const std::string& what) : std::runtime_error(what) {}
};

struct RingMismatchError : std::runtime_error {
    explicit RingMismatchError(const std::string& what) : std::runtime_error(what) {}
};

struct GridMismatchError : std::runtime_error {
    explicit GridMismatchError(const std::string& what) : std::runtime_error(what) {}
};

struct MeanError : std::runtime_error {
    explicit MeanError(const std::string& what) : std::runtime_error(what) {}
};

struct MassError : std::runtime_error {
    explicit MassError(const std::string& what) : std::runtime_error(what) {}
};

struct DensityError : std::runtime_error {
    explicit DensityError(const std::string& what) : std::runtime_error(what) {}
};

struct SlotError : std::runtime_error {
    explicit SlotError(const std::string& what) : std::runtime_error(what) {}
};

struct BandLimitError : std::runtime_error {
    explicit BandLimitError(const std::string& what) : std::runtime_error(what) {}
};

struct ConstructionError : std::runtime_error {
    explicit ConstructionError(const std::string& what) : std::runtime_error(what) {}
};

struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hpt
