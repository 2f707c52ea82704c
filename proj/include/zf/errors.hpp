#pragma once

#include <stdexcept>
#include <string>

namespace zf {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error("dimension mismatch: " + msg) {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& msg) : Error("index out of range: " + msg) {}
};

struct PoleError : Error {
    explicit PoleError(const std::string& msg) : Error("pole: " + msg) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error("domain: " + msg) {}
};

struct ValidationError : Error {
    explicit ValidationError(const std::string& msg) : Error("validation: " + msg) {}
};

struct DegenerateRapidities : Error {
    explicit DegenerateRapidities(const std::string& msg) : Error("degenerate rapidities: " + msg) {}
};

struct OrderTooLarge : Error {
    explicit OrderTooLarge(const std::string& msg) : Error("order too large: " + msg) {}
};

struct SectorTooLarge : Error {
    explicit SectorTooLarge(const std::string& msg) : Error("sector too large: " + msg) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error("config: " + msg) {}
};

} // namespace zf
