#pragma once

#include <stdexcept>
#include <string>

namespace fpoly {

struct MissingVariable : std::runtime_error {
    explicit MissingVariable(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidEntry : std::runtime_error {
    explicit InvalidEntry(const std::string& what) : std::runtime_error(what) {}
};

struct NoDash : std::runtime_error {
    explicit NoDash(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct BadIndex : std::runtime_error {
    explicit BadIndex(const std::string& what) : std::runtime_error(what) {}
};

struct InsufficientSamples : std::runtime_error {
    explicit InsufficientSamples(const std::string& what) : std::runtime_error(what) {}
};

struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fpoly
