#pragma once
// Error taxonomy shared by the library and the CLI exit-code mapping.

#include <stdexcept>
#include <string>
#include <vector>

namespace hyparr {

/// Malformed or out-of-range input (CLI exit code 2).
struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

struct GenericityViolation {
    std::string kind;          // e.g. "dependent_linear_parts"
    std::vector<int> indices;  // offending hyperplane indices (0-based)
    std::string detail;
};

struct GenericityReport {
    bool ok = true;
    std::vector<GenericityViolation> violations;
};

/// Input arrangement fails a genericity requirement (CLI exit code 3).
struct GenericityError : std::runtime_error {
    GenericityReport report;
    explicit GenericityError(GenericityReport r)
        : std::runtime_error(r.violations.empty()
                                 ? "arrangement is not generic"
                                 : "arrangement is not generic: " + r.violations.front().kind),
          report(std::move(r)) {}
};

/// Numerical operation outside its domain (e.g. lambda on a branch cut).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hyparr
