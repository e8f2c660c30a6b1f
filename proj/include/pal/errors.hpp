#pragma once

#include <stdexcept>
#include <string>

namespace pal {

// Base for everything this library throws on purpose. The CLI maps
// UsageError/CatalogError to exit code 2 and the rest to exit code 1.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Two distinct items compared equal under a priority function.
class PriorityTieError : public Error {
public:
    explicit PriorityTieError(const std::string& what) : Error(what) {}
};

// Instance violates the problem's consistency condition.
class InvalidInstanceError : public Error {
public:
    explicit InvalidInstanceError(const std::string& what) : Error(what) {}
};

// An exhaustive search would exceed the configured budget.
class SearchBudgetError : public Error {
public:
    explicit SearchBudgetError(const std::string& what) : Error(what) {}
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

// An adversary needs the algorithm's decision distribution but the
// algorithm does not expose one.
class WhiteBoxRequiredError : public Error {
public:
    explicit WhiteBoxRequiredError(const std::string& what) : Error(what) {}
};

// A gadget pair failed one of its certified conditions. `condition()`
// names the failed condition.
class GadgetConditionError : public Error {
public:
    GadgetConditionError(const std::string& condition, const std::string& what)
        : Error(condition + ": " + what), condition_(condition) {}
    const std::string& condition() const { return condition_; }

private:
    std::string condition_;
};

// A gadget pair cannot be instantiated for the requested first item.
class InstantiationError : public Error {
public:
    explicit InstantiationError(const std::string& what) : Error(what) {}
};

// Unknown problem or variant name.
class CatalogError : public Error {
public:
    explicit CatalogError(const std::string& what) : Error(what) {}
};

// Bad command-line invocation.
class UsageError : public Error {
public:
    explicit UsageError(const std::string& what) : Error(what) {}
};

}  // namespace pal
