#ifndef PNIL_ERRORS_HPP
#define PNIL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pnil {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Module validation failures; each names the violated invariant and a witness.
struct CommutatorNonzero : Error {
    size_t row, col;
    CommutatorNonzero(size_t i, size_t j)
        : Error("x.y - y.x is nonzero at entry (" + std::to_string(i) + "," + std::to_string(j) + ")"),
          row(i), col(j) {}
};

struct NotPNilpotent : Error {
    std::string op;
    size_t row, col;
    NotPNilpotent(std::string which, size_t i, size_t j)
        : Error(which + "^p is nonzero at entry (" + std::to_string(i) + "," + std::to_string(j) + ")"),
          op(std::move(which)), row(i), col(j) {}
};

struct GradingNotHomogeneous : Error {
    std::string op;
    size_t row, col;
    GradingNotHomogeneous(std::string which, size_t i, size_t j)
        : Error(which + " is not homogeneous of degree +1: entry (" + std::to_string(i) + "," +
                std::to_string(j) + ") violates the grading"),
          op(std::move(which)), row(i), col(j) {}
};

struct SchemaError : Error {
    std::string field;
    SchemaError(std::string f, const std::string& what)
        : Error("schema error in field '" + f + "': " + what), field(std::move(f)) {}
};

struct ProjectiveInput : Error {
    ProjectiveInput() : Error("input module is projective") {}
};

struct DecomposableInput : Error {
    explicit DecomposableInput(const std::string& witness)
        : Error("input module is decomposable: " + witness) {}
};

}  // namespace pnil

#endif
