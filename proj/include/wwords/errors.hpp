#pragma once

#include <stdexcept>
#include <string>

namespace wwords
{

// Every domain error derives from this so callers (the CLI in particular)
// can tell a mathematical precondition failure from a programming error.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

#define WWORDS_DEFINE_ERROR(Name)                                                                  \
    class Name : public Error                                                                      \
    {                                                                                              \
    public:                                                                                        \
        explicit Name(const std::string &what) : Error(#Name ": " + what) {}                       \
    }

// qseries
WWORDS_DEFINE_ERROR(ZeroValuation);
WWORDS_DEFINE_ERROR(DivergentProduct);
WWORDS_DEFINE_ERROR(NegativeExponent);
WWORDS_DEFINE_ERROR(InsufficientTruncation);
WWORDS_DEFINE_ERROR(NotAUnit);
WWORDS_DEFINE_ERROR(ExactModeUnsupported);

// colored
WWORDS_DEFINE_ERROR(UnknownColor);
WWORDS_DEFINE_ERROR(UnresolvedSequenceTag);
WWORDS_DEFINE_ERROR(SystemFormatError);

// identities
WWORDS_DEFINE_ERROR(InexactDivision);
WWORDS_DEFINE_ERROR(TruncationTooLow);

// dsl / cli
WWORDS_DEFINE_ERROR(UnknownIdentifier);
WWORDS_DEFINE_ERROR(EvaluationError);
WWORDS_DEFINE_ERROR(ConfigError);
WWORDS_DEFINE_ERROR(NoWitnessForm);

#undef WWORDS_DEFINE_ERROR

// Parse failures carry a 1-based position and the set of tokens that would
// have been accepted there.
class SyntaxError : public Error
{
public:
    SyntaxError(int line, int column, std::string expected, const std::string &found)
        : Error("SyntaxError at " + std::to_string(line) + ":" + std::to_string(column) + ": expected "
                + expected + ", found " + found),
          line_(line), column_(column), expected_(std::move(expected))
    {
    }

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }
    const std::string &expected() const noexcept { return expected_; }

private:
    int line_;
    int column_;
    std::string expected_;
};

} // namespace wwords
