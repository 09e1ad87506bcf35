#pragma once

#include <stdexcept>
#include <string>

namespace ctsynth
{

    enum class ErrorKind
    {
        DimensionMismatch,
        IndexOutOfRange,
        DeltaExponentTooSmall,
        NotUnitary,
        NotMonomial,
        UnreachablePattern,
        NoOffset,
        KEqualsOne,
        ImpossibleBranch,
        NoProgress,
        UnsupportedDim,
        TemplateVerificationFailed,
        Parse,
    };

    const char *error_kind_name(ErrorKind kind) noexcept;

    class Error : public std::runtime_error
    {
    public:
        Error(ErrorKind kind, const std::string &what)
            : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), _kind(kind)
        {
        }

        ErrorKind kind() const noexcept { return _kind; }

    private:
        ErrorKind _kind;
    };

    /// Parse failure with a 1-based source position.
    class ParseError : public Error
    {
    public:
        ParseError(int line, int column, const std::string &message)
            : Error(ErrorKind::Parse, "line " + std::to_string(line) + ", column " +
                                          std::to_string(column) + ": " + message),
              _line(line), _column(column)
        {
        }

        int line() const noexcept { return _line; }
        int column() const noexcept { return _column; }

    private:
        int _line;
        int _column;
    };

} // namespace ctsynth
