#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace magiclab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A constructor or operation received parameters outside its contract.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Malformed graph text or family string. `line()` is 1-based, 0 when not applicable.
class ParseError : public Error {
public:
    ParseError(const std::string & what, int line)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line)
    {
    }

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// Edge sums of a total labeling are not constant.
class NotEdgeMagicError : public Error {
public:
    NotEdgeMagicError(std::pair<int, int> first, int first_sum, std::pair<int, int> second, int second_sum)
        : Error("not edge-magic: edge " + std::to_string(first.first) + "-" + std::to_string(first.second)
                + " sums to " + std::to_string(first_sum) + " but edge " + std::to_string(second.first) + "-"
                + std::to_string(second.second) + " sums to " + std::to_string(second_sum)),
          first_(first), second_(second)
    {
    }

    std::pair<int, int> first_edge() const noexcept { return first_; }
    std::pair<int, int> second_edge() const noexcept { return second_; }

private:
    std::pair<int, int> first_;
    std::pair<int, int> second_;
};

/// A vertex labeling whose induced edge sums are not |E| consecutive integers.
class NotExtendableError : public Error {
public:
    explicit NotExtendableError(std::vector<int> sums)
        : Error("vertex labeling does not extend to a super edge-magic labeling: edge sums " + render(sums)),
          sums_(std::move(sums))
    {
    }

    const std::vector<int> & sums() const noexcept { return sums_; }

private:
    static std::string render(const std::vector<int> & sums)
    {
        std::string out = "{";
        for (std::size_t i = 0; i < sums.size(); ++i)
            out += (i ? "," : "") + std::to_string(sums[i]);
        return out + "}";
    }

    std::vector<int> sums_;
};

/// Operation requested in a mode the labeling does not support (e.g. super complement of a non-super labeling).
class ModeError : public Error {
public:
    using Error::Error;
};

/// Two labelings of different underlying graphs were compared.
class ComparisonError : public Error {
public:
    using Error::Error;
};

/// Valence interval requested for a graph without edges.
class IntervalError : public Error {
public:
    using Error::Error;
};

/// A search or brute-force guard (size bound) was exceeded.
class GuardError : public Error {
public:
    using Error::Error;
};

class ClassificationError : public Error {
public:
    using Error::Error;
};

class UnknownSuiteError : public Error {
public:
    using Error::Error;
};

} // namespace magiclab
