#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wall {

/// Root of every error raised by the pipeline.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

// ---- analysis server -------------------------------------------------------

class AuthError : public Error {
public:
    using Error::Error;
};

class ProjectNotFound : public Error {
public:
    using Error::Error;
};

class TransportError : public Error {
public:
    using Error::Error;
};

class SchemaError : public Error {
public:
    using Error::Error;
};

class UnknownType : public Error {
public:
    using Error::Error;
};

// ---- issues CSV ------------------------------------------------------------

/// CSV failure tied to a 1-based data row (0 means the header).
class CsvError : public Error {
public:
    CsvError(const std::string& what, std::size_t row) : Error(what), row_(row) {}
    std::size_t row() const noexcept { return row_; }

private:
    std::size_t row_;
};

class HeaderMismatch : public CsvError {
public:
    explicit HeaderMismatch(const std::string& what) : CsvError(what, 0) {}
};

class RowParseError : public CsvError {
public:
    using CsvError::CsvError;
};

class BadLineNumber : public CsvError {
public:
    using CsvError::CsvError;
};

class BadType : public CsvError {
public:
    using CsvError::CsvError;
};

// ---- prompts ---------------------------------------------------------------

class MixedFiles : public Error {
public:
    using Error::Error;
};

class EmptyIssueList : public Error {
public:
    using Error::Error;
};

class PromptTooLarge : public Error {
public:
    PromptTooLarge(const std::string& what, std::size_t tokens, std::size_t budget)
        : Error(what), tokens_(tokens), budget_(budget) {}
    std::size_t estimated_tokens() const noexcept { return tokens_; }
    std::size_t budget() const noexcept { return budget_; }

private:
    std::size_t tokens_;
    std::size_t budget_;
};

// ---- orchestration / reporting --------------------------------------------

class AnalyzerUnavailable : public Error {
public:
    using Error::Error;
};

class ConsistencyError : public Error {
public:
    using Error::Error;
};

class ZeroBaseline : public Error {
public:
    using Error::Error;
};

}  // namespace wall
