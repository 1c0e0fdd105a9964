#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace triagent {

// Base class for all library errors. `kind()` is a stable tag callers can
// branch on without parsing the message.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

struct MissingField : Error {
    explicit MissingField(const std::string& field_name)
        : Error("MissingField", field_name), field(field_name) {}
    std::string field;
};

struct EmptyDocument : Error {
    explicit EmptyDocument(const std::string& id)
        : Error("EmptyDocument", "record '" + id + "' has an empty document") {}
};

struct SchemaViolation : Error {
    explicit SchemaViolation(const std::string& message)
        : Error("SchemaViolation", message) {}
};

struct DuplicateRecordId : Error {
    explicit DuplicateRecordId(const std::string& id)
        : Error("DuplicateRecordId", "duplicate record id '" + id + "'") {}
};

struct InvalidN : Error {
    explicit InvalidN(int n)
        : Error("InvalidN", "n-gram order must be >= 1, got " + std::to_string(n)) {}
};

struct ExternalExtractorUnavailable : Error {
    explicit ExternalExtractorUnavailable(const std::string& message)
        : Error("ExternalExtractorUnavailable", message) {}
};

struct EmptyReference : Error {
    EmptyReference() : Error("EmptyReference", "reference summary is empty") {}
};

struct EmptyInstruction : Error {
    EmptyInstruction() : Error("EmptyInstruction", "instruction text is empty") {}
};

struct UnparseableInstruction : Error {
    explicit UnparseableInstruction(const std::string& text)
        : Error("UnparseableInstruction", "no sentence matched a known instruction pattern: '" + text + "'") {}
};

struct EmptyPool : Error {
    EmptyPool() : Error("EmptyPool", "few-shot pool is empty") {}
};

struct BudgetTooSmall : Error {
    explicit BudgetTooSmall(int needed, int limit)
        : Error("BudgetTooSmall",
                "query block needs " + std::to_string(needed) + " tokens, budget is " + std::to_string(limit)) {}
};

struct BackendTimeout : Error {
    explicit BackendTimeout(const std::string& detail)
        : Error("BackendTimeout", detail) {}
};

struct BackendRejected : Error {
    BackendRejected(int status_code, const std::string& response_body)
        : Error("BackendRejected", "http " + std::to_string(status_code) + ": " + response_body),
          status(status_code), body(response_body) {}
    int status;
    std::string body;
};

struct NoScriptedResponse : Error {
    explicit NoScriptedResponse(const std::string& digest)
        : Error("NoScriptedResponse", "no scripted response for prompt digest " + digest) {}
};

struct EmptyTrainingSet : Error {
    EmptyTrainingSet() : Error("EmptyTrainingSet", "no training examples supplied") {}
};

struct CorruptTrace : Error {
    CorruptTrace(std::size_t line_number, const std::string& message)
        : Error("CorruptTrace", "line " + std::to_string(line_number) + ": " + message),
          line(line_number) {}
    std::size_t line;
};

struct FatalConfigError : Error {
    explicit FatalConfigError(const std::string& message)
        : Error("FatalConfigError", message) {}
};

} // namespace triagent
