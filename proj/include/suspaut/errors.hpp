#pragma once

#include <stdexcept>
#include <string>

namespace suspaut {

// Error families map 1:1 onto CLI exit codes.
enum class ErrorFamily {
    Parse = 2,         // malformed input text or files
    Precondition = 3,  // caller violated a documented precondition
    Engine = 4,        // construction failed (caps, unsupported geometry, ...)
    Verification = 5,  // a certificate check failed
};

class Error : public std::runtime_error {
public:
    Error(ErrorFamily family, std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message),
          family_(family),
          code_(std::move(code)) {}

    ErrorFamily family() const { return family_; }
    const std::string& code() const { return code_; }

private:
    ErrorFamily family_;
    std::string code_;
};

inline Error parse_error(const std::string& code, const std::string& msg) {
    return Error(ErrorFamily::Parse, code, msg);
}
inline Error precondition_error(const std::string& code, const std::string& msg) {
    return Error(ErrorFamily::Precondition, code, msg);
}
inline Error engine_error(const std::string& code, const std::string& msg) {
    return Error(ErrorFamily::Engine, code, msg);
}
inline Error verification_error(const std::string& code, const std::string& msg) {
    return Error(ErrorFamily::Verification, code, msg);
}

}  // namespace suspaut
