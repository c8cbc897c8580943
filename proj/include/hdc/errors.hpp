#ifndef HDC_ERRORS_HPP
#define HDC_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace hdc {

// Domain failure with a stable machine-readable code (NotHausdorffCurve,
// ZeroPolynomial, ...). The CLI maps these to exit status 2; anything else
// escaping to main is an internal error (exit 1).
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& what) {
    throw DomainError(code, what);
}

} // namespace hdc

#endif
