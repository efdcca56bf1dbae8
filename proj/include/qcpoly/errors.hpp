#pragma once

#include <stdexcept>
#include <string>

namespace qcpoly {

// User-facing precondition failures: bad moduli, mismatched contexts, refused hypotheses.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// An effort cap was hit (integer factoring, enumeration). The result is unavailable,
// never wrong; callers may retry with a bigger budget.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// A structural invariant the theory guarantees failed at runtime. Always a bug
// (ours or a transcription error), reported with its own exit code by the CLI.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline void check_internal(bool ok, const std::string& what) {
    if (!ok) throw internal_error(what);
}

} // namespace qcpoly
