#pragma once

#include <stdexcept>
#include <string>

namespace mourre {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid argument or point outside the admissible domain.
class domain_error : public error {
public:
    explicit domain_error(const std::string& what) : error(what) {}
};

/// A solver could not produce a solution (no bracket, no sign change,
/// inconsistent system, ...).
class solver_error : public error {
public:
    explicit solver_error(const std::string& what) : error(what) {}
};

/// Adjacent chain points (or equivalent internal quantities) became closer
/// than double precision can usefully resolve.
class precision_error : public error {
public:
    explicit precision_error(const std::string& what) : error(what) {}
};

/// A positivity certificate failed.
class certification_error : public error {
public:
    explicit certification_error(const std::string& what) : error(what) {}
};

}  // namespace mourre
