#pragma once

#include <stdexcept>
#include <string>

namespace w6h {

/// Base class of every error thrown by the toolkit.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A name lookup found nothing.
class NotFoundError : public Error {
public:
    using Error::Error;
};

/// An artifact name collides with one already declared in the same view.
class DuplicateNameError : public Error {
public:
    using Error::Error;
};

/// A snapshot's iteration number does not extend the workspace sequence.
class IterationOrderError : public Error {
public:
    using Error::Error;
};

/// An interrogative was answered before its prerequisites.
class NotAnswerableError : public Error {
public:
    using Error::Error;
};

/// A delta does not fit the snapshot it is being applied to.
class InapplicableError : public Error {
public:
    using Error::Error;
};

/// A diagnostic code outside the registry.
class UnknownCodeError : public Error {
public:
    using Error::Error;
};

} // namespace w6h
