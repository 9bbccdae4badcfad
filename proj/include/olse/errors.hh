/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef OLSE_GUARD_ERRORS_HH
#define OLSE_GUARD_ERRORS_HH 1

#include <stdexcept>
#include <string>

namespace olse
{
    /// A solver was handed an instance outside the class it is defined on.
    class PreconditionViolation : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// An embedding refers to vertices that do not exist.
    class MalformedCertificate : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// The brute-force oracle refused an instance above its size cap.
    class SizeGuardExceeded : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    class ParameterError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// Malformed or invalid instance file contents.
    class ParseError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// Something that should be impossible happened, e.g. a solver produced
    /// a witness that fails re-validation.
    class InternalError : public std::logic_error
    {
        public:
            using std::logic_error::logic_error;
    };
}

#endif
