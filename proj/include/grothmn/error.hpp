#ifndef GROTHMN_ERROR_HPP
#define GROTHMN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace grothmn
{

// Raised when an operation's precondition on its arguments is violated.
class invalid_input : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Raised when an exact division leaves a nonzero remainder. Alternants are
// always divisible by the Vandermonde factors, so this signals a bug upstream.
class divisibility_error : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

} // namespace grothmn

#endif
