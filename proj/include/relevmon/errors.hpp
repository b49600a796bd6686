#pragma once

#include <stdexcept>

namespace relevmon {

// Error taxonomy shared across the library. Everything derives from Error so
// the CLI boundary can catch the whole family and map it to exit codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : Error { using Error::Error; };           // bad parameter value
struct OutOfRange : Error { using Error::Error; };            // evaluation point outside [0, T]
struct SingularDesign : Error { using Error::Error; };        // < 2 distinct points in a fit window
struct AllCandidatesSingular : Error { using Error::Error; };
struct TooShort : Error { using Error::Error; };              // series / block layout too short
struct DeltaNotZero : Error { using Error::Error; };          // CUSUM schemes require delta == 0
struct NotWarmedUp : Error { using Error::Error; };
struct NonConvergence : Error { using Error::Error; };        // quadrature / optimizer hit its cap

}  // namespace relevmon
