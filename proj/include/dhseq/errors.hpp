#pragma once

#include <stdexcept>

namespace dhseq {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotPrimeError : public Error { public: using Error::Error; };
class NotOddError : public Error { public: using Error::Error; };
class OrderViolationError : public Error { public: using Error::Error; };
class EqualPrimesError : public Error { public: using Error::Error; };
class NotAUnitError : public Error { public: using Error::Error; };
class ModuliNotCoprimeError : public Error { public: using Error::Error; };
class BothZeroError : public Error { public: using Error::Error; };
class DegreeTooLargeError : public Error { public: using Error::Error; };
class IndexOutOfRangeError : public Error { public: using Error::Error; };
class MismatchedInputsError : public Error { public: using Error::Error; };
class OracleDisagreementError : public Error { public: using Error::Error; };

}  // namespace dhseq
