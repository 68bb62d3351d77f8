#ifndef HSTRATA_ERROR_HPP
#define HSTRATA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hstrata {

// Library-wide error condition. The code is what callers (and the CLI exit
// contract) dispatch on; the message is for humans.
class Error : public std::runtime_error {
public:
  enum class Code {
    FieldMismatch,
    DimensionMismatch,
    InvalidInput,
    DivisionByZero,
    NotHiggs,
    CharTooSmall,
    RankDeficient,
    Inconsistent,
    ZeroPoint,
    BoundExceeded,
    NotInvertible,
    OrderBoundExceeded,
    NotPrimeField,
    NotSplitOverField,
    NotInvariant,
    NotTransitive,
    RepeatedRoots,
    NoCombination,
    UnknownSuite,
    Inconclusive,
    Internal,
  };

  Error(Code code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Code code() const { return code_; }

private:
  Code code_;
};

inline void internal_check(bool ok, const std::string& what) {
  if (!ok) throw Error(Error::Code::Internal, "internal invariant violated: " + what);
}

}  // namespace hstrata

#endif
