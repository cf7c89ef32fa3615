#ifndef LGS_ERRORS_HPP
#define LGS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lgs {

// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct OracleDepthExceeded : Error {
  explicit OracleDepthExceeded(const std::string& what) : Error(what) {}
};

struct InadmissibleWord : Error {
  explicit InadmissibleWord(const std::string& what) : Error(what) {}
};

struct UnsupportedPresentation : Error {
  explicit UnsupportedPresentation(const std::string& what) : Error(what) {}
};

struct NotIrreducible : Error {
  explicit NotIrreducible(const std::string& what) : Error(what) {}
};

struct HorizonTooSmall : Error {
  explicit HorizonTooSmall(const std::string& what) : Error(what) {}
};

struct TruncationTooShallow : Error {
  explicit TruncationTooShallow(const std::string& what) : Error(what) {}
};

struct TrivialShift : Error {
  explicit TrivialShift(const std::string& what) : Error(what) {}
};

struct EntryOverflow : Error {
  explicit EntryOverflow(const std::string& what) : Error(what) {}
};

struct DepthOverflow : Error {
  explicit DepthOverflow(const std::string& what) : Error(what) {}
};

struct SearchSpaceTooLarge : Error {
  explicit SearchSpaceTooLarge(const std::string& what) : Error(what) {}
};

struct InputError : Error {
  explicit InputError(const std::string& what) : Error(what) {}
};

}  // namespace lgs

#endif
