#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace garside {

  //! Base class of every exception thrown by this library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Malformed presentations, words, files or parameters.
  class InputError : public Error {
   public:
    using Error::Error;
  };

  //! A computation needed an element longer than the table bound.
  class BoundExceeded : public Error {
   public:
    BoundExceeded(std::size_t length, std::size_t bound)
        : Error("length " + std::to_string(length) + " exceeds table bound "
                + std::to_string(bound)),
          _length(length),
          _bound(bound) {}

    std::size_t length() const noexcept {
      return _length;
    }
    std::size_t bound() const noexcept {
      return _bound;
    }

   private:
    std::size_t _length;
    std::size_t _bound;
  };

  //! The per-level class ceiling was hit while materializing a level.
  class ResourceError : public Error {
   public:
    ResourceError(std::size_t level, std::size_t limit)
        : Error("length level " + std::to_string(level) + " exceeds "
                + std::to_string(limit) + " element classes"),
          _level(level) {}

    std::size_t level() const noexcept {
      return _level;
    }

   private:
    std::size_t _level;
  };

  //! The operation needs structure (e.g. a Garside element) that is missing.
  class UnsupportedOperation : public Error {
   public:
    using Error::Error;
  };

  //! Arguments violate a documented precondition.
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

}  // namespace garside
